#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>

#include "ordwalk/json_io.hpp"
#include "ordwalk/reference.hpp"
#include "ordwalk/space.hpp"
#include "ordwalk/walks.hpp"

using namespace ordwalk;

namespace {

Ordinal O(const char* s) { return parse(s); }

std::set<Ordinal> S(std::initializer_list<const char*> xs) {
  std::set<Ordinal> out;
  for (const char* x : xs) out.insert(O(x));
  return out;
}

std::set<Ordinal> sample(const std::vector<Ordinal>& pool, std::size_t k, std::mt19937_64& rng) {
  std::set<Ordinal> out;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  while (out.size() < k) out.insert(pool[pick(rng)]);
  return out;
}

}  // namespace

TEST_CASE("basic open membership") {
  CHECK_FALSE(member(Point{O("2")}, BasicOpen(O("w"), 1)));
  CHECK(member(Point{O("0")}, BasicOpen(O("w"), 1)));
  CHECK(member(Point{Apex{}}, BasicOpen(O("w"), 99)));
  CHECK(member(Point{O("w + 7")}, BasicOpen(O("w"), 99)));
  CHECK_THROWS_AS(BasicOpen(O("w + 1"), 0), DomainError);

  const auto probes = enumerate_probe(O("w^2"), 2).members;
  for (const char* anchor : {"w", "w^2", "w^2*2"}) {
    const Ordinal a = O(anchor);
    for (Natural n = 0; n < 5; ++n) {
      for (const Ordinal& xi : probes) {
        const bool expected = xi >= a || reference::rho2(xi, a) > n;
        REQUIRE(member(Point{xi}, BasicOpen(a, n)) == expected);
        // Raising the level shrinks the set.
        if (member(Point{xi}, BasicOpen(a, n + 1))) REQUIRE(member(Point{xi}, BasicOpen(a, n)));
      }
    }
  }
}

TEST_CASE("descriptor membership") {
  NeighborhoodDescriptor d;
  d.add(O("w^2"), 2);
  CHECK(member(Point{O("0")}, d));
  CHECK(member(Point{Apex{}}, d));
  CHECK_FALSE(member(Point{O("w^2")}, d));
  CHECK_THROWS_AS(d.add(O("w^2"), 3), DomainError);
  CHECK_THROWS_AS(d.add(O("5"), 3), DomainError);
  CHECK(member(Point{Apex{}}, NeighborhoodDescriptor{}));
  CHECK_FALSE(member(Point{O("0")}, NeighborhoodDescriptor{}));

  // Below its anchor a single-entry descriptor agrees with the basic set.
  const auto probes = enumerate_probe(O("w^3"), 2).members;
  for (const char* anchor : {"w^2", "w^3"}) {
    NeighborhoodDescriptor one;
    one.add(O(anchor), 1);
    const BasicOpen u(O(anchor), 1);
    for (const Ordinal& xi : probes) {
      if (xi < O(anchor)) REQUIRE(member(Point{xi}, one) == member(Point{xi}, u));
    }
  }

  NeighborhoodDescriptor two;
  two.add(O("w"), 1);
  two.add(O("w^2"), 3);
  for (const Ordinal& xi : enumerate_probe(O("w^2 + w"), 2).members) {
    const bool expected = (xi < O("w") && reference::rho2(xi, O("w")) > 1) ||
                          (xi < O("w^2") && reference::rho2(xi, O("w^2")) > 3);
    REQUIRE(member(Point{xi}, two) == expected);
  }
}

TEST_CASE("frechet_extract examples") {
  CHECK(frechet_extract(S({"2"}), O("w"), 1) == std::vector<Ordinal>{O("2")});
  CHECK(frechet_extract({}, O("w"), 4).empty());
  CHECK(frechet_extract(S({"w", "w^2", "w^3"}), O("w^(w)"), 3) ==
        std::vector<Ordinal>{O("w"), O("w^2")});
  CHECK_THROWS_AS(frechet_extract(S({"2"}), O("w + 1"), 1), DomainError);
}

TEST_CASE("frechet_extract prefers length over early small points") {
  // rho2 to w^2 is 3 for 0 and 1 for w and w*2: taking 0 first stalls at index 2.
  CHECK(frechet_extract(S({"0", "w", "w*2"}), O("w^2"), 2) ==
        std::vector<Ordinal>{O("w"), O("w*2"), O("0")});
  CHECK(frechet_extract(S({"0", "w", "w*2"}), O("w^2"), 1) ==
        std::vector<Ordinal>{O("0"), O("w")});
}

TEST_CASE("frechet_extract matches exhaustive search") {
  std::mt19937_64 rng(7);
  for (const char* arena : {"w^2", "w^3", "w^(w)"}) {
    const Ordinal alpha = O(arena);
    std::vector<Ordinal> pool;
    for (const Ordinal& x : enumerate_probe(alpha, 3).members) {
      if (x < alpha) pool.push_back(x);
    }
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = sample(pool, 8, rng);
      const Natural m = trial % 6;
      // Every valid sequence, visited in lexicographic order; keep the first longest.
      std::vector<Ordinal> best, current;
      std::function<void()> search = [&] {
        if (current.size() > best.size()) best = current;
        if (current.size() == m + 1) return;
        const Natural n = current.size();
        for (const Ordinal& x : a) {
          if (std::find(current.begin(), current.end(), x) != current.end()) continue;
          if (reference::rho2(x, alpha) < n) continue;
          current.push_back(x);
          search();
          current.pop_back();
        }
      };
      search();
      REQUIRE(frechet_extract(a, alpha, m) == best);
    }
  }
}

TEST_CASE("alpha1_merge") {
  CHECK(alpha1_merge({S({"1", "2"}), S({"2", "3"})}, O("w")) == S({"1", "2"}));
  CHECK(alpha1_merge({}, O("w")).empty());
  CHECK_THROWS_AS(alpha1_merge({S({"w"})}, O("w")), DomainError);

  std::mt19937_64 rng(11);
  const Ordinal alpha = O("w^3");
  const auto pool = enumerate_probe(alpha, 2).members;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::set<Ordinal>> fam;
    for (int n = 0; n < 4; ++n) fam.push_back(sample(pool, 6, rng));
    const auto merged = alpha1_merge(fam, alpha);
    std::set<Ordinal> expected;
    for (std::size_t n = 0; n < fam.size(); ++n) {
      for (const Ordinal& x : fam[n]) {
        if (reference::rho2(x, alpha) > n) expected.insert(x);
      }
    }
    REQUIRE(merged == expected);
  }
}

TEST_CASE("gdelta_separate") {
  const Separation zero = gdelta_separate(S({"0"}));
  CHECK(zero.scheme.beta == O("w"));
  CHECK(zero.certificate.at(O("0")) == 2);
  CHECK(gdelta_separate(S({"5"})).certificate.at(O("5")) == 1);
  CHECK(gdelta_separate(S({"w + 3"})).scheme.beta == O("w*2"));
  CHECK(gdelta_separate(S({"w^2*2 + 1"})).scheme.beta == O("w^2*2 + w"));
  CHECK_THROWS_AS(gdelta_separate({}), DomainError);

  std::ifstream f(std::string(ORDWALK_GOLDEN_DIR) + "/space.json");
  const Json golden = Json::parse(f);
  for (const Json& row : golden.at("separations")) {
    std::set<Ordinal> b;
    for (const Ordinal& x : ordinals_from_json(row.at("set"))) b.insert(x);
    const Json got = to_json(gdelta_separate(b));
    CHECK(got.at("beta") == row.at("beta"));
    CHECK(got.at("certificate") == row.at("certificate"));
  }

  // Exactness: the schemes' intersection misses B, and the apex stays inside.
  const auto set = S({"3", "w + 1", "w^2", "w^2 + w*4 + 2"});
  const Separation s = gdelta_separate(set);
  CHECK(s.scheme.beta > *set.rbegin());
  CHECK(s.scheme.beta.is_limit());
  for (const Ordinal& x : set) {
    CHECK_FALSE(member(Point{x}, s.scheme.level(s.certificate.at(x))));
  }
  for (Natural n = 0; n < 16; ++n) CHECK(member(Point{Apex{}}, s.scheme.level(n)));
  CHECK(member(Point{s.scheme.beta}, s.scheme.level(1000)));
}

TEST_CASE("convergence_report") {
  std::vector<Ordinal> seq;
  for (Natural i = 1; i <= 20; ++i) seq.push_back(Ordinal::natural(i));
  const auto r = convergence_report(seq, {O("w")});
  REQUIRE(r.anchors.size() == 1);
  CHECK(r.anchors[0].histogram == std::map<Natural, std::size_t>{{1, 20}});
  CHECK(r.max_fiber == 20);
  CHECK_THROWS_AS(convergence_report({O("3"), O("2")}, {O("w")}), DomainError);

  const auto two = convergence_report({O("w"), O("w^2")}, {O("w^(w)"), O("w^2")});
  CHECK(two.anchors[0].histogram == std::map<Natural, std::size_t>{{1, 2}});
  CHECK(to_json(two).at("maxFiber") == 2);
}
