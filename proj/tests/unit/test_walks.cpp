#include <doctest.h>

#include <fstream>

#include "ordwalk/csequence.hpp"
#include "ordwalk/json_io.hpp"
#include "ordwalk/reference.hpp"
#include "ordwalk/walks.hpp"

using namespace ordwalk;

namespace {

Ordinal O(const char* s) { return parse(s); }

Json golden(const char* name) {
  std::ifstream f(std::string(ORDWALK_GOLDEN_DIR) + "/" + name);
  REQUIRE(f.good());
  return Json::parse(f);
}

std::vector<Ordinal> pts(std::initializer_list<const char*> xs) {
  std::vector<Ordinal> out;
  for (const char* x : xs) out.push_back(O(x));
  return out;
}

}  // namespace

TEST_CASE("trace examples") {
  const WalkTrace same = trace(O("w + 3"), O("w + 3"));
  CHECK(same.points == pts({"w + 3"}));
  CHECK(same.rho2() == 0);
  CHECK(trace(O("0"), O("w^2")).points == pts({"w^2", "w", "1", "0"}));
  CHECK(trace(O("2"), O("w*2")).points == pts({"w*2", "w + 1", "w", "2"}));
  CHECK(trace(O("2"), O("w*2")).rho2() == 3);
  CHECK_THROWS_AS(trace(O("w"), O("3")), DomainError);
  CHECK_THROWS_AS(trace(O("0"), O("w^(w)"), 2), ResourceError);
  CHECK_THROWS_AS(rho2(O("0"), O("w^(w)"), 2), ResourceError);
}

TEST_CASE("golden traces from the naive evaluator") {
  const Json records = golden("traces.json");
  REQUIRE(records.size() > 100);
  for (const Json& rec : records) {
    const WalkTrace expected = trace_from_json(rec);
    const WalkTrace got = trace(expected.alpha, expected.beta);
    REQUIRE(got.points == expected.points);
    REQUIRE(to_json(got) == rec);
  }
}

TEST_CASE("rho2 examples and recursion law") {
  CHECK(rho2(O("w^2 + 5"), O("w^2 + 5")) == 0);
  CHECK(rho2(O("w^2 + 5"), O("w^2 + 6")) == 1);
  CHECK(rho2(O("2"), O("w")) == 1);
  CHECK(rho2(O("0"), O("w")) == 2);
  CHECK(rho2(O("0"), O("w^2")) == 3);
  const auto p = enumerate_probe(O("w^3 + w"), 2).members;
  for (const Ordinal& a : p) {
    for (const Ordinal& b : p) {
      if (!(a < b)) continue;
      const Natural r = rho2(a, b);
      REQUIRE(r >= 1);
      REQUIRE(r == 1 + rho2(a, min_above(b, a)));
      REQUIRE(r == reference::rho2(a, b));
    }
  }
}

TEST_CASE("long walks through towers") {
  // w^w^w -> w^w^n ... each level of the tower adds steps.
  const Ordinal top = O("w^(w^(w))");
  const WalkTrace t = trace(O("0"), top);
  CHECK(t.points == reference::trace_points(O("0"), top));
  CHECK(t.rho2() == reference::rho2(O("0"), top));
  CHECK(rho2(O("5"), O("w^(w^(w^(w)))")) == reference::rho2(O("5"), O("w^(w^(w^(w)))")));
}

TEST_CASE("stabilizer examples") {
  CHECK(stabilizer(O("w"), O("w*2")) == Ordinal{});
  for (Natural xi = 1; xi <= 20; ++xi) {
    CHECK(rho2(Ordinal::natural(xi), O("w*2")) >= rho2(O("w"), O("w*2")));
  }
  CHECK(stabilizer(O("w^2 + 3"), O("w^2 + 4")) == Ordinal{});
  CHECK_THROWS_AS(stabilizer(O("w"), O("w")), DomainError);
  CHECK_THROWS_AS(stabilizer(O("w + 1"), O("w")), DomainError);
}

TEST_CASE("stabilizer soundness on probe pairs") {
  const auto p = enumerate_probe(O("w^3 + 1"), 2).members;
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Ordinal eta = stabilizer(p[i], p[j]);
      REQUIRE((p[i].is_zero() || eta < p[i]));
      const WalkTrace t = trace(p[i], p[j]);
      const std::size_t n = t.rho2();
      for (std::size_t k = 0; k < i; ++k) {
        if (!(p[k] > eta)) continue;
        const WalkTrace tx = trace(p[k], p[j]);
        REQUIRE(tx.rho2() >= n);
        REQUIRE(std::equal(t.points.begin(), t.points.begin() + n, tx.points.begin()));
      }
    }
  }
}

TEST_CASE("coherence_delta examples") {
  const ProbeSet singleton{O("1"), 0, {Ordinal{}}};
  const auto r = coherence_delta(O("w"), O("w^2"), singleton);
  CHECK(r.max_delta == 1);  // rho2(0, w) = 2, rho2(0, w^2) = 3
  CHECK(r.argmax == Ordinal{});
  CHECK_THROWS_AS(coherence_delta(O("w"), O("w"), singleton), DomainError);
  CHECK_THROWS_AS(coherence_delta(O("w"), O("w*2"), enumerate_probe(O("w + 1"), 1)), DomainError);

  const Json rows = golden("coherence.json");
  for (const Json& row : rows) {
    const Ordinal beta = parse(row.at("beta").get<std::string>());
    const Ordinal gamma = parse(row.at("gamma").get<std::string>());
    Natural previous = 0;
    for (std::size_t tier : {1, 2, 3}) {
      const ProbeSet probes = enumerate_probe(beta, tier);
      const auto serial = coherence_delta(beta, gamma, probes);
      // Partitioning never changes the answer.
      for (std::size_t workers : {2, 3, 7}) {
        const auto split = coherence_delta(beta, gamma, probes, workers);
        REQUIRE(split.max_delta == serial.max_delta);
        REQUIRE(split.argmax == serial.argmax);
      }
      REQUIRE(serial.max_delta >= previous);
      previous = serial.max_delta;
      if (tier >= 2) REQUIRE(to_json(serial) == row.at("tier" + std::to_string(tier)));
    }
  }
}

TEST_CASE("unbounded_witness examples") {
  const ProbeSet a{O("1"), 0, {Ordinal{}}};
  const ProbeSet b{O("2"), 0, {O("1")}};
  CHECK_FALSE(unbounded_witness(a, b, 5).has_value());
  const auto hit = unbounded_witness(a, b, 0);
  REQUIRE(hit);
  CHECK(hit->rho2 == 1);

  const ProbeSet w{O("w + 1"), 0, {O("w")}};
  const ProbeSet w2{O("w^2 + 1"), 0, {O("w^2")}};
  const auto found = unbounded_witness(w, w2, 0);
  REQUIRE(found);
  CHECK(found->alpha == O("w"));
  CHECK(found->beta == O("w^2"));

  const Json g = golden("witness.json");
  const ProbeSet p = enumerate_probe(O("w^5"), 3);
  const auto pairw = unbounded_witness(p, p, 3);
  REQUIRE(pairw);
  CHECK(format(pairw->alpha) == g.at("alpha").get<std::string>());
  CHECK(format(pairw->beta) == g.at("beta").get<std::string>());
  CHECK(pairw->rho2 > 3);
}
