#include <doctest.h>

#include <set>

#include "ordwalk/probe.hpp"

using namespace ordwalk;

namespace {

Ordinal O(const char* s) { return parse(s); }

bool within_bounds(const Ordinal& a, std::size_t tier) {
  if (a.term_count() > tier + 1) return false;
  for (const Term& t : a.terms()) {
    if (t.coefficient > tier + 1) return false;
    if (!within_bounds(t.exponent, tier)) return false;
  }
  return a.depth() <= tier;
}

}  // namespace

TEST_CASE("probe examples") {
  const ProbeSet p = enumerate_probe(O("w"), 2);
  CHECK(p.members == std::vector<Ordinal>{O("0"), O("1"), O("2"), O("3")});
  CHECK(enumerate_probe(O("1"), 5).members == std::vector<Ordinal>{Ordinal{}});
  CHECK_THROWS_AS(enumerate_probe(Ordinal{}, 2), DomainError);
  CHECK_THROWS_AS(enumerate_probe(O("w^(w^2)"), 4, 1000), ResourceError);
}

TEST_CASE("probe below w^3 matches exhaustive coefficient enumeration") {
  for (std::size_t tier = 0; tier <= 4; ++tier) {
    std::set<Ordinal> expected;
    const Natural c = tier + 1;
    for (Natural c2 = 0; c2 <= c; ++c2) {
      for (Natural c1 = 0; c1 <= c; ++c1) {
        for (Natural c0 = 0; c0 <= c; ++c0) {
          std::vector<Term> terms;
          if (c2) terms.push_back(Term{Ordinal::natural(2), c2});
          if (c1) terms.push_back(Term{Ordinal::natural(1), c1});
          if (c0) terms.push_back(Term{Ordinal{}, c0});
          const Ordinal a = Ordinal::from_terms(terms);
          if (terms.size() <= tier + 1 && a.depth() <= tier) expected.insert(a);
        }
      }
    }
    const auto got = enumerate_probe(O("w^3"), tier).members;
    CHECK(std::vector<Ordinal>(expected.begin(), expected.end()) == got);
  }
  CHECK(enumerate_probe(O("w^3"), 2).members.size() == 64);
}

TEST_CASE("probe members satisfy the tier bounds and are increasing") {
  for (const char* cap : {"w^4", "w^(w)*2 + 5", "w^(w^2)", "w^(w + 1) + w^(w)"}) {
    for (std::size_t tier = 0; tier <= 2; ++tier) {
      const ProbeSet p = enumerate_probe(O(cap), tier);
      REQUIRE(p.tier == tier);
      for (std::size_t i = 0; i < p.members.size(); ++i) {
        REQUIRE(p.members[i] < p.cap);
        REQUIRE(within_bounds(p.members[i], tier));
        if (i) REQUIRE(p.members[i - 1] < p.members[i]);
      }
    }
  }
}

TEST_CASE("probe is monotone in tier and deterministic") {
  for (const char* cap : {"w^3", "w^(w) + w", "w^(w^2)"}) {
    std::vector<Ordinal> previous;
    for (std::size_t tier = 0; tier <= 3; ++tier) {
      if (tier == 3 && std::string(cap) == "w^(w^2)") break;
      const auto now = enumerate_probe(O(cap), tier).members;
      REQUIRE(std::includes(now.begin(), now.end(), previous.begin(), previous.end()));
      REQUIRE(now == enumerate_probe(O(cap), tier).members);
      previous = now;
    }
  }
}
