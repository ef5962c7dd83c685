#include "ordwalk/probe.hpp"

#include <algorithm>
#include <string>

namespace ordwalk {
namespace {

struct Bounds {
  std::size_t max_terms;
  Natural max_coefficient;
  std::size_t limit;
};

std::vector<Ordinal> members_below(const Ordinal& cap, std::size_t depth, const Bounds& b);

// Extends `prefix` (strictly below cap) with terms whose exponents come from
// exponents[0..end), largest first.
void extend(const Ordinal& cap, const std::vector<Ordinal>& exponents, std::size_t end,
            std::vector<Term>& prefix, const Bounds& b, std::vector<Ordinal>& out) {
  if (prefix.size() >= b.max_terms) return;
  for (std::size_t j = end; j-- > 0;) {
    for (Natural c = 1; c <= b.max_coefficient; ++c) {
      prefix.push_back(Term{exponents[j], c});
      Ordinal candidate = Ordinal::from_terms(prefix);
      if (candidate < cap) {
        out.push_back(candidate);
        if (out.size() > b.limit) {
          throw ResourceError("probe set exceeds " + std::to_string(b.limit) + " members");
        }
        extend(cap, exponents, j, prefix, b, out);
        prefix.pop_back();
      } else {
        prefix.pop_back();
        // Larger coefficients only grow the candidate.
        break;
      }
    }
  }
}

std::vector<Ordinal> members_below(const Ordinal& cap, std::size_t depth, const Bounds& b) {
  std::vector<Ordinal> out;
  if (cap.is_zero()) return out;
  out.emplace_back();
  std::vector<Ordinal> exponents;
  if (depth == 0) {
    exponents.emplace_back();
  } else {
    // Any member's exponents are bounded by the leading exponent of cap.
    exponents = members_below(successor(cap.leading_term().exponent), depth - 1, b);
  }
  std::vector<Term> prefix;
  extend(cap, exponents, exponents.size(), prefix, b, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ProbeSet enumerate_probe(const Ordinal& cap, std::size_t tier, std::size_t limit) {
  if (cap.is_zero()) throw DomainError("probe cap must be positive");
  const Bounds b{tier + 1, static_cast<Natural>(tier) + 1, limit};
  return ProbeSet{cap, tier, members_below(cap, tier, b)};
}

}  // namespace ordwalk
