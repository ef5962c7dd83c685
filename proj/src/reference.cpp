#include "ordwalk/reference.hpp"

#include <string>

namespace ordwalk::reference {
namespace {

Ordinal drop_one(const Ordinal& a) {
  std::vector<Term> t(a.terms().begin(), a.terms().end());
  if (t.back().coefficient == 1) {
    t.pop_back();
  } else {
    t.back().coefficient -= 1;
  }
  return Ordinal::from_terms(std::move(t));
}

Natural scan_index(const Ordinal& lambda, const Ordinal& alpha) {
  for (Natural i = 0; i < kScanLimit; ++i) {
    if (fund_seq(lambda, i) >= alpha) return i;
  }
  throw ResourceError("reference scan limit reached");
}

Natural pair(Natural a, Natural b) {
  const unsigned __int128 s = static_cast<unsigned __int128>(a) + b;
  const unsigned __int128 z = s * (s + 1) / 2 + b;
  if (z >> 64) throw OverflowError("reference pair overflow");
  return static_cast<Natural>(z);
}

Natural ladder_position(const Ordinal& lambda, const Ordinal& xi) {
  const Natural i = scan_index(lambda, xi);
  return fund_seq(lambda, i) == xi ? i : 0;
}

}  // namespace

Ordinal fund_seq(const Ordinal& lambda, Natural i) {
  if (!lambda.is_limit()) throw DomainError("reference fund-seq on a non-limit");
  std::vector<Term> t(lambda.terms().begin(), lambda.terms().end());
  const Term last = t.back();
  t.pop_back();
  if (last.coefficient > 1) t.push_back(Term{last.exponent, last.coefficient - 1});
  if (last.exponent.is_successor()) {
    t.push_back(Term{drop_one(last.exponent), i + 1});
  } else {
    t.push_back(Term{fund_seq(last.exponent, i), 1});
  }
  return Ordinal::from_terms(std::move(t));
}

Ordinal min_above(const Ordinal& beta, const Ordinal& alpha) {
  if (!(alpha < beta)) throw DomainError("reference min-above needs alpha < beta");
  if (beta.is_successor()) return drop_one(beta);
  return fund_seq(beta, scan_index(beta, alpha));
}

Natural rho2(const Ordinal& alpha, const Ordinal& beta) {
  if (alpha == beta) return 0;
  return 1 + rho2(alpha, min_above(beta, alpha));
}

std::vector<Ordinal> trace_points(const Ordinal& alpha, const Ordinal& beta) {
  if (alpha == beta) return {beta};
  std::vector<Ordinal> rest = trace_points(alpha, min_above(beta, alpha));
  rest.insert(rest.begin(), beta);
  return rest;
}

std::pair<Natural, Ordinal> coherence_delta(const Ordinal& beta, const Ordinal& gamma,
                                            const std::vector<Ordinal>& members) {
  std::pair<Natural, Ordinal> best{0, Ordinal{}};
  bool first = true;
  for (const Ordinal& xi : members) {
    const Natural a = rho2(xi, beta);
    const Natural b = rho2(xi, gamma);
    const Natural d = a > b ? a - b : b - a;
    if (first || d > best.first) best = {d, xi};
    first = false;
  }
  return best;
}

Natural coloring_value(const Ordinal& gamma, const Ordinal& xi) {
  if (gamma <= Ordinal::omega()) return *xi.as_natural();
  if (gamma.is_successor()) {
    const Ordinal b = drop_one(gamma);
    if (xi == b) return 0;
    if (b.is_limit()) return pair(coloring_value(b, xi), ladder_position(b, xi));
    return coloring_value(b, xi);
  }
  const Term& last = gamma.last_term();
  if (last.exponent == Ordinal::natural(1)) {
    const Ordinal delta_plus_one = drop_one(gamma) + Ordinal::natural(1);
    if (xi >= delta_plus_one) return 0;
    return coloring_value(delta_plus_one, xi);
  }
  // Club stage: F' is the least ladder of the club carrying xi, searched
  // a few ladders past the first club element above xi.
  Natural k = 0;
  while (!(fund_seq(gamma, k) > xi)) ++k;
  const Ordinal top = fund_seq(gamma, k);
  Natural f_prime = 0;
  for (Natural j = 0; j <= k + 8; ++j) {
    const Ordinal e = fund_seq(gamma, j);
    if (!(e > xi)) continue;
    const Natural i = scan_index(e, xi);
    if (fund_seq(e, i) == xi) {
      f_prime = pair(j, i);
      break;
    }
  }
  return pair(coloring_value(top, xi), f_prime);
}

}  // namespace ordwalk::reference
