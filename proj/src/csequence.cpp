#include "ordwalk/csequence.hpp"

#include <string>

namespace ordwalk {
namespace {

void require_limit(const Ordinal& lambda, const char* op) {
  if (!lambda.is_limit()) {
    throw DomainError(std::string(op) + ": " + format(lambda) + " is not a limit");
  }
}

// lambda = nu + w^e with final exponent e.
struct LimitShape {
  Ordinal nu;
  Ordinal exponent;
};

LimitShape shape_of(const Ordinal& lambda) {
  const auto t = lambda.terms();
  std::vector<Term> head(t.begin(), t.end());
  const Ordinal e = head.back().exponent;
  if (--head.back().coefficient == 0) head.pop_back();
  return {Ordinal::from_terms(std::move(head)), e};
}

}  // namespace

Ordinal fund_seq(const Ordinal& lambda, Natural i) {
  require_limit(lambda, "fund-seq");
  const auto [nu, e] = shape_of(lambda);
  if (e.is_successor()) {
    return nu + Ordinal::omega_power(predecessor(e), checked_add(i, 1));
  }
  return nu + Ordinal::omega_power(fund_seq(e, i));
}

Natural min_above_index(const Ordinal& lambda, const Ordinal& alpha) {
  require_limit(lambda, "min-above");
  if (!(alpha < lambda)) throw DomainError("min-above: alpha must lie below lambda");
  const auto [nu, e] = shape_of(lambda);
  if (alpha <= nu) return 0;
  // alpha = nu + d with 0 < d < w^e.
  const Ordinal d = left_subtract(nu, alpha);
  const Term& lead = d.leading_term();
  if (e.is_successor()) {
    // Need w^e' * (i+1) >= d.
    const Ordinal e_prev = predecessor(e);
    if (lead.exponent < e_prev) return 0;
    const Natural k = lead.coefficient;
    return d.term_count() == 1 ? k - 1 : k;
  }
  // Need w^(e[i]) >= d, i.e. e[i] > lead.exponent, or e[i] == lead.exponent
  // when d is exactly w^(lead.exponent).
  const bool pure_power = d.term_count() == 1 && lead.coefficient == 1;
  const Ordinal target = pure_power ? lead.exponent : successor(lead.exponent);
  return min_above_index(e, target);
}

Ordinal min_above(const Ordinal& beta, const Ordinal& alpha) {
  if (!(alpha < beta)) {
    throw DomainError("min-above: " + format(alpha) + " is not below " + format(beta));
  }
  if (beta.is_successor()) return predecessor(beta);
  return fund_seq(beta, min_above_index(beta, alpha));
}

std::vector<Ordinal> c_members(const Ordinal& alpha, const Ordinal& below, std::size_t limit) {
  if (alpha.is_zero()) throw DomainError("c-members: C_0 is undefined");
  if (alpha.is_successor()) {
    Ordinal p = predecessor(alpha);
    if (p < below) return {p};
    return {};
  }
  if (below > alpha) {
    throw DomainError("c-members: bound " + format(below) + " exceeds " + format(alpha));
  }
  if (below == alpha) throw ResourceError("c-members: C_alpha below alpha is infinite");
  const Natural count = below.is_zero() ? 0 : min_above_index(alpha, below);
  if (count > limit) throw ResourceError("c-members: more than " + std::to_string(limit) + " members");
  std::vector<Ordinal> out;
  out.reserve(count);
  for (Natural i = 0; i < count; ++i) out.push_back(fund_seq(alpha, i));
  return out;
}

std::optional<Ordinal> max_below(const Ordinal& beta, const Ordinal& alpha) {
  if (beta.is_zero()) return std::nullopt;
  if (beta.is_successor()) {
    Ordinal p = predecessor(beta);
    if (p < alpha) return p;
    return std::nullopt;
  }
  if (alpha >= beta) throw DomainError("max-below: C_beta has no largest element below beta");
  const Natural i = alpha.is_zero() ? 0 : min_above_index(beta, alpha);
  if (i == 0) return std::nullopt;
  return fund_seq(beta, i - 1);
}

}  // namespace ordwalk
