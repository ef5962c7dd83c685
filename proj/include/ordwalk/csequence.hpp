#pragma once

// The C-sequence used by every walk: C_{a+1} = {a}, and for a limit lambda the
// canonical fundamental sequence lambda[0] < lambda[1] < ... with supremum
// lambda. Writing lambda = nu + w^e (nu absorbing all but one copy of the
// final term):
//   e = e' + 1   ->  lambda[i] = nu + w^e' * (i+1)
//   e limit      ->  lambda[i] = nu + w^(e[i])

#include <cstddef>
#include <optional>
#include <vector>

#include "ordwalk/ordinal.hpp"

namespace ordwalk {

enum class CSequenceRule { canonical };

inline constexpr std::size_t kDefaultMemberLimit = 1'000'000;

/// lambda[i]. DomainError unless lambda is a limit.
Ordinal fund_seq(const Ordinal& lambda, Natural i);

/// Least i with lambda[i] >= alpha, for a limit lambda and alpha < lambda.
/// Closed form, O(CNF size).
Natural min_above_index(const Ordinal& lambda, const Ordinal& alpha);

/// min(C_beta \ alpha), the single walk step. Requires alpha < beta.
Ordinal min_above(const Ordinal& beta, const Ordinal& alpha);

/// C_alpha intersected with `below`, increasing. For limit alpha, `below`
/// must not exceed alpha (the intersection would be infinite).
std::vector<Ordinal> c_members(const Ordinal& alpha, const Ordinal& below,
                               std::size_t limit = kDefaultMemberLimit);

/// Largest element of C_beta strictly below alpha, if any.
std::optional<Ordinal> max_below(const Ordinal& beta, const Ordinal& alpha);

}  // namespace ordwalk
