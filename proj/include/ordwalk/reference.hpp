#pragma once

// Naive evaluator: fundamental sequences rebuilt term by term, min-above by
// linear scan, rho2 by direct recursion, colorings by direct recursion on the
// stage. Slow, independent of the closed-form paths, used as the oracle.

#include <cstddef>
#include <vector>

#include "ordwalk/ordinal.hpp"
#include "ordwalk/probe.hpp"

namespace ordwalk::reference {

inline constexpr Natural kScanLimit = 1'000'000;

Ordinal fund_seq(const Ordinal& lambda, Natural i);
Ordinal min_above(const Ordinal& beta, const Ordinal& alpha);
std::vector<Ordinal> trace_points(const Ordinal& alpha, const Ordinal& beta);
Natural rho2(const Ordinal& alpha, const Ordinal& beta);

/// max |rho2(xi, beta) - rho2(xi, gamma)| over the members, least argmax.
std::pair<Natural, Ordinal> coherence_delta(const Ordinal& beta, const Ordinal& gamma,
                                            const std::vector<Ordinal>& members);

Natural coloring_value(const Ordinal& gamma, const Ordinal& xi);

}  // namespace ordwalk::reference
