#pragma once

// Minimal walks along the canonical C-sequence.
//
// The walk from beta down to alpha visits beta = b0 > b1 > ... > bn = alpha
// with b(i+1) = min(C_bi \ alpha). rho2(alpha, beta) is the step count n.

#include <cstddef>
#include <optional>
#include <vector>

#include "ordwalk/ordinal.hpp"
#include "ordwalk/probe.hpp"

namespace ordwalk {

inline constexpr std::size_t kDefaultStepGuard = 1'000'000;

struct WalkTrace {
  Ordinal alpha;
  Ordinal beta;
  std::vector<Ordinal> points;

  Natural rho2() const noexcept { return points.empty() ? 0 : points.size() - 1; }
};

/// DomainError when alpha > beta; ResourceError past `step_guard` steps.
WalkTrace trace(const Ordinal& alpha, const Ordinal& beta,
                std::size_t step_guard = kDefaultStepGuard);

Natural rho2(const Ordinal& alpha, const Ordinal& beta,
             std::size_t step_guard = kDefaultStepGuard);

/// The ordinal eta below alpha past which every walk from beta is forced
/// through the first rho2(alpha, beta) points of trace(alpha, beta).
///
/// eta is the largest element below alpha of C_p over the trace points p
/// other than the last two (0 when there is none). For eta < xi < alpha the
/// walk from beta to xi starts with trace(alpha, beta).points minus alpha,
/// hence rho2(xi, beta) >= rho2(alpha, beta).
Ordinal stabilizer(const Ordinal& alpha, const Ordinal& beta,
                   std::size_t step_guard = kDefaultStepGuard);

struct CoherenceReport {
  Natural max_delta = 0;
  Ordinal argmax;
};

/// Maximum of |rho2(xi, beta) - rho2(xi, gamma)| over xi in the probe set,
/// with the least maximizing xi. Requires beta < gamma and probes.cap <= beta.
/// `workers` only changes how the scan is partitioned, never its result.
CoherenceReport coherence_delta(const Ordinal& beta, const Ordinal& gamma,
                                const ProbeSet& probes, std::size_t workers = 1,
                                std::size_t step_guard = kDefaultStepGuard);

struct WitnessPair {
  Ordinal alpha;
  Ordinal beta;
  Natural rho2 = 0;
};

/// First pair (a, b) in lexicographic order over a in A, b in B with a < b
/// and rho2(a, b) > n.
std::optional<WitnessPair> unbounded_witness(const ProbeSet& a_set, const ProbeSet& b_set,
                                             Natural n,
                                             std::size_t step_guard = kDefaultStepGuard);

}  // namespace ordwalk
