#include "ordwalk/walks.hpp"

#include <algorithm>
#include <future>
#include <string>

#include "ordwalk/csequence.hpp"

namespace ordwalk {
namespace {

void require_ordered(const Ordinal& alpha, const Ordinal& beta) {
  if (alpha > beta) {
    throw DomainError("walk: alpha " + format(alpha) + " exceeds beta " + format(beta));
  }
}

[[noreturn]] void guard_tripped(std::size_t guard) {
  throw ResourceError("walk exceeded step guard of " + std::to_string(guard));
}

Natural abs_diff(Natural a, Natural b) { return a > b ? a - b : b - a; }

CoherenceReport scan_range(const Ordinal& beta, const Ordinal& gamma,
                           std::span<const Ordinal> xs, std::size_t step_guard) {
  CoherenceReport best;
  bool first = true;
  for (const Ordinal& xi : xs) {
    const Natural d = abs_diff(rho2(xi, beta, step_guard), rho2(xi, gamma, step_guard));
    if (first || d > best.max_delta) {
      best = {d, xi};
      first = false;
    }
  }
  return best;
}

}  // namespace

WalkTrace trace(const Ordinal& alpha, const Ordinal& beta, std::size_t step_guard) {
  require_ordered(alpha, beta);
  WalkTrace t{alpha, beta, {beta}};
  while (t.points.back() != alpha) {
    if (t.points.size() > step_guard) guard_tripped(step_guard);
    t.points.push_back(min_above(t.points.back(), alpha));
  }
  return t;
}

Natural rho2(const Ordinal& alpha, const Ordinal& beta, std::size_t step_guard) {
  require_ordered(alpha, beta);
  Natural steps = 0;
  Ordinal current = beta;
  while (current != alpha) {
    if (steps >= step_guard) guard_tripped(step_guard);
    current = min_above(current, alpha);
    ++steps;
  }
  return steps;
}

Ordinal stabilizer(const Ordinal& alpha, const Ordinal& beta, std::size_t step_guard) {
  if (!(alpha < beta)) {
    throw DomainError("stabilizer: alpha " + format(alpha) + " must lie below beta " +
                      format(beta));
  }
  const WalkTrace t = trace(alpha, beta, step_guard);
  Ordinal eta;
  // Points 0 .. n-2; point n-1 steps straight to alpha.
  for (std::size_t i = 0; i + 2 < t.points.size(); ++i) {
    if (auto m = max_below(t.points[i], alpha); m && *m > eta) eta = *m;
  }
  return eta;
}

CoherenceReport coherence_delta(const Ordinal& beta, const Ordinal& gamma,
                                const ProbeSet& probes, std::size_t workers,
                                std::size_t step_guard) {
  if (!(beta < gamma)) throw DomainError("coherence-delta: requires beta < gamma");
  if (probes.cap > beta) throw DomainError("coherence-delta: probe cap exceeds beta");
  const std::span<const Ordinal> all(probes.members);
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(all.size(), 1));
  if (workers == 1) return scan_range(beta, gamma, all, step_guard);

  const std::size_t chunk = (all.size() + workers - 1) / workers;
  std::vector<std::future<CoherenceReport>> parts;
  for (std::size_t lo = 0; lo < all.size(); lo += chunk) {
    auto piece = all.subspan(lo, std::min(chunk, all.size() - lo));
    parts.push_back(std::async(std::launch::async, [&, piece] {
      return scan_range(beta, gamma, piece, step_guard);
    }));
  }
  // Chunks are in increasing order, so strict improvement keeps the least argmax.
  CoherenceReport best = parts.front().get();
  for (std::size_t k = 1; k < parts.size(); ++k) {
    CoherenceReport r = parts[k].get();
    if (r.max_delta > best.max_delta) best = std::move(r);
  }
  return best;
}

std::optional<WitnessPair> unbounded_witness(const ProbeSet& a_set, const ProbeSet& b_set,
                                             Natural n, std::size_t step_guard) {
  for (const Ordinal& a : a_set.members) {
    // b_set is increasing; skip everything not above a.
    auto it = std::upper_bound(b_set.members.begin(), b_set.members.end(), a);
    for (; it != b_set.members.end(); ++it) {
      const Natural r = rho2(a, *it, step_guard);
      if (r > n) return WitnessPair{a, *it, r};
    }
  }
  return std::nullopt;
}

}  // namespace ordwalk
