#pragma once

// Finite-witness procedures for the walk-weight topology on X = kappa + 1.
//
// Every ordinal point is isolated. Neighbourhoods of the apex are generated
// by the basic sets
//     {apex} u { xi : xi >= anchor } u { xi < anchor : rho2(xi, anchor) > level }
// or, in union form, by {apex} u U_j { xi < a_j : rho2(xi, a_j) > n_j }.
// Only finitely supported descriptors are representable.

#include <cstddef>
#include <map>
#include <set>
#include <variant>
#include <vector>

#include "ordwalk/ordinal.hpp"
#include "ordwalk/walks.hpp"

namespace ordwalk {

struct Apex {
  friend bool operator==(Apex, Apex) = default;
};

/// Either the apex point or an ordinal point.
using Point = std::variant<Apex, Ordinal>;

class BasicOpen {
public:
  BasicOpen(Ordinal anchor, Natural level);

  const Ordinal& anchor() const noexcept { return anchor_; }
  Natural level() const noexcept { return level_; }

private:
  Ordinal anchor_;
  Natural level_;
};

class NeighborhoodDescriptor {
public:
  NeighborhoodDescriptor() = default;
  /// DomainError on a repeated or non-limit anchor.
  void add(const Ordinal& anchor, Natural level);

  const std::map<Ordinal, Natural>& entries() const noexcept { return entries_; }

private:
  std::map<Ordinal, Natural> entries_;
};

/// The countable family {BasicOpen(beta, n) : n natural}; its intersection
/// is the apex together with every ordinal >= beta.
struct GdeltaScheme {
  Ordinal beta;

  BasicOpen level(Natural n) const { return BasicOpen(beta, n); }
};

struct Separation {
  GdeltaScheme scheme;
  /// xi -> rho2(xi, beta); xi is outside BasicOpen(beta, certificate[xi]).
  std::map<Ordinal, Natural> certificate;
};

struct AnchorHistogram {
  Ordinal anchor;
  std::map<Natural, std::size_t> histogram;
};

struct ConvergenceReport {
  std::vector<Ordinal> sequence;
  std::vector<AnchorHistogram> anchors;
  std::size_t max_fiber = 0;
};

bool member(const Point& p, const BasicOpen& u);
bool member(const Point& p, const NeighborhoodDescriptor& d);

/// Longest injective sequence xi_0, ..., xi_k (k <= m) from A below alpha
/// with rho2(xi_n, alpha) >= n; among those, the lexicographically least.
std::vector<Ordinal> frechet_extract(const std::set<Ordinal>& a, const Ordinal& alpha,
                                     Natural m);

/// Union over n of { xi in A_n : rho2(xi, alpha) > n }.
std::set<Ordinal> alpha1_merge(const std::vector<std::set<Ordinal>>& families,
                               const Ordinal& alpha);

/// Least limit above max(B) with the exclusion level of every member.
Separation gdelta_separate(const std::set<Ordinal>& b);

/// rho2 histograms of the sequence below each anchor.
ConvergenceReport convergence_report(const std::vector<Ordinal>& sequence,
                                     const std::vector<Ordinal>& anchors);

}  // namespace ordwalk
