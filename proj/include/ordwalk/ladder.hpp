#pragma once

// Ladder systems S_a = C_a and the recursive construction of a coloring
// F : gamma -> w that is finite-to-one on every ladder S_a, a < gamma.

#include <cstddef>
#include <map>
#include <memory>
#include <utility>

#include "ordwalk/ordinal.hpp"

namespace ordwalk {

inline constexpr std::size_t kDefaultStageLimit = 1'000'000;

/// S_alpha[i]; DomainError unless alpha is a limit.
Ordinal ladder(const Ordinal& alpha, Natural i);

/// Position of xi in S_alpha, or 0 when xi is not on the ladder.
Natural enum_index(const Ordinal& alpha, const Ordinal& xi);

/// Cantor pairing (a+b)(a+b+1)/2 + b. OverflowError past 64 bits.
Natural pair(Natural a, Natural b);
std::pair<Natural, Natural> unpair(Natural z);

/// The club E = {gamma[0] < gamma[1] < ...} of limits cofinal in gamma.
class ClubSequence {
public:
  /// DomainError unless gamma is a limit not of the form delta + w.
  explicit ClubSequence(Ordinal gamma);

  const Ordinal& gamma() const noexcept { return gamma_; }
  Ordinal at(Natural k) const;
  /// Least k with E[k] > xi, for xi < gamma.
  Natural index_above(const Ordinal& xi) const;

private:
  Ordinal gamma_;
};

/// F' on the union of the ladders S_E[k], k < depth: xi on S_E[k] at position
/// i gets pair(k, i) for the least such k, everything else gets 0.
class Uniformizer {
public:
  static constexpr Natural kUnbounded = ~Natural{0};

  Uniformizer(ClubSequence club, Natural depth) : club_(std::move(club)), depth_(depth) {}

  Natural operator()(const Ordinal& xi) const;
  const ClubSequence& club() const noexcept { return club_; }
  Natural depth() const noexcept { return depth_; }

private:
  ClubSequence club_;
  Natural depth_;
};

/// F : gamma -> w, evaluated lazily through memoized construction stages.
///
///   gamma <= w          F(xi) = xi
///   gamma = b+1, b lim  F(xi) = pair(F_b(xi), enum_index(b, xi)), F(b) = 0
///   gamma = b+1         F = F_b, F(b) = 0
///   gamma = d+w         F = F_(d+1), 0 on [d+1, gamma)
///   otherwise           F(xi) = pair(F_b(xi), F'(xi)) with b = min E \ (xi+1)
///
/// bound(a) is a fiber bound for F on S_a, derived alongside the recursion.
/// Copies share the stage memo; concurrent use is safe.
class Coloring {
public:
  explicit Coloring(Ordinal gamma, std::size_t stage_limit = kDefaultStageLimit);

  const Ordinal& gamma() const noexcept { return gamma_; }
  Natural evaluate(const Ordinal& xi) const;
  Natural bound(const Ordinal& alpha) const;
  std::size_t stage_count() const;

  struct Memo;

private:
  Ordinal gamma_;
  std::shared_ptr<Memo> memo_;
};

/// Multiplicities of F over S_alpha[0 .. prefix). CertificateViolation when
/// one exceeds bound(alpha).
std::map<Natural, std::size_t> fiber_report(const Coloring& coloring, const Ordinal& alpha,
                                            Natural prefix);

}  // namespace ordwalk
