#pragma once

// Ordinals below epsilon_0 in hereditary Cantor normal form.
//
// An Ordinal is the sum  w^e1*c1 + ... + w^ek*ck  with e1 > ... > ek and
// every ci >= 1. Exponents are Ordinals themselves. Values are immutable and
// share their term storage, so copies are cheap and safe across threads.

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordwalk/error.hpp"

namespace ordwalk {

struct Term;

class Ordinal {
public:
  Ordinal() = default;

  static Ordinal natural(Natural n);
  static Ordinal omega();
  /// w^exponent * coefficient; zero when coefficient is 0.
  static Ordinal omega_power(const Ordinal& exponent, Natural coefficient = 1);
  /// Builds from terms that already satisfy the CNF invariants; throws
  /// DomainError otherwise.
  static Ordinal from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const noexcept;
  std::size_t term_count() const noexcept { return terms_ ? terms_->size() : 0; }

  bool is_zero() const noexcept { return !terms_; }
  bool is_natural() const noexcept;
  bool is_successor() const noexcept;
  bool is_limit() const noexcept;
  std::optional<Natural> as_natural() const noexcept;

  const Term& leading_term() const;
  const Term& last_term() const;

  /// Number of nested w symbols: 0 for naturals, 1 below w^w, ...
  std::size_t depth() const noexcept;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) noexcept;
  friend bool operator==(const Ordinal& a, const Ordinal& b) noexcept;

private:
  explicit Ordinal(std::vector<Term> terms);

  std::shared_ptr<const std::vector<Term>> terms_;
};

struct Term {
  Ordinal exponent;
  Natural coefficient = 1;

  friend bool operator==(const Term&, const Term&) noexcept = default;
};

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) noexcept;

/// Ordinal sum. Terms of `a` below the leading exponent of `b` are absorbed.
Ordinal add(const Ordinal& a, const Ordinal& b);
inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }

Ordinal successor(const Ordinal& a);
/// Inverse of successor; DomainError unless `a` is a successor.
Ordinal predecessor(const Ordinal& a);

/// The unique d with small + d == big. DomainError when small > big.
Ordinal left_subtract(const Ordinal& small, const Ordinal& big);

/// Splits a into (mu, n) with a == mu + n, n finite and mu zero or a limit.
std::pair<Ordinal, Natural> split_finite(const Ordinal& a);

/// Parses the literal grammar
///   ordinal := term ("+" term)*
///   term    := "w" power? mult? | nat
///   power   := "^" (nat | "(" ordinal ")")
///   mult    := "*" nat
/// with insignificant whitespace, returning the canonical CNF value.
Ordinal parse(std::string_view text);

/// Canonical literal; parse(format(a)) == a.
std::string format(const Ordinal& a);

}  // namespace ordwalk
