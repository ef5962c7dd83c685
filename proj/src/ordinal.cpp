#include "ordwalk/ordinal.hpp"

#include <algorithm>
#include <cctype>

namespace ordwalk {

Ordinal::Ordinal(std::vector<Term> terms)
    : terms_(terms.empty() ? nullptr
                           : std::make_shared<const std::vector<Term>>(std::move(terms))) {}

Ordinal Ordinal::natural(Natural n) {
  if (n == 0) return {};
  return Ordinal(std::vector<Term>{Term{Ordinal{}, n}});
}

Ordinal Ordinal::omega() { return omega_power(natural(1)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, Natural coefficient) {
  if (coefficient == 0) return {};
  return Ordinal(std::vector<Term>{Term{exponent, coefficient}});
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) {
      throw DomainError("CNF coefficient must be positive");
    }
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) {
      throw DomainError("CNF exponents must be strictly decreasing");
    }
  }
  return Ordinal(std::move(terms));
}

std::span<const Term> Ordinal::terms() const noexcept {
  if (!terms_) return {};
  return {terms_->data(), terms_->size()};
}

bool Ordinal::is_natural() const noexcept {
  return is_zero() || (term_count() == 1 && (*terms_)[0].exponent.is_zero());
}

bool Ordinal::is_successor() const noexcept {
  return !is_zero() && terms_->back().exponent.is_zero();
}

bool Ordinal::is_limit() const noexcept {
  return !is_zero() && !terms_->back().exponent.is_zero();
}

std::optional<Natural> Ordinal::as_natural() const noexcept {
  if (is_zero()) return Natural{0};
  if (!is_natural()) return std::nullopt;
  return (*terms_)[0].coefficient;
}

const Term& Ordinal::leading_term() const {
  if (is_zero()) throw DomainError("zero has no terms");
  return terms_->front();
}

const Term& Ordinal::last_term() const {
  if (is_zero()) throw DomainError("zero has no terms");
  return terms_->back();
}

std::size_t Ordinal::depth() const noexcept {
  std::size_t d = 0;
  for (const Term& t : terms()) {
    if (!t.exponent.is_zero()) d = std::max(d, 1 + t.exponent.depth());
  }
  return d;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) noexcept {
  if (a.terms_ == b.terms_) return std::strong_ordering::equal;
  const auto ta = a.terms();
  const auto tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = ta[i].exponent <=> tb[i].exponent; c != 0) return c;
    if (auto c = ta[i].coefficient <=> tb[i].coefficient; c != 0) return c;
  }
  return ta.size() <=> tb.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) noexcept {
  return (a <=> b) == 0;
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) noexcept { return a <=> b; }

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const auto tb = b.terms();
  const Ordinal& lead = tb.front().exponent;
  std::vector<Term> out;
  out.reserve(a.term_count() + tb.size());
  Natural carried = 0;
  for (const Term& t : a.terms()) {
    const auto c = t.exponent <=> lead;
    if (c > 0) {
      out.push_back(t);
    } else {
      if (c == 0) carried = t.coefficient;
      break;
    }
  }
  out.push_back(Term{lead, checked_add(carried, tb.front().coefficient)});
  out.insert(out.end(), tb.begin() + 1, tb.end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal successor(const Ordinal& a) { return add(a, Ordinal::natural(1)); }

Ordinal predecessor(const Ordinal& a) {
  if (!a.is_successor()) throw DomainError("predecessor of a non-successor");
  const auto t = a.terms();
  std::vector<Term> out(t.begin(), t.end());
  if (--out.back().coefficient == 0) out.pop_back();
  return Ordinal::from_terms(std::move(out));
}

Ordinal left_subtract(const Ordinal& small, const Ordinal& big) {
  if (small > big) throw DomainError("left subtraction of a larger ordinal");
  const auto ts = small.terms();
  const auto tb = big.terms();
  std::size_t i = 0;
  while (i < ts.size() && ts[i] == tb[i]) ++i;
  if (i == ts.size()) return Ordinal::from_terms({tb.begin() + i, tb.end()});
  std::vector<Term> out;
  if (ts[i].exponent == tb[i].exponent) {
    out.push_back(Term{tb[i].exponent, tb[i].coefficient - ts[i].coefficient});
    out.insert(out.end(), tb.begin() + i + 1, tb.end());
  } else {
    out.assign(tb.begin() + i, tb.end());
  }
  return Ordinal::from_terms(std::move(out));
}

std::pair<Ordinal, Natural> split_finite(const Ordinal& a) {
  if (!a.is_successor()) return {a, 0};
  const auto t = a.terms();
  return {Ordinal::from_terms({t.begin(), t.end() - 1}), t.back().coefficient};
}

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ordinal parse_all() {
    Ordinal value = parse_ordinal();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Ordinal parse_ordinal() {
    Ordinal sum = parse_term();
    while (accept('+')) sum = add(sum, parse_term());
    return sum;
  }

  Ordinal parse_term() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a term");
    if (text_[pos_] == 'w') {
      ++pos_;
      Ordinal exponent = Ordinal::natural(1);
      if (accept('^')) {
        if (accept('(')) {
          exponent = parse_ordinal();
          if (!accept(')')) fail("expected ')'");
        } else {
          exponent = Ordinal::natural(parse_nat());
        }
      }
      Natural coefficient = 1;
      if (accept('*')) coefficient = parse_nat();
      return Ordinal::omega_power(exponent, coefficient);
    }
    return Ordinal::natural(parse_nat());
  }

  Natural parse_nat() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a natural number");
    }
    const std::size_t start = pos_;
    Natural n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      try {
        n = checked_add(checked_mul(n, 10), static_cast<Natural>(text_[pos_] - '0'));
      } catch (const OverflowError&) {
        throw OverflowError("natural literal at " + std::to_string(start) +
                            " exceeds 64 bits");
      }
      ++pos_;
    }
    return n;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void format_term(const Term& t, std::string& out) {
  if (t.exponent.is_zero()) {
    out += std::to_string(t.coefficient);
    return;
  }
  out += 'w';
  if (auto n = t.exponent.as_natural()) {
    if (*n != 1) out += '^' + std::to_string(*n);
  } else {
    out += "^(" + format(t.exponent) + ')';
  }
  if (t.coefficient != 1) out += '*' + std::to_string(t.coefficient);
}

}  // namespace

Ordinal parse(std::string_view text) { return Parser(text).parse_all(); }

std::string format(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : a.terms()) {
    if (!first) out += " + ";
    first = false;
    format_term(t, out);
  }
  return out;
}

}  // namespace ordwalk
