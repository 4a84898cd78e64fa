#pragma once

// Exact arithmetic on the value group of logarithmic transseries: the
// lexicographically ordered rational vector space with basis e_0, e_1, ...
// together with psi, its derivative and integral, the successor and
// predecessor functions, and the definable subsets used by the harness.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asymlog/rational.hpp"

namespace asymlog {

using Index = std::uint64_t;

/// A finitely supported vector sum_i r_i e_i with rational coefficients.
///
/// Stored as (index, coefficient) pairs sorted strictly by index with no zero
/// coefficient, so equality is structural. The empty list is the identity 0.
class GammaElement {
 public:
  using Term = std::pair<Index, Rational>;

  GammaElement() = default;

  /// Accepts terms in any order; duplicates are summed and zeros dropped.
  explicit GammaElement(std::vector<Term> terms);

  static GammaElement basis(Index i, const Rational& coeff = 1);

  /// Convenience for tests: coordinates (r_0, r_1, ...) given densely.
  static GammaElement from_dense(std::span<const Rational> coords);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient at index i (zero outside the support).
  Rational coeff(Index i) const;

  /// Least index carrying a nonzero coefficient. Requires !is_zero().
  Index leading_index() const;
  const Rational& leading_coeff() const;

  /// Largest index in the support. Requires !is_zero().
  Index max_index() const;

  /// Least n with r_n != 1; every element has one since supports are finite.
  Index first_non_one() const;

  /// -1, 0 or +1 by the lexicographic order.
  int sign() const;

  GammaElement operator-() const;
  GammaElement& operator+=(const GammaElement& other);
  GammaElement& operator-=(const GammaElement& other);
  friend GammaElement operator+(GammaElement a, const GammaElement& b) { return a += b; }
  friend GammaElement operator-(GammaElement a, const GammaElement& b) { return a -= b; }
  friend GammaElement operator*(const Rational& q, const GammaElement& a);

  friend bool operator==(const GammaElement&, const GammaElement&) = default;
  friend std::strong_ordering operator<=>(const GammaElement& a, const GammaElement& b);

 private:
  std::vector<Term> terms_;
};

GammaElement add(const GammaElement& a, const GammaElement& b);
GammaElement negate(const GammaElement& a);
GammaElement scale(const GammaElement& a, const Rational& q);

/// Gamma together with a top element infinity.
class ExtendedElement {
 public:
  ExtendedElement() = default;  // the identity 0
  ExtendedElement(GammaElement value) : value_(std::move(value)) {}  // NOLINT: implicit embedding of Gamma into Gamma_inf

  static ExtendedElement infinity() {
    ExtendedElement e;
    e.value_.reset();
    return e;
  }

  bool is_infinity() const noexcept { return !value_.has_value(); }
  bool is_zero() const noexcept { return value_ && value_->is_zero(); }

  /// Requires !is_infinity().
  const GammaElement& value() const;

  friend bool operator==(const ExtendedElement&, const ExtendedElement&) = default;
  friend std::strong_ordering operator<=>(const ExtendedElement& a, const ExtendedElement& b);

 private:
  std::optional<GammaElement> value_{GammaElement{}};
};

std::strong_ordering compare(const ExtendedElement& a, const ExtendedElement& b);

/// An element of the Psi-set: level n denotes e_0 + ... + e_n.
struct PsiValue {
  Index level = 0;

  GammaElement embed() const;
  friend auto operator<=>(const PsiValue&, const PsiValue&) = default;
};

/// s0, the least element of Psi.
inline GammaElement s0() { return PsiValue{0}.embed(); }

// Definable functions. Each maps infinity to infinity; psi, derivative and
// predecessor also send the points where the function is undefined to
// infinity.
ExtendedElement psi(const ExtendedElement& a);
ExtendedElement integrate(const ExtendedElement& a);
ExtendedElement derivative(const ExtendedElement& a);
ExtendedElement successor(const ExtendedElement& a);
ExtendedElement predecessor(const ExtendedElement& a);

/// The level of a if a = (1,...,1,0,...), otherwise nothing.
std::optional<PsiValue> is_psi_element(const ExtendedElement& a);

/// s0 <= a <= beta for some beta in Psi.
bool in_conv_psi(const GammaElement& a);

/// Compares archimedean classes; [0] is the least class.
std::strong_ordering arch_class_compare(const GammaElement& a, const GammaElement& b);

/// Least n >= 0 with s^n(a) >= b, for a, b in conv(Psi). The Psi-set has
/// order type omega here and is cofinal in conv(Psi), so the threshold always
/// exists; the function still returns optional so callers state the quantifier
/// explicitly. Throws DomainError if a or b lies outside conv(Psi).
std::optional<std::uint64_t> much_less_threshold(const GammaElement& a, const GammaElement& b);

/// a << b, i.e. s^n(a) < b for every n.
bool much_less(const GammaElement& a, const GammaElement& b);

/// Whether the finite increasing sequence is spread out by b: every
/// a_i - b in conv(Psi) and s0 << a_i - b << a_j - b for i < j.
bool is_spread_out(std::span<const GammaElement> seq, const GammaElement& b);

/// a in (Gamma^>)' and a in (Gamma^<)' respectively.
bool in_positive_derivatives(const GammaElement& a);
bool in_negative_derivatives(const GammaElement& a);

// Text format: `0`, `inf`, or a signed sum of `<rational>*e<index>` terms.
std::string to_string(const GammaElement& a);
std::string to_string(const ExtendedElement& a);
GammaElement parse_element(std::string_view text);
ExtendedElement parse_extended(std::string_view text);

}  // namespace asymlog
