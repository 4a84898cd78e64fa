#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace asymlog {

/// Exact rational coefficient. Always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Three-way comparison for GMP rationals, which predate operator<=>.
inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline int sign(const Rational& q) { return sgn(q); }

/// Builds p/q in canonical form. Requires q != 0.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses an unsigned decimal natural (`digits`) into a Rational.
Rational parse_natural(std::string_view digits);

/// `p/q` with the slash omitted for integers, e.g. "3/2", "-2".
std::string to_string(const Rational& q);

}  // namespace asymlog
