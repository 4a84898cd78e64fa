#include "asymlog/rational.hpp"

#include <stdexcept>

namespace asymlog {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return q;
}

Rational parse_natural(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty number");
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("not a natural number");
  }
  return Rational(mpz_class(std::string(digits), 10));
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace asymlog
