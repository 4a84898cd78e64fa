#include "asymlog/gamma.hpp"

#include <algorithm>
#include <stdexcept>

#include "asymlog/errors.hpp"

namespace asymlog {

GammaElement::GammaElement(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  for (auto& [idx, c] : terms) {
    if (!terms_.empty() && terms_.back().first == idx) {
      terms_.back().second += c;
      if (terms_.back().second == 0) terms_.pop_back();
    } else if (c != 0) {
      terms_.emplace_back(idx, std::move(c));
    }
  }
}

GammaElement GammaElement::basis(Index i, const Rational& coeff) {
  GammaElement a;
  if (coeff != 0) a.terms_.emplace_back(i, coeff);
  return a;
}

GammaElement GammaElement::from_dense(std::span<const Rational> coords) {
  GammaElement a;
  for (Index i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) a.terms_.emplace_back(i, coords[i]);
  }
  return a;
}

Rational GammaElement::coeff(Index i) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                             [](const Term& t, Index v) { return t.first < v; });
  if (it != terms_.end() && it->first == i) return it->second;
  return 0;
}

Index GammaElement::leading_index() const {
  if (terms_.empty()) throw DomainError("leading index of 0");
  return terms_.front().first;
}

const Rational& GammaElement::leading_coeff() const {
  if (terms_.empty()) throw DomainError("leading coefficient of 0");
  return terms_.front().second;
}

Index GammaElement::max_index() const {
  if (terms_.empty()) throw DomainError("support of 0 is empty");
  return terms_.back().first;
}

Index GammaElement::first_non_one() const {
  Index i = 0;
  for (const auto& [idx, c] : terms_) {
    if (idx != i || c != 1) return i;
    ++i;
  }
  return i;
}

int GammaElement::sign() const {
  return terms_.empty() ? 0 : asymlog::sign(terms_.front().second);
}

GammaElement GammaElement::operator-() const {
  GammaElement r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

// r = a + factor * b, merging sorted supports.
std::vector<GammaElement::Term> merge(const std::vector<GammaElement::Term>& a,
                                      const std::vector<GammaElement::Term>& b,
                                      int factor) {
  std::vector<GammaElement::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, factor > 0 ? ib->second : Rational(-ib->second));
      ++ib;
    } else {
      Rational c = factor > 0 ? Rational(ia->second + ib->second)
                              : Rational(ia->second - ib->second);
      if (c != 0) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

GammaElement& GammaElement::operator+=(const GammaElement& other) {
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

GammaElement& GammaElement::operator-=(const GammaElement& other) {
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

GammaElement operator*(const Rational& q, const GammaElement& a) {
  GammaElement r;
  if (q == 0) return r;
  r.terms_.reserve(a.terms_.size());
  for (const auto& [idx, c] : a.terms_) r.terms_.emplace_back(idx, Rational(q * c));
  return r;
}

std::strong_ordering operator<=>(const GammaElement& a, const GammaElement& b) {
  // Sign of the first coordinate where a and b differ.
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
      return sgn(ia->second) > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (ia == a.terms_.end() || ib->first < ia->first) {
      return sgn(ib->second) > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (auto c = compare(ia->second, ib->second); c != 0) return c;
    ++ia;
    ++ib;
  }
  return std::strong_ordering::equal;
}

GammaElement add(const GammaElement& a, const GammaElement& b) { return a + b; }
GammaElement negate(const GammaElement& a) { return -a; }
GammaElement scale(const GammaElement& a, const Rational& q) { return q * a; }

const GammaElement& ExtendedElement::value() const {
  if (!value_) throw DomainError("infinity has no finite value");
  return *value_;
}

std::strong_ordering operator<=>(const ExtendedElement& a, const ExtendedElement& b) {
  if (a.is_infinity() || b.is_infinity()) {
    return a.is_infinity() <=> b.is_infinity();
  }
  return *a.value_ <=> *b.value_;
}

std::strong_ordering compare(const ExtendedElement& a, const ExtendedElement& b) { return a <=> b; }

GammaElement PsiValue::embed() const {
  std::vector<GammaElement::Term> terms;
  terms.reserve(level + 1);
  for (Index i = 0; i <= level; ++i) terms.emplace_back(i, 1);
  return GammaElement(std::move(terms));
}

ExtendedElement psi(const ExtendedElement& a) {
  if (a.is_infinity() || a.is_zero()) return ExtendedElement::infinity();
  return PsiValue{a.value().leading_index()}.embed();
}

ExtendedElement integrate(const ExtendedElement& a) {
  if (a.is_infinity()) return a;
  const GammaElement& v = a.value();
  const Index n = v.first_non_one();
  std::vector<GammaElement::Term> terms;
  terms.emplace_back(n, v.coeff(n) - 1);
  for (const auto& t : v.terms()) {
    if (t.first > n) terms.push_back(t);
  }
  return GammaElement(std::move(terms));
}

ExtendedElement derivative(const ExtendedElement& a) {
  if (a.is_infinity() || a.is_zero()) return ExtendedElement::infinity();
  return a.value() + psi(a).value();
}

ExtendedElement successor(const ExtendedElement& a) {
  if (a.is_infinity()) return a;
  return PsiValue{a.value().first_non_one()}.embed();
}

ExtendedElement predecessor(const ExtendedElement& a) {
  auto level = is_psi_element(a);
  if (!level || level->level == 0) return ExtendedElement::infinity();
  return PsiValue{level->level - 1}.embed();
}

std::optional<PsiValue> is_psi_element(const ExtendedElement& a) {
  if (a.is_infinity() || a.is_zero()) return std::nullopt;
  const GammaElement& v = a.value();
  const Index n = v.first_non_one();
  if (n != v.terms().size() || n == 0) return std::nullopt;
  return PsiValue{n - 1};
}

bool in_conv_psi(const GammaElement& a) {
  if (a < s0()) return false;
  if (is_psi_element(a)) return true;
  return a.coeff(a.first_non_one()) < 1;
}

std::strong_ordering arch_class_compare(const GammaElement& a, const GammaElement& b) {
  if (a.is_zero() || b.is_zero()) return !a.is_zero() <=> !b.is_zero();
  return b.leading_index() <=> a.leading_index();
}

namespace {

// Least level L with Psi(L) >= b, for b in conv(Psi). b <= Psi(first_non_one(b))
// whenever b is in conv(Psi), so the loop is bounded.
Index least_psi_level_above(const GammaElement& b) {
  const Index bound = b.first_non_one();
  for (Index level = 0; level < bound; ++level) {
    if (PsiValue{level}.embed() >= b) return level;
  }
  return bound;
}

}  // namespace

std::optional<std::uint64_t> much_less_threshold(const GammaElement& a, const GammaElement& b) {
  if (!in_conv_psi(a)) throw DomainError("much_less: left operand " + to_string(a) + " is not in conv(Psi)");
  if (!in_conv_psi(b)) throw DomainError("much_less: right operand " + to_string(b) + " is not in conv(Psi)");
  if (a >= b) return 0;
  // s(a) has level first_non_one(a) and s raises levels by one on Psi, so
  // s^n(a) = Psi(k_a + n - 1) for n >= 1.
  const Index ka = a.first_non_one();
  const Index lb = least_psi_level_above(b);
  return lb + 1 > ka ? lb + 1 - ka : 1;
}

bool much_less(const GammaElement& a, const GammaElement& b) {
  return !much_less_threshold(a, b).has_value();
}

bool is_spread_out(std::span<const GammaElement> seq, const GammaElement& b) {
  std::vector<GammaElement> shifted;
  shifted.reserve(seq.size());
  for (const auto& a : seq) {
    shifted.push_back(a - b);
    if (!in_conv_psi(shifted.back())) return false;
  }
  const GammaElement base = s0();
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    if (!much_less(base, shifted[i])) return false;
    for (std::size_t j = i + 1; j < shifted.size(); ++j) {
      if (!much_less(shifted[i], shifted[j])) return false;
    }
  }
  return true;
}

bool in_positive_derivatives(const GammaElement& a) { return integrate(a).value().sign() > 0; }
bool in_negative_derivatives(const GammaElement& a) { return integrate(a).value().sign() < 0; }

}  // namespace asymlog
