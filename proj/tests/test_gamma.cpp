#include <doctest.h>

#include "asymlog/errors.hpp"
#include "asymlog/gamma.hpp"
#include "asymlog/harness.hpp"
#include "support/oracle.hpp"

using namespace asymlog;

namespace {

GammaElement el(const char* text) { return parse_element(text); }
ExtendedElement ext(const char* text) { return parse_extended(text); }
GammaElement dense(std::initializer_list<Rational> c) {
  std::vector<Rational> v(c);
  return GammaElement::from_dense(v);
}
const ExtendedElement kInf = ExtendedElement::infinity();

}  // namespace

TEST_CASE("canonical form") {
  GammaElement a({{3, Rational(2)}, {1, Rational(1)}, {3, Rational(-2)}, {0, Rational(0)}});
  CHECK(a == GammaElement::basis(1));
  CHECK(a.terms().size() == 1);
  CHECK(GammaElement({{0, Rational(0)}}).is_zero());
  CHECK(dense({0, 0, 0}).is_zero());
}

TEST_CASE("add, negate, scale") {
  CHECK((GammaElement::basis(0) + -GammaElement::basis(0)).is_zero());
  CHECK(GammaElement::basis(1) + GammaElement::basis(3) == dense({0, 1, 0, 1}));
  CHECK(add(dense({1, 1}), dense({0, -1, 2})) == dense({1, 0, 2}));
  CHECK(negate(GammaElement{}).is_zero());
  CHECK(scale(GammaElement::basis(2), Rational(1, 3)) == dense({0, 0, Rational(1, 3)}));
  CHECK(scale(dense({2, -4}), Rational(1, 2)) == dense({1, -2}));
  CHECK(scale(dense({2, -4}), Rational(0)).is_zero());
}

TEST_CASE("lexicographic order") {
  CHECK(compare(GammaElement::basis(0), GammaElement::basis(1)) == std::strong_ordering::greater);
  CHECK(compare(el("e3 - 7*e9"), kInf) == std::strong_ordering::less);
  CHECK(compare(kInf, kInf) == std::strong_ordering::equal);
  CHECK(compare(dense({1, -5}), dense({1})) == std::strong_ordering::less);
  CHECK(el("-e0") < GammaElement{});
  CHECK(el("e5") > GammaElement{});
}

TEST_CASE("order agrees with the dense oracle") {
  harness::SamplerConfig cfg;
  for (std::uint64_t t = 0; t < 2000; ++t) {
    harness::Sampler rng(cfg, "test-order", t);
    const GammaElement a = rng.element();
    const GammaElement b = rng.coin() ? rng.element() : a + rng.tail(rng.below(9));
    const int want = oracle::lex_compare(oracle::dense(a), oracle::dense(b));
    const auto got = a <=> b;
    CHECK((got < 0 ? -1 : got > 0 ? 1 : 0) == want);
  }
}

TEST_CASE("psi") {
  CHECK(psi(GammaElement::basis(1)) == ExtendedElement(dense({1, 1})));
  CHECK(psi(GammaElement{}) == kInf);
  CHECK(psi(kInf) == kInf);
  CHECK(psi(el("5*e2 - 3*e7")) == ExtendedElement(dense({1, 1, 1})));
}

TEST_CASE("integral") {
  CHECK(integrate(dense({1, 1, 2})) == ExtendedElement(dense({0, 0, 1})));
  CHECK(integrate(GammaElement{}) == ExtendedElement(el("-e0")));
  CHECK(derivative(el("-e0")) == ExtendedElement(GammaElement{}));
  CHECK(integrate(s0()) == ExtendedElement(dense({0, -1})));
  CHECK(integrate(kInf) == kInf);
}

TEST_CASE("derivative") {
  CHECK(derivative(el("-e0")).is_zero());
  CHECK(derivative(kInf) == kInf);
  CHECK(derivative(GammaElement{}) == kInf);
  CHECK(derivative(GammaElement::basis(1)) == ExtendedElement(dense({1, 2})));
}

TEST_CASE("successor and predecessor") {
  CHECK(successor(GammaElement{}) == ExtendedElement(s0()));
  CHECK(successor(s0()) == ExtendedElement(dense({1, 1})));
  CHECK(successor(dense({1, 1, Rational(1, 2)})) == ExtendedElement(dense({1, 1, 1})));
  CHECK(successor(kInf) == kInf);

  CHECK(predecessor(dense({1, 1})) == ExtendedElement(s0()));
  CHECK(predecessor(s0()) == kInf);
  CHECK(predecessor(GammaElement::basis(1)) == kInf);
  CHECK(predecessor(kInf) == kInf);

  for (Index n = 0; n < 30; ++n) {
    const GammaElement p = PsiValue{n}.embed();
    CHECK(successor(p) == ExtendedElement(PsiValue{n + 1}.embed()));
    CHECK(predecessor(successor(p)) == ExtendedElement(p));
  }
}

TEST_CASE("Psi membership") {
  CHECK(is_psi_element(dense({1, 1, 1}))->level == 2);
  CHECK_FALSE(is_psi_element(GammaElement{}));
  CHECK_FALSE(is_psi_element(dense({1, 2})));
  CHECK_FALSE(is_psi_element(kInf));
  CHECK_FALSE(is_psi_element(el("e1")));
  CHECK(PsiValue{2} < PsiValue{3});
  CHECK(PsiValue{2}.embed() < PsiValue{3}.embed());
}

TEST_CASE("conv(Psi)") {
  CHECK(in_conv_psi(s0()));
  CHECK(in_conv_psi(dense({1, 1, Rational(1, 2)})));
  CHECK_FALSE(in_conv_psi(el("2*e0")));
  CHECK_FALSE(in_conv_psi(dense({1, -1})));  // below s0
  CHECK(in_conv_psi(dense({1, 1, -1})));  // between s0 and Psi(1)
  CHECK_FALSE(in_conv_psi(GammaElement{}));
  CHECK_FALSE(in_conv_psi(dense({1, 1, 2})));
  CHECK(in_conv_psi(dense({1, 1, 1, 0, 5})));
}

TEST_CASE("conv(Psi) agrees with the oracle") {
  harness::SamplerConfig cfg;
  for (std::uint64_t t = 0; t < 3000; ++t) {
    harness::Sampler rng(cfg, "test-conv", t);
    const GammaElement a = rng.element();
    CHECK(in_conv_psi(a) == oracle::in_conv_psi(oracle::dense(a)));
  }
}

TEST_CASE("archimedean classes") {
  CHECK(arch_class_compare(GammaElement::basis(0), el("7*e0")) == std::strong_ordering::equal);
  CHECK(arch_class_compare(GammaElement::basis(2), GammaElement::basis(1)) == std::strong_ordering::less);
  CHECK(arch_class_compare(GammaElement{}, GammaElement::basis(5)) == std::strong_ordering::less);
  CHECK(arch_class_compare(GammaElement{}, GammaElement{}) == std::strong_ordering::equal);
  CHECK(arch_class_compare(el("-e3"), el("e3 + e4")) == std::strong_ordering::equal);
}

TEST_CASE("much_less") {
  const GammaElement b = dense({1, 1, Rational(1, 2)});
  CHECK_FALSE(much_less(s0(), b));
  CHECK(much_less_threshold(s0(), b) == 2u);
  CHECK_FALSE(much_less(s0(), s0()));
  CHECK(much_less_threshold(s0(), s0()) == 0u);
  CHECK_THROWS_AS(much_less(GammaElement{}, s0()), DomainError);
  CHECK_THROWS_AS(much_less(s0(), el("2*e0")), DomainError);
}

TEST_CASE("much_less threshold agrees with brute-force iteration") {
  harness::SamplerConfig cfg;
  std::size_t tested = 0;
  for (std::uint64_t t = 0; tested < 500; ++t) {
    harness::Sampler rng(cfg, "test-much-less", t);
    const GammaElement a = rng.element();
    const GammaElement b = rng.element();
    if (!in_conv_psi(a) || !in_conv_psi(b)) continue;
    ++tested;
    const auto th = much_less_threshold(a, b);
    REQUIRE(th.has_value());
    const auto brute = oracle::first_escape(oracle::dense(a), oracle::dense(b), 64);
    if (a >= b) {
      CHECK(*th == 0);
    } else {
      CHECK(brute == th);
    }
    CHECK_FALSE(much_less(a, b));
  }
}

TEST_CASE("spread out") {
  const GammaElement seq[] = {dense({1, 1}), dense({1, 1, 1, 1})};
  CHECK_FALSE(is_spread_out(seq, GammaElement{}));
  CHECK(is_spread_out(std::span<const GammaElement>{}, GammaElement{}));
  const GammaElement outside[] = {el("2*e0")};
  CHECK_FALSE(is_spread_out(outside, GammaElement{}));
}

TEST_CASE("derivative sides") {
  CHECK(in_positive_derivatives(derivative(GammaElement::basis(0)).value()));
  CHECK_FALSE(in_positive_derivatives(GammaElement{}));
  CHECK(in_negative_derivatives(GammaElement{}));
  CHECK(in_negative_derivatives(s0()));
  CHECK_FALSE(in_positive_derivatives(s0()));
}

TEST_CASE("integral and successor agree with the oracle") {
  harness::SamplerConfig cfg;
  for (std::uint64_t t = 0; t < 3000; ++t) {
    harness::Sampler rng(cfg, "test-integral", t);
    const GammaElement a = rng.element();
    const auto d = oracle::dense(a);
    CHECK(integrate(a) == ExtendedElement(oracle::from(oracle::integral(d))));
    CHECK(successor(a) == ExtendedElement(PsiValue{oracle::successor_level(d)}.embed()));
    CHECK(successor(a) == psi(integrate(a)));
    CHECK(derivative(integrate(a)) == ExtendedElement(a));
    if (!a.is_zero()) CHECK(integrate(derivative(a)) == ExtendedElement(a));
  }
}

TEST_CASE("element text format") {
  CHECK(to_string(GammaElement{}) == "0");
  CHECK(to_string(kInf) == "inf");
  CHECK(to_string(el("e7 + 3/2*e0 - 2*e3")) == "3/2*e0 - 2*e3 + e7");
  CHECK(to_string(el("-e2")) == "-e2");
  CHECK(to_string(el("-1/3*e0 + e1")) == "-1/3*e0 + e1");
  CHECK(el("e1 + e1") == el("2*e1"));
  CHECK(el(" 4/6 * e2 ") == el("2/3*e2"));
  CHECK(ext("inf").is_infinity());
  CHECK(el("e1 - e1").is_zero());

  CHECK_THROWS_AS(el("e-1"), ParseError);
  CHECK_THROWS_AS(el("1/0*e1"), ParseError);
  CHECK_THROWS_AS(el("inf"), ParseError);
  CHECK_THROWS_AS(el("3"), ParseError);
  CHECK_THROWS_AS(el("e1 e2"), ParseError);
  CHECK_THROWS_AS(el(""), ParseError);
  CHECK_THROWS_AS(el("e99999999999999999999999"), ParseError);
  try {
    el("e1 + ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("element text round trip") {
  harness::SamplerConfig cfg;
  for (std::uint64_t t = 0; t < 2000; ++t) {
    harness::Sampler rng(cfg, "test-text", t);
    const GammaElement a = rng.element();
    CHECK(parse_element(to_string(a)) == a);
  }
}

TEST_CASE("infinity is absorbing and on top") {
  CHECK(ExtendedElement(el("1000*e0")) < kInf);
  CHECK_THROWS_AS(kInf.value(), DomainError);
  CHECK(ExtendedElement{}.is_zero());
}
