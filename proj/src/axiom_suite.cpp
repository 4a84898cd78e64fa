#include <algorithm>

#include "asymlog/harness.hpp"

namespace asymlog::harness {
namespace {

std::string str(const ExtendedElement& a) { return to_string(a); }

}  // namespace

SuiteReport run_axiom_suite(const SamplerConfig& cfg, const PsiFunction& psi_override) {
  const PsiFunction psi_fn = psi_override ? psi_override : PsiFunction([](const ExtendedElement& a) { return psi(a); });
  auto deriv = [&](const GammaElement& a) { return a + psi_fn(a).value(); };

  SuiteReport rep;
  rep.suite = "axioms";
  rep.trials = cfg.trials;

  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    Sampler rng(cfg, "axioms", trial);
    const GammaElement a = rng.nonzero_element();
    const GammaElement b = rng.nonzero_element();
    const ExtendedElement pa = psi_fn(a);
    const ExtendedElement pb = psi_fn(b);

    // AC1
    const GammaElement sum = a + b;
    if (sum.is_zero()) {
      rep.skip("AC1");
    } else {
      const ExtendedElement lhs = psi_fn(sum);
      const ExtendedElement rhs = std::min(pa, pb);
      rep.check("AC1", lhs >= rhs, [&] {
        return Counterexample{"", {{"alpha", str(a)}, {"beta", str(b)}}, "psi(alpha+beta) = " + str(lhs),
                              ">= " + str(rhs)};
      });
    }

    // AC2
    for (int k = -3; k <= 3; ++k) {
      if (k == 0) continue;
      const ExtendedElement lhs = psi_fn(Rational(k) * a);
      rep.check("AC2", lhs == pa, [&] {
        return Counterexample{"", {{"alpha", str(a)}, {"k", std::to_string(k)}}, "psi(k*alpha) = " + str(lhs),
                              str(pa)};
      });
    }

    // AC3 on the positive one of +-a.
    {
      const GammaElement pos = a.sign() > 0 ? a : -a;
      const ExtendedElement lhs = pos + psi_fn(pos).value();
      rep.check("AC3", lhs > pb, [&] {
        return Counterexample{"", {{"alpha", str(pos)}, {"beta", str(b)}}, "alpha + psi(alpha) = " + str(lhs),
                              "> psi(beta) = " + str(pb)};
      });
    }

    // HC
    {
      GammaElement x = a.sign() > 0 ? a : -a;
      GammaElement y = b.sign() > 0 ? b : -b;
      if (y < x) std::swap(x, y);
      const ExtendedElement px = psi_fn(x);
      const ExtendedElement py = psi_fn(y);
      rep.check("HC", px >= py, [&] {
        return Counterexample{"", {{"alpha", str(x)}, {"beta", str(y)}}, "psi(alpha) = " + str(px),
                              ">= psi(beta) = " + str(py)};
      });
    }

    // psi(alpha) < psi(beta) implies psi(alpha + beta) = psi(alpha).
    if (pa == pb) {
      rep.skip("valuation");
    } else {
      const GammaElement& lo = pa < pb ? a : b;
      const ExtendedElement plo = std::min(pa, pb);
      const ExtendedElement got = psi_fn(sum);
      rep.check("valuation", got == plo, [&] {
        return Counterexample{"", {{"alpha", str(lo)}, {"beta", str(&lo == &a ? b : a)}},
                              "psi(alpha+beta) = " + str(got), str(plo)};
      });
    }

    // Strict monotonicity of the derivative.
    if (a == b) {
      rep.skip("derivative-monotone");
    } else {
      const GammaElement& x = a < b ? a : b;
      const GammaElement& y = a < b ? b : a;
      const GammaElement dx = deriv(x);
      const GammaElement dy = deriv(y);
      rep.check("derivative-monotone", dx < dy, [&] {
        return Counterexample{"", {{"alpha", str(x)}, {"beta", str(y)}}, "alpha' = " + str(dx),
                              "< beta' = " + str(dy)};
      });
    }

    // Round trips.
    {
      const GammaElement c = rng.element();
      const GammaElement ic = integrate(c).value();
      const GammaElement back = ic.is_zero() ? GammaElement{} : deriv(ic);
      rep.check("derivative-of-integral", !ic.is_zero() && back == c, [&] {
        return Counterexample{"", {{"alpha", str(c)}}, "(int alpha)' = " + str(back), str(c)};
      });
      const GammaElement da = deriv(a);
      const ExtendedElement again = integrate(da);
      rep.check("integral-of-derivative", again == ExtendedElement(a), [&] {
        return Counterexample{"", {{"alpha", str(a)}}, "int(alpha') = " + str(again), str(a)};
      });
    }
  }
  return rep;
}

}  // namespace asymlog::harness
