#include "asymlog/harness.hpp"

namespace asymlog::harness {
namespace {

std::string str(const ExtendedElement& a) { return to_string(a); }

int derivative_side(const GammaElement& a) { return integrate(a).value().sign(); }

// Distinct levels lo < hi in [0, max_support + 1].
std::pair<Index, Index> two_levels(Sampler& rng) {
  const Index span = rng.config().max_support + 2;
  Index lo = rng.below(span);
  Index hi = rng.below(span);
  while (hi == lo) hi = rng.below(span);
  return lo < hi ? std::pair{lo, hi} : std::pair{hi, lo};
}

}  // namespace

SuiteReport run_successor_suite(const SamplerConfig& cfg) {
  SuiteReport rep;
  rep.suite = "successor";
  rep.trials = cfg.trials;

  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    Sampler rng(cfg, "successor", trial);

    // Successor Identity: s(alpha) < s(beta) implies psi(alpha - beta) = s(alpha).
    {
      const auto [lo, hi] = two_levels(rng);
      GammaElement alpha = rng.in_successor_fiber(lo, rng.coin() ? 1 : -1);
      GammaElement beta = rng.in_successor_fiber(hi, rng.coin() ? 1 : -1);
      if (rng.coin()) std::swap(alpha, beta);
      const ExtendedElement sa = successor(alpha);
      const ExtendedElement sb = successor(beta);
      const GammaElement& x = sa < sb ? alpha : beta;
      const GammaElement& y = sa < sb ? beta : alpha;
      const ExtendedElement got = psi(x - y);
      const ExtendedElement want = std::min(sa, sb);
      rep.check("successor-identity", sa != sb && got == want, [&] {
        return Counterexample{"", {{"alpha", str(x)}, {"beta", str(y)}}, "psi(alpha-beta) = " + str(got),
                              "s(alpha) = " + str(want)};
      });
    }

    // a in (Gamma^<)' and n >= 1 give a + (n+1)(s a - a) in (Gamma^>)'.
    {
      const GammaElement g = -rng.positive_element();
      const GammaElement a = derivative(g).value();
      rep.check("negative-derivative-sample", in_negative_derivatives(a), [&] {
        return Counterexample{"", {{"gamma", str(g)}}, "gamma' = " + str(a) + " not in (Gamma^<)'",
                              "in (Gamma^<)'"};
      });
      const GammaElement step = successor(a).value() - a;
      for (int n = 1; n <= 10; ++n) {
        const GammaElement pushed = a + Rational(n + 1) * step;
        rep.check("push-past-psi", in_positive_derivatives(pushed), [&] {
          return Counterexample{"", {{"a", str(a)}, {"n", std::to_string(n)}},
                                "int(a + (n+1)(s a - a)) = " + str(integrate(pushed)), "> 0"};
        });
      }
    }

    // Midpoint convexity of s^{-1}(beta) intersected with each derivative side.
    for (int side : {1, -1}) {
      const std::string name = side > 0 ? "fiber-convex-positive" : "fiber-convex-negative";
      const Index level = rng.below(cfg.max_support + 2);
      GammaElement x = rng.in_successor_fiber(level, side);
      GammaElement z = rng.in_successor_fiber(level, side);
      if (x == z) {
        rep.skip(name);
        continue;
      }
      if (z < x) std::swap(x, z);
      const GammaElement y = Rational(1, 2) * (x + z);
      const ExtendedElement sy = successor(y);
      const ExtendedElement want = PsiValue{level}.embed();
      rep.check(name, sy == want && derivative_side(y) == side, [&] {
        return Counterexample{"", {{"x", str(x)}, {"z", str(z)}, {"y", str(y)}},
                              "s(y) = " + str(sy) + ", side " + std::to_string(derivative_side(y)),
                              str(want) + ", side " + std::to_string(side)};
      });
    }
  }
  return rep;
}

SuiteReport run_lemma41_42_suite(const SamplerConfig& cfg) {
  SuiteReport rep;
  rep.suite = "lemma41";
  rep.trials = cfg.trials;

  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    Sampler rng(cfg, "lemma41", trial);
    const GammaElement b = rng.element();

    // (i) psi-fibers on one side of b are convex.
    {
      const Index level = rng.below(cfg.max_support + 1);
      const int side = rng.coin() ? 1 : -1;
      const GammaElement x = b + rng.with_leading(level, side);
      const GammaElement y = b + rng.with_leading(level, side);
      if (x == y) {
        rep.skip("psi-fiber-convex");
      } else {
        const Rational t = rng.unit_interval();
        const GammaElement z = x + t * (y - x);
        const ExtendedElement got = psi(z - b);
        const ExtendedElement want = PsiValue{level}.embed();
        rep.check("psi-fiber-convex", got == want && (z - b).sign() == side, [&] {
          return Counterexample{"", {{"b", str(b)}, {"x", str(x)}, {"y", str(y)}, {"z", str(z)}},
                                "psi(z-b) = " + str(got), str(want)};
        });
      }
    }

    // (ii) the same for s-fibers within (Gamma^>)' or (Gamma^<)'.
    {
      const Index level = rng.below(cfg.max_support + 2);
      const int side = rng.coin() ? 1 : -1;
      const GammaElement x = b + rng.in_successor_fiber(level, side);
      const GammaElement y = b + rng.in_successor_fiber(level, side);
      if (x == y) {
        rep.skip("s-fiber-convex");
      } else {
        const Rational t = rng.unit_interval();
        const GammaElement z = x + t * (y - x);
        const ExtendedElement got = successor(z - b);
        const ExtendedElement want = PsiValue{level}.embed();
        rep.check("s-fiber-convex", got == want && derivative_side(z - b) == side, [&] {
          return Counterexample{"", {{"b", str(b)}, {"x", str(x)}, {"y", str(y)}, {"z", str(z)}},
                                "s(z-b) = " + str(got), str(want)};
        });
      }
    }

    // (iii) s(x-b) < s(y-b) implies psi((x-b)-(y-b)) = s(x-b).
    {
      const auto [lo, hi] = two_levels(rng);
      const GammaElement x = b + rng.in_successor_fiber(lo, rng.coin() ? 1 : -1);
      const GammaElement y = b + rng.in_successor_fiber(hi, rng.coin() ? 1 : -1);
      const ExtendedElement sx = successor(x - b);
      const ExtendedElement got = psi((x - b) - (y - b));
      rep.check("successor-identity-shifted", sx < successor(y - b) && got == sx, [&] {
        return Counterexample{"", {{"b", str(b)}, {"x", str(x)}, {"y", str(y)}},
                              "psi(x-y) = " + str(got), "s(x-b) = " + str(sx)};
      });
    }
  }
  return rep;
}

}  // namespace asymlog::harness
