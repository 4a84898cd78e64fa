#include <algorithm>
#include <sstream>

#include "asymlog/harness.hpp"

namespace asymlog::harness {
namespace {

std::string render(std::span<const GammaElement> xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "; " : "") + to_string(xs[i]);
  return s + "]";
}

std::string render_levels(const ImageReport& r) {
  std::string s = "{";
  bool first = true;
  for (Index l : r.levels()) {
    s += (first ? "" : ", ") + std::to_string(l);
    first = false;
  }
  return s + "}";
}

Counterexample growth_failure(const GrowthReport& g) {
  return Counterexample{"",
                        {{"base", render(g.base.basis())}, {"new", render(g.new_generators)}},
                        "gained " + std::to_string(g.gained.size()) + " levels: " +
                            render_levels(g.old_image) + " -> " + render_levels(g.new_image),
                        "at most " + std::to_string(g.bound)};
}

bool witnesses_verify(const ImageReport& r, const Subspace& v) {
  for (const auto& [level, w] : r.witnesses) {
    ExtendedElement got;
    switch (r.function) {
      case ImageFunction::Psi:
        got = psi(w);
        break;
      case ImageFunction::Successor:
        got = successor(w);
        break;
      case ImageFunction::Predecessor:
        got = predecessor(w);
        break;
    }
    if (!v.contains(w) || got != ExtendedElement(PsiValue{level}.embed())) return false;
  }
  return true;
}

}  // namespace

GammaElement sample_member(Sampler& rng, const Subspace& v) {
  static const Rational kGrid[] = {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                                   Rational(1, 2), Rational(1), Rational(2)};
  GammaElement out;
  const bool grid = rng.coin();
  for (const auto& row : v.basis()) {
    const Rational c = grid ? kGrid[rng.below(std::size(kGrid))] : rng.rational();
    if (c != 0) out += c * row;
  }
  return out;
}

SuiteReport run_subspace_growth_suite(const SamplerConfig& cfg, std::size_t samples_per_instance) {
  SuiteReport rep;
  rep.suite = "subspace-growth";
  rep.trials = cfg.trials;

  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    Sampler rng(cfg, "subspace-growth", trial);
    std::vector<GammaElement> base_gens(rng.below(7));
    for (auto& g : base_gens) g = rng.element();
    std::vector<GammaElement> new_gens(1 + rng.below(3));
    for (auto& g : new_gens) g = rng.element();
    const Subspace v = echelonize(base_gens);

    // psi-growth <= m with verifying witnesses.
    const GrowthReport gpsi = growth_check(v, new_gens, ImageFunction::Psi);
    rep.check("psi-growth", gpsi.pass, [&] { return growth_failure(gpsi); });
    rep.check("psi-witnesses",
              witnesses_verify(gpsi.new_image, gpsi.extended) && gpsi.new_image.size() == gpsi.extended.dim(),
              [&] {
                return Counterexample{"", {{"basis", render(gpsi.extended.basis())}},
                                      "psi image " + render_levels(gpsi.new_image), "one verified level per pivot"};
              });

    // s-image soundness against sampled members, and its size bound.
    const GrowthReport gs = growth_check(v, new_gens, ImageFunction::Successor);
    rep.check("s-growth", gs.pass, [&] { return growth_failure(gs); });
    for (const Subspace* w : {&gs.base, &gs.extended}) {
      const ImageReport& img = w == &gs.base ? gs.old_image : gs.new_image;
      rep.check("s-image-size", img.size() <= w->dim() + 1 && img.contains_level(0), [&] {
        return Counterexample{"", {{"basis", render(w->basis())}}, "s image " + render_levels(img),
                              "contains 0, size <= dim + 1"};
      });
      rep.check("s-witnesses", witnesses_verify(img, *w), [&] {
        return Counterexample{"", {{"basis", render(w->basis())}}, "s image " + render_levels(img),
                              "every witness verifies"};
      });
    }
    {
      std::size_t outside = 0;
      GammaElement example;
      for (std::size_t k = 0; k < samples_per_instance; ++k) {
        const GammaElement x = sample_member(rng, gs.extended);
        const Index level = is_psi_element(successor(x))->level;
        if (!gs.new_image.contains_level(level)) {
          ++outside;
          example = x;
        }
      }
      rep.check("s-image-sampled", outside == 0, [&] {
        return Counterexample{"", {{"basis", render(gs.extended.basis())}, {"member", to_string(example)}},
                              "s(member) = " + to_string(successor(example)),
                              "a level in " + render_levels(gs.new_image)};
      });
    }

    // p-growth, with Psi-membership recomputed by rank.
    const GrowthReport gp = growth_check(v, new_gens, ImageFunction::Predecessor);
    rep.check("p-growth", gp.pass, [&] { return growth_failure(gp); });
    {
      const Subspace& w = gp.extended;
      const Index top = w.max_support() ? *w.max_support() + 1 : 0;
      std::size_t members = 0;
      bool agree = true;
      for (Index level = 0; level <= top + 1; ++level) {
        std::vector<GammaElement> gens = w.basis();
        gens.push_back(PsiValue{level}.embed());
        const bool in = echelonize(gens).dim() == w.dim();
        members += in ? 1 : 0;
        if (level >= 1 && in != gp.new_image.contains_level(level - 1)) agree = false;
      }
      rep.check("p-membership", agree && members <= w.dim() && witnesses_verify(gp.new_image, w), [&] {
        return Counterexample{"", {{"basis", render(w.basis())}}, "p image " + render_levels(gp.new_image),
                              "agrees with rank test, at most dim members"};
      });
    }

    // Canonical form: idempotent and independent of generator order.
    {
      std::vector<GammaElement> all = base_gens;
      all.insert(all.end(), new_gens.begin(), new_gens.end());
      std::vector<GammaElement> shuffled = all;
      for (std::size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
      const Subspace a = echelonize(all);
      const Subspace b = echelonize(shuffled);
      const Subspace c = echelonize(a.basis());
      rep.check("echelon-canonical", a == b && a == c && a == gp.extended, [&] {
        return Counterexample{"", {{"generators", render(all)}, {"shuffled", render(shuffled)}},
                              render(a.basis()) + " vs " + render(b.basis()), "identical bases"};
      });
    }
  }
  return rep;
}

}  // namespace asymlog::harness
