#include "asymlog/subspace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "asymlog/errors.hpp"
#include "linear_system.hpp"

namespace asymlog {

std::optional<Index> Subspace::max_support() const {
  if (basis_.empty()) return std::nullopt;
  Index m = 0;
  for (const auto& b : basis_) m = std::max(m, b.max_index());
  return m;
}

GammaElement Subspace::reduce(GammaElement a) const {
  // Rows are sorted by pivot and have zeros at the other pivots, so one pass
  // in pivot order clears every pivot coordinate of a.
  for (const auto& row : basis_) {
    const Rational c = a.coeff(row.leading_index());
    if (c != 0) a -= c * row;
  }
  return a;
}

void Subspace::insert(GammaElement v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return;
  v = Rational(1 / v.leading_coeff()) * v;
  const Index pivot = v.leading_index();
  for (auto& row : basis_) {
    const Rational c = row.coeff(pivot);
    if (c != 0) row -= c * v;
  }
  auto at = std::lower_bound(basis_.begin(), basis_.end(), pivot,
                             [](const GammaElement& row, Index p) { return row.leading_index() < p; });
  basis_.insert(at, std::move(v));
}

Subspace Subspace::extended(std::span<const GammaElement> generators) const {
  Subspace out = *this;
  for (const auto& g : generators) out.insert(g);
  return out;
}

Subspace echelonize(std::span<const GammaElement> generators) {
  return Subspace{}.extended(generators);
}

bool contains(const Subspace& v, const GammaElement& a) { return v.contains(a); }

std::string_view image_function_name(ImageFunction f) {
  switch (f) {
    case ImageFunction::Psi:
      return "psi";
    case ImageFunction::Successor:
      return "s";
    case ImageFunction::Predecessor:
      return "p";
  }
  return "?";
}

std::optional<ImageFunction> parse_image_function(std::string_view name) {
  if (name == "psi") return ImageFunction::Psi;
  if (name == "s") return ImageFunction::Successor;
  if (name == "p") return ImageFunction::Predecessor;
  return std::nullopt;
}

std::vector<Index> ImageReport::levels() const {
  std::vector<Index> out;
  out.reserve(witnesses.size());
  for (const auto& [level, w] : witnesses) out.push_back(level);
  return out;
}

namespace {

void verify_witness(const ImageReport& r, Index level, const GammaElement& w, const Subspace& v) {
  ExtendedElement value;
  switch (r.function) {
    case ImageFunction::Psi:
      value = psi(w);
      break;
    case ImageFunction::Successor:
      value = successor(w);
      break;
    case ImageFunction::Predecessor:
      value = predecessor(w);
      break;
  }
  if (!v.contains(w) || value != ExtendedElement(PsiValue{level}.embed())) {
    throw std::logic_error("image witness " + to_string(w) + " does not verify for level " +
                           std::to_string(level));
  }
}

GammaElement combine(const std::vector<GammaElement>& basis, const detail::Vector& c) {
  GammaElement v;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (c[j] != 0) v += c[j] * basis[j];
  }
  return v;
}

}  // namespace

ImageReport psi_image(const Subspace& v) {
  ImageReport r{ImageFunction::Psi, {}};
  for (const auto& row : v.basis()) r.witnesses.emplace(row.leading_index(), row);
  return r;
}

ImageReport s_image(const Subspace& v) {
  ImageReport r{ImageFunction::Successor, {}};
  const auto& basis = v.basis();
  const std::size_t d = basis.size();
  const Index top = v.max_support() ? *v.max_support() + 1 : 0;

  for (Index k = 0; k <= top; ++k) {
    // Slice {c : coordinate i of sum c_j b_j equals 1 for i < k}.
    detail::Matrix a(k, detail::Vector(d, Rational(0)));
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& [idx, coeff] : basis[j].terms()) {
        if (idx < k) a[idx][j] = coeff;
      }
    }
    auto sol = detail::solve_affine(std::move(a), detail::Vector(k, Rational(1)), d);
    if (!sol) continue;

    detail::Vector target(d, Rational(0));
    for (std::size_t j = 0; j < d; ++j) target[j] = basis[j].coeff(k);

    std::optional<detail::Vector> pick;
    if (detail::dot(target, sol->particular) != 1) {
      pick = sol->particular;
    } else {
      for (const auto& z : sol->kernel) {
        if (detail::dot(target, z) != 0) {
          detail::Vector c = sol->particular;
          for (std::size_t j = 0; j < d; ++j) c[j] += z[j];
          pick = std::move(c);
          break;
        }
      }
    }
    if (!pick) continue;
    r.witnesses.emplace(k, combine(basis, *pick));
  }
  for (const auto& [level, w] : r.witnesses) verify_witness(r, level, w, v);
  return r;
}

ImageReport p_image(const Subspace& v) {
  ImageReport r{ImageFunction::Predecessor, {}};
  if (!v.max_support()) return r;
  const Index top = *v.max_support() + 1;
  for (Index level = 1; level <= top; ++level) {
    GammaElement candidate = PsiValue{level}.embed();
    if (v.contains(candidate)) r.witnesses.emplace(level - 1, std::move(candidate));
  }
  for (const auto& [level, w] : r.witnesses) verify_witness(r, level, w, v);
  return r;
}

ImageReport image(const Subspace& v, ImageFunction f) {
  switch (f) {
    case ImageFunction::Psi:
      return psi_image(v);
    case ImageFunction::Successor:
      return s_image(v);
    case ImageFunction::Predecessor:
      return p_image(v);
  }
  throw std::logic_error("unknown image function");
}

GrowthReport growth_check(const Subspace& v, std::span<const GammaElement> new_generators,
                          ImageFunction f) {
  if (new_generators.empty()) throw DomainError("growth_check needs at least one new generator");
  GrowthReport rep;
  rep.function = f;
  rep.base = v;
  rep.new_generators.assign(new_generators.begin(), new_generators.end());
  rep.extended = v.extended(new_generators);
  rep.new_outside_base = static_cast<std::size_t>(
      std::count_if(new_generators.begin(), new_generators.end(),
                    [&](const GammaElement& g) { return !v.contains(g); }));
  rep.old_image = image(v, f);
  rep.new_image = image(rep.extended, f);
  for (const auto& [level, w] : rep.new_image.witnesses) {
    if (!rep.old_image.contains_level(level)) rep.gained.push_back(level);
  }
  rep.bound = rep.new_outside_base + (f == ImageFunction::Successor ? 1 : 0);
  rep.pass = rep.gained.size() <= rep.bound;
  return rep;
}

bool psi_independence_check(std::span<const Index> levels) {
  std::set<Index> seen(levels.begin(), levels.end());
  if (seen.size() != levels.size()) throw DomainError("psi_independence_check: levels must be distinct");
  std::vector<GammaElement> gens;
  gens.reserve(levels.size());
  for (Index l : levels) gens.push_back(PsiValue{l}.embed());
  return echelonize(gens).dim() == levels.size();
}

Fact37Report fact37_check(std::span<const Rational> coefficients, std::span<const Index> levels) {
  if (coefficients.empty() || coefficients.size() != levels.size()) {
    throw DomainError("fact37_check: need equally many coefficients and levels (at least one)");
  }
  for (std::size_t j = 0; j < levels.size(); ++j) {
    if (coefficients[j] == 0) throw DomainError("fact37_check: coefficients must be nonzero");
    if (j > 0 && levels[j - 1] >= levels[j]) {
      throw DomainError("fact37_check: levels must be strictly increasing");
    }
  }
  Fact37Report rep;
  rep.coefficient_sum = 0;
  for (std::size_t j = 0; j < levels.size(); ++j) {
    rep.alpha += coefficients[j] * PsiValue{levels[j]}.embed();
    rep.coefficient_sum += coefficients[j];
  }
  rep.observed = *is_psi_element(successor(rep.alpha));
  rep.expected = rep.coefficient_sum != 1 ? PsiValue{0} : PsiValue{levels.front() + 1};
  rep.pass = rep.observed == rep.expected;
  return rep;
}

}  // namespace asymlog
