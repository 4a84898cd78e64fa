#pragma once

// Finitely generated rational subspaces of Gamma_log and the images of psi, s
// and p on them. Every Q-subspace is a divisible ordered subgroup, so these
// stand in for the subgroups Gamma_0 and Gamma_0 + sum Q c_i.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "asymlog/gamma.hpp"

namespace asymlog {

/// A subspace held as its reduced row-echelon basis: pivots (leading indices)
/// strictly increasing, pivot coefficients 1, and every pivot column cleared in
/// the other rows. The basis is canonical, so equal subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;

  const std::vector<GammaElement>& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }

  /// Largest index in the support of any basis vector; empty for {0}.
  std::optional<Index> max_support() const;

  /// Remainder of a after elimination against the basis; zero iff a is a member.
  GammaElement reduce(GammaElement a) const;
  bool contains(const GammaElement& a) const { return reduce(a).is_zero(); }

  /// Span of this subspace and the extra generators.
  Subspace extended(std::span<const GammaElement> generators) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend Subspace echelonize(std::span<const GammaElement> generators);
  void insert(GammaElement v);

  std::vector<GammaElement> basis_;
};

/// Canonical echelon basis of the span. Zero and dependent generators are fine.
Subspace echelonize(std::span<const GammaElement> generators);

bool contains(const Subspace& v, const GammaElement& a);

enum class ImageFunction { Psi, Successor, Predecessor };

std::string_view image_function_name(ImageFunction f);
/// Accepts "psi", "s" and "p".
std::optional<ImageFunction> parse_image_function(std::string_view name);

/// Psi-levels attained by a function on a subspace, one verified witness per
/// level. For p the witness is the member of Psi^{>s0} whose predecessor has
/// that level; infinity is never listed.
struct ImageReport {
  ImageFunction function = ImageFunction::Psi;
  std::map<Index, GammaElement> witnesses;

  std::vector<Index> levels() const;
  std::size_t size() const noexcept { return witnesses.size(); }
  bool contains_level(Index level) const { return witnesses.contains(level); }
};

/// psi(V \ {0}): the pivot indices, since the leading index of a nonzero
/// combination of echelon rows is the least pivot used.
ImageReport psi_image(const Subspace& v);

/// s(V). Level k is attained iff some member has ones at 0..k-1 and a
/// coordinate other than 1 at k. Only k <= max_support + 1 can occur.
ImageReport s_image(const Subspace& v);

/// p(V) \ {inf}: predecessors of the members of V in Psi^{>s0}.
ImageReport p_image(const Subspace& v);

ImageReport image(const Subspace& v, ImageFunction f);

/// Result of adjoining new generators to V and comparing images.
struct GrowthReport {
  ImageFunction function = ImageFunction::Psi;
  Subspace base;
  Subspace extended;
  std::vector<GammaElement> new_generators;
  std::size_t new_outside_base = 0;  // m
  ImageReport old_image;
  ImageReport new_image;
  std::vector<Index> gained;  // levels of new_image not in old_image
  std::size_t bound = 0;
  bool pass = true;
};

/// Checks |image(V + span(new)) \ image(V)| against m for psi and p and m + 1
/// for s, where m counts the new generators outside V. A failing report is the
/// counterexample bundle. Throws DomainError if new_generators is empty.
GrowthReport growth_check(const Subspace& v, std::span<const GammaElement> new_generators,
                          ImageFunction f);

/// Whether the Psi-elements of the given distinct levels are linearly
/// independent (echelon rank equals the number of levels). Throws DomainError
/// on repeated levels.
bool psi_independence_check(std::span<const Index> levels);

/// alpha = sum q_j * Psi(n_j) and the successor rule for such combinations:
/// s(alpha) = s0 when sum q_j != 1, and s(alpha) = s(Psi(n_1)) otherwise.
struct Fact37Report {
  GammaElement alpha;
  Rational coefficient_sum;
  PsiValue observed;
  PsiValue expected;
  bool pass = false;
};

/// Throws DomainError unless coefficients are nonzero, levels strictly
/// increasing, and both lists have the same nonzero length.
Fact37Report fact37_check(std::span<const Rational> coefficients, std::span<const Index> levels);

}  // namespace asymlog
