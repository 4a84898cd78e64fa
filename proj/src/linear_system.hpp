#pragma once

// Dense exact solver for small affine systems A c = b over Q.

#include <optional>
#include <vector>

#include "asymlog/rational.hpp"

namespace asymlog::detail {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

struct AffineSolution {
  Vector particular;           // free variables set to 0
  std::vector<Vector> kernel;  // basis of {c : A c = 0}
};

/// Solutions of A c = b with `cols` unknowns; nothing if inconsistent.
std::optional<AffineSolution> solve_affine(Matrix a, Vector b, std::size_t cols);

Rational dot(const Vector& x, const Vector& y);

}  // namespace asymlog::detail
