#include "linear_system.hpp"

#include <utility>

namespace asymlog::detail {

std::optional<AffineSolution> solve_affine(Matrix a, Vector b, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    std::swap(b[sel], b[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }

  AffineSolution sol;
  sol.particular.assign(cols, Rational(0));
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    sol.particular[pivot_cols[i]] = b[i];
    is_pivot[pivot_cols[i]] = true;
  }
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector z(cols, Rational(0));
    z[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) z[pivot_cols[i]] = -a[i][free];
    sol.kernel.push_back(std::move(z));
  }
  return sol;
}

Rational dot(const Vector& x, const Vector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) s += x[i] * y[i];
  return s;
}

}  // namespace asymlog::detail
