#include <limits>
#include <sstream>
#include <stdexcept>

#include "asymlog/errors.hpp"
#include "asymlog/harness.hpp"

namespace asymlog::harness {

WitnessReport make_witness(const GammaElement& epsilon, std::size_t count) {
  if (epsilon.sign() <= 0) throw DomainError("witness: epsilon must be positive, got " + to_string(epsilon));
  const Index l = epsilon.leading_index();
  if (l >= std::numeric_limits<Index>::max() - 2 - count) {
    throw DomainError("witness: epsilon's leading index is too large to place the witness");
  }

  WitnessReport w;
  w.epsilon = epsilon;
  w.alpha = PsiValue{l + 1};
  const GammaElement alpha = w.alpha.embed();
  w.bound = Rational(-2) * integrate(alpha).value();

  // Invariant: bound = 2 e_{l+2} < epsilon.
  if (!(GammaElement{} < w.bound && w.bound < epsilon)) {
    throw std::logic_error("witness: bound " + to_string(w.bound) + " not inside (0, epsilon)");
  }

  const GammaElement push = alpha + Rational(2) * (successor(alpha).value() - alpha);
  w.prefix.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const GammaElement psi_m = PsiValue{w.alpha.level + 1 + k}.embed();
    GammaElement x = psi_m - alpha;
    if (!(GammaElement{} < x && x < w.bound)) {
      throw std::logic_error("witness: element " + to_string(x) + " outside (0, bound)");
    }
    if (!w.prefix.empty() && !(w.prefix.back() < x)) {
      throw std::logic_error("witness: prefix not strictly increasing at " + to_string(x));
    }
    if (!(psi_m < push)) {
      throw std::logic_error("witness: alpha + 2(s alpha - alpha) does not exceed " + to_string(psi_m));
    }
    w.prefix.push_back(std::move(x));
  }
  return w;
}

std::string to_text(const WitnessReport& w) {
  std::ostringstream os;
  os << "epsilon: " << to_string(w.epsilon) << '\n';
  os << "alpha: " << to_string(w.alpha.embed()) << " (level " << w.alpha.level << ")\n";
  os << "bound: " << to_string(w.bound) << '\n';
  os << "prefix: " << w.prefix.size() << '\n';
  for (const auto& x : w.prefix) os << "  " << to_string(x) << '\n';
  return os.str();
}

}  // namespace asymlog::harness
