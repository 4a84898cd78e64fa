#include <limits>
#include <sstream>
#include <stdexcept>

#include "asymlog/harness.hpp"

namespace asymlog::harness {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace

Sampler::Sampler(const SamplerConfig& cfg, std::string_view stream, std::uint64_t trial)
    : cfg_(cfg), engine_(splitmix64(splitmix64(cfg.seed ^ fnv1a(stream)) + trial)) {
  if (cfg_.denominator_bound == 0) cfg_.denominator_bound = 1;
}

std::uint64_t Sampler::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Sampler::below(0)");
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

std::int64_t Sampler::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational Sampler::rational() {
  const auto n = static_cast<std::int64_t>(cfg_.numerator_bound);
  const auto d = static_cast<std::int64_t>(cfg_.denominator_bound);
  return make_rational(between(-n, n), between(1, d));
}

Rational Sampler::nonzero_rational() {
  const auto n = static_cast<std::int64_t>(std::max<std::uint64_t>(cfg_.numerator_bound, 1));
  const auto d = static_cast<std::int64_t>(cfg_.denominator_bound);
  std::int64_t p = between(1, n);
  if (coin()) p = -p;
  return make_rational(p, between(1, d));
}

Rational Sampler::unit_interval() {
  const auto d = static_cast<std::int64_t>(std::max<std::uint64_t>(cfg_.denominator_bound, 2));
  const std::int64_t q = between(2, d);
  return make_rational(between(1, q - 1), q);
}

GammaElement Sampler::generic_element() {
  const std::uint64_t terms = below(cfg_.max_support + 2);
  std::vector<GammaElement::Term> out;
  for (std::uint64_t t = 0; t < terms; ++t) {
    out.emplace_back(below(cfg_.max_support + 1), nonzero_rational());
  }
  return GammaElement(std::move(out));
}

GammaElement Sampler::tail(Index after) {
  const std::uint64_t terms = below(cfg_.max_support + 1);
  std::vector<GammaElement::Term> out;
  for (std::uint64_t t = 0; t < terms; ++t) {
    out.emplace_back(after + 1 + below(cfg_.max_support + 1), nonzero_rational());
  }
  return GammaElement(std::move(out));
}

GammaElement Sampler::element() {
  if (coin()) return generic_element();
  const Index run = below(cfg_.max_support + 1);
  std::vector<GammaElement::Term> out;
  for (Index i = 0; i < run; ++i) out.emplace_back(i, 1);
  out.emplace_back(run, rational());
  GammaElement head(std::move(out));
  return head + tail(run);
}

GammaElement Sampler::nonzero_element() {
  for (;;) {
    GammaElement a = element();
    if (!a.is_zero()) return a;
  }
}

GammaElement Sampler::positive_element() {
  GammaElement a = nonzero_element();
  return a.sign() > 0 ? a : -a;
}

GammaElement Sampler::with_leading(Index level, int side) {
  Rational lead = abs(nonzero_rational());
  if (side < 0) lead = -lead;
  return GammaElement::basis(level, lead) + tail(level);
}

GammaElement Sampler::in_successor_fiber(Index level, int side) {
  // Coordinate `level` is 1 + r with r of the requested sign.
  std::vector<GammaElement::Term> out;
  for (Index i = 0; i < level; ++i) out.emplace_back(i, 1);
  Rational r = abs(nonzero_rational());
  out.emplace_back(level, side > 0 ? Rational(1 + r) : Rational(1 - r));
  return GammaElement(std::move(out)) + tail(level);
}

// ---------------------------------------------------------------------------

void SuiteReport::check(const std::string& property, bool ok,
                        const std::function<Counterexample()>& describe) {
  ++checks[property];
  if (ok) return;
  ++failure_count;
  if (failures.size() < kMaxStoredFailures) {
    Counterexample c = describe();
    c.property = property;
    failures.push_back(std::move(c));
  }
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << '\n';
  os << "trials: " << r.trials << '\n';
  for (const auto& [name, n] : r.checks) {
    os << "  " << name << ": " << n << " checked";
    if (auto it = r.skipped.find(name); it != r.skipped.end()) os << ", " << it->second << " skipped";
    os << '\n';
  }
  for (const auto& [name, n] : r.skipped) {
    if (!r.checks.contains(name)) os << "  " << name << ": 0 checked, " << n << " skipped\n";
  }
  os << "failures: " << r.failure_count << '\n';
  for (const auto& f : r.failures) {
    os << "- " << f.property << '\n';
    for (const auto& [k, v] : f.inputs) os << "    " << k << " = " << v << '\n';
    os << "    observed: " << f.observed << '\n';
    os << "    expected: " << f.expected << '\n';
  }
  return os.str();
}

}  // namespace asymlog::harness
