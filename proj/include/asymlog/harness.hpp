#pragma once

// Seeded randomized verification suites for the algebraic facts about
// (Gamma_log, psi), the finite trichotomy checker for affine maps on
// Psi-tuples, and the construction of small discrete definable sets.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asymlog/gamma.hpp"
#include "asymlog/subspace.hpp"

namespace asymlog::harness {

/// Sampling parameters. Coefficients are p/q with |p| <= numerator_bound and
/// 1 <= q <= denominator_bound; support indices are drawn from
/// [0, max_support].
struct SamplerConfig {
  std::uint64_t seed = 1;
  Index max_support = 8;
  std::uint64_t numerator_bound = 5;
  std::uint64_t denominator_bound = 4;
  std::uint64_t trials = 1000;
};

/// Deterministic random source for one trial of one suite. The stream is
/// derived from (seed, suite tag, trial index) only, so reports do not depend
/// on trial scheduling, and bounded draws avoid the implementation-defined
/// standard distributions so streams are identical across platforms.
class Sampler {
 public:
  Sampler(const SamplerConfig& cfg, std::string_view stream, std::uint64_t trial);

  const SamplerConfig& config() const noexcept { return cfg_; }

  /// Uniform in [0, n). Requires n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool coin() { return below(2) == 1; }

  Rational rational();
  Rational nonzero_rational();
  /// Uniform over (0, 1) with the configured denominator bound (at least 2).
  Rational unit_interval();

  /// Sum of up to max_support + 1 random terms at indices in [0, max_support].
  GammaElement generic_element();
  /// Half the draws are generic, half start with a run of ones (where the
  /// integral and successor change behaviour).
  GammaElement element();
  GammaElement nonzero_element();
  GammaElement positive_element();
  /// Random terms at indices in (after, after + max_support].
  GammaElement tail(Index after);
  /// Leading index `level` with leading coefficient of sign `side`.
  GammaElement with_leading(Index level, int side);
  /// An element of s^{-1}(Psi(level)) inside (Gamma^>)' (side > 0) or
  /// (Gamma^<)' (side < 0): ones below `level`, coordinate `level` on the
  /// requested side of 1.
  GammaElement in_successor_fiber(Index level, int side);

 private:
  SamplerConfig cfg_;
  std::mt19937_64 engine_;
};

/// A property violation with everything needed to replay it. Elements are in
/// the canonical text format.
struct Counterexample {
  std::string property;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string observed;
  std::string expected;
};

struct SuiteReport {
  static constexpr std::size_t kMaxStoredFailures = 100;

  std::string suite;
  std::uint64_t trials = 0;
  std::map<std::string, std::uint64_t> checks;   // property -> instances checked
  std::map<std::string, std::uint64_t> skipped;  // property -> degenerate draws
  std::uint64_t failure_count = 0;
  std::vector<Counterexample> failures;  // first kMaxStoredFailures

  bool pass() const noexcept { return failure_count == 0; }
  void check(const std::string& property, bool ok, const std::function<Counterexample()>& describe);
  void skip(const std::string& property) { ++skipped[property]; }
};

std::string to_text(const SuiteReport& r);

using PsiFunction = std::function<ExtendedElement(const ExtendedElement&)>;

/// AC1, AC2 (k in -3..3 without 0), AC3, HC, the valuation refinement, strict
/// monotonicity of the derivative, and both round trips between integral and
/// derivative. `psi_fn` is injectable so the harness can be tested against a
/// deliberately wrong psi.
SuiteReport run_axiom_suite(const SamplerConfig& cfg, const PsiFunction& psi_fn = {});

/// Successor Identity, the push-past-Psi step a + (n+1)(s a - a) for n in
/// 1..10, and midpoint convexity of the successor fibers on both sides.
SuiteReport run_successor_suite(const SamplerConfig& cfg);

/// Fiber convexity of psi and s around a base point b, and the identity
/// psi((x-b)-(y-b)) = s(x-b) when s(x-b) < s(y-b).
SuiteReport run_lemma41_42_suite(const SamplerConfig& cfg);

// ---------------------------------------------------------------------------
// Affine maps on Psi-tuples.

/// h(x) = sum q_j x_j + c. Infinity absorbs: h is infinite when c is, or when
/// some x_j with q_j != 0 is.
struct AffineMap {
  std::vector<Rational> coefficients;
  ExtendedElement constant;

  ExtendedElement operator()(std::span<const ExtendedElement> x) const;
};

enum class Lemma44Kind { ConstInf, ConstPsi, Projection, NotApplicable, Failed };

std::string_view lemma44_kind_name(Lemma44Kind k);

struct Lemma44Result {
  Lemma44Kind kind = Lemma44Kind::NotApplicable;
  std::optional<PsiValue> beta;    // ConstPsi
  std::size_t coordinate = 0;      // Projection, 1-based
  std::string reason;              // NotApplicable
  std::optional<Counterexample> failure;  // Failed
};

using Tuple = std::vector<ExtendedElement>;

/// Classifies h on a finite family of Psi_inf-tuples as constantly inf,
/// constantly some beta in Psi, or a coordinate projection, provided h lands
/// in Psi_inf on at least min_hits members and the family is generic:
///   - every entry lies in Psi_inf and no two members coincide,
///   - each column is constant or injective, and a column holding inf is
///     constantly inf,
///   - two nonconstant columns agree on every member or on none,
///   - over one representative per group of agreeing nonconstant columns, all
///     entries of the family are pairwise distinct.
/// Otherwise returns NotApplicable with the reason. A classification is always
/// verified against every member; Failed means none of the three cases holds.
/// Throws DomainError on arity mismatch or min_hits < m + 2.
Lemma44Result lemma44_check(const AffineMap& h, std::span<const Tuple> tuples, std::size_t min_hits);

struct Lemma44Instance {
  std::string stratum;
  AffineMap map;
  std::vector<Tuple> tuples;
  std::size_t min_hits = 0;
};

/// Random instance with m <= 4 coordinates and at least m + 2 members. The
/// stratum (projection, constant, infinite, random, degenerate) is drawn
/// uniformly so every branch of the checker is exercised.
Lemma44Instance sample_lemma44_instance(Sampler& rng);

SuiteReport run_lemma44_suite(const SamplerConfig& cfg);

// ---------------------------------------------------------------------------
// Discrete sets in small intervals.

/// alpha in Psi with bound = -2 int(alpha) < epsilon, and the first elements
/// of X = Psi^{>alpha} - alpha in increasing order.
struct WitnessReport {
  GammaElement epsilon;
  PsiValue alpha;
  GammaElement bound;
  std::vector<GammaElement> prefix;
};

/// Takes alpha at level l + 1 where l is the leading index of epsilon, so the
/// bound is 2 e_{l+2}. Every returned element is checked to lie in
/// (0, bound) and to be increasing with positive gaps. Throws DomainError if
/// epsilon <= 0.
WitnessReport make_witness(const GammaElement& epsilon, std::size_t count);

std::string to_text(const WitnessReport& w);

// ---------------------------------------------------------------------------
// Subspace growth.

/// Random subspaces V (up to 6 generators) extended by 1..3 generators:
/// psi-growth <= m with verifying witnesses, |s_image| <= dim + 1 with every
/// sampled member's successor inside the computed image, p-growth <= m with a
/// rank-based cross-check of Psi-membership, and canonicality of echelon form.
SuiteReport run_subspace_growth_suite(const SamplerConfig& cfg, std::size_t samples_per_instance = 100);

/// A random member of V: coefficients on the echelon basis drawn from a small
/// grid containing 1 (so runs of ones occur) or from the configured rationals.
GammaElement sample_member(Sampler& rng, const Subspace& v);

}  // namespace asymlog::harness
