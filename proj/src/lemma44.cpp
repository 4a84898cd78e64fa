#include <algorithm>
#include <numeric>
#include <set>

#include "asymlog/errors.hpp"
#include "asymlog/harness.hpp"

namespace asymlog::harness {

ExtendedElement AffineMap::operator()(std::span<const ExtendedElement> x) const {
  if (x.size() != coefficients.size()) throw DomainError("affine map applied to a tuple of the wrong arity");
  if (constant.is_infinity()) return constant;
  GammaElement out = constant.value();
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (coefficients[j] == 0) continue;
    if (x[j].is_infinity()) return ExtendedElement::infinity();
    out += coefficients[j] * x[j].value();
  }
  return out;
}

std::string_view lemma44_kind_name(Lemma44Kind k) {
  switch (k) {
    case Lemma44Kind::ConstInf:
      return "const-inf";
    case Lemma44Kind::ConstPsi:
      return "const-psi";
    case Lemma44Kind::Projection:
      return "projection";
    case Lemma44Kind::NotApplicable:
      return "not-applicable";
    case Lemma44Kind::Failed:
      return "failed";
  }
  return "?";
}

namespace {

bool in_psi_inf(const ExtendedElement& a) { return a.is_infinity() || is_psi_element(a).has_value(); }

Lemma44Result not_applicable(std::string reason) {
  Lemma44Result r;
  r.kind = Lemma44Kind::NotApplicable;
  r.reason = std::move(reason);
  return r;
}

std::string render_tuple(const Tuple& t) {
  std::string s = "(";
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j) s += ", ";
    s += to_string(t[j]);
  }
  return s + ")";
}

}  // namespace

Lemma44Result lemma44_check(const AffineMap& h, std::span<const Tuple> tuples, std::size_t min_hits) {
  const std::size_t m = h.coefficients.size();
  if (min_hits < m + 2) throw DomainError("lemma44_check: min_hits must be at least m + 2");
  for (const auto& t : tuples) {
    if (t.size() != m) throw DomainError("lemma44_check: tuple arity differs from the map's");
  }
  const std::size_t n = tuples.size();

  for (const auto& t : tuples) {
    for (const auto& x : t) {
      if (!in_psi_inf(x)) return not_applicable("entry " + to_string(x) + " is not in Psi_inf");
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      if (tuples[i] == tuples[k]) {
        return not_applicable("members " + std::to_string(i) + " and " + std::to_string(k) + " coincide");
      }
    }
  }

  std::vector<ExtendedElement> values;
  values.reserve(n);
  for (const auto& t : tuples) values.push_back(h(t));
  const auto hits = static_cast<std::size_t>(std::count_if(values.begin(), values.end(), in_psi_inf));
  if (hits < min_hits) {
    return not_applicable("h lands in Psi_inf on " + std::to_string(hits) + " members, fewer than " +
                          std::to_string(min_hits));
  }

  // Column shapes.
  std::vector<bool> constant(m, true);
  for (std::size_t j = 0; j < m; ++j) {
    bool has_inf = false;
    std::set<ExtendedElement> seen;
    for (std::size_t i = 0; i < n; ++i) {
      has_inf = has_inf || tuples[i][j].is_infinity();
      seen.insert(tuples[i][j]);
      if (tuples[i][j] != tuples[0][j]) constant[j] = false;
    }
    if (!constant[j] && seen.size() != n) {
      return not_applicable("column " + std::to_string(j + 1) + " is neither constant nor injective");
    }
    if (!constant[j] && has_inf) {
      return not_applicable("column " + std::to_string(j + 1) + " is infinite on some members only");
    }
  }

  // Nonconstant columns agree everywhere or nowhere; keep one representative
  // per group of agreeing columns.
  std::vector<std::size_t> reps;
  for (std::size_t j = 0; j < m; ++j) {
    if (constant[j]) continue;
    bool duplicate = false;
    for (std::size_t r : reps) {
      std::size_t agree = 0;
      for (std::size_t i = 0; i < n; ++i) agree += tuples[i][j] == tuples[i][r] ? 1 : 0;
      if (agree == n) {
        duplicate = true;
        break;
      }
      if (agree != 0) {
        return not_applicable("columns " + std::to_string(r + 1) + " and " + std::to_string(j + 1) +
                              " agree on some members only");
      }
    }
    if (!duplicate) reps.push_back(j);
  }

  std::set<ExtendedElement> entries;
  for (const auto& t : tuples) {
    for (std::size_t r : reps) entries.insert(t[r]);
  }
  if (entries.size() != n * reps.size()) {
    return not_applicable("entries of distinct nonconstant columns repeat across members");
  }

  Lemma44Result res;
  const bool all_equal =
      std::all_of(values.begin(), values.end(), [&](const ExtendedElement& v) { return v == values.front(); });
  if (n > 0 && all_equal && values.front().is_infinity()) {
    res.kind = Lemma44Kind::ConstInf;
    return res;
  }
  if (n > 0 && all_equal) {
    if (auto level = is_psi_element(values.front())) {
      res.kind = Lemma44Kind::ConstPsi;
      res.beta = *level;
      return res;
    }
  }
  for (std::size_t l = 0; l < m; ++l) {
    bool matches = true;
    for (std::size_t i = 0; i < n && matches; ++i) matches = values[i] == tuples[i][l];
    if (matches) {
      res.kind = Lemma44Kind::Projection;
      res.coordinate = l + 1;
      return res;
    }
  }

  res.kind = Lemma44Kind::Failed;
  Counterexample c;
  c.property = "lemma44-trichotomy";
  std::string qs;
  for (std::size_t j = 0; j < m; ++j) qs += (j ? ", " : "") + to_string(h.coefficients[j]);
  c.inputs.emplace_back("q", "(" + qs + ")");
  c.inputs.emplace_back("c", to_string(h.constant));
  for (std::size_t i = 0; i < n; ++i) {
    c.inputs.emplace_back("a" + std::to_string(i), render_tuple(tuples[i]));
  }
  std::string vals;
  for (std::size_t i = 0; i < n; ++i) vals += (i ? ", " : "") + to_string(values[i]);
  c.observed = "h values (" + vals + ")";
  c.expected = "constantly inf, constantly some beta in Psi, or a coordinate projection";
  res.failure = std::move(c);
  return res;
}

// ---------------------------------------------------------------------------

namespace {

enum class Role { Retained, Duplicate, Constant };

// Splits `total` into `parts` random rationals summing to it.
std::vector<Rational> split(Sampler& rng, const Rational& total, std::size_t parts) {
  std::vector<Rational> out;
  Rational acc = 0;
  for (std::size_t k = 0; k + 1 < parts; ++k) {
    out.push_back(rng.rational());
    acc += out.back();
  }
  out.push_back(total - acc);
  return out;
}

}  // namespace

Lemma44Instance sample_lemma44_instance(Sampler& rng) {
  static const char* const kStrata[] = {"projection", "const-psi", "const-inf", "random", "degenerate"};
  Lemma44Instance inst;
  inst.stratum = kStrata[rng.below(5)];

  const std::size_t m = 1 + rng.below(4);
  const std::size_t n = m + 2 + rng.below(4);
  inst.min_hits = m + 2;

  // Column roles; column 0 is always retained so there is something to project.
  std::vector<Role> role(m, Role::Retained);
  std::vector<std::size_t> leader(m);
  std::iota(leader.begin(), leader.end(), 0);
  for (std::size_t j = 1; j < m; ++j) {
    const auto pick = rng.below(3);
    if (pick == 1) {
      role[j] = Role::Duplicate;
      do {
        leader[j] = rng.below(j);
      } while (role[leader[j]] != Role::Retained);
    } else if (pick == 2) {
      role[j] = Role::Constant;
    }
  }

  // Distinct Psi levels for all retained entries, from a pool three times the
  // number needed.
  std::size_t retained = static_cast<std::size_t>(std::count(role.begin(), role.end(), Role::Retained));
  const std::size_t need = n * retained;
  std::vector<Index> pool(3 * need + 4);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t k = 0; k < need; ++k) std::swap(pool[k], pool[k + rng.below(pool.size() - k)]);

  std::vector<ExtendedElement> constants(m);
  for (std::size_t j = 0; j < m; ++j) {
    if (role[j] == Role::Constant) {
      constants[j] = rng.below(5) == 0 ? ExtendedElement::infinity()
                                       : ExtendedElement(PsiValue{rng.below(3 * need + 4)}.embed());
    }
  }

  inst.tuples.assign(n, Tuple(m));
  std::size_t next = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (role[j] != Role::Retained) continue;
    for (std::size_t i = 0; i < n; ++i) inst.tuples[i][j] = PsiValue{pool[next++]}.embed();
  }
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (role[j] == Role::Duplicate) inst.tuples[i][j] = inst.tuples[i][leader[j]];
      if (role[j] == Role::Constant) inst.tuples[i][j] = constants[j];
    }
  }

  // Coefficients per group of agreeing columns, split across duplicates.
  auto group_coefficients = [&](std::size_t projected) {
    std::vector<Rational> q(m, Rational(0));
    for (std::size_t j = 0; j < m; ++j) {
      if (role[j] != Role::Retained) continue;
      std::vector<std::size_t> members;
      for (std::size_t k = 0; k < m; ++k) {
        if (k == j || (role[k] == Role::Duplicate && leader[k] == j)) members.push_back(k);
      }
      const auto parts = split(rng, Rational(j == projected ? 1 : 0), members.size());
      for (std::size_t k = 0; k < members.size(); ++k) q[members[k]] = parts[k];
    }
    return q;
  };
  // Constant columns contribute a fixed offset; cancel it (finite ones only).
  auto offset_and_constants = [&](std::vector<Rational>& q) {
    GammaElement offset;
    for (std::size_t j = 0; j < m; ++j) {
      if (role[j] != Role::Constant) continue;
      if (constants[j].is_infinity()) {
        q[j] = 0;
      } else {
        q[j] = rng.rational();
        offset += q[j] * constants[j].value();
      }
    }
    return offset;
  };

  const std::string& s = inst.stratum;
  if (s == "projection") {
    std::vector<std::size_t> retained_cols;
    for (std::size_t j = 0; j < m; ++j) {
      if (role[j] == Role::Retained) retained_cols.push_back(j);
    }
    inst.map.coefficients = group_coefficients(retained_cols[rng.below(retained_cols.size())]);
    inst.map.constant = -offset_and_constants(inst.map.coefficients);
  } else if (s == "const-psi") {
    inst.map.coefficients = group_coefficients(m);  // every group sums to 0
    const GammaElement beta = PsiValue{rng.below(3 * need + 4)}.embed();
    inst.map.constant = beta - offset_and_constants(inst.map.coefficients);
  } else if (s == "const-inf") {
    inst.map.coefficients = group_coefficients(rng.below(m + 1));
    offset_and_constants(inst.map.coefficients);
    inst.map.constant = ExtendedElement::infinity();
  } else if (s == "random") {
    inst.map.coefficients.resize(m);
    for (auto& q : inst.map.coefficients) q = rng.rational();
    inst.map.constant = rng.coin() ? ExtendedElement(rng.element()) : ExtendedElement(PsiValue{rng.below(8)}.embed());
  } else {
    // Degenerate: a projection on a family that breaks genericity by copying
    // one retained entry into another member.
    inst.map.coefficients = group_coefficients(0);
    inst.map.constant = -offset_and_constants(inst.map.coefficients);
    const std::size_t i = rng.below(n - 1);
    inst.tuples[i + 1][0] = inst.tuples[i][0];
    for (std::size_t j = 1; j < m; ++j) {
      if (role[j] == Role::Duplicate && leader[j] == 0) inst.tuples[i + 1][j] = inst.tuples[i][j];
    }
  }
  return inst;
}

SuiteReport run_lemma44_suite(const SamplerConfig& cfg) {
  SuiteReport rep;
  rep.suite = "lemma44";
  rep.trials = cfg.trials;
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    Sampler rng(cfg, "lemma44", trial);
    const Lemma44Instance inst = sample_lemma44_instance(rng);
    const Lemma44Result res = lemma44_check(inst.map, inst.tuples, inst.min_hits);
    const std::string kind(lemma44_kind_name(res.kind));
    ++rep.checks["classified-" + kind];

    bool ok = res.kind != Lemma44Kind::Failed;
    if (ok && res.kind != Lemma44Kind::NotApplicable) {
      for (const auto& t : inst.tuples) {
        const ExtendedElement v = inst.map(t);
        switch (res.kind) {
          case Lemma44Kind::ConstInf:
            ok = ok && v.is_infinity();
            break;
          case Lemma44Kind::ConstPsi:
            ok = ok && v == ExtendedElement(res.beta->embed());
            break;
          case Lemma44Kind::Projection:
            ok = ok && v == t[res.coordinate - 1];
            break;
          default:
            break;
        }
      }
    }
    rep.check("lemma44-trichotomy", ok, [&] {
      if (res.failure) return *res.failure;
      return Counterexample{"", {{"stratum", inst.stratum}}, kind + " does not verify", "verified classification"};
    });
  }
  return rep;
}

}  // namespace asymlog::harness
