#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "asymlog/errors.hpp"
#include "asymlog/harness.hpp"
#include "asymlog/json_io.hpp"
#include "asymlog/logic.hpp"
#include "asymlog/subspace.hpp"

namespace asymlog::cli {

FileError::FileError(const std::string& path) : std::runtime_error("cannot open " + path), path_(path) {}

LineError::LineError(std::string path, std::size_t line, std::size_t column, const std::string& detail)
    : std::runtime_error(path + ":" + std::to_string(line) + ":" + std::to_string(column + 1) + ": " + detail),
      path_(std::move(path)),
      line_(line),
      column_(column) {}

std::vector<GammaElement> load_generators(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError(path);
  std::vector<GammaElement> out;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_element(line));
    } catch (const ParseError& e) {
      std::string detail = e.detail();
      if (!e.expected().empty()) {
        detail += " (expected";
        for (std::size_t k = 0; k < e.expected().size(); ++k) detail += (k ? ", " : " ") + e.expected()[k];
        detail += ")";
      }
      throw LineError(path, n, e.position(), detail);
    }
  }
  return out;
}

namespace {

struct Options {
  bool json = false;
  bool strict = false;
  harness::SamplerConfig cfg;

  std::string expr;
  std::vector<std::string> lets;
  bool fail_on_false = false;

  std::string suite;
  std::size_t samples = 100;

  std::string op;
  std::string gens;
  std::string extend;
  std::string tag;

  std::string epsilon;
  std::size_t count = 0;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// One parsed expression, formula or term.
struct Parsed {
  logic::FormulaPtr formula;
  logic::TermPtr term;
};

Parsed parse_expression(const std::string& text, const logic::ParseOptions& po) {
  try {
    return {logic::parse_formula(text, po), nullptr};
  } catch (const ParseError& as_formula) {
    try {
      return {nullptr, logic::parse_term(text, po)};
    } catch (const ParseError& as_term) {
      if (as_term.position() > as_formula.position()) throw;
      throw as_formula;
    }
  }
}

logic::Assignment parse_bindings(const std::vector<std::string>& lets) {
  logic::Assignment env;
  for (const auto& b : lets) {
    const auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw CLI::ValidationError("--let", "expected NAME=ELEMENT, got '" + b + "'");
    }
    std::string name = b.substr(0, eq);
    const bool ident = (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') &&
                       std::all_of(name.begin(), name.end(), [](char c) {
                         return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                       });
    if (!ident) throw CLI::ValidationError("--let", "'" + name + "' is not a variable name");
    try {
      env[name] = parse_extended(std::string_view(b).substr(eq + 1));
    } catch (const ParseError& e) {
      throw ParseError("in binding of " + name + ": " + e.detail(), e.position(), e.expected());
    }
  }
  return env;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Parsed p = parse_expression(o.expr, logic::ParseOptions{o.strict});
  const logic::Assignment env = parse_bindings(o.lets);
  if (p.formula) {
    const bool v = logic::eval_formula(*p.formula, env);
    if (o.json) {
      emit(out, Json{{"kind", "formula"},
                     {"canonical", logic::format_formula(*p.formula)},
                     {"ast", to_json(*p.formula)},
                     {"value", v}});
    } else {
      out << (v ? "true" : "false") << '\n';
    }
    return !v && o.fail_on_false ? kFailure : kSuccess;
  }
  const ExtendedElement v = logic::eval_term(*p.term, env);
  if (o.json) {
    emit(out, Json{{"kind", "term"},
                   {"canonical", logic::format_term(*p.term)},
                   {"ast", to_json(*p.term)},
                   {"value", to_string(v)}});
  } else {
    out << to_string(v) << '\n';
  }
  return kSuccess;
}

int cmd_fmt(const Options& o, std::ostream& out) {
  const Parsed p = parse_expression(o.expr, logic::ParseOptions{o.strict});
  const std::string text = p.formula ? logic::format_formula(*p.formula) : logic::format_term(*p.term);
  if (o.json) {
    emit(out, Json{{"kind", p.formula ? "formula" : "term"},
                   {"canonical", text},
                   {"ast", p.formula ? to_json(*p.formula) : to_json(*p.term)}});
  } else {
    out << text << '\n';
  }
  return kSuccess;
}

int cmd_check(const Options& o, std::ostream& out) {
  harness::SuiteReport r;
  if (o.suite == "axioms") r = harness::run_axiom_suite(o.cfg);
  else if (o.suite == "successor") r = harness::run_successor_suite(o.cfg);
  else if (o.suite == "lemma41") r = harness::run_lemma41_42_suite(o.cfg);
  else if (o.suite == "lemma44") r = harness::run_lemma44_suite(o.cfg);
  else r = harness::run_subspace_growth_suite(o.cfg, o.samples);
  if (o.json) emit(out, harness::to_json(r));
  else out << harness::to_text(r);
  return r.pass() ? kSuccess : kFailure;
}

std::string levels_text(const ImageReport& r) {
  std::string s;
  for (Index l : r.levels()) s += (s.empty() ? "" : ", ") + std::to_string(l);
  return "{" + s + "}";
}

void write_basis(std::ostream& out, const std::string& label, const Subspace& v) {
  out << label << ": dim " << v.dim() << '\n';
  for (const auto& b : v.basis()) out << "  " << to_string(b) << '\n';
}

void write_image(std::ostream& out, const ImageReport& r) {
  out << image_function_name(r.function) << "-image: " << levels_text(r) << '\n';
  for (const auto& [level, w] : r.witnesses) out << "  " << level << ": " << to_string(w) << '\n';
}

int cmd_subspace(const Options& o, std::ostream& out) {
  const std::vector<GammaElement> gens = load_generators(o.gens);
  std::vector<GammaElement> extra;
  if (!o.extend.empty()) extra = load_generators(o.extend);
  const Subspace v = echelonize(gens);

  if (o.op != "growth") {
    if (!o.tag.empty()) throw CLI::ValidationError("--tag", "only used with --op growth");
    const Subspace w = v.extended(extra);
    const ImageReport r = image(w, *parse_image_function(o.op));
    if (o.json) {
      Json j = to_json(r);
      j["subspace"] = to_json(w);
      emit(out, j);
    } else {
      write_basis(out, "subspace", w);
      write_image(out, r);
    }
    return kSuccess;
  }

  if (o.extend.empty()) throw CLI::RequiredError("--extend (needed by --op growth)");
  std::vector<ImageFunction> fns;
  if (o.tag.empty()) fns = {ImageFunction::Psi, ImageFunction::Successor, ImageFunction::Predecessor};
  else fns = {*parse_image_function(o.tag)};

  bool pass = true;
  Json reports = Json::array();
  std::ostringstream text;
  for (ImageFunction f : fns) {
    const GrowthReport g = growth_check(v, extra, f);
    pass = pass && g.pass;
    if (o.json) {
      reports.push_back(to_json(g));
      continue;
    }
    text << image_function_name(f) << "-growth: " << (g.pass ? "PASS" : "FAIL") << '\n';
    text << "  m: " << g.new_outside_base << '\n';
    text << "  old: " << levels_text(g.old_image) << '\n';
    text << "  new: " << levels_text(g.new_image) << '\n';
    text << "  gained: " << g.gained.size() << ", bound " << g.bound << '\n';
    for (const auto& [level, w] : g.new_image.witnesses) {
      text << "  witness " << level << ": " << to_string(w) << '\n';
    }
  }
  if (o.json) {
    emit(out, Json{{"base", to_json(v)}, {"extended", to_json(v.extended(extra))}, {"pass", pass},
                   {"reports", std::move(reports)}});
  } else {
    write_basis(out, "base", v);
    write_basis(out, "extended", v.extended(extra));
    out << text.str();
  }
  return pass ? kSuccess : kFailure;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const harness::WitnessReport w = harness::make_witness(parse_element(o.epsilon), o.count);
  if (o.json) emit(out, harness::to_json(w));
  else out << harness::to_text(w);
  return kSuccess;
}

int report_error(bool json, std::ostream& out, std::ostream& err, Json detail, const std::string& text) {
  if (json) emit(out, Json{{"error", std::move(detail)}});
  else err << "error: " << text << '\n';
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  const bool json_requested = std::find(args.begin(), args.end(), "--json") != args.end();

  CLI::App app{"Exact workbench for the logarithmic asymptotic couple", "asymlog"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit JSON documents");
  app.add_option("--seed", o.cfg.seed, "Sampler seed");
  app.add_option("--trials", o.cfg.trials, "Trials per suite");
  app.add_option("--max-support", o.cfg.max_support, "Largest sampled support index");
  app.add_option("--numerator-bound", o.cfg.numerator_bound, "Bound on sampled numerators");
  app.add_option("--denominator-bound", o.cfg.denominator_bound, "Bound on sampled denominators")
      ->check(CLI::PositiveNumber);
  app.add_flag("--strict-llog", o.strict, "Reject symbols outside L_log (int)");

  auto* eval = app.add_subcommand("eval", "Evaluate a closed formula or term");
  eval->fallthrough();
  eval->add_option("expression", o.expr, "Formula or term")->required();
  eval->add_option("--let", o.lets, "Bind a variable: NAME=ELEMENT (repeatable)");
  eval->add_flag("--fail-on-false", o.fail_on_false, "Exit 1 when a formula is false");

  auto* check = app.add_subcommand("check", "Run a verification suite");
  check->fallthrough();
  check->add_option("suite", o.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"axioms", "successor", "lemma41", "lemma44", "subspace-growth"}));
  check->add_option("--samples", o.samples, "Members sampled per subspace (subspace-growth)");

  auto* sub = app.add_subcommand("subspace", "Images of psi, s and p on a subspace");
  sub->fallthrough();
  sub->add_option("--op", o.op, "psi, s, p or growth")->required()->check(CLI::IsMember({"psi", "s", "p", "growth"}));
  sub->add_option("--gens", o.gens, "Generator file")->required();
  sub->add_option("--extend", o.extend, "Additional generator file");
  sub->add_option("--tag", o.tag, "Function for --op growth (default: all)")->check(CLI::IsMember({"psi", "s", "p"}));

  auto* wit = app.add_subcommand("witness", "Discrete set inside (0, epsilon)");
  wit->fallthrough();
  wit->add_option("--epsilon", o.epsilon, "Positive element")->required();
  wit->add_option("--count", o.count, "Number of elements")->required();

  auto* fmt = app.add_subcommand("fmt", "Print the canonical form of a formula or term");
  fmt->fallthrough();
  fmt->add_option("expression", o.expr, "Formula or term")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    return report_error(json_requested, out, err, Json{{"kind", "usage"}, {"message", e.what()}}, e.what());
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (fmt->parsed()) return cmd_fmt(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (sub->parsed()) return cmd_subspace(o, out);
    return cmd_witness(o, out);
  } catch (const ParseError& e) {
    return report_error(o.json, out, err,
                        Json{{"kind", "parse"},
                             {"message", e.detail()},
                             {"position", e.position()},
                             {"expected", e.expected()}},
                        e.what());
  } catch (const LineError& e) {
    return report_error(o.json, out, err,
                        Json{{"kind", "parse"},
                             {"message", e.what()},
                             {"path", e.path()},
                             {"line", e.line()},
                             {"column", e.column()}},
                        e.what());
  } catch (const FileError& e) {
    return report_error(o.json, out, err, Json{{"kind", "file"}, {"message", e.what()}, {"path", e.path()}},
                        e.what());
  } catch (const UnboundVariable& e) {
    return report_error(o.json, out, err, Json{{"kind", "unbound"}, {"message", e.what()}, {"name", e.name()}},
                        e.what());
  } catch (const DomainError& e) {
    return report_error(o.json, out, err, Json{{"kind", "domain"}, {"message", e.what()}}, e.what());
  } catch (const CLI::Error& e) {
    return report_error(o.json, out, err, Json{{"kind", "usage"}, {"message", e.what()}}, e.what());
  }
}

}  // namespace asymlog::cli
