#include "asymlog/json_io.hpp"

namespace asymlog {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Json levels_of(const ImageReport& r) {
  Json out = Json::array();
  for (Index l : r.levels()) out.push_back(l);
  return out;
}

}  // namespace

Json to_json(const logic::Term& t) {
  using namespace logic;
  return std::visit(
      overloaded{
          [](const Literal& n) { return Json{{"type", "literal"}, {"value", to_string(n.value)}}; },
          [](const Variable& n) { return Json{{"type", "variable"}, {"name", n.name}}; },
          [](const Sum& n) { return Json{{"type", "add"}, {"lhs", to_json(*n.lhs)}, {"rhs", to_json(*n.rhs)}}; },
          [](const Negation& n) { return Json{{"type", "negate"}, {"operand", to_json(*n.operand)}}; },
          [](const Division& n) {
            return Json{{"type", "divide"}, {"operand", to_json(*n.operand)}, {"divisor", n.divisor}};
          },
          [](const Application& n) {
            return Json{{"type", "apply"},
                        {"function", std::string(function_name(n.function))},
                        {"argument", to_json(*n.argument)}};
          },
      },
      t.node);
}

Json to_json(const logic::Formula& f) {
  using namespace logic;
  return std::visit(
      overloaded{
          [](const Equal& n) { return Json{{"type", "eq"}, {"lhs", to_json(*n.lhs)}, {"rhs", to_json(*n.rhs)}}; },
          [](const Less& n) { return Json{{"type", "lt"}, {"lhs", to_json(*n.lhs)}, {"rhs", to_json(*n.rhs)}}; },
          [](const Not& n) { return Json{{"type", "not"}, {"operand", to_json(*n.operand)}}; },
          [](const And& n) { return Json{{"type", "and"}, {"lhs", to_json(*n.lhs)}, {"rhs", to_json(*n.rhs)}}; },
          [](const Or& n) { return Json{{"type", "or"}, {"lhs", to_json(*n.lhs)}, {"rhs", to_json(*n.rhs)}}; },
      },
      f.node);
}

Json to_json(const Subspace& v) {
  Json basis = Json::array();
  for (const auto& b : v.basis()) basis.push_back(to_string(b));
  return Json{{"dim", v.dim()}, {"basis", std::move(basis)}};
}

Json to_json(const ImageReport& r) {
  Json w = Json::object();
  for (const auto& [level, x] : r.witnesses) w[std::to_string(level)] = to_string(x);
  return Json{{"function", std::string(image_function_name(r.function))},
              {"levels", levels_of(r)},
              {"witnesses", std::move(w)}};
}

Json to_json(const GrowthReport& r) {
  Json gens = Json::array();
  for (const auto& g : r.new_generators) gens.push_back(to_string(g));
  Json gained = Json::array();
  for (Index l : r.gained) gained.push_back(l);
  return Json{{"function", std::string(image_function_name(r.function))},
              {"base", to_json(r.base)},
              {"new_generators", std::move(gens)},
              {"extended", to_json(r.extended)},
              {"m", r.new_outside_base},
              {"old_image", to_json(r.old_image)},
              {"new_image", to_json(r.new_image)},
              {"gained", std::move(gained)},
              {"bound", r.bound},
              {"pass", r.pass}};
}

namespace harness {

Json to_json(const Counterexample& c) {
  Json inputs = Json::object();
  for (const auto& [k, v] : c.inputs) inputs[k] = v;
  return Json{{"property", c.property}, {"inputs", std::move(inputs)}, {"observed", c.observed},
              {"expected", c.expected}};
}

Json to_json(const SuiteReport& r) {
  Json props = Json::object();
  for (const auto& [name, n] : r.checks) {
    props[name] = Json{{"checked", n}, {"skipped", r.skipped.contains(name) ? r.skipped.at(name) : 0}};
  }
  for (const auto& [name, n] : r.skipped) {
    if (!r.checks.contains(name)) props[name] = Json{{"checked", 0}, {"skipped", n}};
  }
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(to_json(f));
  return Json{{"suite", r.suite},
              {"pass", r.pass()},
              {"trials", r.trials},
              {"properties", std::move(props)},
              {"failure_count", r.failure_count},
              {"failures", std::move(failures)}};
}

Json to_json(const WitnessReport& w) {
  Json prefix = Json::array();
  for (const auto& x : w.prefix) prefix.push_back(to_string(x));
  return Json{{"epsilon", to_string(w.epsilon)},
              {"alpha", to_string(w.alpha.embed())},
              {"alpha_level", w.alpha.level},
              {"bound", to_string(w.bound)},
              {"prefix", std::move(prefix)}};
}

}  // namespace harness
}  // namespace asymlog
