#pragma once

// JSON renderings of ASTs and reports. Elements always appear in the element
// text format so documents can be replayed through the command line.

#include <json.hpp>

#include "asymlog/harness.hpp"
#include "asymlog/logic.hpp"
#include "asymlog/subspace.hpp"

namespace asymlog {

using Json = nlohmann::ordered_json;

/// Node-type-tagged tree: {"type": "sum", "lhs": ..., "rhs": ...}.
Json to_json(const logic::Term& t);
Json to_json(const logic::Formula& f);

/// {function, levels: [...], witnesses: {level: element}}.
Json to_json(const ImageReport& r);
Json to_json(const GrowthReport& r);
Json to_json(const Subspace& v);

namespace harness {
Json to_json(const Counterexample& c);
Json to_json(const SuiteReport& r);
Json to_json(const WitnessReport& w);
}  // namespace harness

}  // namespace asymlog
