#pragma once

#include <json.hpp>

#include "rainbow/bounds.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/families.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {

using json = nlohmann::ordered_json;

// Interchange formats. Readers throw Error{Parse} on malformed documents and
// let graph/colouring validation errors through unchanged.

/// {"name": string|null, "n": int, "edges": [[u,v],...]}
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// {"k": int, "colors": [[c,...],...]}
json coloring_to_json(const ColorAssignment& f);
ColorAssignment coloring_from_json(const json& j);

/// {"value", "method", "witness", "nodes", "optimal", "elapsed_ms"}.
/// With canonical set elapsed_ms is written as 0 so reruns are byte-identical.
json solve_result_to_json(const SolveResult& r, bool canonical = false);

json verification_to_json(const VerificationReport& r);
json stats_to_json(const ColoringStats& s);
json formula_to_json(const FormulaResult& r);

}  // namespace rainbow
