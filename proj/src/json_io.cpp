#include "rainbow/json_io.hpp"

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) parse_error("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) parse_error(std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) parse_error(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < INT32_MIN || v > INT32_MAX) parse_error(std::string(what) + " out of range");
  return static_cast<int>(v);
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  json j;
  j["name"] = g.name() ? json(*g.name()) : json(nullptr);
  j["n"] = g.order();
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const json& j) {
  const int n = as_int(field(j, "n"), "n");
  if (n < 0) parse_error("n must be non-negative");
  const json& e = field(j, "edges");
  if (!e.is_array()) parse_error("edges must be an array");
  std::vector<Edge> edges;
  edges.reserve(e.size());
  for (const auto& pair : e) {
    if (!pair.is_array() || pair.size() != 2) parse_error("each edge must be a pair [u, v]");
    edges.emplace_back(as_int(pair[0], "edge endpoint"), as_int(pair[1], "edge endpoint"));
  }
  std::optional<std::string> name;
  if (auto it = j.find("name"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) parse_error("name must be a string or null");
    name = it->get<std::string>();
  }
  return Graph(n, std::move(edges), std::move(name));
}

json coloring_to_json(const ColorAssignment& f) {
  json colors = json::array();
  for (const ColorSet& s : f.colors) colors.push_back(s.colors());
  return {{"k", f.k}, {"colors", std::move(colors)}};
}

ColorAssignment coloring_from_json(const json& j) {
  const int k = as_int(field(j, "k"), "k");
  const json& c = field(j, "colors");
  if (!c.is_array()) parse_error("colors must be an array");
  ColorAssignment f(k, c.size());
  for (std::size_t v = 0; v < c.size(); ++v) {
    if (!c[v].is_array()) parse_error("colors[" + std::to_string(v) + "] must be an array");
    for (const auto& col : c[v]) {
      const int color = as_int(col, "colour");
      if (color < 1 || color > kMaxColors || color > k) {
        throw Error(ErrorCode::ColorOutOfRange, "colour " + std::to_string(color) + " at vertex " + std::to_string(v));
      }
      f.colors[v].insert(color);
    }
  }
  f.validate();
  return f;
}

json solve_result_to_json(const SolveResult& r, bool canonical) {
  json j;
  j["value"] = r.value;
  j["method"] = std::string(to_string(r.method));
  j["witness"] = coloring_to_json(r.witness);
  j["nodes"] = r.nodes_explored;
  j["optimal"] = r.optimal();
  j["elapsed_ms"] = canonical ? 0 : r.elapsed.count();
  return j;
}

json verification_to_json(const VerificationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"vertex", v.vertex}, {"missing", v.missing.colors()}});
  return {{"valid", r.valid}, {"violations", std::move(violations)}};
}

json stats_to_json(const ColoringStats& s) {
  return {{"n", s.n},           {"per_color", s.per_color}, {"by_cardinality", s.by_cardinality},
          {"colored", s.colored}, {"uncolored", s.uncolored}, {"e0", s.e0},
          {"e1", s.e1},           {"e2", s.e2},               {"weight", s.weight}};
}

json formula_to_json(const FormulaResult& r) {
  return {{"value", r.value}, {"case", r.case_tag}, {"source", r.source}};
}

}  // namespace rainbow
