#include "rainbow/discharge.hpp"

#include <optional>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

// Only vertices around the move can change status, so re-check those.
bool still_valid_after_move(const Graph& g, const ColorAssignment& f, Vertex from, Vertex to) {
  const ColorSet all = ColorSet::full(f.k);
  auto dominated = [&](Vertex x) {
    if (!f[x].empty()) return true;
    ColorSet seen;
    for (Vertex y : g.neighbors(x)) seen |= f[y];
    return seen == all;
  };
  for (Vertex x : g.neighbors(from)) {
    if (!dominated(x)) return false;
  }
  for (Vertex x : g.neighbors(to)) {
    if (!dominated(x)) return false;
  }
  return dominated(from) && dominated(to);
}

std::optional<std::pair<Vertex, ColorAssignment>> find_move(const Graph& g, const ColorAssignment& f) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f[v].empty()) continue;
    int empty_neighbors = 0;
    for (Vertex w : g.neighbors(v)) empty_neighbors += f[w].empty() ? 1 : 0;
    if (empty_neighbors == 0 || f[v].size() <= empty_neighbors) continue;
    for (int c : f[v].colors()) {
      for (Vertex w : g.neighbors(v)) {
        if (!f[w].empty()) continue;
        ColorAssignment next = f;
        next[v].erase(c);
        next[w].insert(c);
        if (still_valid_after_move(g, next, v, w)) return std::make_pair(v, std::move(next));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

DischargeResult discharge(const Graph& g, const ColorAssignment& f) {
  if (!verify_krdf(g, f).valid) throw Error(ErrorCode::InvalidInput, "discharge needs a valid k-RDF");
  DischargeResult result{f, 0};
  while (auto move = find_move(g, result.coloring)) {
    result.coloring = std::move(move->second);
    ++result.moves;
  }
  return result;
}

ColorAssignment lift_color(const ColorAssignment& f, int i) {
  if (i < 1 || i > f.k) {
    throw Error(ErrorCode::ColorOutOfRange, "colour " + std::to_string(i) + " outside 1.." + std::to_string(f.k));
  }
  if (f.k + 1 > kMaxColors) throw Error(ErrorCode::ColorOutOfRange, "cannot exceed " + std::to_string(kMaxColors) + " colours");
  ColorAssignment out{f.k + 1, f.colors};
  for (ColorSet& s : out.colors) {
    if (s.contains(i)) s.insert(f.k + 1);
  }
  return out;
}

}  // namespace rainbow
