#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

enum class Family { Cycle, Prism, Mobius, CompleteBipartite, Franklin, Hypercube, Wreath, CayleyAbelian };

/// Names the generator a graph came from together with its parameters,
/// e.g. {Prism, {6}} or {CompleteBipartite, {3, 3}}.
struct FamilyId {
  Family family;
  std::vector<int> params;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

std::string to_string(const FamilyId& id);
/// Parses the labels produced by to_string ("prism(6)", "complete_bipartite(3,3)").
std::optional<FamilyId> parse_family_label(const std::string& label);

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are stored once with the smaller endpoint first and sorted
/// ascending; neighbor lists are sorted.
class Graph {
 public:
  Graph() = default;
  /// Throws Error{LoopEdge|DuplicateEdge|IndexOutOfRange}.
  Graph(int n, std::vector<Edge> edges, std::optional<std::string> name = std::nullopt);

  [[nodiscard]] int order() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  [[nodiscard]] int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  [[nodiscard]] int max_degree() const;
  [[nodiscard]] bool adjacent(Vertex a, Vertex b) const;

  [[nodiscard]] const std::optional<std::string>& name() const noexcept { return name_; }
  [[nodiscard]] const std::optional<FamilyId>& family() const noexcept { return family_; }
  [[nodiscard]] Graph tagged(FamilyId id) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> adj_;
  std::optional<std::string> name_;
  std::optional<FamilyId> family_;
};

Graph build_graph(int n, std::vector<Edge> edges);

std::optional<int> regular_degree(const Graph& g);

struct Bipartition {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};

/// BFS 2-coloring; left holds the color class of the lowest vertex of each component.
std::optional<Bipartition> bipartition(const Graph& g);

bool is_connected(const Graph& g);

/// Length of a shortest cycle, absent for forests.
std::optional<int> girth(const Graph& g);

}  // namespace rainbow
