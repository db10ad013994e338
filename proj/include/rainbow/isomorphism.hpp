#pragma once

#include <optional>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Vertex bijection a -> b preserving adjacency: mapping[v] is the image of v.
using VertexMapping = std::vector<Vertex>;

/// Backtracking isomorphism search with colour-refinement pruning.
/// Intended for desk-scale graphs (a few dozen vertices).
std::optional<VertexMapping> graphs_isomorphic(const Graph& a, const Graph& b);

/// True iff mapping is a bijection carrying every edge of a onto an edge of b
/// and |E(a)| = |E(b)|.
bool is_isomorphism(const Graph& a, const Graph& b, const VertexMapping& mapping);

}  // namespace rainbow
