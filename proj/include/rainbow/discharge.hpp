#pragma once

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

struct DischargeResult {
  ColorAssignment coloring;
  int moves = 0;
};

/// Greedy weight-preserving normalisation of a valid k-RDF.
///
/// While some vertex v carries more colours than it has uncoloured
/// neighbours (and has at least one), move a single colour from v to one of
/// those neighbours, keeping the move only if the result is still a k-RDF.
/// Candidates are scanned by lowest vertex, then lowest colour, then lowest
/// neighbour. Every accepted move lowers the uncoloured count by one.
///
/// Throws Error{InvalidInput} if f is not a valid k-RDF of g.
DischargeResult discharge(const Graph& g, const ColorAssignment& f);

/// Adds colour k+1 to every vertex coloured i. Throws Error{ColorOutOfRange}
/// unless 1 <= i <= k < 15.
ColorAssignment lift_color(const ColorAssignment& f, int i);

}  // namespace rainbow
