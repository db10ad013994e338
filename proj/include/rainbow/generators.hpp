#pragma once

#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Z_{m1} x ... x Z_{mr} together with a connection set of coordinate tuples.
struct AbelianGroupSpec {
  std::vector<int> factors;
  std::vector<std::vector<int>> connection;

  [[nodiscard]] int order() const;
  /// Mixed-radix index of an element; the first coordinate is most significant.
  [[nodiscard]] int index_of(const std::vector<int>& element) const;
  [[nodiscard]] std::vector<int> element_at(int index) const;
};

// Generators. Ladder numbering: u_i -> i, v_i -> m + i.

Graph cycle(int n);
Graph prism(int m);
/// Prism rails with the seam crossed: u_{m-1} ~ v_0 and v_{m-1} ~ u_0. mobius_ladder(2) is K_4.
Graph mobius_ladder(int m);
/// Sides 0..a-1 and a..a+b-1.
Graph complete_bipartite(int a, int b);
/// The 12-vertex cubic bipartite graph with LCF notation [5,-5]^6.
Graph franklin();
/// Vertices are bit strings; coordinate i is bit i.
Graph hypercube(int dim);
/// C_m[2K_1]: vertex (i, s) -> 2i + s, adjacent to all four vertices of columns i +- 1.
Graph wreath(int m);
/// Throws Error{IdentityInConnectionSet|NotInverseClosed|ParameterTooSmall|InvalidInput}.
Graph cayley_abelian(const AbelianGroupSpec& spec);
/// G box K_k with (v, i) -> v * k + i.
Graph cartesian_product_complete(const Graph& g, int k);

}  // namespace rainbow
