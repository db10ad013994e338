#pragma once

#include <optional>

#include "rainbow/graph.hpp"

namespace rainbow {

// Closed-form bounds on the k-rainbow domination number. Integer arithmetic only.

/// ceil(k n / (maxdeg + k)), valid for any graph.
int lower_bound_general(int n, int max_degree, int k);

/// ceil(k n / 2d) for k <= 2d, and n for k >= 2d (d-regular graphs).
int lower_bound_regular(int n, int d, int k);

/// Best lower bound for g: the regular bound when g is regular, the
/// max-degree bound otherwise. Graphs with isolated vertices only get the
/// general bound.
int lower_bound_for(const Graph& g, int k);

/// gamma_k + (k' - k) * floor(gamma_k / k). Throws Error{BadOrder} unless k' > k >= 1.
int upper_bound_monotone(int gamma_k, int k, int k_prime);

struct ColoredCountBounds {
  int c_max;   ///< most coloured vertices an optimal k-RDF can have
  int c0_min;  ///< fewest uncoloured vertices an optimal k-RDF can have
};

/// Throws Error{KOutOfRange} unless 0 < k < 2d.
ColoredCountBounds c_c0_bounds(int n, int d, int k, int gamma);

/// Necessary (not sufficient) conditions for gamma_rd(G) = n/2.
struct RdrConditions {
  std::optional<int> regular_degree;
  bool divisibility = false;  ///< 2d | n
  bool bipartite = false;

  [[nodiscard]] bool all_pass() const { return regular_degree.has_value() && *regular_degree > 0 && divisibility && bipartite; }
};

RdrConditions rdr_necessary_conditions(const Graph& g);

/// Exact ceil / floor for integer division with positive divisor.
constexpr long long ceil_div(long long a, long long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }
constexpr long long floor_div(long long a, long long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace rainbow
