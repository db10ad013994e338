#include "rainbow/bounds.hpp"

#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

int lower_bound_general(int n, int max_degree, int k) {
  return static_cast<int>(ceil_div(static_cast<long long>(k) * n, max_degree + k));
}

int lower_bound_regular(int n, int d, int k) {
  if (k >= 2 * d) return n;
  return static_cast<int>(ceil_div(static_cast<long long>(k) * n, 2LL * d));
}

int lower_bound_for(const Graph& g, int k) {
  if (auto d = regular_degree(g); d && *d > 0) return lower_bound_regular(g.order(), *d, k);
  return lower_bound_general(g.order(), g.max_degree(), k);
}

int upper_bound_monotone(int gamma_k, int k, int k_prime) {
  if (k < 1 || k_prime <= k) {
    throw Error(ErrorCode::BadOrder, "need k' > k >= 1, got k=" + std::to_string(k) + " k'=" + std::to_string(k_prime));
  }
  return gamma_k + (k_prime - k) * (gamma_k / k);
}

ColoredCountBounds c_c0_bounds(int n, int d, int k, int gamma) {
  if (k <= 0 || k >= 2 * d) {
    throw Error(ErrorCode::KOutOfRange, "need 0 < k < 2d, got k=" + std::to_string(k) + " d=" + std::to_string(d));
  }
  const long long denom = 2LL * d - k;
  return {static_cast<int>(floor_div(static_cast<long long>(d) * gamma + static_cast<long long>(d - k) * n, denom)),
          static_cast<int>(ceil_div(static_cast<long long>(d) * (n - gamma), denom))};
}

RdrConditions rdr_necessary_conditions(const Graph& g) {
  RdrConditions r;
  r.regular_degree = regular_degree(g);
  r.divisibility = r.regular_degree && *r.regular_degree > 0 && g.order() % (2 * *r.regular_degree) == 0;
  r.bipartite = bipartition(g).has_value();
  return r;
}

}  // namespace rainbow
