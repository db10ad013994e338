#pragma once

// Reference implementations used only by the tests. They are deliberately
// naive and share no code with the library beyond the Graph container.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace oracle {

using rainbow::ColorAssignment;
using rainbow::ColorSet;
using rainbow::Edge;
using rainbow::Graph;

inline std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

/// Direct transcription of the k-RDF condition over an adjacency matrix.
inline bool is_krdf(const Graph& g, const std::vector<unsigned>& masks, int k) {
  const auto a = adjacency_matrix(g);
  const unsigned full = (1u << k) - 1;
  for (int v = 0; v < g.order(); ++v) {
    if (masks[v]) continue;
    unsigned seen = 0;
    for (int u = 0; u < g.order(); ++u) {
      if (a[v][u]) seen |= masks[u];
    }
    if (seen != full) return false;
  }
  return true;
}

inline std::vector<unsigned> masks_of(const ColorAssignment& f) {
  std::vector<unsigned> out;
  for (const auto& s : f.colors) out.push_back(s.mask());
  return out;
}

/// Exhaustive minimum over all (2^k)^n assignments. Keep n*k small.
inline int brute_gamma_rk(const Graph& g, int k) {
  const int n = g.order();
  const unsigned base = 1u << k;
  std::vector<unsigned> masks(n, 0);
  int best = n;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= base;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    int w = 0;
    for (int v = 0; v < n; ++v) {
      masks[v] = static_cast<unsigned>(c % base);
      c /= base;
      w += std::popcount(masks[v]);
    }
    if (w < best && is_krdf(g, masks, k)) best = w;
  }
  return best;
}

/// Domination number by testing vertex subsets in order of size.
inline int brute_domination_number(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> closed(n);
  for (int v = 0; v < n; ++v) {
    closed[v] = std::uint64_t{1} << v;
    for (int u : g.neighbors(v)) closed[v] |= std::uint64_t{1} << u;
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (int size = 0; size <= n; ++size) {
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::uint64_t covered = 0;
      for (int v : pick) covered |= closed[v];
      if (covered == all) return size;
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return n;
}

/// Ladder edge sets written straight from the definition (u_i = i, v_i = m + i).
inline std::vector<Edge> ladder_edges(int m, bool mobius) {
  std::vector<Edge> e;
  for (int i = 0; i < m; ++i) e.emplace_back(i, m + i);
  for (int i = 0; i + 1 < m; ++i) {
    e.emplace_back(i, i + 1);
    e.emplace_back(m + i, m + i + 1);
  }
  if (mobius) {
    e.emplace_back(m - 1, m);
    e.emplace_back(2 * m - 1, 0);
  } else {
    e.emplace_back(m - 1, 0);
    e.emplace_back(2 * m - 1, m);
  }
  std::set<Edge> unique;
  for (auto [a, b] : e) unique.insert({std::min(a, b), std::max(a, b)});
  return {unique.begin(), unique.end()};
}

/// Random d-regular graph on n vertices by the pairing model, retrying until
/// simple (and connected when requested).
inline Graph random_regular(int n, int d, std::mt19937& rng, bool connected = false) {
  while (true) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v) {
      for (int i = 0; i < d; ++i) points.push_back(v);
    }
    std::shuffle(points.begin(), points.end(), rng);
    std::set<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
      int a = points[i], b = points[i + 1];
      if (a == b || !edges.insert({std::min(a, b), std::max(a, b)}).second) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Graph g(n, {edges.begin(), edges.end()});
    if (connected && !rainbow::is_connected(g)) continue;
    return g;
  }
}

inline ColorAssignment random_coloring(int n, int k, std::mt19937& rng, double empty_prob = 0.5) {
  ColorAssignment f(k, static_cast<std::size_t>(n));
  std::bernoulli_distribution empty(empty_prob);
  std::uniform_int_distribution<unsigned> mask(1, (1u << k) - 1);
  for (int v = 0; v < n; ++v) {
    if (!empty(rng)) f[v] = ColorSet::from_mask(mask(rng));
  }
  return f;
}

/// Makes a random colouring valid: each uncoloured vertex still missing
/// colours either takes one colour itself or pushes its missing colours onto
/// a random neighbour.
inline ColorAssignment repair(const Graph& g, ColorAssignment f, std::mt19937& rng) {
  const unsigned full = (1u << f.k) - 1;
  std::bernoulli_distribution self(0.3);
  for (int v = 0; v < g.order(); ++v) {
    if (!f[v].empty()) continue;
    unsigned seen = 0;
    for (int u : g.neighbors(v)) seen |= f[u].mask();
    const unsigned missing = full & ~seen;
    if (!missing) continue;
    auto nb = g.neighbors(v);
    if (nb.empty() || self(rng)) {
      f[v] = ColorSet::from_mask(1u << std::countr_zero(missing));
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
      const int u = nb[pick(rng)];
      f[u] = f[u] | ColorSet::from_mask(missing);
    }
  }
  // Pushing colours can only help others; a later vertex may have become
  // coloured by the pushes, which is fine. Re-run until stable.
  for (int v = 0; v < g.order(); ++v) {
    if (!f[v].empty()) continue;
    unsigned seen = 0;
    for (int u : g.neighbors(v)) seen |= f[u].mask();
    if ((full & ~seen) != 0) f[v] = ColorSet{1};
  }
  return f;
}

}  // namespace oracle
