#include "rainbow/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

void require_at_least(const char* what, int value, int minimum) {
  if (value < minimum) {
    throw Error(ErrorCode::ParameterTooSmall,
                std::string(what) + " must be >= " + std::to_string(minimum) + ", got " + std::to_string(value));
  }
}

std::vector<int> normalized(const AbelianGroupSpec& spec, const std::vector<int>& element) {
  if (element.size() != spec.factors.size()) {
    throw Error(ErrorCode::InvalidInput, "group element has " + std::to_string(element.size()) +
                                             " coordinates, group has " + std::to_string(spec.factors.size()));
  }
  std::vector<int> out(element.size());
  for (std::size_t i = 0; i < element.size(); ++i) {
    const int m = spec.factors[i];
    out[i] = ((element[i] % m) + m) % m;
  }
  return out;
}

}  // namespace

int AbelianGroupSpec::order() const {
  int n = 1;
  for (int m : factors) n *= m;
  return n;
}

int AbelianGroupSpec::index_of(const std::vector<int>& element) const {
  int index = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) index = index * factors[i] + element[i];
  return index;
}

std::vector<int> AbelianGroupSpec::element_at(int index) const {
  std::vector<int> element(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    element[i] = index % factors[i];
    index /= factors[i];
  }
  return element;
}

Graph cycle(int n) {
  require_at_least("cycle order", n, 3);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges)).tagged({Family::Cycle, {n}});
}

Graph prism(int m) {
  require_at_least("prism size", m, 3);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    const int j = (i + 1) % m;
    edges.emplace_back(i, m + i);
    edges.emplace_back(i, j);
    edges.emplace_back(m + i, m + j);
  }
  return Graph(2 * m, std::move(edges)).tagged({Family::Prism, {m}});
}

Graph mobius_ladder(int m) {
  require_at_least("Mobius ladder size", m, 2);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(i, m + i);
    if (i != m - 1) {
      edges.emplace_back(i, i + 1);
      edges.emplace_back(m + i, m + i + 1);
    }
  }
  edges.emplace_back(m - 1, m);
  edges.emplace_back(2 * m - 1, 0);
  return Graph(2 * m, std::move(edges)).tagged({Family::Mobius, {m}});
}

Graph complete_bipartite(int a, int b) {
  require_at_least("part size", std::min(a, b), 1);
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Graph(a + b, std::move(edges)).tagged({Family::CompleteBipartite, {a, b}});
}

Graph franklin() {
  constexpr int n = 12;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < n; i += 2) edges.emplace_back(i, (i + 5) % n);
  return Graph(n, std::move(edges)).tagged({Family::Franklin, {}});
}

Graph hypercube(int dim) {
  require_at_least("hypercube dimension", dim, 1);
  if (dim > 20) throw Error(ErrorCode::InvalidInput, "hypercube dimension too large");
  const int n = 1 << dim;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int bit = 0; bit < dim; ++bit) {
      const int w = v ^ (1 << bit);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph(n, std::move(edges)).tagged({Family::Hypercube, {dim}});
}

Graph wreath(int m) {
  require_at_least("wreath size", m, 3);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    const int j = (i + 1) % m;
    for (int s = 0; s < 2; ++s) {
      for (int t = 0; t < 2; ++t) edges.emplace_back(2 * i + s, 2 * j + t);
    }
  }
  return Graph(2 * m, std::move(edges)).tagged({Family::Wreath, {m}});
}

Graph cayley_abelian(const AbelianGroupSpec& spec) {
  if (spec.factors.empty()) throw Error(ErrorCode::InvalidInput, "group needs at least one factor");
  for (int m : spec.factors) require_at_least("group factor", m, 2);

  std::set<std::vector<int>> conn;
  for (const auto& raw : spec.connection) {
    auto s = normalized(spec, raw);
    if (std::all_of(s.begin(), s.end(), [](int x) { return x == 0; })) {
      throw Error(ErrorCode::IdentityInConnectionSet, "connection set contains the identity");
    }
    if (!conn.insert(s).second) throw Error(ErrorCode::InvalidInput, "connection set lists an element twice");
  }
  for (const auto& s : conn) {
    std::vector<int> inverse(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) inverse[i] = (spec.factors[i] - s[i]) % spec.factors[i];
    if (!conn.count(inverse)) throw Error(ErrorCode::NotInverseClosed, "connection set is not closed under inverses");
  }

  const int n = spec.order();
  std::vector<Edge> edges;
  for (int g = 0; g < n; ++g) {
    const auto x = spec.element_at(g);
    for (const auto& s : conn) {
      std::vector<int> y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = (x[i] + s[i]) % spec.factors[i];
      const int h = spec.index_of(y);
      if (g < h) edges.emplace_back(g, h);
    }
  }
  return Graph(n, std::move(edges)).tagged({Family::CayleyAbelian, spec.factors});
}

Graph cartesian_product_complete(const Graph& g, int k) {
  require_at_least("clique order", k, 1);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) edges.emplace_back(v * k + i, v * k + j);
    }
  }
  for (const auto& [a, b] : g.edges()) {
    for (int i = 0; i < k; ++i) edges.emplace_back(a * k + i, b * k + i);
  }
  std::string name = (g.name() ? *g.name() : std::string("G")) + "_box_K" + std::to_string(k);
  return Graph(g.order() * k, std::move(edges), std::move(name));
}

}  // namespace rainbow
