#include "rainbow/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

struct FamilyName {
  Family family;
  const char* label;
  std::size_t arity;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::Cycle, "cycle", 1},
    {Family::Prism, "prism", 1},
    {Family::Mobius, "mobius_ladder", 1},
    {Family::CompleteBipartite, "complete_bipartite", 2},
    {Family::Franklin, "franklin", 0},
    {Family::Hypercube, "hypercube", 1},
    {Family::Wreath, "wreath", 1},
    {Family::CayleyAbelian, "cayley_abelian", 0},
};

}  // namespace

std::string to_string(const FamilyId& id) {
  std::ostringstream os;
  for (const auto& f : kFamilyNames) {
    if (f.family != id.family) continue;
    os << f.label;
    if (f.family == Family::CayleyAbelian) {
      os << '[';
      for (std::size_t i = 0; i < id.params.size(); ++i) os << (i ? "," : "") << id.params[i];
      os << ']';
    } else if (!id.params.empty()) {
      os << '(';
      for (std::size_t i = 0; i < id.params.size(); ++i) os << (i ? "," : "") << id.params[i];
      os << ')';
    }
  }
  return os.str();
}

std::optional<FamilyId> parse_family_label(const std::string& label) {
  for (const auto& f : kFamilyNames) {
    if (f.family == Family::CayleyAbelian) continue;
    const std::string prefix = f.label;
    if (label.rfind(prefix, 0) != 0) continue;
    std::string rest = label.substr(prefix.size());
    FamilyId id{f.family, {}};
    if (f.arity == 0) {
      if (!rest.empty()) continue;
      return id;
    }
    if (rest.size() < 3 || rest.front() != '(' || rest.back() != ')') continue;
    std::istringstream is(rest.substr(1, rest.size() - 2));
    std::string part;
    bool ok = true;
    while (std::getline(is, part, ',')) {
      try {
        std::size_t used = 0;
        id.params.push_back(std::stoi(part, &used));
        ok = ok && used == part.size();
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (ok && id.params.size() == f.arity) return id;
  }
  return std::nullopt;
}

Graph::Graph(int n, std::vector<Edge> edges, std::optional<std::string> name)
    : n_(n), name_(std::move(name)) {
  if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "negative vertex count");
  for (auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") outside 0.." + std::to_string(n - 1));
    }
    if (a == b) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error(ErrorCode::DuplicateEdge,
                "edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ") listed twice");
  }
  edges_ = std::move(edges);

  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const auto& [a, b] : edges_) {
    ++deg[a];
    ++deg[b];
  }
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adj_.resize(edges_.size() * 2);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [a, b] : edges_) {
    adj_[fill[a]++] = b;
    adj_[fill[b]++] = a;
  }
  for (int v = 0; v < n; ++v) std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

Graph Graph::tagged(FamilyId id) const {
  Graph copy = *this;
  copy.name_ = to_string(id);
  copy.family_ = std::move(id);
  return copy;
}

Graph build_graph(int n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); }

std::optional<int> regular_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  const int d = g.degree(0);
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < g.order(); ++v) (side[v] == 0 ? parts.left : parts.right).push_back(v);
  return parts;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

std::optional<int> girth(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(g.order()));
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()));
  for (Vertex s = 0; s < g.order(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (w != parent[v]) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

}  // namespace rainbow
