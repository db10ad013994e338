#include "rainbow/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rainbow {

namespace {

// 1-dimensional Weisfeiler-Leman on the disjoint union, so class ids are
// comparable across the two graphs.
std::pair<std::vector<int>, std::vector<int>> refine_jointly(const Graph& a, const Graph& b) {
  const Graph* graphs[2] = {&a, &b};
  std::vector<int> colour[2];
  for (int s = 0; s < 2; ++s) {
    colour[s].resize(static_cast<std::size_t>(graphs[s]->order()));
    for (Vertex v = 0; v < graphs[s]->order(); ++v) colour[s][v] = graphs[s]->degree(v);
  }
  std::size_t classes = 0;
  for (int round = 0; round < a.order() + 1; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<int> next[2];
    for (int s = 0; s < 2; ++s) {
      next[s].resize(colour[s].size());
      for (Vertex v = 0; v < graphs[s]->order(); ++v) {
        std::vector<int> around;
        for (Vertex w : graphs[s]->neighbors(v)) around.push_back(colour[s][w]);
        std::sort(around.begin(), around.end());
        auto [it, inserted] = ids.try_emplace({colour[s][v], std::move(around)}, static_cast<int>(ids.size()));
        next[s][v] = it->second;
      }
    }
    colour[0] = std::move(next[0]);
    colour[1] = std::move(next[1]);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {colour[0], colour[1]};
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b, std::vector<int> ca, std::vector<int> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)) {
    const int n = a.order();
    map_.assign(static_cast<std::size_t>(n), -1);
    used_.assign(static_cast<std::size_t>(n), 0);
    build_order();
  }

  std::optional<VertexMapping> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  // BFS order so that each vertex after a component root has a mapped
  // neighbour; roots are taken from the rarest refinement class.
  void build_order() {
    const int n = a_.order();
    std::map<int, int> class_size;
    for (int c : ca_) ++class_size[c];
    std::vector<Vertex> by_rarity(static_cast<std::size_t>(n));
    std::iota(by_rarity.begin(), by_rarity.end(), 0);
    std::stable_sort(by_rarity.begin(), by_rarity.end(),
                     [&](Vertex x, Vertex y) { return class_size[ca_[x]] < class_size[ca_[y]]; });
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex root : by_rarity) {
      if (seen[root]) continue;
      seen[root] = 1;
      std::size_t head = order_.size();
      order_.push_back(root);
      anchor_.push_back(-1);
      while (head < order_.size()) {
        Vertex v = order_[head++];
        for (Vertex w : a_.neighbors(v)) {
          if (!seen[w]) {
            seen[w] = 1;
            order_.push_back(w);
            anchor_.push_back(v);
          }
        }
      }
    }
  }

  bool consistent(Vertex x, Vertex y) const {
    if (ca_[x] != cb_[y] || used_[y]) return false;
    int mapped_a = 0;
    for (Vertex w : a_.neighbors(x)) {
      if (map_[w] < 0) continue;
      if (!b_.adjacent(y, map_[w])) return false;
      ++mapped_a;
    }
    int mapped_b = 0;
    for (Vertex z : b_.neighbors(y)) mapped_b += used_[z] ? 1 : 0;
    return mapped_a == mapped_b;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex x = order_[depth];
    auto attempt = [&](Vertex y) {
      if (!consistent(x, y)) return false;
      map_[x] = y;
      used_[y] = 1;
      if (extend(depth + 1)) return true;
      map_[x] = -1;
      used_[y] = 0;
      return false;
    };
    if (anchor_[depth] >= 0) {
      for (Vertex y : b_.neighbors(map_[anchor_[depth]])) {
        if (attempt(y)) return true;
      }
    } else {
      for (Vertex y = 0; y < b_.order(); ++y) {
        if (attempt(y)) return true;
      }
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<int> ca_, cb_;
  std::vector<Vertex> order_;
  std::vector<Vertex> anchor_;
  VertexMapping map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<VertexMapping> graphs_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  auto [ca, cb] = refine_jointly(a, b);
  auto sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  auto mapping = Matcher(a, b, std::move(ca), std::move(cb)).run();
  if (mapping && !is_isomorphism(a, b, *mapping)) return std::nullopt;
  return mapping;
}

bool is_isomorphism(const Graph& a, const Graph& b, const VertexMapping& mapping) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (mapping.size() != static_cast<std::size_t>(a.order())) return false;
  std::vector<char> hit(static_cast<std::size_t>(b.order()), 0);
  for (Vertex y : mapping) {
    if (y < 0 || y >= b.order() || hit[y]) return false;
    hit[y] = 1;
  }
  return std::all_of(a.edges().begin(), a.edges().end(),
                     [&](const Edge& e) { return b.adjacent(mapping[e.first], mapping[e.second]); });
}

}  // namespace rainbow
