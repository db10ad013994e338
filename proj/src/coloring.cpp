#include "rainbow/coloring.hpp"

#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

std::vector<int> ColorSet::colors() const {
  std::vector<int> out;
  for (int c = 1; c <= kMaxColors; ++c) {
    if (contains(c)) out.push_back(c);
  }
  return out;
}

void ColorAssignment::validate() const {
  if (k < 1 || k > kMaxColors) {
    throw Error(ErrorCode::ColorOutOfRange, "k must lie in 1.." + std::to_string(kMaxColors) + ", got " + std::to_string(k));
  }
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v].max_color() > k) {
      throw Error(ErrorCode::ColorOutOfRange, "vertex " + std::to_string(v) + " uses colour " +
                                                  std::to_string(colors[v].max_color()) + " > k=" + std::to_string(k));
    }
  }
}

int weight(const ColorAssignment& f) {
  int w = 0;
  for (ColorSet s : f.colors) w += s.size();
  return w;
}

namespace {

void require_matching(const Graph& g, const ColorAssignment& f) {
  if (f.size() != static_cast<std::size_t>(g.order())) {
    throw Error(ErrorCode::SizeMismatch, "colouring has " + std::to_string(f.size()) + " entries, graph has " +
                                             std::to_string(g.order()) + " vertices");
  }
}

}  // namespace

VerificationReport verify_krdf(const Graph& g, const ColorAssignment& f) {
  require_matching(g, f);
  f.validate();
  const ColorSet all = ColorSet::full(f.k);
  VerificationReport report;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!f[v].empty()) continue;
    ColorSet seen;
    for (Vertex w : g.neighbors(v)) seen |= f[w];
    if (ColorSet missing = all - seen; !missing.empty()) report.violations.push_back({v, missing});
  }
  report.valid = report.violations.empty();
  return report;
}

bool is_krdf(const Graph& g, const ColorAssignment& f) { return verify_krdf(g, f).valid; }

ColoringStats coloring_stats(const Graph& g, const ColorAssignment& f) {
  require_matching(g, f);
  ColoringStats s;
  s.n = g.order();
  s.per_color.assign(static_cast<std::size_t>(f.k), 0);
  s.by_cardinality.assign(static_cast<std::size_t>(f.k) + 1, 0);
  for (ColorSet set : f.colors) {
    for (int c : set.colors()) {
      if (c <= f.k) ++s.per_color[c - 1];
    }
    if (set.size() <= f.k) ++s.by_cardinality[set.size()];
    s.weight += set.size();
  }
  s.uncolored = s.by_cardinality[0];
  s.colored = s.n - s.uncolored;
  for (const auto& [a, b] : g.edges()) {
    const int ends = (f[a].empty() ? 0 : 1) + (f[b].empty() ? 0 : 1);
    (ends == 0 ? s.e0 : ends == 1 ? s.e1 : s.e2) += 1;
  }
  return s;
}

bool check_counting_identities(const ColoringStats& s, int d) {
  const int c = s.colored;
  const int c0 = s.uncolored;
  const bool identity = s.e1 == c * d - 2 * s.e2 && s.e1 == c0 * d - 2 * s.e0;
  // c0 - 2e0/d <= c <= c0 + 2e2/d
  const bool against_c0 = d * c0 - 2 * s.e0 <= d * c && d * c <= d * c0 + 2 * s.e2;
  // n/2 - e0/d <= c <= n/2 + e2/d
  const bool against_half = d * s.n - 2 * s.e0 <= 2 * d * c && 2 * d * c <= d * s.n + 2 * s.e2;
  return identity && against_c0 && against_half;
}

WeightInequalities check_weight_inequalities(const ColoringStats& s, int d, int k) {
  const long long w = s.weight, n = s.n, c = s.colored, c0 = s.uncolored, e2 = s.e2;
  WeightInequalities out;
  out.uncolored_demand = d * w >= (n - c) * k + 2 * e2;
  out.total_demand = (k + d) * w >= k * n + 2 * e2;
  out.colored_count = d * w >= (k - d) * n + (2LL * d - k) * c;
  out.uncolored_count = d * w >= d * n - (2LL * d - k) * c0;
  return out;
}

}  // namespace rainbow
