#include "rainbow/ladder_dp.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <string>
#include <unordered_map>

#include "rainbow/bounds.hpp"
#include "rainbow/error.hpp"
#include "rainbow/generators.hpp"

namespace rainbow {

std::string_view to_string(LadderFamily f) {
  switch (f) {
    case LadderFamily::Cycle: return "cycle";
    case LadderFamily::Prism: return "prism";
    case LadderFamily::Mobius: return "mobius";
  }
  return "unknown";
}

std::optional<LadderFamily> parse_ladder_family(std::string_view name) {
  if (name == "cycle") return LadderFamily::Cycle;
  if (name == "prism") return LadderFamily::Prism;
  if (name == "mobius" || name == "mobius_ladder") return LadderFamily::Mobius;
  return std::nullopt;
}

Graph ladder_graph(LadderFamily family, int m) {
  switch (family) {
    case LadderFamily::Cycle: return cycle(m);
    case LadderFamily::Prism: return prism(m);
    case LadderFamily::Mobius: return mobius_ladder(m);
  }
  throw Error(ErrorCode::InvalidInput, "unknown ladder family");
}

namespace {

using Mask = std::uint16_t;
using Perm = std::array<std::uint8_t, kMaxColors>;

// Tokens 0..w-1 describe column 0, tokens w..2w-1 the current column. A
// coloured token carries its colour set; an uncoloured one the colours it
// still misses (for column 0: misses after columns 1 and 0, to be supplied
// across the seam).
struct Tokens {
  std::uint8_t colored = 0;  // bit t set iff token t is coloured
  std::array<Mask, 4> sets{};

  [[nodiscard]] bool is_colored(int t) const { return (colored >> t) & 1; }
  [[nodiscard]] Mask supply(int t) const { return is_colored(t) ? sets[t] : Mask{0}; }
};

struct Entry {
  std::uint64_t key = 0;
  Tokens tokens;
  int cost = 0;
  int parent = -1;
  std::array<Mask, 2> choice{};  // column assignment, in the parent's colour frame
  Perm perm{};                   // canonical colour j = parent-frame colour perm[j]
};

class LadderSweep {
 public:
  LadderSweep(LadderFamily family, int m, int k)
      : family_(family), m_(m), k_(k), width_(family == LadderFamily::Cycle ? 1 : 2),
        full_(static_cast<Mask>((1u << k) - 1)) {}

  SolveResult solve() {
    const auto start = std::chrono::steady_clock::now();
    // Iterative deepening on the weight ceiling, starting at the charging
    // lower bound; colouring every vertex {1} caps it at width * m.
    int best = -1;
    for (bound_ = ceil_div(static_cast<long long>(charge_per_vertex()) * width_ * m_, scale());; ++bound_) {
      layers_.clear();
      layers_.emplace_back();
      seed();
      for (int col = 1; col < m_; ++col) advance(col);
      best = -1;
      for (std::size_t i = 0; i < layers_.back().size(); ++i) {
        const Entry& e = layers_.back()[i];
        if (!closes(e.tokens)) continue;
        if (best < 0 || e.cost < layers_.back()[static_cast<std::size_t>(best)].cost) best = static_cast<int>(i);
      }
      if (best >= 0 || bound_ >= width_ * m_) break;
    }
    if (best < 0) throw Error(ErrorCode::InvalidInput, "column sweep found no closing state");

    SolveResult result;
    result.method = Method::LadderDP;
    result.value = layers_.back()[static_cast<std::size_t>(best)].cost;
    result.witness = reconstruct(best);
    result.nodes_explored = states_seen_;
    result.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return result;
  }

 private:
  [[nodiscard]] int tokens() const { return 2 * width_; }
  [[nodiscard]] int degree() const { return width_ + 1; }

  // Charging argument, scaled by 2d^2 to stay integral. A coloured vertex
  // with s colours keeps a = A/2d and sends (s - a)/d to each uncoloured
  // neighbour, so every vertex ends with at least A/2d, A = min(k, 2d).
  [[nodiscard]] int scale() const { return 2 * degree() * degree(); }
  [[nodiscard]] int charge_a() const { return std::min(k_, 2 * degree()); }
  [[nodiscard]] int charge_per_vertex() const { return degree() * charge_a(); }

  // Lower bound on the weight still to be placed in columns col+1..m-1.
  // Boundary tokens each have exactly one neighbour there: the next column
  // for the current tokens, the last column (across the seam) for column 0.
  [[nodiscard]] int remaining_lower_bound(const Tokens& t, int col) const {
    const int rest = width_ * (m_ - 1 - col);
    if (rest <= 0) return 0;
    long long charge = static_cast<long long>(charge_per_vertex()) * rest;
    for (int tok = 0; tok < tokens(); ++tok) {
      const int size = std::popcount(t.sets[tok]);
      if (t.is_colored(tok)) charge -= 2 * degree() * size - charge_a();
      else charge += std::max(0, 2 * degree() * size - charge_a());
    }
    return charge <= 0 ? 0 : static_cast<int>(ceil_div(charge, scale()));
  }

  // Sorts colours by their membership pattern across the tokens; colours
  // with equal patterns are interchangeable, so the sorted pattern list is
  // a complete invariant of the state's orbit.
  std::pair<std::uint64_t, Perm> canonicalize(Tokens& t) const {
    std::array<int, kMaxColors> sig{};
    for (int c = 0; c < k_; ++c) {
      for (int tok = 0; tok < tokens(); ++tok) sig[c] |= ((t.sets[tok] >> c) & 1) << tok;
    }
    Perm perm{};
    for (int c = 0; c < k_; ++c) perm[c] = static_cast<std::uint8_t>(c);
    std::stable_sort(perm.begin(), perm.begin() + k_, [&](std::uint8_t a, std::uint8_t b) { return sig[a] < sig[b]; });
    Tokens canon;
    canon.colored = t.colored;
    std::uint64_t key = t.colored;
    for (int j = 0; j < k_; ++j) {
      const int s = sig[perm[j]];
      key |= static_cast<std::uint64_t>(s) << (tokens() * (j + 1));
      for (int tok = 0; tok < tokens(); ++tok) {
        if ((s >> tok) & 1) canon.sets[tok] |= static_cast<Mask>(1u << j);
      }
    }
    t = canon;
    return {key, perm};
  }

  void store(std::vector<Entry>& layer, std::unordered_map<std::uint64_t, int>& index, Tokens raw, int cost,
             int parent, std::array<Mask, 2> choice, int col) {
    ++states_seen_;
    if (cost > bound_) return;
    // Column 0's tokens double as the current ones there, so the one-neighbour
    // accounting only holds from column 1 on.
    if (col >= 1 && cost + remaining_lower_bound(raw, col) > bound_) return;
    auto [key, perm] = canonicalize(raw);
    auto [it, inserted] = index.try_emplace(key, static_cast<int>(layer.size()));
    if (inserted) {
      layer.push_back({key, raw, cost, parent, choice, perm});
    } else if (cost < layer[static_cast<std::size_t>(it->second)].cost) {
      layer[static_cast<std::size_t>(it->second)] = {key, raw, cost, parent, choice, perm};
    }
  }

  // Column 0: all colours are equivalent, so choose how many of them go on
  // each vertex and how the two sets overlap.
  void seed() {
    std::unordered_map<std::uint64_t, int> index;
    auto emit = [&](std::array<Mask, 2> x) {
      Tokens t;
      for (int j = 0; j < width_; ++j) {
        if (x[j]) {
          t.colored |= static_cast<std::uint8_t>(1u << j);
          t.sets[j] = x[j];
        } else {
          t.sets[j] = static_cast<Mask>(full_ & ~(width_ == 2 ? x[1 - j] : Mask{0}));
        }
        t.colored |= static_cast<std::uint8_t>(((t.colored >> j) & 1) << (j + width_));
        t.sets[j + width_] = t.sets[j];
      }
      store(layers_[0], index, t, std::popcount(x[0]) + std::popcount(x[1]), -1, x, 0);
    };
    for (int a = 0; a <= k_; ++a) {
      const Mask xu = static_cast<Mask>((1u << a) - 1);
      if (width_ == 1) {
        emit({xu, 0});
        continue;
      }
      for (int b1 = 0; b1 <= a; ++b1) {
        for (int b2 = 0; b2 <= k_ - a; ++b2) {
          const Mask xv = static_cast<Mask>(((1u << b1) - 1) | (((1u << b2) - 1) << a));
          emit({xu, xv});
        }
      }
    }
  }

  // Enumerates one subset per orbit of the stabiliser: colours within a
  // class are interchangeable, so only the count taken from each class
  // matters. Classes contained in `required` must be taken whole.
  template <typename Fn>
  static void choose_by_class(const std::vector<std::pair<int, int>>& classes, Mask required, Fn&& fn) {
    auto rec = [&](auto&& self, std::size_t i, Mask acc) -> void {
      if (i == classes.size()) {
        fn(acc);
        return;
      }
      const auto [lo, hi] = classes[i];
      const bool forced = (required >> lo) & 1;
      for (int take = forced ? hi - lo : 0; take <= hi - lo; ++take) {
        const Mask part = static_cast<Mask>(((1u << take) - 1) << lo);
        self(self, i + 1, static_cast<Mask>(acc | part));
      }
    };
    rec(rec, 0, 0);
  }

  std::vector<std::pair<int, int>> classes_of(const Tokens& t) const {
    std::vector<std::pair<int, int>> classes;
    auto sig = [&](int c) {
      int s = 0;
      for (int tok = 0; tok < tokens(); ++tok) s |= ((t.sets[tok] >> c) & 1) << tok;
      return s;
    };
    int lo = 0;
    for (int c = 1; c <= k_; ++c) {
      if (c == k_ || sig(c) != sig(lo)) {
        classes.emplace_back(lo, c);
        lo = c;
      }
    }
    return classes;
  }

  static std::vector<std::pair<int, int>> split_classes(const std::vector<std::pair<int, int>>& classes, Mask chosen) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [lo, hi] : classes) {
      int mid = lo;
      while (mid < hi && ((chosen >> mid) & 1)) ++mid;
      if (mid > lo) out.emplace_back(lo, mid);
      if (hi > mid) out.emplace_back(mid, hi);
    }
    return out;
  }

  void advance(int col) {
    const auto& prev = layers_.back();
    std::vector<Entry> next;
    std::unordered_map<std::uint64_t, int> index;
    const bool leaving_first = col == 1;

    for (std::size_t pi = 0; pi < prev.size(); ++pi) {
      const Tokens state = prev[pi].tokens;
      const int base = prev[pi].cost;
      auto required = [&](int j) -> Mask {
        const int tok = width_ + j;
        if (leaving_first || state.is_colored(tok)) return 0;
        return state.sets[tok];
      };
      auto transition = [&](std::array<Mask, 2> x) {
        Tokens t;
        for (int j = 0; j < width_; ++j) {
          if (leaving_first && !state.is_colored(j)) {
            t.sets[j] = static_cast<Mask>(state.sets[j] & ~x[j]);
          } else {
            t.sets[j] = state.sets[j];
            t.colored |= static_cast<std::uint8_t>(state.colored & (1u << j));
          }
        }
        for (int j = 0; j < width_; ++j) {
          const int tok = width_ + j;
          if (x[j]) {
            t.colored |= static_cast<std::uint8_t>(1u << tok);
            t.sets[tok] = x[j];
          } else {
            const Mask seen = static_cast<Mask>(state.supply(tok) | (width_ == 2 ? x[1 - j] : Mask{0}));
            t.sets[tok] = static_cast<Mask>(full_ & ~seen);
          }
        }
        store(next, index, t, base + std::popcount(x[0]) + std::popcount(x[1]), static_cast<int>(pi), x, col);
      };

      const auto classes = classes_of(state);
      choose_by_class(classes, required(0), [&](Mask xu) {
        if (width_ == 1) {
          transition({xu, 0});
          return;
        }
        choose_by_class(split_classes(classes, xu), required(1), [&](Mask xv) { transition({xu, xv}); });
      });
    }
    layers_.push_back(std::move(next));
  }

  [[nodiscard]] int seam_partner(int j) const { return family_ == LadderFamily::Mobius ? 1 - j : j; }

  [[nodiscard]] bool closes(const Tokens& t) const {
    for (int j = 0; j < width_; ++j) {
      const int last = width_ + j;
      const int first = seam_partner(j);
      if (!t.is_colored(last) && (t.sets[last] & ~t.supply(first))) return false;
      if (!t.is_colored(first) && (t.sets[first] & ~t.supply(last))) return false;
    }
    return true;
  }

  ColorAssignment reconstruct(int final_index) const {
    const int n = width_ * m_;
    ColorAssignment f(k_, static_cast<std::size_t>(n));
    // to_final[x] = final colour of canonical colour x of the current layer.
    Perm to_final{};
    for (int c = 0; c < k_; ++c) to_final[c] = static_cast<std::uint8_t>(c);
    int index = final_index;
    for (int col = m_ - 1; col >= 0; --col) {
      const Entry& e = layers_[static_cast<std::size_t>(col)][static_cast<std::size_t>(index)];
      Perm parent_to_final{};
      for (int j = 0; j < k_; ++j) parent_to_final[e.perm[j]] = to_final[j];
      for (int j = 0; j < width_; ++j) {
        ColorSet s;
        for (int c = 0; c < k_; ++c) {
          if ((e.choice[j] >> c) & 1) s.insert(parent_to_final[c] + 1);
        }
        f[j == 0 ? col : m_ + col] = s;
      }
      to_final = parent_to_final;
      index = e.parent;
    }
    return f;
  }

  LadderFamily family_;
  int m_;
  int k_;
  int width_;
  Mask full_;
  std::vector<std::vector<Entry>> layers_;
  std::uint64_t states_seen_ = 0;
  int bound_ = 0;
};

}  // namespace

SolveResult exact_gamma_rk_ladder(LadderFamily family, int m, int k) {
  const int minimum = family == LadderFamily::Mobius ? 2 : 3;
  if (m < minimum) {
    throw Error(ErrorCode::ParameterTooSmall,
                std::string(to_string(family)) + " needs m >= " + std::to_string(minimum) + ", got " + std::to_string(m));
  }
  if (k < 1 || k > kMaxColors) {
    throw Error(ErrorCode::KOutOfRange, "k must lie in 1.." + std::to_string(kMaxColors) + ", got " + std::to_string(k));
  }
  return LadderSweep(family, m, k).solve();
}

}  // namespace rainbow
