#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

inline constexpr int kMaxColors = 15;

/// Subset of the colours {1..15}; colour c is bit c-1.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  ColorSet(std::initializer_list<int> colors) {
    for (int c : colors) mask_ |= bit(c);
  }

  static constexpr ColorSet from_mask(unsigned mask) {
    ColorSet s;
    s.mask_ = static_cast<std::uint16_t>(mask);
    return s;
  }
  static constexpr ColorSet full(int k) { return from_mask((1u << k) - 1); }

  [[nodiscard]] constexpr std::uint16_t mask() const noexcept { return mask_; }
  [[nodiscard]] constexpr int size() const noexcept { return std::popcount(mask_); }
  [[nodiscard]] constexpr bool empty() const noexcept { return mask_ == 0; }
  [[nodiscard]] constexpr bool contains(int c) const noexcept { return c >= 1 && c <= kMaxColors && (mask_ & bit(c)); }
  [[nodiscard]] constexpr bool subset_of(ColorSet other) const noexcept { return (mask_ & ~other.mask_) == 0; }
  /// Largest colour present, 0 if empty.
  [[nodiscard]] constexpr int max_color() const noexcept { return 16 - std::countl_zero(mask_); }
  [[nodiscard]] std::vector<int> colors() const;

  constexpr ColorSet& insert(int c) { mask_ |= bit(c); return *this; }
  constexpr ColorSet& erase(int c) { mask_ &= static_cast<std::uint16_t>(~bit(c)); return *this; }

  friend constexpr ColorSet operator|(ColorSet a, ColorSet b) { return from_mask(a.mask_ | b.mask_); }
  friend constexpr ColorSet operator&(ColorSet a, ColorSet b) { return from_mask(a.mask_ & b.mask_); }
  friend constexpr ColorSet operator-(ColorSet a, ColorSet b) { return from_mask(a.mask_ & ~b.mask_); }
  constexpr ColorSet& operator|=(ColorSet o) { mask_ |= o.mask_; return *this; }
  friend constexpr bool operator==(ColorSet, ColorSet) = default;
  friend constexpr auto operator<=>(ColorSet, ColorSet) = default;

 private:
  static constexpr std::uint16_t bit(int c) { return static_cast<std::uint16_t>(1u << (c - 1)); }
  std::uint16_t mask_ = 0;
};

/// A function f: V -> 2^{1..k}, stored per vertex.
struct ColorAssignment {
  int k = 1;
  std::vector<ColorSet> colors;

  ColorAssignment() = default;
  ColorAssignment(int k_, std::vector<ColorSet> colors_) : k(k_), colors(std::move(colors_)) {}
  ColorAssignment(int k_, std::size_t n) : k(k_), colors(n) {}

  [[nodiscard]] std::size_t size() const noexcept { return colors.size(); }
  const ColorSet& operator[](Vertex v) const { return colors[static_cast<std::size_t>(v)]; }
  ColorSet& operator[](Vertex v) { return colors[static_cast<std::size_t>(v)]; }

  /// Throws Error{ColorOutOfRange} if k is outside 1..15 or a colour exceeds k.
  void validate() const;

  friend bool operator==(const ColorAssignment&, const ColorAssignment&) = default;
};

int weight(const ColorAssignment& f);

struct Violation {
  Vertex vertex;
  ColorSet missing;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

/// Throws Error{SizeMismatch|ColorOutOfRange}.
VerificationReport verify_krdf(const Graph& g, const ColorAssignment& f);

/// Convenience wrapper: verify_krdf(g, f).valid.
bool is_krdf(const Graph& g, const ColorAssignment& f);

/// Counting vector of a colouring: colour classes, vertices by number of
/// colours, and edges by number of coloured endpoints.
struct ColoringStats {
  int n = 0;
  std::vector<int> per_color;      ///< per_color[i-1] = |V_i|
  std::vector<int> by_cardinality; ///< by_cardinality[i] = |C_i|, i = 0..k
  int colored = 0;                 ///< c
  int uncolored = 0;               ///< c0
  int e0 = 0;
  int e1 = 0;
  int e2 = 0;
  int weight = 0;
};

/// Throws Error{SizeMismatch}.
ColoringStats coloring_stats(const Graph& g, const ColorAssignment& f);

/// Edge double-counting identity e1 = c*d - 2*e2 = c0*d - 2*e0 and the
/// inequalities derived from it (all in integer form). Holds for every
/// colouring of a d-regular graph, valid or not.
bool check_counting_identities(const ColoringStats& stats, int d);

/// The four lower bounds on w(f) for a valid k-RDF on a d-regular graph,
/// checked in exact integer arithmetic. Returns one flag per inequality.
struct WeightInequalities {
  bool uncolored_demand = false;  ///< d*w >= (n-c)k + 2e2
  bool total_demand = false;      ///< (k+d)*w >= kn + 2e2
  bool colored_count = false;     ///< d*w >= (k-d)n + (2d-k)c
  bool uncolored_count = false;   ///< d*w >= dn - (2d-k)c0

  [[nodiscard]] bool all() const { return uncolored_demand && total_demand && colored_count && uncolored_count; }
};

WeightInequalities check_weight_inequalities(const ColoringStats& stats, int d, int k);

}  // namespace rainbow
