#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rainbow/bounds.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

/// Limits for the exact searches. Exceeding either yields a Timeout result,
/// never a wrong value.
struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::chrono::milliseconds> max_time;
};

enum class Method { BranchBound, LadderDP, ProductOracle };
std::string_view to_string(Method m);

enum class SolveStatus {
  Optimal,  ///< value is gamma_rk
  Timeout,  ///< budget exhausted; value is only the best incumbent found
};

struct SolveResult {
  int value = 0;
  ColorAssignment witness;
  Method method = Method::BranchBound;
  SolveStatus status = SolveStatus::Optimal;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};

  [[nodiscard]] bool optimal() const { return status == SolveStatus::Optimal; }
};

struct SolverOptions {
  /// Worker threads for the branch-and-bound. Values are identical for any
  /// thread count; with canonical set the witness is as well.
  int threads = 1;
  bool canonical = true;
};

/// Exact gamma_rk by depth-first branch and bound over per-vertex colour
/// subsets. Throws Error{KOutOfRange} unless 1 <= k <= 15.
SolveResult exact_gamma_rk(const Graph& g, int k, const SearchBudget& budget = {}, const SolverOptions& options = {});

/// Outcome of the bounded decision search "is there a k-RDF of weight <= target?".
struct DecisionResult {
  enum class Answer { Yes, No, Unknown } answer = Answer::Unknown;
  std::optional<ColorAssignment> witness;  ///< present iff Yes
  std::uint64_t nodes_explored = 0;
};

DecisionResult find_krdf_within(const Graph& g, int k, int target, const SearchBudget& budget = {});

struct DominatingSetResult {
  int value = 0;
  std::vector<Vertex> witness;  ///< ascending
  SolveStatus status = SolveStatus::Optimal;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Exact domination number by branching on the dominator of a most
/// constrained undominated vertex.
DominatingSetResult min_dominating_set(const Graph& g, const SearchBudget& budget = {});

/// gamma_rk(g) computed as the domination number of g box K_k.
SolveResult gamma_rk_via_product(const Graph& g, int k, const SearchBudget& budget = {});

enum class RdrVerdict { Yes, No, Unknown };
std::string_view to_string(RdrVerdict v);

struct RdrReport {
  RdrVerdict verdict = RdrVerdict::Unknown;
  RdrConditions conditions;
  std::optional<ColorAssignment> witness;  ///< a d-RDF of weight n/2 when Yes
  std::uint64_t nodes_explored = 0;
};

/// Certifies whether g is d-regular with gamma_rd(g) = n/2.
RdrReport is_rdr(const Graph& g, const SearchBudget& budget = {});

}  // namespace rainbow
