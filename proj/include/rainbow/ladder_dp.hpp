#pragma once

#include <optional>
#include <string_view>

#include "rainbow/graph.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {

enum class LadderFamily { Cycle, Prism, Mobius };

std::string_view to_string(LadderFamily f);
std::optional<LadderFamily> parse_ladder_family(std::string_view name);

/// cycle(m), prism(m) or mobius_ladder(m).
Graph ladder_graph(LadderFamily family, int m);

/// Exact gamma_rk of a cycle, prism or Mobius ladder by a column sweep.
///
/// The sweep state after column i holds, for column 0 and column i, each
/// vertex's colour set (if coloured) or the colours it still needs from its
/// unseen neighbours (if not). States are reduced modulo permutations of
/// the colours. The witness uses the numbering of ladder_graph.
///
/// Throws Error{ParameterTooSmall|KOutOfRange}.
SolveResult exact_gamma_rk_ladder(LadderFamily family, int m, int k);

}  // namespace rainbow
