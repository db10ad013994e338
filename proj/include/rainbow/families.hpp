#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/isomorphism.hpp"
#include "rainbow/ladder_dp.hpp"

namespace rainbow {

struct FormulaResult {
  int value = 0;
  std::string case_tag;  ///< residue class used, e.g. "m ≡ 4 (mod 6)"
  std::string source;    ///< which closed form produced the value
};

/// gamma_rk of the m-sided prism. Throws Error{ParameterTooSmall} for m < 3 or k < 1.
FormulaResult formula_prism(int m, int k);
/// gamma_rk of the Mobius ladder on 2m vertices. Throws Error{ParameterTooSmall} for m < 2 or k < 1.
FormulaResult formula_mobius(int m, int k);
/// gamma_rk of C_n for k >= 2. Throws Error{UnsupportedK} for k = 1, Error{ParameterTooSmall} for n < 3.
FormulaResult formula_cycle(int n, int k);

/// Closed form for the family, dispatching on LadderFamily.
FormulaResult formula_for(LadderFamily family, int m, int k);

// Explicit optimal colourings, built by repeating a period-6 column pattern
// and finishing with a fixed block of trailing columns. Every output is
// verified against the matching formula before it is returned; a failing
// row raises Error{TranscriptionMismatch}.

/// k in {4, 5}; m >= 3.
ColorAssignment construct_prism_function(int m, int k);
/// k in {3, 4, 5}; m >= 2.
ColorAssignment construct_mobius_function(int m, int k);
/// On complete_bipartite(d, d): vertex i-1 gets {j in 1..k : j = i mod d}, the
/// other side stays empty. Throws Error{KOutOfRange} unless d <= k <= 2d.
ColorAssignment construct_kdd_function(int d, int k);

/// A table row whose printed tail fails verification, with the replacement
/// tail used by the constructors. Tokens as in the tables: "-" is empty,
/// "34" is {3,4}.
struct TableCorrection {
  LadderFamily family;
  int k;
  int residue;  ///< m mod 6
  std::string pattern_u, pattern_v;
  std::string printed_tail_u, printed_tail_v;
  std::string corrected_tail_u, corrected_tail_v;
};

std::vector<TableCorrection> table_corrections();

struct Classification {
  LadderFamily kind = LadderFamily::Prism;  ///< Prism or Mobius
  int m = 0;
  VertexMapping mapping;  ///< Cayley vertex -> ladder_graph(kind, m) vertex
};

/// Identifies a connected cubic Cayley graph over an abelian group as a prism
/// or Mobius ladder on |H|/2 rungs. Throws Error{NotCubic|NotConnected} plus
/// the cayley_abelian errors.
Classification classify_cubic_abelian_cayley(const AbelianGroupSpec& spec);

/// (prism(m) is 3-RDR, mobius_ladder(m) is 3-RDR). Throws Error{ParameterTooSmall} for m < 3.
std::pair<bool, bool> rdr_cayley_catalog(int m);

}  // namespace rainbow
