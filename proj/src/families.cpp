#include "rainbow/families.hpp"

#include <array>
#include <optional>
#include <sstream>

#include "rainbow/bounds.hpp"
#include "rainbow/error.hpp"

namespace rainbow {

namespace {

int ceil_frac(int num, int den) { return static_cast<int>(ceil_div(num, den)); }

std::string residue_tag(const char* var, int value, int modulus) {
  return std::string(var) + " ≡ " + std::to_string(value % modulus) + " (mod " + std::to_string(modulus) + ")";
}

void require_at_least(const char* what, int value, int minimum) {
  if (value < minimum) {
    throw Error(ErrorCode::ParameterTooSmall,
                std::string(what) + " must be >= " + std::to_string(minimum) + ", got " + std::to_string(value));
  }
}

}  // namespace

FormulaResult formula_prism(int m, int k) {
  require_at_least("prism size m", m, 3);
  require_at_least("k", k, 1);
  const int r6 = m % 6;
  const std::string source = "prism closed form, k=" + std::to_string(k);
  switch (k) {
    case 1: return {ceil_frac(m, 2) + (m % 4 == 2 ? 1 : 0), residue_tag("m", m, 4), source};
    case 2: return {m, "all m", source};
    case 3: {
      constexpr std::array<int, 6> extra{0, 1, 1, 1, 2, 1};
      return {m + extra[r6], residue_tag("m", m, 6), source};
    }
    case 4: return {ceil_frac(4 * m, 3) + (r6 == 0 || r6 == 1 ? 0 : 1), residue_tag("m", m, 6), source};
    case 5: return {ceil_frac(5 * m, 3) + (r6 == 3 || r6 == 4 ? 1 : 0), residue_tag("m", m, 6), source};
    default: return {2 * m, "k ≥ 6", "prism closed form, k>=6"};
  }
}

FormulaResult formula_mobius(int m, int k) {
  require_at_least("Mobius ladder size m", m, 2);
  require_at_least("k", k, 1);
  const int r6 = m % 6;
  const std::string source = "mobius closed form, k=" + std::to_string(k);
  switch (k) {
    case 1: return {ceil_frac(m, 2) + (m % 4 == 0 ? 1 : 0), residue_tag("m", m, 4), source};
    case 2: return {m, "all m", source};
    case 3: {
      constexpr std::array<int, 6> extra{1, 2, 1, 0, 1, 1};
      return {m + extra[r6], residue_tag("m", m, 6), source};
    }
    case 4: return {ceil_frac(4 * m, 3) + (r6 == 3 || r6 == 4 ? 0 : 1), residue_tag("m", m, 6), source};
    case 5: return {ceil_frac(5 * m, 3) + (r6 == 0 || r6 == 1 ? 1 : 0), residue_tag("m", m, 6), source};
    default: return {2 * m, "k ≥ 6", "mobius closed form, k>=6"};
  }
}

FormulaResult formula_cycle(int n, int k) {
  require_at_least("cycle order n", n, 3);
  if (k == 1) throw Error(ErrorCode::UnsupportedK, "no closed form for k=1 on cycles; use the exact solver");
  require_at_least("k", k, 2);
  switch (k) {
    case 2: return {ceil_frac(n, 2) + (n % 4 == 2 ? 1 : 0), residue_tag("n", n, 4), "cycle closed form, k=2"};
    case 3: return {ceil_frac(3 * n, 4), "all n", "cycle closed form, k=3"};
    default: return {n, "k ≥ 4", "cycle closed form, k>=4"};
  }
}

FormulaResult formula_for(LadderFamily family, int m, int k) {
  switch (family) {
    case LadderFamily::Cycle: return formula_cycle(m, k);
    case LadderFamily::Prism: return formula_prism(m, k);
    case LadderFamily::Mobius: return formula_mobius(m, k);
  }
  throw Error(ErrorCode::InvalidInput, "unknown ladder family");
}

// ---------------------------------------------------------------------------
// Periodic constructions.
//
// Rows are written the way the tables read: one token per column, "-" for
// an uncoloured vertex, digits for the colours. The leading columns repeat
// the 6-column pattern; the tail fills the last columns exactly.

namespace {

struct ColumnRow {
  int residue;
  const char* pattern_u;
  const char* pattern_v;
  const char* tail_u;
  const char* tail_v;
  // Set when the row as printed fails verification; tail_* then hold the
  // minimal correction found by local search around the printed tail.
  const char* printed_tail_u = nullptr;
  const char* printed_tail_v = nullptr;
};

// clang-format off
constexpr ColumnRow kPrismK4[] = {
  {0, "- 34 - 1 - 2",  "1 - 2 - 34 -",  "",           ""},
  {1, "- 34 - 1 - 2",  "1 - 2 - 34 -",  "2",          "1"},
  {2, "- 1 - 34 - 2",  "34 - 2 - 1 -",  "- 2",        "134 -"},
  {3, "- 34 - 2 - 1",  "2 - 1 - 34 -",  "- 34 1",     "2 - 1"},
  {4, "- 2 - 1 - 34",  "1 - 34 - 2 -",  "- 12 - 34",  "1 3 2 -"},
  {5, "- 34 - 1 - 2",  "1 - 2 - 34 -",  "- 34 - 1 2", "1 - 2 - 34"},
};

constexpr ColumnRow kPrismK5[] = {
  {0, "- 345 - 1 - 2", "1 - 2 - 345 -", "",             ""},
  {1, "- 345 - 1 - 2", "1 - 2 - 345 -", "2",            "1"},
  {2, "- 345 - 1 - 2", "1 - 2 - 345 -", "3 2",          "1 4"},
  {3, "- 345 - 1 - 2", "1 - 2 - 345 -", "- 345 2",      "1 - 2",      "- 345 2", "2 - 2"},
  {4, "- 2 - 1 - 345", "1 - 345 - 2 -", "- 12 - 345",   "1 3 2 -"},
  {5, "- 2 - 1 - 345", "1 - 345 - 2 -", "- 2 1 - 345",  "1 3 4 2 -"},
};

constexpr ColumnRow kMobiusK3[] = {
  {0, "- 2 - 1 - 3", "1 - 3 - 2 -", "- 2 - 1 - 3", "1 - 3 - 2 3"},
  {1, "- 2 - 1 - 3", "1 - 3 - 2 -", "1",           "13",          "1", "1"},
  {2, "- 2 - 1 - 3", "1 - 3 - 2 -", "- 2",         "1 3"},
  {3, "- 2 - 1 - 3", "1 - 3 - 2 -", "- 2 -",       "1 - 3"},
  {4, "- 2 - 1 - 3", "1 - 3 - 2 -", "- 2 - 1",     "1 - 3 3",     "- 2 - 1", "1 3 3 3"},
  {5, "- 2 - 1 - 3", "1 - 3 - 2 -", "- 2 - 1 -",   "1 - 3 - 23",  "- 2 - 1 3", "1 - 3 - 2"},
};

constexpr ColumnRow kMobiusK4[] = {
  {0, "- 34 - 1 - 2", "1 - 2 - 34 -", "- 34 - 1 - 2", "1 - 2 - 34 2"},
  {1, "- 34 - 1 - 2", "1 - 2 - 34 -", "3",            "12"},
  {2, "- 34 - 1 - 2", "1 - 2 - 34 -", "- 34",         "1 2"},
  {3, "- 34 - 1 - 2", "1 - 2 - 34 -", "- 34 -",       "1 - 2"},
  {4, "- 34 - 1 - 2", "1 - 2 - 34 -", "- 34 - 1",     "1 - 2 2"},
  {5, "- 34 - 1 - 2", "1 - 2 - 34 -", "- 34 - 1 4",   "1 - 2 3 2"},
};

constexpr ColumnRow kMobiusK5[] = {
  {0, "- 345 - 1 - 2", "1 - 2 - 345 -", "- 345 - 1 - 2", "1 - 2 - 345 2"},
  {1, "- 345 - 1 - 2", "1 - 2 - 345 -", "3",             "12"},
  {2, "- 345 - 1 - 2", "1 - 2 - 345 -", "3 4",           "1 2"},
  {3, "- 345 - 1 - 2", "1 - 2 - 345 -", "- 345 -",       "1 - 2"},
  {4, "- 345 - 1 - 2", "1 - 2 - 345 -", "- 345 - 1",     "1 - 2 2"},
  {5, "- 345 - 1 - 2", "1 - 2 - 345 -", "- 345 - 1 4",   "1 - 2 3 2"},
};
// clang-format on

std::vector<ColorSet> parse_columns(const char* text) {
  std::vector<ColorSet> out;
  std::istringstream is(text);
  std::string token;
  while (is >> token) {
    ColorSet s;
    if (token != "-") {
      for (char ch : token) s.insert(ch - '0');
    }
    out.push_back(s);
  }
  return out;
}

ColorAssignment build_from_row(const ColumnRow& row, int m, int k) {
  const auto pu = parse_columns(row.pattern_u);
  const auto pv = parse_columns(row.pattern_v);
  const auto tu = parse_columns(row.tail_u);
  const auto tv = parse_columns(row.tail_v);
  const int tail = static_cast<int>(tu.size());
  if (m < tail || (m - tail) % static_cast<int>(pu.size()) != 0) {
    throw Error(ErrorCode::ParameterTooSmall,
                "m=" + std::to_string(m) + " too small for the " + std::to_string(tail) + "-column tail");
  }
  ColorAssignment f(k, static_cast<std::size_t>(2 * m));
  const int lead = m - tail;
  for (int i = 0; i < m; ++i) {
    const bool in_tail = i >= lead;
    const std::size_t idx = static_cast<std::size_t>(in_tail ? i - lead : i % static_cast<int>(pu.size()));
    f[i] = in_tail ? tu[idx] : pu[idx];
    f[m + i] = in_tail ? tv[idx] : pv[idx];
  }
  return f;
}

ColorAssignment checked_construction(LadderFamily family, const ColumnRow& row, int m, int k) {
  ColorAssignment f = build_from_row(row, m, k);
  const Graph g = ladder_graph(family, m);
  const int expected = formula_for(family, m, k).value;
  const auto report = verify_krdf(g, f);
  if (!report.valid || weight(f) != expected) {
    std::ostringstream os;
    os << to_string(family) << " row s=" << row.residue << " for m=" << m << ", k=" << k << ": ";
    if (!report.valid) os << report.violations.size() << " undominated vertices";
    else os << "weight " << weight(f) << " but closed form gives " << expected;
    throw Error(ErrorCode::TranscriptionMismatch, os.str());
  }
  return f;
}

}  // namespace

std::vector<TableCorrection> table_corrections() {
  std::vector<TableCorrection> out;
  auto scan = [&](LadderFamily family, int k, const ColumnRow(&table)[6]) {
    for (const ColumnRow& row : table) {
      if (!row.printed_tail_u) continue;
      out.push_back({family, k, row.residue, row.pattern_u, row.pattern_v, row.printed_tail_u, row.printed_tail_v,
                     row.tail_u, row.tail_v});
    }
  };
  scan(LadderFamily::Prism, 4, kPrismK4);
  scan(LadderFamily::Prism, 5, kPrismK5);
  scan(LadderFamily::Mobius, 3, kMobiusK3);
  scan(LadderFamily::Mobius, 4, kMobiusK4);
  scan(LadderFamily::Mobius, 5, kMobiusK5);
  return out;
}

ColorAssignment construct_prism_function(int m, int k) {
  require_at_least("prism size m", m, 3);
  if (k != 4 && k != 5) throw Error(ErrorCode::KOutOfRange, "prism constructions exist for k=4,5 only");
  const auto& table = k == 4 ? kPrismK4 : kPrismK5;
  return checked_construction(LadderFamily::Prism, table[m % 6], m, k);
}

ColorAssignment construct_mobius_function(int m, int k) {
  require_at_least("Mobius ladder size m", m, 2);
  if (k < 3 || k > 5) throw Error(ErrorCode::KOutOfRange, "Mobius constructions exist for k=3,4,5 only");
  const auto& table = k == 3 ? kMobiusK3 : k == 4 ? kMobiusK4 : kMobiusK5;
  return checked_construction(LadderFamily::Mobius, table[m % 6], m, k);
}

ColorAssignment construct_kdd_function(int d, int k) {
  require_at_least("d", d, 1);
  if (k < d || k > 2 * d || k > kMaxColors) {
    throw Error(ErrorCode::KOutOfRange, "need d <= k <= 2d, got d=" + std::to_string(d) + " k=" + std::to_string(k));
  }
  ColorAssignment f(k, static_cast<std::size_t>(2 * d));
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (j % d == i % d) f[i - 1].insert(j);
    }
  }
  return f;
}

Classification classify_cubic_abelian_cayley(const AbelianGroupSpec& spec) {
  const Graph g = cayley_abelian(spec);
  if (regular_degree(g) != 3) throw Error(ErrorCode::NotCubic, "connection set must have exactly 3 elements");
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "connection set does not generate the group");
  const int m = g.order() / 2;
  // Pr(m) is bipartite iff m is even, Ml(m) iff m is odd.
  const bool bipartite = bipartition(g).has_value();
  const LadderFamily guess = (bipartite == (m % 2 == 0)) && m >= 3 ? LadderFamily::Prism : LadderFamily::Mobius;
  for (LadderFamily kind : {guess, guess == LadderFamily::Prism ? LadderFamily::Mobius : LadderFamily::Prism}) {
    if (kind == LadderFamily::Prism && m < 3) continue;
    if (auto mapping = graphs_isomorphic(g, ladder_graph(kind, m))) return {kind, m, std::move(*mapping)};
  }
  throw Error(ErrorCode::InvalidInput, "graph is neither a prism nor a Mobius ladder");
}

std::pair<bool, bool> rdr_cayley_catalog(int m) {
  require_at_least("m", m, 3);
  return {m % 6 == 0, m % 6 == 3};
}

}  // namespace rainbow
