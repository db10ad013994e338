#include "rainbow/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rainbow/bounds.hpp"
#include "rainbow/error.hpp"
#include "rainbow/families.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/isomorphism.hpp"
#include "rainbow/json_io.hpp"
#include "rainbow/ladder_dp.hpp"
#include "rainbow/solver.hpp"

namespace rainbow::cli {

namespace {

/// File problems are reported with the offending path and map to exit code 1.
struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
};

json read_json(const std::string& path, Io& io) {
  try {
    if (path == "-") return json::parse(io.in);
    std::ifstream f(path);
    if (!f) throw FileError("cannot open " + path);
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, (path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

void write_json(const json& j, const std::string& path, Io& io) {
  if (path.empty() || path == "-") {
    io.out << j.dump() << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw FileError("cannot write " + path);
  f << j.dump() << '\n';
}

Graph load_graph(const std::string& path, Io& io) { return graph_from_json(read_json(path, io)); }

std::vector<int> split_ints(const std::string& text, char sep) {
  std::vector<int> out;
  std::istringstream is(text);
  std::string part;
  while (std::getline(is, part, sep)) {
    if (part.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || part.empty()) throw CLI::ValidationError("not an integer: '" + part + "'");
    out.push_back(v);
  }
  return out;
}

/// Elements are separated by ';' (or repeated flags); coordinates by ','.
/// For a cyclic group a bare "1,5,3" lists three elements.
AbelianGroupSpec parse_group(const std::string& group, const std::vector<std::string>& conn) {
  AbelianGroupSpec spec;
  spec.factors = split_ints(group, ',');
  if (spec.factors.empty()) throw CLI::ValidationError("--group: no factors given");
  for (const auto& arg : conn) {
    std::istringstream is(arg);
    std::string elem;
    while (std::getline(is, elem, ';')) {
      if (elem.empty()) continue;
      auto coords = split_ints(elem, ',');
      if (spec.factors.size() == 1 && coords.size() > 1) {
        for (int c : coords) spec.connection.push_back({c});
      } else {
        spec.connection.push_back(std::move(coords));
      }
    }
  }
  return spec;
}

Graph generate(const std::string& family, const std::vector<int>& p, const AbelianGroupSpec* spec) {
  auto need = [&](std::size_t count) {
    if (p.size() != count) {
      throw CLI::ValidationError("gen " + family + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  if (family == "cycle") return need(1), cycle(p[0]);
  if (family == "prism") return need(1), prism(p[0]);
  if (family == "mobius" || family == "mobius_ladder") return need(1), mobius_ladder(p[0]);
  if (family == "kdd") return need(1), complete_bipartite(p[0], p[0]);
  if (family == "complete_bipartite") return need(2), complete_bipartite(p[0], p[1]);
  if (family == "franklin") return need(0), franklin();
  if (family == "hypercube") return need(1), hypercube(p[0]);
  if (family == "wreath") return need(1), wreath(p[0]);
  if (family == "cayley") {
    need(0);
    if (!spec) throw CLI::ValidationError("gen cayley needs --group and --conn");
    return cayley_abelian(*spec);
  }
  throw CLI::ValidationError("unknown family '" + family + "'");
}

/// Finds a ladder-family shape for g and an isomorphism g -> ladder_graph.
std::optional<std::tuple<LadderFamily, int, VertexMapping>> recognise_ladder(const Graph& g) {
  std::vector<std::pair<LadderFamily, int>> candidates;
  if (g.family()) {
    const FamilyId& id = *g.family();
    if (id.family == Family::Cycle) candidates.emplace_back(LadderFamily::Cycle, id.params[0]);
    if (id.family == Family::Prism) candidates.emplace_back(LadderFamily::Prism, id.params[0]);
    if (id.family == Family::Mobius) candidates.emplace_back(LadderFamily::Mobius, id.params[0]);
  }
  const auto d = regular_degree(g);
  const int n = g.order();
  if (d == 2 && n >= 3) candidates.emplace_back(LadderFamily::Cycle, n);
  if (d == 3 && n % 2 == 0) {
    if (n >= 6) candidates.emplace_back(LadderFamily::Prism, n / 2);
    if (n >= 4) candidates.emplace_back(LadderFamily::Mobius, n / 2);
  }
  for (auto [family, m] : candidates) {
    const Graph target = ladder_graph(family, m);
    if (target.order() != n) continue;
    if (target == g) {
      VertexMapping identity(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) identity[static_cast<std::size_t>(v)] = v;
      return std::tuple{family, m, std::move(identity)};
    }
    if (auto mapping = graphs_isomorphic(g, target)) return std::tuple{family, m, std::move(*mapping)};
  }
  return std::nullopt;
}

SolveResult solve_with_ladder(const Graph& g, int k) {
  auto shape = recognise_ladder(g);
  if (!shape) throw Error(ErrorCode::InvalidInput, "--method ladder needs a cycle, prism or Mobius ladder");
  auto& [family, m, mapping] = *shape;
  SolveResult r = exact_gamma_rk_ladder(family, m, k);
  ColorAssignment back(k, static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) back[v] = r.witness[mapping[static_cast<std::size_t>(v)]];
  r.witness = std::move(back);
  return r;
}

SearchBudget budget_from_ms(long long ms) {
  SearchBudget b;
  b.max_time = std::chrono::milliseconds(ms);
  return b;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out};
  CLI::App app{"k-rainbow domination toolkit"};
  app.name("rainbow");
  app.require_subcommand(1);

  int k = 1;
  long long budget_ms = 30000;
  std::string graph_path, coloring_path, output = "-", method = "bb", family, group;
  std::vector<std::string> params, conn;
  bool canonical = false;
  int threads = 1;
  std::optional<int> value;

  auto add_k = [&](CLI::App* sub) { sub->add_option("-k", k, "number of colours")->required()->check(CLI::Range(1, kMaxColors)); };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget-ms", budget_ms, "time budget in milliseconds")->check(CLI::PositiveNumber);
  };

  auto* gen = app.add_subcommand("gen", "write a generated graph as JSON");
  gen->add_option("family", family, "cycle|prism|mobius|kdd|complete_bipartite|franklin|hypercube|wreath|cayley")->required();
  gen->add_option("params", params, "integer parameters");
  gen->add_option("-o,--output", output, "output file");
  gen->add_option("--group", group, "cyclic factors, e.g. 2,2,2");
  gen->add_option("--conn", conn, "connection set elements, e.g. '1,0,0;0,1,0;0,0,1'");

  auto* solve = app.add_subcommand("solve", "compute gamma_rk exactly");
  solve->add_option("graph", graph_path, "graph JSON or -")->required();
  add_k(solve);
  solve->add_option("--method", method, "bb|ladder|product")->check(CLI::IsMember({"bb", "ladder", "product"}));
  add_budget(solve);
  solve->add_flag("--canonical", canonical, "byte-identical output across runs");
  solve->add_option("--threads", threads, "branch-and-bound worker threads")->check(CLI::Range(1, 256));

  auto* verify = app.add_subcommand("verify", "check a colouring is a k-RDF");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("coloring", coloring_path)->required();

  auto* bounds = app.add_subcommand("bounds", "closed-form bounds for a graph");
  bounds->add_option("graph", graph_path)->required();
  add_k(bounds);
  bounds->add_option("--value", value, "known gamma_rk, enables the value-dependent bounds")->check(CLI::NonNegativeNumber);

  auto* formula = app.add_subcommand("formula", "closed-form gamma_rk");
  formula->add_option("family", family)->required()->check(CLI::IsMember({"prism", "mobius", "cycle"}));
  formula->add_option("size", params, "m for ladders, n for cycles")->required()->expected(1);
  add_k(formula);

  auto* construct = app.add_subcommand("construct", "explicit optimal colouring");
  construct->add_option("family", family)->required()->check(CLI::IsMember({"prism", "mobius", "kdd"}));
  construct->add_option("size", params, "m, or d for kdd")->required()->expected(1);
  add_k(construct);
  construct->add_option("-o,--output", output);

  auto* rdr = app.add_subcommand("rdr", "certify gamma_rd = n/2");
  rdr->add_option("graph", graph_path)->required();
  add_budget(rdr);

  auto* stats = app.add_subcommand("stats", "counting vector and identity checks");
  stats->add_option("graph", graph_path)->required();
  stats->add_option("coloring", coloring_path)->required();

  auto* product = app.add_subcommand("product", "write G box K_k");
  product->add_option("graph", graph_path)->required();
  add_k(product);
  product->add_option("-o,--output", output);

  auto* classify = app.add_subcommand("classify", "identify a cubic abelian Cayley graph");
  classify->add_option("--group", group, "cyclic factors, e.g. 2,2,2")->required();
  classify->add_option("--conn", conn, "connection set elements")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (graph_path == "-" && coloring_path == "-") throw CLI::ValidationError("only one argument may read stdin");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    auto size_param = [&]() {
      auto v = split_ints(params.at(0), ',');
      if (v.size() != 1) throw CLI::ValidationError("expected a single integer, got '" + params.at(0) + "'");
      return v[0];
    };

    if (gen->parsed()) {
      std::vector<int> p;
      for (const auto& s : params) {
        auto v = split_ints(s, ',');
        p.insert(p.end(), v.begin(), v.end());
      }
      std::optional<AbelianGroupSpec> spec;
      if (!group.empty()) spec = parse_group(group, conn);
      write_json(graph_to_json(generate(family, p, spec ? &*spec : nullptr)), output, io);
      return kOk;
    }
    if (solve->parsed()) {
      const Graph g = load_graph(graph_path, io);
      SolverOptions options;
      options.threads = threads;
      options.canonical = canonical || threads == 1;
      SolveResult r;
      if (method == "ladder") r = solve_with_ladder(g, k);
      else if (method == "product") r = gamma_rk_via_product(g, k, budget_from_ms(budget_ms));
      else r = exact_gamma_rk(g, k, budget_from_ms(budget_ms), options);
      write_json(solve_result_to_json(r, canonical), "-", io);
      return r.optimal() ? kOk : kTimeout;
    }
    if (verify->parsed()) {
      const Graph g = load_graph(graph_path, io);
      const ColorAssignment f = coloring_from_json(read_json(coloring_path, io));
      json j = verification_to_json(verify_krdf(g, f));
      j["weight"] = weight(f);
      write_json(j, "-", io);
      return kOk;
    }
    if (bounds->parsed()) {
      const Graph g = load_graph(graph_path, io);
      const int n = g.order();
      const auto d = regular_degree(g);
      json j;
      j["n"] = n;
      j["k"] = k;
      j["max_degree"] = g.max_degree();
      j["regular_degree"] = d ? json(*d) : json(nullptr);
      j["lower_bound_general"] = lower_bound_general(n, g.max_degree(), k);
      if (d && *d > 0) j["lower_bound_regular"] = lower_bound_regular(n, *d, k);
      j["upper_bound_trivial"] = n;
      if (value) {
        json monotone = json::object();
        for (int kp = k + 1; kp <= std::min(kMaxColors, k + 4); ++kp) {
          monotone[std::to_string(kp)] = upper_bound_monotone(*value, k, kp);
        }
        j["upper_bound_monotone"] = std::move(monotone);
        if (d && *d > 0 && k < 2 * *d) {
          const auto cb = c_c0_bounds(n, *d, k, *value);
          j["c_max"] = cb.c_max;
          j["c0_min"] = cb.c0_min;
        }
      }
      write_json(j, "-", io);
      return kOk;
    }
    if (formula->parsed()) {
      const int size = size_param();
      const auto lf = family == "prism" ? LadderFamily::Prism : family == "mobius" ? LadderFamily::Mobius : LadderFamily::Cycle;
      write_json(formula_to_json(formula_for(lf, size, k)), "-", io);
      return kOk;
    }
    if (construct->parsed()) {
      const int size = size_param();
      ColorAssignment f = family == "prism"    ? construct_prism_function(size, k)
                          : family == "mobius" ? construct_mobius_function(size, k)
                                               : construct_kdd_function(size, k);
      write_json(coloring_to_json(f), output, io);
      return kOk;
    }
    if (rdr->parsed()) {
      const Graph g = load_graph(graph_path, io);
      const RdrReport r = is_rdr(g, budget_from_ms(budget_ms));
      json j;
      j["rdr"] = r.verdict == RdrVerdict::Unknown ? json(nullptr) : json(r.verdict == RdrVerdict::Yes);
      j["necessary_conditions"] = r.conditions.all_pass() ? "pass" : "fail";
      j["conditions"] = {{"regular_degree", r.conditions.regular_degree ? json(*r.conditions.regular_degree) : json(nullptr)},
                         {"divisibility", r.conditions.divisibility},
                         {"bipartite", r.conditions.bipartite}};
      j["witness"] = r.witness ? coloring_to_json(*r.witness) : json(nullptr);
      j["nodes"] = r.nodes_explored;
      write_json(j, "-", io);
      return r.verdict == RdrVerdict::Unknown ? kTimeout : kOk;
    }
    if (stats->parsed()) {
      const Graph g = load_graph(graph_path, io);
      const ColorAssignment f = coloring_from_json(read_json(coloring_path, io));
      const ColoringStats s = coloring_stats(g, f);
      json j = stats_to_json(s);
      const auto d = regular_degree(g);
      j["counting_identities"] = d ? json(check_counting_identities(s, *d)) : json(nullptr);
      if (d && is_krdf(g, f)) {
        const auto w = check_weight_inequalities(s, *d, f.k);
        j["weight_inequalities"] = {{"uncolored_demand", w.uncolored_demand},
                                    {"total_demand", w.total_demand},
                                    {"colored_count", w.colored_count},
                                    {"uncolored_count", w.uncolored_count}};
      }
      write_json(j, "-", io);
      return kOk;
    }
    if (product->parsed()) {
      write_json(graph_to_json(cartesian_product_complete(load_graph(graph_path, io), k)), output, io);
      return kOk;
    }
    if (classify->parsed()) {
      const Classification c = classify_cubic_abelian_cayley(parse_group(group, conn));
      json j;
      j["kind"] = c.kind == LadderFamily::Prism ? "prism" : "mobius";
      j["m"] = c.m;
      j["label"] = to_string(FamilyId{c.kind == LadderFamily::Prism ? Family::Prism : Family::Mobius, {c.m}});
      j["mapping"] = c.mapping;
      write_json(j, "-", io);
      return kOk;
    }
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace rainbow::cli
