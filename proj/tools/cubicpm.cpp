// Command-line front end: counting, decomposition, per-graph verification,
// klee enumeration and catalog sweeps. Exit 0 when everything verified,
// 1 when a bound check failed, 2 on usage or input errors.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cubicpm/brick_brace.hpp"
#include "cubicpm/catalog.hpp"
#include "cubicpm/formats.hpp"
#include "cubicpm/klee.hpp"
#include "cubicpm/matching.hpp"
#include "cubicpm/parallel.hpp"
#include "cubicpm/report.hpp"

using namespace cubicpm;

namespace {

constexpr int kUsageError = 2;

struct InputOptions {
  std::string path;
  std::string format;  // empty: guess from the extension
};

std::vector<MultiGraph> load(const InputOptions& in) {
  const GraphFormat f = in.format.empty() ? format_for_path(in.path) : parse_format_name(in.format);
  if (in.path == "-") return read_graphs(std::cin, f);
  return read_graph_file(in.path, f);
}

GraphFormat output_format(const std::string& name) {
  return name.empty() ? GraphFormat::edge_list : parse_format_name(name);
}

std::string graph_id(const InputOptions& in, std::size_t index, std::size_t total) {
  return total == 1 ? in.path : in.path + "#" + std::to_string(index);
}

int run_count(const InputOptions& in, const EdgeConstraints& constraints, bool use_oracle) {
  const auto graphs = load(in);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const MultiGraph& g = graphs[i];
    if (graphs.size() > 1) std::cout << "graph " << i << '\n';
    if (use_oracle) {
      std::cout << "pm_count " << count_perfect_matchings_brute_force(g, constraints) << '\n';
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        EdgeConstraints with_e = constraints;
        const bool banned = std::find(with_e.forbidden.begin(), with_e.forbidden.end(), e) != with_e.forbidden.end();
        const bool forced = std::find(with_e.forced.begin(), with_e.forced.end(), e) != with_e.forced.end();
        MatchingCount c = 0;
        if (!banned) {
          if (!forced) with_e.forced.push_back(e);
          try {
            c = count_perfect_matchings_brute_force(g, with_e);
          } catch (const GraphError&) {
            c = 0;  // e shares an end with a forced edge
          }
        }
        std::cout << "edge " << e << ' ' << g.edge(e).u << ' ' << g.edge(e).v << ' ' << c << '\n';
      }
      continue;
    }
    MatchingProfile p = matching_profile(g, constraints);
    std::cout << "pm_count " << p.total << '\n';
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      std::cout << "edge " << e << ' ' << g.edge(e).u << ' ' << g.edge(e).v << ' '
                << p.per_edge[static_cast<std::size_t>(e)] << '\n';
  }
  return 0;
}

std::string vertex_list(VertexSet s) {
  std::string out;
  s.for_each([&](VertexId v) { out += (out.empty() ? "" : ",") + std::to_string(v); });
  return out;
}

int run_decompose(const InputOptions& in) {
  const auto graphs = load(in);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const MultiGraph& g = graphs[i];
    if (graphs.size() > 1) std::cout << "graph " << i << '\n';
    Decomposition d = decompose(g);
    for (const Cut& c : d.cut_trace) std::cout << "tight_cut " << vertex_list(c.side_a) << '\n';
    for (const DecompositionPiece& p : d.pieces) {
      std::cout << "piece " << to_string(p.kind) << " n=" << p.graph.vertex_count() << " m=" << p.graph.edge_count()
                << " origin=";
      for (std::size_t v = 0; v < p.origin.size(); ++v) std::cout << (v ? " " : "") << '{' << vertex_list(p.origin[v]) << '}';
      std::cout << '\n';
    }
    std::cout << "bricks " << d.brick_count << "\nbraces " << d.brace_count << "\ndim " << polytope_dimension(g) << '\n';
  }
  return 0;
}

int run_analyze(const InputOptions& in) {
  const auto graphs = load(in);
  bool ok = true;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    BoundReport r = verify_graph(graphs[i], graph_id(in, i, graphs.size()));
    ok = ok && r.all_satisfied();
    std::cout << to_json(r).dump(graphs.size() == 1 ? 2 : -1) << '\n';
  }
  return ok ? 0 : 1;
}

int run_klee_enum(int n, const std::string& format) {
  const GraphFormat f = output_format(format);
  for (const KleeClass& k : enumerate_klee(n)) write_graph(std::cout, k.graph, f);
  return 0;
}

int run_gen(int n, const std::string& cls, bool simple, const std::string& format) {
  const GraphFormat f = output_format(format);
  for (const MultiGraph& g : generate_catalog(n, parse_graph_class(cls), simple)) write_graph(std::cout, g, f);
  return 0;
}

int run_catalog_verify(int n, const std::string& cls, bool simple, const std::string& out_path) {
  const auto graphs = generate_catalog(n, parse_graph_class(cls), simple);
  std::vector<std::size_t> index(graphs.size());
  for (std::size_t i = 0; i < index.size(); ++i) index[i] = i;
  const auto reports = parallel_map(index, [&](std::size_t i) {
    return verify_graph(graphs[i], cls + "/" + std::to_string(n) + "/" + std::to_string(i));
  });

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot write " + out_path);
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  std::size_t failing = 0;
  std::size_t few = 0;
  for (const BoundReport& r : reports) {
    out << to_json(r).dump() << '\n';
    if (!r.all_satisfied()) ++failing;
    if (2 * r.pm_count <= static_cast<MatchingCount>(r.n) + 2) ++few;
  }
  std::cerr << "graphs " << reports.size() << ", failing " << failing << ", with at most n/2+1 perfect matchings "
            << few << '\n';
  return failing == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect matchings of cubic bridgeless multigraphs"};
  app.require_subcommand(1);

  InputOptions in;
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("file", in.path, "graph file, '-' for standard input")->required();
    cmd->add_option("--format", in.format, "edge_list, graph6 or sparse6 (default: by extension)");
  };

  EdgeConstraints constraints;
  bool use_oracle = false;
  CLI::App* count = app.add_subcommand("count", "perfect matching count and per-edge counts");
  add_input(count);
  count->add_option("--force", constraints.forced, "edge id every matching must use");
  count->add_option("--forbid", constraints.forbidden, "edge id no matching may use");
  count->add_flag("--oracle", use_oracle, "count by brute-force enumeration instead");

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "tight cut decomposition into bricks and braces");
  add_input(decompose_cmd);

  CLI::App* analyze = app.add_subcommand("analyze", "evaluate every applicable bound, JSON report");
  add_input(analyze);

  int n = 0;
  std::string cls = "all_bridgeless_cubic";
  std::string out_format;
  bool simple = false;
  std::string out_path;

  CLI::App* klee = app.add_subcommand("klee", "klee-graph tools");
  klee->require_subcommand(1);
  CLI::App* klee_enum = klee->add_subcommand("enum", "one representative per klee-graph class");
  klee_enum->add_option("--n", n, "order")->required();
  klee_enum->add_option("--format", out_format, "output format (default edge_list)");

  CLI::App* catalog = app.add_subcommand("catalog", "catalog sweeps");
  catalog->require_subcommand(1);
  CLI::App* verify = catalog->add_subcommand("verify", "verify every graph of a catalog, JSONL output");
  verify->add_option("--n", n, "order")->required();
  verify->add_option("--class", cls, "graph class");
  verify->add_flag("--simple", simple, "simple graphs only");
  verify->add_option("--out", out_path, "report file (default standard output)");

  CLI::App* gen = app.add_subcommand("gen", "print every graph of a catalog");
  gen->add_option("--n", n, "order")->required();
  gen->add_option("--class", cls, "graph class");
  gen->add_flag("--simple", simple, "simple graphs only");
  gen->add_option("--format", out_format, "output format (default edge_list)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*count) return run_count(in, constraints, use_oracle);
    if (*decompose_cmd) return run_decompose(in);
    if (*analyze) return run_analyze(in);
    if (*klee_enum) return run_klee_enum(n, out_format);
    if (*verify) return run_catalog_verify(n, cls, simple, out_path);
    if (*gen) return run_gen(n, cls, simple, out_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
