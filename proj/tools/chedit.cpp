#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "chedit/chordality.hpp"
#include "chedit/generator.hpp"
#include "chedit/io.hpp"
#include "chedit/mixed_separator.hpp"
#include "chedit/oracle.hpp"
#include "chedit/solver.hpp"

namespace {

using namespace chedit;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_solve_mode(const Graph& g, const SizeTriple& budget, const SolverOptions& opts,
                   bool compact) {
  ResultRecord record;
  record.feasible = false;
  SolveStats stats;
  auto e = solve(g, budget.a1, budget.a2, budget.a3, opts, &stats);
  record.stats = stats;
  if (e) {
    record.feasible = true;
    record.editing = *e;
  }
  std::cout << result_record_json(g, record, compact) << '\n';
  std::cerr << (record.feasible ? "feasible" : "infeasible") << " (k1=" << budget.a1
            << " k2=" << budget.a2 << " k3=" << budget.a3 << ", " << stats.nodes << " nodes, "
            << stats.wall_ms << " ms)\n";
  return record.feasible ? 0 : 1;
}

int run_oracle_mode(const Graph& g, const SizeTriple& budget, const OracleCaps& caps,
                    bool compact) {
  ResultRecord record;
  auto e = brute_force_edit(g, budget, caps);
  if (e) {
    record.feasible = true;
    record.editing = *e;
  }
  std::cout << result_record_json(g, record, compact) << '\n';
  std::cerr << "oracle: " << (record.feasible ? "feasible" : "infeasible") << '\n';
  return record.feasible ? 0 : 1;
}

int run_mixed_sep_mode(const Graph& g, Vertex x, Vertex y, int a, int b, bool compact) {
  ResultRecord record;
  auto s = find_mixed_separator(g, x, y, a, b);
  if (s) {
    record.feasible = true;
    record.editing.deleted_vertices = s->vertices;
    record.editing.deleted_edges = s->edges;
  }
  // The record schema doubles for separators: deletions only, no additions.
  std::cout << result_record_json(g, record, compact) << '\n';
  std::cerr << "mixed separator " << (record.feasible ? "found" : "not found") << '\n';
  return record.feasible ? 0 : 1;
}

int run_gen_mode(int n, double density, int p1, int p2, int p3, std::uint64_t seed,
                 const std::string& output, bool compact) {
  Graph base = random_chordal(n, density, seed);
  auto inst = plant_edits(base, p1, p2, p3, seed + 1);
  std::ofstream out(output);
  if (!out) throw std::runtime_error("cannot open output file: " + output);
  out << serialize_graph(inst.graph);
  nlohmann::json meta = {{"n", n},           {"density", density}, {"p1", p1},
                         {"p2", p2},         {"p3", p3},           {"seed", seed},
                         {"file", output}};
  std::ofstream side(output + ".meta.json");
  if (!side) throw std::runtime_error("cannot open sidecar file");
  side << meta.dump(2) << '\n';
  std::cout << (compact ? meta.dump() : meta.dump(2)) << '\n';
  std::cerr << "wrote " << output << " (n=" << inst.graph.num_vertices()
            << " m=" << inst.graph.num_edges() << ") and " << output << ".meta.json\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chordal editing solver"};
  std::string input, mode = "solve", output;
  int k1 = 0, k2 = 0, k3 = 0;
  int x = -1, y = -1;
  int gen_n = 20;
  double density = 0.5;
  int p1 = 0, p2 = 0, p3 = 0;
  std::uint64_t seed = 1;
  bool compact = false;
  SolverOptions opts;
  OracleCaps caps;

  app.add_option("--input", input, "graph file in edge-list format, or - for stdin");
  app.add_option("--mode", mode, "solve | oracle | mixed-sep | gen")
      ->check(CLI::IsMember({"solve", "oracle", "mixed-sep", "gen"}));
  app.add_option("--k1", k1, "vertex deletion budget")->check(CLI::NonNegativeNumber);
  app.add_option("--k2", k2, "edge deletion budget")->check(CLI::NonNegativeNumber);
  app.add_option("--k3", k3, "edge addition budget")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", compact, "compact single-line JSON on stdout");
  app.add_option("--threads", opts.threads, "worker threads (verdict-invariant)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--guard-fallback", opts.guard_fallback,
               "branch over all segments instead of the segment-count guard");
  app.add_option("--x", x, "first terminal (mixed-sep mode)");
  app.add_option("--y", y, "second terminal (mixed-sep mode)");
  app.add_option("--n", gen_n, "vertex count (gen mode)")->check(CLI::PositiveNumber);
  app.add_option("--density", density, "bag inclusion probability (gen mode)");
  app.add_option("--p1", p1, "planted vertex insertions (gen mode)")->check(CLI::NonNegativeNumber);
  app.add_option("--p2", p2, "planted edge insertions (gen mode)")->check(CLI::NonNegativeNumber);
  app.add_option("--p3", p3, "planted edge removals (gen mode)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "random seed");
  app.add_option("--output", output, "output path (gen mode)");
  app.add_option("--oracle-max-n", caps.max_n, "oracle size cap");
  app.add_option("--oracle-max-k", caps.max_k, "oracle budget cap");

  try {
    app.parse(argc, argv);

    if (mode == "gen") {
      if (output.empty()) throw CLI::ValidationError("--output", "gen mode requires --output");
      return run_gen_mode(gen_n, density, p1, p2, p3, seed, output, compact);
    }

    if (input.empty()) throw CLI::ValidationError("--input", "this mode requires --input");
    Graph g = parse_graph(read_input(input));

    if (mode == "solve") return run_solve_mode(g, {k1, k2, k3}, opts, compact);
    if (mode == "oracle") return run_oracle_mode(g, {k1, k2, k3}, caps, compact);
    if (x < 0 || y < 0) throw CLI::ValidationError("--x/--y", "mixed-sep mode requires --x and --y");
    return run_mixed_sep_mode(g, x, y, k1, k2, compact);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;
  } catch (const CLI::Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
}
