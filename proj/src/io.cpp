#include "chedit/io.hpp"

#include <sstream>

#include "json.hpp"

#include "chedit/chordality.hpp"

namespace chedit {

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError(1, "missing header");
  std::istringstream header(line);
  std::string tag;
  long n = -1, m = -1;
  if (!(header >> tag >> n >> m) || tag != "p")
    throw ParseError(lineno, "expected header 'p <n> <m>'");
  std::string extra;
  if (header >> extra) throw ParseError(lineno, "trailing tokens after header");
  if (n < 0 || m < 0) throw ParseError(lineno, "negative counts in header");

  Graph g(static_cast<int>(n));
  for (long i = 0; i < m; ++i) {
    if (!next_line()) throw ParseError(lineno + 1, "expected edge line");
    std::istringstream es(line);
    long u = -1, v = -1;
    if (!(es >> tag >> u >> v) || tag != "e")
      throw ParseError(lineno, "expected edge line 'e <u> <v>'");
    if (es >> extra) throw ParseError(lineno, "trailing tokens after edge");
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(lineno, "vertex id out of range");
    if (u == v) throw ParseError(lineno, "self-loop");
    if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      throw ParseError(lineno, "duplicate edge");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
      throw ParseError(lineno, "unexpected content after the last edge");
  }
  return g;
}

std::string serialize_graph(const Graph& g) {
  if (g.num_vertices() != g.capacity() || static_cast<int>(g.vertices().count()) != g.capacity())
    throw std::invalid_argument("serialize_graph: vertex ids must be dense 0..n-1");
  std::ostringstream out;
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edge_list()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

std::string result_record_json(const Graph& input, const ResultRecord& record, bool compact) {
  if (record.feasible) {
    if (!is_chordal(apply_editing(input, record.editing)))
      throw std::logic_error("result record: editing set does not make the input chordal");
  }
  nlohmann::json j;
  j["verdict"] = record.feasible ? "feasible" : "infeasible";
  j["deleted_vertices"] = record.editing.deleted_vertices;
  auto edges_json = [](const std::vector<Edge>& edges) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [u, v] : edges) arr.push_back({u, v});
    return arr;
  };
  j["deleted_edges"] = edges_json(record.editing.deleted_edges);
  j["added_edges"] = edges_json(record.editing.added_edges);
  SizeTriple size = size_of(record.editing);
  j["size"] = {size.a1, size.a2, size.a3};
  j["stats"] = {{"compress_calls", record.stats.compress_calls},
                {"nodes", record.stats.nodes},
                {"children", record.stats.children},
                {"max_depth", record.stats.max_depth},
                {"fast_extends", record.stats.fast_extends},
                {"wall_ms", record.stats.wall_ms}};
  return compact ? j.dump() : j.dump(2);
}

}  // namespace chedit
