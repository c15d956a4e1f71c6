#pragma once

#include <stdexcept>
#include <string>

#include "chedit/graph.hpp"
#include "chedit/solver.hpp"

namespace chedit {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

/// Strict edge-list format: a header line "p <n> <m>" followed by exactly m
/// lines "e <u> <v>" with 0-based ids. No comments, no extensions.
Graph parse_graph(const std::string& text);

/// Inverse of parse_graph; requires dense ids 0..n-1.
std::string serialize_graph(const Graph& g);

struct ResultRecord {
  bool feasible = false;
  EditingSet editing;
  SolveStats stats;
};

/// JSON with the exact field names: verdict, deleted_vertices, deleted_edges,
/// added_edges, size, stats. A feasible record is re-verified against the
/// input graph before emission.
std::string result_record_json(const Graph& input, const ResultRecord& record,
                               bool compact = false);

}  // namespace chedit
