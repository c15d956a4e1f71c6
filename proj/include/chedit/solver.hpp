#pragma once

#include <optional>

#include "chedit/graph.hpp"
#include "chedit/mixed_separator.hpp"
#include "chedit/segments.hpp"

namespace chedit {

struct SolverOptions {
  /// Branch over all segments regardless of the segment-count bound instead
  /// of running the guard's constructive procedure.
  bool guard_fallback = false;
  /// Expensive structural cross-checks (brute-force V_2) on every long-hole
  /// node; test support.
  bool validate_structures = false;
  /// Reuse the previous prefix solution when it still applies verbatim.
  bool fast_extend = true;
  /// Number of worker threads for the compression-subset loop; results are
  /// identical to the sequential run.
  int threads = 1;
};

struct SolveStats {
  long compress_calls = 0;
  long nodes = 0;
  long children = 0;
  int max_depth = 0;
  long fast_extends = 0;
  long guard_within = 0, guard_forced = 0, guard_infeasible = 0;
  long max_children_per_node = 0;
  long max_child_ceiling = 0;
  double wall_ms = 0.0;

  void merge(const SolveStats& other);
};

/// An instance of the compression problem: a hole cover M of size at most
/// k1+k2+k3+1 whose vertices may not be deleted; G - M is chordal.
struct CompressionInstance {
  Graph graph;
  SizeTriple budget;
  VertexSet modulator;

  CompressionInstance(Graph g, SizeTriple b, VertexSet m);
};

/// One branch of the compression search. `applied` records the edits taken
/// at this node relative to its parent; the modulator may grow along a
/// branch (an untouched endpoint of every edited edge joins it, keeping
/// graph - modulator chordal).
struct SearchNode {
  Graph graph;
  SizeTriple budget;
  VertexSet modulator;
  EditingSet applied;
  int depth = 0;
};

/// The region G_{[i,j]} of a path: bags of the subtree between K_last(i) and
/// K_first(j), plus the two path vertices v_i, v_j.
struct Region {
  VertexSet vertices;
  Graph graph;
};

Region segment_region(const HoleContext& hc, const PathContext& pc, int i, int j);

/// Children of a long-hole node: junction/near-junction deletions (cases 1
/// and 2) and one mixed-separator child per feasible (segment, a) profile
/// entry (case 3). Edge edits whose endpoints both avoid the modulator split
/// into delete-endpoint / forbid-endpoint children. `root` is the graph the
/// final editing set is expressed against (edits already undone against it
/// are not proposed again).
std::vector<SearchNode> break_long_hole(const SearchNode& node, const HoleContext& hc,
                                        const SegmentDecomposition& sd, const Graph& root);

/// Decides the compression instance; any returned editing set has size within
/// the budget, V- disjoint from the modulator, and makes the graph chordal.
std::optional<EditingSet> compress(const CompressionInstance& inst, const SolverOptions& opts = {},
                                   SolveStats* stats = nullptr);

/// Iterative compression over vertex prefixes in ascending id order.
std::optional<EditingSet> solve(const Graph& g, int k1, int k2, int k3,
                                const SolverOptions& opts = {}, SolveStats* stats = nullptr);

/// Removes simplicial vertices until none remain. Safe for the pure
/// vertex-deletion problem; exposed as an opt-in pass.
Graph preprocess_simplicial(const Graph& g);

}  // namespace chedit
