#pragma once

#include <optional>

#include "chedit/chordality.hpp"
#include "chedit/graph.hpp"
#include "chedit/hole.hpp"

namespace chedit {

/// Structure around a shortest hole H and a modulator M with G - M chordal:
/// A = common neighbors of V(H), the partition {M, A_0, V_0} of V(G), the
/// chordal remainder G_0 = G[V_0] with its clique forest, and the maximal
/// paths of H - M in cycle order.
struct HoleContext {
  Hole hole;
  Graph host;             // the graph the context was built from
  VertexSet modulator;    // M
  VertexSet common;       // A
  VertexSet common_m;     // A_M = A cap M
  VertexSet common_free;  // A_0 = A minus M
  VertexSet v0;           // V(G) minus (M cup A)
  Graph g0;
  CliqueTree tree;                         // clique forest of g0
  std::vector<std::vector<Vertex>> paths;  // maximal runs of H - M
  std::vector<int> hole_pos;               // position on the hole, -1 if absent

  int hole_distance(Vertex u, Vertex v) const;  // cyclic distance on H
};

/// Fails loudly (std::logic_error) when A is not a clique, G_0 is not
/// chordal, or a vertex outside A has hole-neighbors beyond a consecutive
/// 3-window: each certifies a shorter hole, i.e. a caller bug. Rejects
/// (std::invalid_argument) when m is not a hole cover.
HoleContext build_hole_context(const Graph& g, const Hole& h, const VertexSet& m);

/// A connected component of V_1 minus V_2 hanging off the path.
struct Branch {
  VertexSet vertices;      // C
  VertexSet v0_neighbors;  // N_{V_0}(C), a clique inside one middle bag
  std::vector<int> near;   // path positions i with N_{V_0}(C) within N[v_i]
};

/// The interval structure of one path P = v_1..v_p (p > 3) of H - M: the bag
/// path connecting T(v_1) and T(v_p), the first/last bag index of each path
/// vertex, the sets V_1 (middle subtree) and V_2 (vertices on induced
/// v_1-v_p paths), and the branches.
struct PathContext {
  int path_index = 0;
  std::vector<Vertex> path;
  std::vector<int> bag_path;
  std::vector<std::vector<Vertex>> separators;  // S_l between consecutive bags
  std::vector<int> first, last;                 // per path position, 0-based
  std::vector<int> vertex_first, vertex_last;   // per vertex id over the bag path, -1 if absent
  VertexSet v1, v2;
  std::vector<Branch> branches;
};

/// Rejects paths with p <= 3 (the caller uses trivial segmentation).
PathContext build_path_context(const HoleContext& hc, int path_index);

struct Junction {
  int pos = 0;        // position within the path
  unsigned types = 0;  // bit (i-1) set means type (i), i in 1..4
  VertexSet witnesses1, witnesses2;  // M minus A_M vertices witnessing (1)/(2)

  bool has_type(int t) const { return (types >> (t - 1)) & 1u; }
};

std::vector<Junction> classify_junctions(const PathContext& pc, const Graph& g,
                                         const HoleContext& hc);

/// One path of H - M with its junctions. Paths with p <= 3 carry no
/// PathContext; their endpoints stand as junctions.
struct PathDecomposition {
  int path_index = 0;
  std::optional<PathContext> ctx;
  std::vector<Junction> junctions;
};

/// A maximal sub-path between consecutive junctions (positions inclusive).
struct Segment {
  int path_index = 0;
  int s = 0, t = 0;

  int length() const { return t - s; }
};

/// Consecutive junction pairs per path; a path with a single junction
/// (p = 1) yields one degenerate segment spanning it.
std::vector<Segment> decompose_segments(std::span<const PathDecomposition> paths);

struct SegmentDecomposition {
  std::vector<PathDecomposition> paths;
  std::vector<Segment> segments;
};

SegmentDecomposition decompose_hole(const Graph& g, const HoleContext& hc);

struct GuardResult {
  enum class Kind { within_bound, forced_vertex, infeasible };
  Kind kind = Kind::within_bound;
  Vertex forced = -1;
  std::vector<Hole> certificate;
};

/// |M| * (12k^2 + 87k + 75)
long segment_count_bound(int modulator_size, int k);

/// Groups the witnessed junction positions into consecutive fives, omits
/// groups containing a type-(1) witness, and pairs the second and last
/// member of each remaining group.
std::vector<std::pair<int, int>> witness_pairs(const std::vector<int>& positions,
                                               const std::vector<char>& is_type1);

/// Decides from a family of holes that pairwise intersect only inside A and
/// each contain at most one A_0 vertex: a vertex of A_0 lying on more than k
/// holes is forced into V-; otherwise the family is unfixable.
GuardResult conclude_from_hole_family(std::vector<Hole> holes, const VertexSet& a0, int k);

/// Segment-count guard: WithinBound while the count stays under
/// segment_count_bound(|M|, k); beyond it, runs the witness-counting and
/// hole-family procedures to either certify infeasibility or force a vertex.
/// Construction shortfalls degrade safely to WithinBound.
GuardResult segment_bound_guard(const SegmentDecomposition& sd, const HoleContext& hc,
                                const Graph& g, const SizeTriple& budget);

/// Expensive cross-checks not run during normal construction: V_2 recomputed
/// by enumerating all induced endpoint-to-endpoint paths (skipped when
/// |V_0| > 12). Throws std::logic_error on any mismatch.
void deep_validate_contexts(const Graph& g, const HoleContext& hc,
                            const SegmentDecomposition& sd);

}  // namespace chedit
