#pragma once

#include <optional>

#include "chedit/graph.hpp"

namespace chedit {

/// An induced cycle of length >= 4, stored as a cyclic vertex sequence.
struct Hole {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const Hole&) const = default;
};

/// Lexicographically smallest rotation/reflection of the cyclic sequence.
Hole canonical_hole(std::span<const Vertex> cycle);

bool verify_hole(const Graph& g, const Hole& h);

/// A shortest hole, or nullopt when g is chordal. Deterministic: iterates
/// triples (v1, v2, v3) with v1 ~ v2 ~ v3 and v1 !~ v3 in lexicographic order
/// and runs a smallest-id-first BFS for the shortest v1-v3 path in
/// g - (N[v2] \ {v1, v3}); the first strictly shorter cycle wins.
std::optional<Hole> shortest_hole(const Graph& g);

struct UnitEdit {
  enum class Kind { delete_vertex, delete_edge, add_edge };
  Kind kind;
  Vertex v = -1;  // delete_vertex
  Edge e{-1, -1};  // delete_edge / add_edge

  bool operator==(const UnitEdit&) const = default;
};

/// All single modifications that destroy h as an induced cycle, honoring the
/// budget categories: vertex deletions outside the modulator m when budget.a1
/// > 0, hole-edge deletions when budget.a2 > 0, chord additions between
/// non-consecutive hole vertices when budget.a3 > 0. Deterministic order:
/// deletions by hole position, then edges by position, then chords (i, j) lex.
std::vector<UnitEdit> hole_fix_candidates(const Graph& g, const Hole& h, const VertexSet& m,
                                          const SizeTriple& budget);

}  // namespace chedit
