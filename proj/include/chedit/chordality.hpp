#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "chedit/graph.hpp"
#include "chedit/hole.hpp"

namespace chedit {

/// Maximum cardinality search. Returns an elimination ordering (first entry is
/// eliminated first) that is a perfect elimination ordering iff g is chordal.
/// Ties broken by smallest vertex id.
std::vector<Vertex> mcs_order(const Graph& g);

struct ChordalityResult {
  bool chordal = true;
  std::optional<Hole> hole;  // certificate when not chordal
};

ChordalityResult check_chordal(const Graph& g);
bool is_chordal(const Graph& g);

/// Smallest-id-first BFS shortest path avoiding `forbidden`; endpoints must
/// not be forbidden. Returns the vertex sequence from `from` to `to`.
std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex from, Vertex to,
                                                 const VertexSet& forbidden);

bool is_clique(const Graph& g, const VertexSet& s);

struct NotChordalError : std::invalid_argument {
  Hole hole;
  explicit NotChordalError(Hole h)
      : std::invalid_argument("graph is not chordal"), hole(std::move(h)) {}
};

/// Clique tree (forest for disconnected graphs) of a chordal graph.
struct CliqueTree {
  std::vector<std::vector<Vertex>> bags;   // maximal cliques, sorted vertex lists
  std::vector<std::vector<int>> tree_adj;  // adjacency over bag indices
  std::vector<std::vector<int>> bags_of;   // bag indices per vertex id
  int capacity = 0;

  int num_bags() const { return static_cast<int>(bags.size()); }
  bool bag_contains(int bag, Vertex v) const;
  /// Checks maximality, the subtree property and the separator property.
  bool validate(const Graph& g, std::string* why = nullptr) const;
};

/// Throws NotChordalError (with a hole certificate) on non-chordal input.
CliqueTree clique_tree(const Graph& g);

VertexSet simplicial_vertices(const Graph& g);

/// True iff N[x] induces a chordal subgraph and N(x) induces a clique.
bool is_simplicial_set(const Graph& g, const VertexSet& x);

/// The unique path of bags connecting T(u) and T(v) for nonadjacent u, v,
/// plus the consecutive separators S_l = K_l cap K_{l+1}.
struct BagPath {
  std::vector<int> bags;
  std::vector<std::vector<Vertex>> separators;
};

BagPath bag_path(const CliqueTree& t, Vertex u, Vertex v);

}  // namespace chedit
