#pragma once

#include <boost/dynamic_bitset.hpp>

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chedit {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // stored canonically as (min, max)
using VertexSet = boost::dynamic_bitset<>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

std::vector<Vertex> set_to_vector(const VertexSet& s);
VertexSet vector_to_set(std::size_t capacity, std::span<const Vertex> vs);

template <typename F>
void for_each_vertex(const VertexSet& s, F&& f) {
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
    f(static_cast<Vertex>(v));
}

/// Simple undirected graph over a fixed id universe [0, capacity).
/// Vertices keep their ids under subgraph and deletion operations; the
/// present-set shrinks instead of reindexing.
class Graph {
 public:
  Graph() : Graph(0) {}
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  int capacity() const { return capacity_; }
  int num_vertices() const { return n_; }
  int num_edges() const { return m_; }

  bool has_vertex(Vertex v) const {
    return v >= 0 && v < capacity_ && present_.test(static_cast<std::size_t>(v));
  }
  bool has_edge(Vertex u, Vertex v) const {
    return has_vertex(u) && has_vertex(v) && adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
  }

  const VertexSet& vertices() const { return present_; }
  const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  VertexSet closed_neighborhood(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].count()); }

  std::vector<Vertex> vertex_list() const { return set_to_vector(present_); }
  std::vector<Edge> edge_list() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void remove_vertex(Vertex v);

  bool operator==(const Graph& other) const;

 private:
  int capacity_;
  int n_;
  int m_;
  VertexSet present_;
  std::vector<VertexSet> adj_;
};

/// A chordal editing set: vertex deletions, edge deletions, edge additions.
/// Edges are canonical (min, max) pairs; all three lists are kept sorted.
struct EditingSet {
  std::vector<Vertex> deleted_vertices;
  std::vector<Edge> deleted_edges;
  std::vector<Edge> added_edges;

  bool empty() const {
    return deleted_vertices.empty() && deleted_edges.empty() && added_edges.empty();
  }
  void normalize();
  bool operator==(const EditingSet&) const = default;
};

struct SizeTriple {
  int a1 = 0;
  int a2 = 0;
  int a3 = 0;

  int total() const { return a1 + a2 + a3; }
  bool operator==(const SizeTriple&) const = default;
};

/// Componentwise partial order on size triples.
inline bool leq(const SizeTriple& s, const SizeTriple& t) {
  return s.a1 <= t.a1 && s.a2 <= t.a2 && s.a3 <= t.a3;
}
/// Strictly smaller: componentwise <= with at least one strict inequality.
inline bool smaller(const SizeTriple& s, const SizeTriple& t) { return leq(s, t) && !(s == t); }

SizeTriple size_of(const EditingSet& e);

/// Validates e against g: E- must be existing edges, E+ must be non-edges,
/// V- must be present vertices. Throws std::invalid_argument on violation.
void validate_editing_set(const Graph& g, const EditingSet& e);

/// Applies V- first, then E-, then E+. Edits incident to a deleted vertex are
/// dropped; a note is appended to *warnings when given.
Graph apply_editing(const Graph& g, const EditingSet& e,
                    std::vector<std::string>* warnings = nullptr);

Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// Components as vertex lists, ordered by their smallest contained id.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// True iff e deletes a vertex of x or touches an edge with an endpoint in x.
bool editing_touches(const EditingSet& e, const VertexSet& x);

}  // namespace chedit
