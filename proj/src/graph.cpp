#include "chedit/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace chedit {

std::vector<Vertex> set_to_vector(const VertexSet& s) {
  std::vector<Vertex> out;
  out.reserve(s.count());
  for_each_vertex(s, [&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet vector_to_set(std::size_t capacity, std::span<const Vertex> vs) {
  VertexSet out(capacity);
  for (Vertex v : vs) out.set(static_cast<std::size_t>(v));
  return out;
}

Graph::Graph(int n)
    : capacity_(n),
      n_(n),
      m_(0),
      present_(static_cast<std::size_t>(n)),
      adj_(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n))) {
  present_.set();
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet out = adj_[static_cast<std::size_t>(v)];
  out.set(static_cast<std::size_t>(v));
  return out;
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for_each_vertex(present_, [&](Vertex u) {
    for (auto v = adj_[static_cast<std::size_t>(u)].find_next(static_cast<std::size_t>(u));
         v != VertexSet::npos; v = adj_[static_cast<std::size_t>(u)].find_next(v))
      out.emplace_back(u, static_cast<Vertex>(v));
  });
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (!has_vertex(u) || !has_vertex(v)) throw std::invalid_argument("add_edge: vertex not in graph");
  if (u == v) throw std::invalid_argument("add_edge: self-loop");
  if (has_edge(u, v)) throw std::invalid_argument("add_edge: duplicate edge");
  adj_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
  adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
  ++m_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (!has_edge(u, v)) throw std::invalid_argument("remove_edge: edge not in graph");
  adj_[static_cast<std::size_t>(u)].reset(static_cast<std::size_t>(v));
  adj_[static_cast<std::size_t>(v)].reset(static_cast<std::size_t>(u));
  --m_;
}

void Graph::remove_vertex(Vertex v) {
  if (!has_vertex(v)) throw std::invalid_argument("remove_vertex: vertex not in graph");
  m_ -= degree(v);
  for_each_vertex(adj_[static_cast<std::size_t>(v)],
                  [&](Vertex u) { adj_[static_cast<std::size_t>(u)].reset(static_cast<std::size_t>(v)); });
  adj_[static_cast<std::size_t>(v)].reset();
  present_.reset(static_cast<std::size_t>(v));
  --n_;
}

bool Graph::operator==(const Graph& other) const {
  // Semantic equality: same vertex ids and same edges, regardless of the
  // id-universe capacity the graphs were built with.
  return n_ == other.n_ && m_ == other.m_ && vertex_list() == other.vertex_list() &&
         edge_list() == other.edge_list();
}

void EditingSet::normalize() {
  auto dedup = [](auto& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  for (auto& e : deleted_edges) e = make_edge(e.first, e.second);
  for (auto& e : added_edges) e = make_edge(e.first, e.second);
  dedup(deleted_vertices);
  dedup(deleted_edges);
  dedup(added_edges);
}

SizeTriple size_of(const EditingSet& e) {
  return {static_cast<int>(e.deleted_vertices.size()), static_cast<int>(e.deleted_edges.size()),
          static_cast<int>(e.added_edges.size())};
}

void validate_editing_set(const Graph& g, const EditingSet& e) {
  for (Vertex v : e.deleted_vertices)
    if (!g.has_vertex(v)) throw std::invalid_argument("editing set: V- contains unknown vertex " + std::to_string(v));
  for (const auto& [u, v] : e.deleted_edges)
    if (!g.has_edge(u, v))
      throw std::invalid_argument("editing set: E- contains non-edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
  for (const auto& [u, v] : e.added_edges) {
    if (!g.has_vertex(u) || !g.has_vertex(v) || u == v)
      throw std::invalid_argument("editing set: E+ contains invalid pair (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    if (g.has_edge(u, v))
      throw std::invalid_argument("editing set: E+ contains existing edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
  }
}

Graph apply_editing(const Graph& g, const EditingSet& e, std::vector<std::string>* warnings) {
  validate_editing_set(g, e);
  Graph out = g;
  VertexSet gone(static_cast<std::size_t>(g.capacity()));
  for (Vertex v : e.deleted_vertices) {
    out.remove_vertex(v);
    gone.set(static_cast<std::size_t>(v));
  }
  auto dropped = [&](const Edge& ed) {
    return gone.test(static_cast<std::size_t>(ed.first)) || gone.test(static_cast<std::size_t>(ed.second));
  };
  for (const auto& ed : e.deleted_edges) {
    if (dropped(ed)) {
      if (warnings)
        warnings->push_back("deleted edge (" + std::to_string(ed.first) + "," + std::to_string(ed.second) +
                            ") has a deleted endpoint; dropped");
      continue;
    }
    out.remove_edge(ed.first, ed.second);
  }
  for (const auto& ed : e.added_edges) {
    if (dropped(ed)) {
      if (warnings)
        warnings->push_back("added edge (" + std::to_string(ed.first) + "," + std::to_string(ed.second) +
                            ") has a deleted endpoint; dropped");
      continue;
    }
    out.add_edge(ed.first, ed.second);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (static_cast<int>(s.size()) != g.capacity() || !s.is_subset_of(g.vertices()))
    throw std::invalid_argument("induced_subgraph: set not within graph vertices");
  Graph out = g;
  VertexSet drop = g.vertices() - s;
  for_each_vertex(drop, [&](Vertex v) { out.remove_vertex(v); });
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  for (Vertex v : s)
    if (!g.has_vertex(v)) throw std::invalid_argument("induced_subgraph: set not within graph vertices");
  return induced_subgraph(g, vector_to_set(static_cast<std::size_t>(g.capacity()), s));
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  VertexSet seen(static_cast<std::size_t>(g.capacity()));
  for_each_vertex(g.vertices(), [&](Vertex start) {
    if (seen.test(static_cast<std::size_t>(start))) return;
    std::vector<Vertex> comp;
    std::vector<Vertex> stack{start};
    seen.set(static_cast<std::size_t>(start));
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for_each_vertex(g.neighbors(u), [&](Vertex w) {
        if (!seen.test(static_cast<std::size_t>(w))) {
          seen.set(static_cast<std::size_t>(w));
          stack.push_back(w);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  });
  return comps;
}

bool editing_touches(const EditingSet& e, const VertexSet& x) {
  for (Vertex v : e.deleted_vertices)
    if (x.test(static_cast<std::size_t>(v))) return true;
  auto touches = [&](const Edge& ed) {
    return x.test(static_cast<std::size_t>(ed.first)) || x.test(static_cast<std::size_t>(ed.second));
  };
  for (const auto& ed : e.deleted_edges)
    if (touches(ed)) return true;
  for (const auto& ed : e.added_edges)
    if (touches(ed)) return true;
  return false;
}

}  // namespace chedit
