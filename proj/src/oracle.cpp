#include "chedit/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "chedit/chordality.hpp"

namespace chedit {

namespace {

// Enumerates subsets of items ordered by size then lexicographically by index;
// stops when f returns true.
template <typename T, typename F>
bool for_each_subset(const std::vector<T>& items, int max_size, F&& f) {
  const int n = static_cast<int>(items.size());
  max_size = std::min(max_size, n);
  std::vector<T> subset;
  std::vector<int> idx;
  for (int size = 0; size <= max_size; ++size) {
    idx.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      subset.clear();
      for (int i : idx) subset.push_back(items[static_cast<std::size_t>(i)]);
      if (f(subset)) return true;
      if (size == 0) break;
      int pos = size - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - size + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < size; ++i)
        idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  return false;
}

void check_caps(const Graph& g, int k, const OracleCaps& caps) {
  if (g.num_vertices() > caps.max_n)
    throw std::invalid_argument("oracle: n exceeds cap " + std::to_string(caps.max_n));
  if (k > caps.max_k) throw std::invalid_argument("oracle: k exceeds cap " + std::to_string(caps.max_k));
}

}  // namespace

std::optional<EditingSet> brute_force_edit(const Graph& g, const SizeTriple& budget,
                                           const OracleCaps& caps) {
  check_caps(g, budget.total(), caps);
  if (budget.a1 < 0 || budget.a2 < 0 || budget.a3 < 0)
    throw std::invalid_argument("oracle: negative budget");

  const auto vertices = g.vertex_list();
  std::vector<Edge> non_edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.has_edge(vertices[i], vertices[j])) non_edges.emplace_back(vertices[i], vertices[j]);

  std::optional<EditingSet> found;
  for_each_subset(vertices, budget.a1, [&](const std::vector<Vertex>& vminus) {
    Graph g1 = g;
    for (Vertex v : vminus) g1.remove_vertex(v);
    const auto edges = g1.edge_list();
    return for_each_subset(edges, budget.a2, [&](const std::vector<Edge>& eminus) {
      Graph g2 = g1;
      for (const auto& [u, v] : eminus) g2.remove_edge(u, v);
      return for_each_subset(non_edges, budget.a3, [&](const std::vector<Edge>& eplus) {
        Graph g3 = g2;
        for (const auto& [u, v] : eplus) {
          if (!g3.has_vertex(u) || !g3.has_vertex(v)) return false;
          g3.add_edge(u, v);
        }
        if (!is_chordal(g3)) return false;
        found = EditingSet{vminus, eminus, eplus};
        found->normalize();
        return true;
      });
    });
  });
  return found;
}

bool brute_force_mixed_separator(const Graph& f, Vertex x, Vertex y, int a, int b,
                                 const OracleCaps& caps) {
  check_caps(f, a + b, caps);
  if (!f.has_vertex(x) || !f.has_vertex(y) || x == y)
    throw std::invalid_argument("oracle: bad terminals");
  if (f.has_edge(x, y)) throw std::invalid_argument("oracle: terminals are adjacent");

  auto others = f.vertex_list();
  std::erase(others, x);
  std::erase(others, y);

  return for_each_subset(others, a, [&](const std::vector<Vertex>& vs) {
    Graph g1 = f;
    for (Vertex v : vs) g1.remove_vertex(v);
    const auto remaining = g1.edge_list();
    return for_each_subset(remaining, b, [&](const std::vector<Edge>& es) {
      Graph g2 = g1;
      for (const auto& [u, v] : es) g2.remove_edge(u, v);
      return !shortest_path(g2, x, y, VertexSet(static_cast<std::size_t>(g2.capacity()))).has_value();
    });
  });
}

std::vector<Hole> enumerate_induced_cycles(const Graph& g, int max_len) {
  if (g.num_vertices() > 20)
    throw std::invalid_argument("enumerate_induced_cycles: graph too large");
  const auto vertices = g.vertex_list();
  const int n = static_cast<int>(vertices.size());
  std::vector<Hole> out;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    const int size = __builtin_popcountll(mask);
    if (size < 4 || size > max_len) continue;
    std::vector<Vertex> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1ull << i)) subset.push_back(vertices[static_cast<std::size_t>(i)]);
    // Induced cycle: every vertex has exactly two neighbors inside, connected.
    VertexSet in_set = vector_to_set(static_cast<std::size_t>(g.capacity()), subset);
    bool ok = true;
    for (Vertex v : subset)
      if ((g.neighbors(v) & in_set).count() != 2) ok = false;
    if (!ok) continue;
    std::vector<Vertex> cycle{subset.front()};
    VertexSet seen(static_cast<std::size_t>(g.capacity()));
    seen.set(static_cast<std::size_t>(subset.front()));
    while (static_cast<int>(cycle.size()) < size) {
      VertexSet next = (g.neighbors(cycle.back()) & in_set) - seen;
      if (next.none()) break;
      Vertex w = static_cast<Vertex>(next.find_first());
      cycle.push_back(w);
      seen.set(static_cast<std::size_t>(w));
    }
    if (static_cast<int>(cycle.size()) != size) continue;  // disconnected pair of cycles
    if (!g.has_edge(cycle.back(), cycle.front())) continue;
    out.push_back(canonical_hole(cycle));
  }
  std::sort(out.begin(), out.end(), [](const Hole& a, const Hole& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  });
  return out;
}

}  // namespace chedit
