#include "chedit/generator.hpp"

#include <stdexcept>

namespace chedit {

Graph random_chordal(int n, double density, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_chordal: n must be >= 1");
  Rng rng(seed);
  Graph g(n);
  std::vector<std::vector<Vertex>> bags{{0}};
  for (Vertex v = 1; v < n; ++v) {
    const auto& bag = bags[static_cast<std::size_t>(rng.below(static_cast<int>(bags.size())))];
    std::vector<Vertex> clique;
    for (Vertex w : bag)
      if (rng.unit() < density) clique.push_back(w);
    for (Vertex w : clique) g.add_edge(v, w);
    clique.push_back(v);
    bags.push_back(std::move(clique));
  }
  return g;
}

PlantedInstance plant_edits(const Graph& gstar, int p1, int p2, int p3, std::uint64_t seed) {
  const int n = gstar.capacity();
  if (static_cast<int>(gstar.vertices().count()) != n)
    throw std::invalid_argument("plant_edits: base graph must use dense ids 0..n-1");

  const auto base_edges = gstar.edge_list();
  std::vector<Edge> base_non_edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!gstar.has_edge(i, j)) base_non_edges.emplace_back(i, j);

  if (p2 > static_cast<int>(base_non_edges.size()))
    throw std::invalid_argument("plant_edits: not enough non-edges to add");
  if (p3 > static_cast<int>(base_edges.size()))
    throw std::invalid_argument("plant_edits: not enough edges to remove");

  Rng rng(seed);
  PlantedInstance out;
  out.planted = {p1, p2, p3};
  out.seed = seed;
  out.base = gstar;

  Graph g(n + p1);
  for (const auto& [u, v] : base_edges) g.add_edge(u, v);

  for (int i = 0; i < p1; ++i) {
    Vertex v = n + i;
    std::vector<Vertex> pool;
    for (Vertex w = 0; w < v; ++w) pool.push_back(w);
    int deg = std::min<int>(2 + rng.below(3), static_cast<int>(pool.size()));
    for (int d = 0; d < deg; ++d) {
      int pick = rng.below(static_cast<int>(pool.size()));
      g.add_edge(v, pool[static_cast<std::size_t>(pick)]);
      pool.erase(pool.begin() + pick);
    }
    out.inverse.deleted_vertices.push_back(v);
  }

  auto sample_distinct = [&](std::vector<Edge> pool, int count) {
    std::vector<Edge> picked;
    for (int i = 0; i < count; ++i) {
      int idx = rng.below(static_cast<int>(pool.size()));
      picked.push_back(pool[static_cast<std::size_t>(idx)]);
      pool.erase(pool.begin() + idx);
    }
    return picked;
  };

  for (const auto& [u, v] : sample_distinct(base_non_edges, p2)) {
    g.add_edge(u, v);
    out.inverse.deleted_edges.emplace_back(u, v);
  }
  for (const auto& [u, v] : sample_distinct(base_edges, p3)) {
    g.remove_edge(u, v);
    out.inverse.added_edges.emplace_back(u, v);
  }

  out.inverse.normalize();
  out.graph = std::move(g);
  return out;
}

}  // namespace chedit
