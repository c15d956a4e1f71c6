#include "chedit/chordality.hpp"

#include <algorithm>
#include <deque>

namespace chedit {

std::vector<Vertex> mcs_order(const Graph& g) {
  std::vector<int> weight(static_cast<std::size_t>(g.capacity()), 0);
  VertexSet unvisited = g.vertices();
  std::vector<Vertex> visit;
  visit.reserve(static_cast<std::size_t>(g.num_vertices()));
  for (int step = 0; step < g.num_vertices(); ++step) {
    Vertex best = -1;
    int best_w = -1;
    for_each_vertex(unvisited, [&](Vertex v) {
      if (weight[static_cast<std::size_t>(v)] > best_w) {
        best_w = weight[static_cast<std::size_t>(v)];
        best = v;
      }
    });
    unvisited.reset(static_cast<std::size_t>(best));
    visit.push_back(best);
    for_each_vertex(g.neighbors(best), [&](Vertex u) {
      if (unvisited.test(static_cast<std::size_t>(u))) ++weight[static_cast<std::size_t>(u)];
    });
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex from, Vertex to,
                                                 const VertexSet& forbidden) {
  if (!g.has_vertex(from) || !g.has_vertex(to)) return std::nullopt;
  if (forbidden.test(static_cast<std::size_t>(from)) || forbidden.test(static_cast<std::size_t>(to)))
    return std::nullopt;
  if (from == to) return std::vector<Vertex>{from};
  std::vector<Vertex> parent(static_cast<std::size_t>(g.capacity()), -1);
  VertexSet seen(static_cast<std::size_t>(g.capacity()));
  seen.set(static_cast<std::size_t>(from));
  std::deque<Vertex> queue{from};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    bool done = false;
    for_each_vertex(g.neighbors(u), [&](Vertex w) {
      if (done || seen.test(static_cast<std::size_t>(w)) || forbidden.test(static_cast<std::size_t>(w)))
        return;
      seen.set(static_cast<std::size_t>(w));
      parent[static_cast<std::size_t>(w)] = u;
      if (w == to) {
        done = true;
        return;
      }
      queue.push_back(w);
    });
    if (done) {
      std::vector<Vertex> path;
      for (Vertex x = to; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
      std::reverse(path.begin(), path.end());
      return path;
    }
  }
  return std::nullopt;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  bool ok = true;
  for_each_vertex(s, [&](Vertex u) {
    if (!ok) return;
    VertexSet miss = s - g.neighbors(u);
    miss.reset(static_cast<std::size_t>(u));
    if (miss.any()) ok = false;
  });
  return ok;
}

namespace {

// Extracts a hole through the failed PEO triple: v with nonadjacent later
// neighbors u, w. Falls back to a full triple scan when the local BFS finds
// no path.
std::optional<Hole> hole_from_triple(const Graph& g, Vertex v, Vertex u, Vertex w) {
  VertexSet forbidden = g.closed_neighborhood(v);
  forbidden.reset(static_cast<std::size_t>(u));
  forbidden.reset(static_cast<std::size_t>(w));
  auto path = shortest_path(g, u, w, forbidden);
  if (!path) return std::nullopt;
  std::vector<Vertex> cycle{v};
  cycle.insert(cycle.end(), path->begin(), path->end());
  return canonical_hole(cycle);
}

std::optional<Hole> find_any_hole(const Graph& g) {
  std::optional<Hole> out;
  for_each_vertex(g.vertices(), [&](Vertex v) {
    if (out) return;
    auto nbrs = set_to_vector(g.neighbors(v));
    for (std::size_t i = 0; i < nbrs.size() && !out; ++i)
      for (std::size_t j = i + 1; j < nbrs.size() && !out; ++j) {
        if (g.has_edge(nbrs[i], nbrs[j])) continue;
        out = hole_from_triple(g, v, nbrs[i], nbrs[j]);
      }
  });
  return out;
}

}  // namespace

ChordalityResult check_chordal(const Graph& g) {
  auto order = mcs_order(g);
  VertexSet later = g.vertices();
  for (Vertex v : order) {
    later.reset(static_cast<std::size_t>(v));
    VertexSet ln = g.neighbors(v) & later;
    if (ln.count() <= 1) continue;
    std::optional<Hole> hole;
    for_each_vertex(ln, [&](Vertex u) {
      if (hole) return;
      VertexSet bad = ln - g.neighbors(u);
      bad.reset(static_cast<std::size_t>(u));
      if (bad.any()) {
        Vertex w = static_cast<Vertex>(bad.find_first());
        hole = hole_from_triple(g, v, u, w);
        if (!hole) hole = find_any_hole(g);
      }
    });
    if (hole) return {false, hole};
  }
  return {true, std::nullopt};
}

bool is_chordal(const Graph& g) { return check_chordal(g).chordal; }

bool CliqueTree::bag_contains(int bag, Vertex v) const {
  const auto& b = bags[static_cast<std::size_t>(bag)];
  return std::binary_search(b.begin(), b.end(), v);
}

CliqueTree clique_tree(const Graph& g) {
  auto cr = check_chordal(g);
  if (!cr.chordal) throw NotChordalError(*cr.hole);

  const std::size_t cap = static_cast<std::size_t>(g.capacity());
  auto order = mcs_order(g);
  VertexSet later = g.vertices();
  std::vector<VertexSet> cand;
  cand.reserve(order.size());
  for (Vertex v : order) {
    later.reset(static_cast<std::size_t>(v));
    VertexSet c = g.neighbors(v) & later;
    c.set(static_cast<std::size_t>(v));
    cand.push_back(std::move(c));
  }

  std::vector<VertexSet> maximal;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < cand.size() && keep; ++j) {
      if (i == j) continue;
      if (cand[i].is_proper_subset_of(cand[j])) keep = false;
      if (cand[i] == cand[j] && j < i) keep = false;
    }
    if (keep) maximal.push_back(cand[i]);
  }

  CliqueTree t;
  t.capacity = g.capacity();
  t.bags.reserve(maximal.size());
  for (const auto& b : maximal) t.bags.push_back(set_to_vector(b));
  std::sort(t.bags.begin(), t.bags.end());

  const int nb = t.num_bags();
  t.bags_of.assign(cap, {});
  for (int i = 0; i < nb; ++i)
    for (Vertex v : t.bags[static_cast<std::size_t>(i)])
      t.bags_of[static_cast<std::size_t>(v)].push_back(i);

  // Maximum-weight spanning forest over bag intersections; ties broken by
  // smaller bag index pair so the tree is a deterministic function of g.
  struct Cand {
    int w, i, j;
  };
  std::vector<Cand> cands;
  std::vector<VertexSet> bag_sets;
  bag_sets.reserve(static_cast<std::size_t>(nb));
  for (const auto& b : t.bags) bag_sets.push_back(vector_to_set(cap, b));
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j) {
      int w = static_cast<int>((bag_sets[static_cast<std::size_t>(i)] & bag_sets[static_cast<std::size_t>(j)]).count());
      if (w > 0) cands.push_back({w, i, j});
    }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.w != b.w) return a.w > b.w;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });

  std::vector<int> uf(static_cast<std::size_t>(nb));
  for (int i = 0; i < nb; ++i) uf[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (uf[static_cast<std::size_t>(x)] != x) {
      uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
      x = uf[static_cast<std::size_t>(x)];
    }
    return x;
  };
  t.tree_adj.assign(static_cast<std::size_t>(nb), {});
  for (const auto& c : cands) {
    int a = find(c.i), b = find(c.j);
    if (a == b) continue;
    uf[static_cast<std::size_t>(a)] = b;
    t.tree_adj[static_cast<std::size_t>(c.i)].push_back(c.j);
    t.tree_adj[static_cast<std::size_t>(c.j)].push_back(c.i);
  }
  for (auto& nbrs : t.tree_adj) std::sort(nbrs.begin(), nbrs.end());
  return t;
}

bool CliqueTree::validate(const Graph& g, std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const std::size_t cap = static_cast<std::size_t>(capacity);
  if (capacity != g.capacity()) return fail("capacity mismatch");

  std::vector<VertexSet> bag_sets;
  for (const auto& b : bags) bag_sets.push_back(vector_to_set(cap, b));

  // Each bag is a maximal clique; no bag contains another.
  for (std::size_t i = 0; i < bags.size(); ++i) {
    if (!is_clique(g, bag_sets[i])) return fail("bag is not a clique");
    bool extendable = false;
    for_each_vertex(g.vertices() - bag_sets[i], [&](Vertex u) {
      if (bag_sets[i].is_subset_of(g.neighbors(u))) extendable = true;
    });
    if (extendable) return fail("bag is not maximal");
    for (std::size_t j = 0; j < bags.size(); ++j)
      if (i != j && bag_sets[i].is_subset_of(bag_sets[j])) return fail("bag contained in another");
  }

  // Every vertex and edge is covered.
  VertexSet covered(cap);
  for (const auto& bs : bag_sets) covered |= bs;
  if (covered != g.vertices()) return fail("bags do not cover all vertices");
  for (const auto& [u, v] : g.edge_list()) {
    bool in_bag = false;
    for (int b : bags_of[static_cast<std::size_t>(u)])
      if (bag_contains(b, v)) in_bag = true;
    if (!in_bag) return fail("edge not covered by any bag");
  }

  // Subtree property: bags containing each vertex induce a connected subtree.
  bool subtree_ok = true;
  for_each_vertex(g.vertices(), [&](Vertex v) {
    const auto& mine = bags_of[static_cast<std::size_t>(v)];
    if (mine.empty()) {
      subtree_ok = false;
      return;
    }
    std::vector<char> in_mine(bags.size(), 0), seen(bags.size(), 0);
    for (int b : mine) in_mine[static_cast<std::size_t>(b)] = 1;
    std::vector<int> stack{mine.front()};
    seen[static_cast<std::size_t>(mine.front())] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      ++reached;
      for (int nb : tree_adj[static_cast<std::size_t>(b)])
        if (in_mine[static_cast<std::size_t>(nb)] && !seen[static_cast<std::size_t>(nb)]) {
          seen[static_cast<std::size_t>(nb)] = 1;
          stack.push_back(nb);
        }
    }
    if (reached != mine.size()) subtree_ok = false;
  });
  if (!subtree_ok) return fail("subtree property violated");

  // Forest structure: one tree per graph component.
  std::size_t tree_edges = 0;
  for (const auto& nbrs : tree_adj) tree_edges += nbrs.size();
  tree_edges /= 2;
  if (tree_edges + connected_components(g).size() != bags.size() && g.num_vertices() > 0)
    return fail("tree edge count does not match component structure");

  // Adjacent bags intersect in a minimal separator.
  for (std::size_t i = 0; i < bags.size(); ++i)
    for (int j : tree_adj[i]) {
      if (static_cast<int>(i) > j) continue;
      VertexSet sep = bag_sets[i] & bag_sets[static_cast<std::size_t>(j)];
      if (sep.none()) return fail("adjacent bags with empty intersection");
      Vertex x = static_cast<Vertex>((bag_sets[i] - sep).find_first());
      Vertex y = static_cast<Vertex>((bag_sets[static_cast<std::size_t>(j)] - sep).find_first());
      if (x < 0 || y < 0) return fail("adjacent bag contained in separator");
      if (shortest_path(g, x, y, sep)) return fail("bag intersection is not a separator");
      // Minimality: every separator vertex sees both sides.
      Graph rest = g;
      for_each_vertex(sep, [&](Vertex s) { rest.remove_vertex(s); });
      auto comps = connected_components(rest);
      int cx = -1, cy = -1;
      for (std::size_t c = 0; c < comps.size(); ++c)
        for (Vertex u : comps[c]) {
          if (u == x) cx = static_cast<int>(c);
          if (u == y) cy = static_cast<int>(c);
        }
      bool minimal = true;
      for_each_vertex(sep, [&](Vertex s) {
        bool sees_x = false, sees_y = false;
        for (Vertex u : comps[static_cast<std::size_t>(cx)])
          if (g.has_edge(s, u)) sees_x = true;
        for (Vertex u : comps[static_cast<std::size_t>(cy)])
          if (g.has_edge(s, u)) sees_y = true;
        if (!sees_x || !sees_y) minimal = false;
      });
      if (!minimal) return fail("bag intersection is not a minimal separator");
    }
  return true;
}

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out(static_cast<std::size_t>(g.capacity()));
  for_each_vertex(g.vertices(), [&](Vertex v) {
    if (is_clique(g, g.neighbors(v))) out.set(static_cast<std::size_t>(v));
  });
  return out;
}

bool is_simplicial_set(const Graph& g, const VertexSet& x) {
  if (static_cast<int>(x.size()) != g.capacity() || !x.is_subset_of(g.vertices()))
    throw std::invalid_argument("is_simplicial_set: x not within graph vertices");
  if (x.none()) return true;
  VertexSet nx(static_cast<std::size_t>(g.capacity()));
  for_each_vertex(x, [&](Vertex v) { nx |= g.neighbors(v); });
  nx -= x;
  if (!is_clique(g, nx)) return false;
  return is_chordal(induced_subgraph(g, nx | x));
}

BagPath bag_path(const CliqueTree& t, Vertex u, Vertex v) {
  if (u < 0 || u >= t.capacity || v < 0 || v >= t.capacity ||
      t.bags_of[static_cast<std::size_t>(u)].empty() || t.bags_of[static_cast<std::size_t>(v)].empty())
    throw std::invalid_argument("bag_path: vertex not in clique tree");
  const auto& bu = t.bags_of[static_cast<std::size_t>(u)];
  for (int b : bu)
    if (t.bag_contains(b, v)) throw std::invalid_argument("bag_path: vertices are adjacent");

  std::vector<int> parent(t.bags.size(), -2);
  std::deque<int> queue;
  for (int b : bu) {
    parent[static_cast<std::size_t>(b)] = -1;
    queue.push_back(b);
  }
  int hit = -1;
  while (!queue.empty() && hit < 0) {
    int b = queue.front();
    queue.pop_front();
    for (int nb : t.tree_adj[static_cast<std::size_t>(b)]) {
      if (parent[static_cast<std::size_t>(nb)] != -2) continue;
      parent[static_cast<std::size_t>(nb)] = b;
      if (t.bag_contains(nb, v)) {
        hit = nb;
        break;
      }
      queue.push_back(nb);
    }
  }
  if (hit < 0) throw std::invalid_argument("bag_path: vertices in different components");

  BagPath out;
  for (int b = hit; b != -1; b = parent[static_cast<std::size_t>(b)]) out.bags.push_back(b);
  std::reverse(out.bags.begin(), out.bags.end());
  for (std::size_t i = 0; i + 1 < out.bags.size(); ++i) {
    const auto& a = t.bags[static_cast<std::size_t>(out.bags[i])];
    const auto& b = t.bags[static_cast<std::size_t>(out.bags[i + 1])];
    std::vector<Vertex> sep;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(sep));
    out.separators.push_back(std::move(sep));
  }
  return out;
}

}  // namespace chedit
