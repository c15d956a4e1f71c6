#include "chedit/solver.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <stdexcept>

#include "chedit/hole.hpp"

namespace chedit {

namespace {

using Clock = std::chrono::steady_clock;

EditingSet compose(const EditingSet& first, const EditingSet& second) {
  EditingSet out = first;
  out.deleted_vertices.insert(out.deleted_vertices.end(), second.deleted_vertices.begin(),
                              second.deleted_vertices.end());
  out.deleted_edges.insert(out.deleted_edges.end(), second.deleted_edges.begin(),
                           second.deleted_edges.end());
  out.added_edges.insert(out.added_edges.end(), second.added_edges.begin(),
                         second.added_edges.end());
  out.normalize();
  // Cancel delete/re-add pairs: the branch deleted an edge and a deeper
  // branch added it back (or vice versa); the net effect is none.
  std::vector<Edge> carried;
  std::set_intersection(out.deleted_edges.begin(), out.deleted_edges.end(),
                        out.added_edges.begin(), out.added_edges.end(),
                        std::back_inserter(carried));
  if (!carried.empty()) {
    auto drop = [&](std::vector<Edge>& v) {
      std::erase_if(v, [&](const Edge& e) {
        return std::binary_search(carried.begin(), carried.end(), e);
      });
    };
    drop(out.deleted_edges);
    drop(out.added_edges);
  }
  return out;
}

struct CompressCtx {
  const Graph& root;  // the instance graph all editing sets are expressed against
  const VertexSet& root_modulator;
  const SolverOptions& opts;
  SolveStats* stats;
};

// Expands an edit consisting of vertex deletions, edge deletions and edge
// additions into child nodes. Every edited edge with both endpoints outside
// the modulator contributes its smaller endpoint to a set X_F; children
// enumerate which subset D of X_F is deleted now, forbidding the rest
// (added to the modulator) so that graph - modulator stays chordal.
void expand_edit(const SearchNode& node, const CompressCtx& ctx,
                 const std::vector<Vertex>& del_vertices, const std::vector<Edge>& del_edges,
                 const std::vector<Edge>& add_edges, std::vector<SearchNode>& out) {
  SizeTriple cost{static_cast<int>(del_vertices.size()), static_cast<int>(del_edges.size()),
                  static_cast<int>(add_edges.size())};
  if (cost.a1 > node.budget.a1 || cost.a2 > node.budget.a2 || cost.a3 > node.budget.a3) return;

  // Filter out dirty branches: deleting an edge added deeper in the branch
  // (absent from the root) or re-adding a root edge deleted earlier.
  for (const auto& [u, v] : del_edges)
    if (!ctx.root.has_edge(u, v)) return;
  for (const auto& [u, v] : add_edges)
    if (ctx.root.has_edge(u, v)) return;
  for (Vertex v : del_vertices)
    if (node.modulator.test(static_cast<std::size_t>(v))) return;

  auto deleted_now = [&](Vertex v) {
    return std::find(del_vertices.begin(), del_vertices.end(), v) != del_vertices.end();
  };
  std::vector<Vertex> xf;
  for (const auto& edges : {del_edges, add_edges})
    for (const auto& [u, v] : edges) {
      if (node.modulator.test(static_cast<std::size_t>(u)) ||
          node.modulator.test(static_cast<std::size_t>(v)))
        continue;  // the edge vanishes from graph - modulator anyway
      if (deleted_now(u) || deleted_now(v)) continue;  // dies with its endpoint
      xf.push_back(std::min(u, v));
    }
  std::sort(xf.begin(), xf.end());
  xf.erase(std::unique(xf.begin(), xf.end()), xf.end());

  const int spare = node.budget.a1 - cost.a1;
  const int max_d = std::min<int>(spare, static_cast<int>(xf.size()));
  // Subsets D of X_F by (size, lexicographic) order.
  std::vector<int> idx;
  for (int size = 0; size <= max_d; ++size) {
    idx.assign(static_cast<std::size_t>(size), 0);
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      SearchNode child;
      child.budget = {node.budget.a1 - cost.a1 - size, node.budget.a2 - cost.a2,
                      node.budget.a3 - cost.a3};
      child.depth = node.depth + 1;
      child.graph = node.graph;
      child.modulator = node.modulator;
      child.applied.deleted_vertices = del_vertices;
      child.applied.deleted_edges = del_edges;
      child.applied.added_edges = add_edges;
      VertexSet forbidden = vector_to_set(static_cast<std::size_t>(node.graph.capacity()), xf);
      for (int i : idx) {
        Vertex v = xf[static_cast<std::size_t>(i)];
        child.applied.deleted_vertices.push_back(v);
        forbidden.reset(static_cast<std::size_t>(v));
      }
      child.applied.normalize();
      child.modulator |= forbidden;
      for (Vertex v : child.applied.deleted_vertices) child.graph.remove_vertex(v);
      for (const auto& [u, v] : del_edges)
        if (child.graph.has_vertex(u) && child.graph.has_vertex(v)) child.graph.remove_edge(u, v);
      for (const auto& [u, v] : add_edges)
        if (child.graph.has_vertex(u) && child.graph.has_vertex(v)) child.graph.add_edge(u, v);
      out.push_back(std::move(child));

      if (size == 0) break;
      int pos = size - 1;
      const int limit = static_cast<int>(xf.size());
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == limit - size + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < size; ++i)
        idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
}

std::vector<SearchNode> short_hole_children(const SearchNode& node, const Hole& h,
                                            const CompressCtx& ctx) {
  auto cands = hole_fix_candidates(node.graph, h, node.modulator, node.budget);
  std::vector<SearchNode> out;
  for (const auto& c : cands) {
    switch (c.kind) {
      case UnitEdit::Kind::delete_vertex:
        expand_edit(node, ctx, {c.v}, {}, {}, out);
        break;
      case UnitEdit::Kind::delete_edge:
        expand_edit(node, ctx, {}, {c.e}, {}, out);
        break;
      case UnitEdit::Kind::add_edge:
        expand_edit(node, ctx, {}, {}, {c.e}, out);
        break;
    }
  }
  return out;
}

std::optional<EditingSet> compress_node(SearchNode node, const CompressCtx& ctx);

std::optional<EditingSet> explore(const SearchNode& node, std::vector<SearchNode> children,
                                  const CompressCtx& ctx, long ceiling) {
  if (ctx.stats) {
    ctx.stats->children += static_cast<long>(children.size());
    ctx.stats->max_children_per_node =
        std::max(ctx.stats->max_children_per_node, static_cast<long>(children.size()));
    ctx.stats->max_child_ceiling = std::max(ctx.stats->max_child_ceiling, ceiling);
  }
  if (static_cast<long>(children.size()) > ceiling)
    throw std::logic_error("compress: branch count exceeds its ceiling");
  for (auto& child : children) {
    if (child.budget.total() >= node.budget.total())
      throw std::logic_error("compress: child did not consume budget");
    EditingSet delta = child.applied;
    auto sub = compress_node(std::move(child), ctx);
    if (sub) return compose(delta, *sub);
  }
  return std::nullopt;
}

std::optional<EditingSet> compress_node(SearchNode node, const CompressCtx& ctx) {
  if (ctx.stats) {
    ++ctx.stats->nodes;
    ctx.stats->max_depth = std::max(ctx.stats->max_depth, node.depth);
  }
  if (node.budget.a1 < 0 || node.budget.a2 < 0 || node.budget.a3 < 0) return std::nullopt;

  auto h = shortest_hole(node.graph);
  if (!h) return EditingSet{};

  const int k = node.budget.total();
  if (k == 0) return std::nullopt;

  if (h->length() <= k + 3) {
    auto children = short_hole_children(node, *h, ctx);
    // ceiling: vertex deletions once, edge edits twice (endpoint split)
    long ceiling = static_cast<long>(h->length()) * (3 + h->length());
    return explore(node, std::move(children), ctx, ceiling);
  }

  HoleContext hc = build_hole_context(node.graph, *h, node.modulator);
  SegmentDecomposition sd = decompose_hole(node.graph, hc);
  if (ctx.opts.validate_structures) deep_validate_contexts(node.graph, hc, sd);

  GuardResult guard;
  if (!ctx.opts.guard_fallback) guard = segment_bound_guard(sd, hc, node.graph, node.budget);
  switch (guard.kind) {
    case GuardResult::Kind::infeasible:
      if (ctx.stats) ++ctx.stats->guard_infeasible;
      return std::nullopt;
    case GuardResult::Kind::forced_vertex: {
      if (ctx.stats) ++ctx.stats->guard_forced;
      if (node.budget.a1 < 1) return std::nullopt;
      std::vector<SearchNode> children;
      expand_edit(node, ctx, {guard.forced}, {}, {}, children);
      return explore(node, std::move(children), ctx, 1);
    }
    case GuardResult::Kind::within_bound:
      if (ctx.stats) ++ctx.stats->guard_within;
      break;
  }

  auto children = break_long_hole(node, hc, sd, ctx.root);
  long ceiling = static_cast<long>(h->length()) * 3  // case 1+2 vertices and split edges
                 + static_cast<long>(sd.segments.size()) * (node.budget.a1 + 1) *
                       (1L << std::min(node.budget.a2, 20));
  return explore(node, std::move(children), ctx, ceiling);
}

}  // namespace

void SolveStats::merge(const SolveStats& other) {
  compress_calls += other.compress_calls;
  nodes += other.nodes;
  children += other.children;
  max_depth = std::max(max_depth, other.max_depth);
  fast_extends += other.fast_extends;
  guard_within += other.guard_within;
  guard_forced += other.guard_forced;
  guard_infeasible += other.guard_infeasible;
  max_children_per_node = std::max(max_children_per_node, other.max_children_per_node);
  max_child_ceiling = std::max(max_child_ceiling, other.max_child_ceiling);
}

CompressionInstance::CompressionInstance(Graph g, SizeTriple b, VertexSet m)
    : graph(std::move(g)), budget(b), modulator(std::move(m)) {
  if (budget.a1 < 0 || budget.a2 < 0 || budget.a3 < 0)
    throw std::invalid_argument("compression instance: negative budget");
  if (static_cast<int>(modulator.size()) != graph.capacity() ||
      !modulator.is_subset_of(graph.vertices()))
    throw std::invalid_argument("compression instance: modulator not within graph");
  if (static_cast<int>(modulator.count()) > budget.total() + 1)
    throw std::invalid_argument("compression instance: modulator larger than k+1");
  if (!is_chordal(induced_subgraph(graph, graph.vertices() - modulator)))
    throw std::invalid_argument("compression instance: graph - modulator is not chordal");
}

Region segment_region(const HoleContext& hc, const PathContext& pc, int i, int j) {
  if (!(0 <= i && i + 3 <= j && j < static_cast<int>(pc.path.size())))
    throw std::invalid_argument("segment_region: bad indices");
  const std::size_t cap = static_cast<std::size_t>(hc.g0.capacity());
  const int cut_left = pc.bag_path[static_cast<std::size_t>(pc.last[static_cast<std::size_t>(i)])];
  const int cut_right = pc.bag_path[static_cast<std::size_t>(pc.first[static_cast<std::size_t>(j)])];
  const int inner = pc.bag_path[static_cast<std::size_t>(pc.last[static_cast<std::size_t>(i)] + 1)];

  std::vector<char> reached(hc.tree.bags.size(), 0);
  std::vector<int> stack;
  if (inner != cut_left && inner != cut_right) {
    stack.push_back(inner);
    reached[static_cast<std::size_t>(inner)] = 1;
  }
  while (!stack.empty()) {
    int b = stack.back();
    stack.pop_back();
    for (int nb : hc.tree.tree_adj[static_cast<std::size_t>(b)]) {
      if (nb == cut_left || nb == cut_right || reached[static_cast<std::size_t>(nb)]) continue;
      reached[static_cast<std::size_t>(nb)] = 1;
      stack.push_back(nb);
    }
  }
  for (int l = pc.last[static_cast<std::size_t>(i)] + 1; l < pc.first[static_cast<std::size_t>(j)];
       ++l)
    if (!reached[static_cast<std::size_t>(pc.bag_path[static_cast<std::size_t>(l)])])
      throw std::logic_error("segment_region: middle bags not in one subtree");

  Region out;
  out.vertices = VertexSet(cap);
  for (std::size_t b = 0; b < reached.size(); ++b)
    if (reached[b]) out.vertices |= vector_to_set(cap, hc.tree.bags[b]);
  out.vertices.set(static_cast<std::size_t>(pc.path[static_cast<std::size_t>(i)]));
  out.vertices.set(static_cast<std::size_t>(pc.path[static_cast<std::size_t>(j)]));
  // Only v_i and v_j among path vertices with index <= i or >= j are present.
  for (int l = 0; l < static_cast<int>(pc.path.size()); ++l) {
    bool inside = out.vertices.test(static_cast<std::size_t>(pc.path[static_cast<std::size_t>(l)]));
    if ((l < i || l > j) && inside)
      throw std::logic_error("segment_region: outside path vertex leaked into the region");
    if (l >= i && l <= j && !inside)
      throw std::logic_error("segment_region: segment path vertex missing from the region");
  }
  out.graph = induced_subgraph(hc.g0, out.vertices);
  return out;
}

std::vector<SearchNode> break_long_hole(const SearchNode& node, const HoleContext& hc,
                                        const SegmentDecomposition& sd, const Graph& root) {
  SolverOptions default_opts;
  CompressCtx ctx{root, node.modulator, default_opts, nullptr};

  std::vector<SearchNode> out;
  const int len = hc.hole.length();
  const int k = node.budget.total();
  const int d = 2 * k + 4;

  // Hole positions of all junctions.
  std::vector<int> junction_pos;
  for (const auto& pd : sd.paths)
    for (const auto& j : pd.junctions) {
      Vertex v = hc.paths[static_cast<std::size_t>(pd.path_index)][static_cast<std::size_t>(j.pos)];
      junction_pos.push_back(hc.hole_pos[static_cast<std::size_t>(v)]);
    }
  std::sort(junction_pos.begin(), junction_pos.end());

  std::vector<int> dist(static_cast<std::size_t>(len), len);
  for (int p = 0; p < len; ++p)
    for (int jp : junction_pos) {
      int delta = std::abs(p - jp);
      dist[static_cast<std::size_t>(p)] =
          std::min(dist[static_cast<std::size_t>(p)], std::min(delta, len - delta));
    }

  std::vector<char> vertex_done(static_cast<std::size_t>(len), 0);
  std::vector<char> edge_done(static_cast<std::size_t>(len), 0);

  // Case 1: delete a junction vertex, or a hole edge between M and V_0.
  for (int jp : junction_pos) {
    if (vertex_done[static_cast<std::size_t>(jp)]) continue;
    vertex_done[static_cast<std::size_t>(jp)] = 1;
    Vertex v = hc.hole.vertices[static_cast<std::size_t>(jp)];
    if (node.budget.a1 >= 1 && !node.modulator.test(static_cast<std::size_t>(v)))
      expand_edit(node, ctx, {v}, {}, {}, out);
  }
  if (node.budget.a2 >= 1)
    for (int p = 0; p < len; ++p) {
      Vertex u = hc.hole.vertices[static_cast<std::size_t>(p)];
      Vertex w = hc.hole.vertices[static_cast<std::size_t>((p + 1) % len)];
      bool um = node.modulator.test(static_cast<std::size_t>(u));
      bool wm = node.modulator.test(static_cast<std::size_t>(w));
      if (um == wm) continue;  // M x V_0 edges only
      edge_done[static_cast<std::size_t>(p)] = 1;
      expand_edit(node, ctx, {}, {make_edge(u, w)}, {}, out);
    }

  // Case 2: deletions within hole-distance d of a junction.
  if (node.budget.a1 >= 1)
    for (int p = 0; p < len; ++p) {
      if (vertex_done[static_cast<std::size_t>(p)] || dist[static_cast<std::size_t>(p)] > d)
        continue;
      Vertex v = hc.hole.vertices[static_cast<std::size_t>(p)];
      if (node.modulator.test(static_cast<std::size_t>(v))) continue;
      expand_edit(node, ctx, {v}, {}, {}, out);
    }
  if (node.budget.a2 >= 1)
    for (int p = 0; p < len; ++p) {
      if (edge_done[static_cast<std::size_t>(p)]) continue;
      if (dist[static_cast<std::size_t>(p)] > d || dist[static_cast<std::size_t>((p + 1) % len)] > d)
        continue;
      Vertex u = hc.hole.vertices[static_cast<std::size_t>(p)];
      Vertex w = hc.hole.vertices[static_cast<std::size_t>((p + 1) % len)];
      expand_edit(node, ctx, {}, {make_edge(u, w)}, {}, out);
    }

  // Case 3: break a long segment with a minimum mixed separator, one child
  // per feasible (a, b_min(a)) profile entry.
  for (const auto& seg : sd.segments) {
    if (seg.length() < 2 * d + 2) continue;
    const auto& pd = sd.paths[static_cast<std::size_t>(seg.path_index)];
    if (!pd.ctx) continue;
    const PathContext& pc = *pd.ctx;
    Region region = segment_region(hc, pc, seg.s, seg.t);
    const std::size_t cap = static_cast<std::size_t>(node.graph.capacity());
    VertexSet xs(cap), ys(cap);
    for (int i = seg.s; i <= seg.s + d; ++i)
      xs.set(static_cast<std::size_t>(pc.path[static_cast<std::size_t>(i)]));
    for (int i = seg.t - d; i <= seg.t; ++i)
      ys.set(static_cast<std::size_t>(pc.path[static_cast<std::size_t>(i)]));
    if (!xs.is_subset_of(region.vertices) || !ys.is_subset_of(region.vertices))
      throw std::logic_error("break_long_hole: terminals escaped the region");

    auto profile = min_b_profile(region.graph, xs, ys, node.budget.a1, node.budget.a2);
    std::vector<MixedSeparator> used;
    for (const auto& entry : profile) {
      if (!entry.b || !entry.separator) continue;
      if (std::find(used.begin(), used.end(), *entry.separator) != used.end()) continue;
      used.push_back(*entry.separator);
      expand_edit(node, ctx, entry.separator->vertices, entry.separator->edges, {}, out);
    }
  }
  return out;
}

std::optional<EditingSet> compress(const CompressionInstance& inst, const SolverOptions& opts,
                                   SolveStats* stats) {
  if (stats) ++stats->compress_calls;
  CompressCtx ctx{inst.graph, inst.modulator, opts, stats};
  SearchNode root{inst.graph, inst.budget, inst.modulator, {}, 0};
  auto result = compress_node(std::move(root), ctx);
  if (result) {
    result->normalize();
    validate_editing_set(inst.graph, *result);
    for (Vertex v : result->deleted_vertices)
      if (inst.modulator.test(static_cast<std::size_t>(v)))
        throw std::logic_error("compress: solution deletes a modulator vertex");
    if (!leq(size_of(*result), inst.budget))
      throw std::logic_error("compress: solution exceeds the budget");
  }
  return result;
}

namespace {

std::optional<EditingSet> try_subsets(const Graph& prefix, const std::vector<Vertex>& x,
                                      const SizeTriple& budget, const SolverOptions& opts,
                                      SolveStats* stats) {
  const std::size_t cap = static_cast<std::size_t>(prefix.capacity());
  // All X_- subsets of X with |X_-| <= k1, by (size, lexicographic) order.
  std::vector<std::vector<Vertex>> subsets;
  const int n = static_cast<int>(x.size());
  for (int size = 0; size <= std::min(budget.a1, n); ++size) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::vector<Vertex> subset;
      for (int i : idx) subset.push_back(x[static_cast<std::size_t>(i)]);
      subsets.push_back(std::move(subset));
      if (size == 0) break;
      int pos = size - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - size + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < size; ++i)
        idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
  }

  auto attempt = [&](const std::vector<Vertex>& x_minus,
                     SolveStats* local) -> std::optional<EditingSet> {
    Graph reduced = prefix;
    for (Vertex v : x_minus) reduced.remove_vertex(v);
    VertexSet mod = vector_to_set(cap, x);
    for (Vertex v : x_minus) mod.reset(static_cast<std::size_t>(v));
    CompressionInstance inst(std::move(reduced),
                             {budget.a1 - static_cast<int>(x_minus.size()), budget.a2, budget.a3},
                             std::move(mod));
    auto sub = compress(inst, opts, local);
    if (!sub) return std::nullopt;
    EditingSet lifted = *sub;
    lifted.deleted_vertices.insert(lifted.deleted_vertices.end(), x_minus.begin(), x_minus.end());
    lifted.normalize();
    return lifted;
  };

  if (opts.threads <= 1) {
    for (const auto& x_minus : subsets)
      if (auto found = attempt(x_minus, stats)) return found;
    return std::nullopt;
  }

  // Parallel window over the subset list; results identical to sequential
  // order because completion is consumed in submission order.
  std::vector<SolveStats> local(subsets.size());
  std::vector<std::future<std::optional<EditingSet>>> futures(subsets.size());
  std::size_t launched = 0, window = static_cast<std::size_t>(opts.threads);
  std::optional<EditingSet> found;
  for (std::size_t i = 0; i < subsets.size() && !found; ++i) {
    while (launched < subsets.size() && launched < i + window) {
      futures[launched] = std::async(std::launch::async, attempt, std::cref(subsets[launched]),
                                     &local[launched]);
      ++launched;
    }
    found = futures[i].get();
  }
  for (std::size_t i = 0; i < launched; ++i)
    if (futures[i].valid()) futures[i].wait();
  if (stats)
    for (const auto& l : local) stats->merge(l);
  return found;
}

}  // namespace

std::optional<EditingSet> solve(const Graph& g, int k1, int k2, int k3, const SolverOptions& opts,
                                SolveStats* stats) {
  if (k1 < 0 || k2 < 0 || k3 < 0) throw std::invalid_argument("solve: negative budget");
  const auto start = Clock::now();
  auto finish = [&](std::optional<EditingSet> r) {
    if (stats)
      stats->wall_ms +=
          std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(Clock::now() - start)
              .count();
    return r;
  };

  const SizeTriple budget{k1, k2, k3};
  const auto order = g.vertex_list();
  const std::size_t cap = static_cast<std::size_t>(g.capacity());

  EditingSet current;
  VertexSet prefix_set(cap);
  for (std::size_t i = 0; i < order.size(); ++i) {
    prefix_set.set(static_cast<std::size_t>(order[i]));
    Graph prefix = induced_subgraph(g, prefix_set);

    if (opts.fast_extend) {
      if (is_chordal(apply_editing(prefix, current))) {
        if (stats) ++stats->fast_extends;
        continue;
      }
    }

    std::vector<Vertex> x = current.deleted_vertices;
    x.push_back(order[i]);
    for (const auto& edges : {current.deleted_edges, current.added_edges})
      for (const auto& [u, v] : edges) x.push_back(std::min(u, v));
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());

    auto found = try_subsets(prefix, x, budget, opts, stats);
    if (!found) return finish(std::nullopt);
    current = std::move(*found);
  }

  validate_editing_set(g, current);
  if (!leq(size_of(current), budget)) throw std::logic_error("solve: budget exceeded");
  if (!is_chordal(apply_editing(g, current)))
    throw std::logic_error("solve: result is not chordal");
  return finish(current);
}

Graph preprocess_simplicial(const Graph& g) {
  Graph out = g;
  while (true) {
    VertexSet simp = simplicial_vertices(out);
    if (simp.none()) return out;
    for_each_vertex(simp, [&](Vertex v) { out.remove_vertex(v); });
  }
}

}  // namespace chedit
