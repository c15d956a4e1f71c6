#include "chedit/segments.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chedit {

namespace {

[[noreturn]] void structural_bug(const std::string& what) {
  throw std::logic_error("hole context: " + what + " (certifies a shorter hole; caller bug)");
}

}  // namespace

int HoleContext::hole_distance(Vertex u, Vertex v) const {
  int pu = hole_pos[static_cast<std::size_t>(u)];
  int pv = hole_pos[static_cast<std::size_t>(v)];
  if (pu < 0 || pv < 0) throw std::invalid_argument("hole_distance: vertex not on hole");
  int len = hole.length();
  int d = std::abs(pu - pv);
  return std::min(d, len - d);
}

HoleContext build_hole_context(const Graph& g, const Hole& h, const VertexSet& m) {
  if (!verify_hole(g, h)) throw std::invalid_argument("build_hole_context: not a hole of g");
  if (static_cast<int>(m.size()) != g.capacity() || !m.is_subset_of(g.vertices()))
    throw std::invalid_argument("build_hole_context: modulator not within graph");
  if (!is_chordal(induced_subgraph(g, g.vertices() - m)))
    throw std::invalid_argument("build_hole_context: modulator is not a hole cover");

  HoleContext hc;
  hc.hole = h;
  hc.host = g;
  hc.modulator = m;
  const std::size_t cap = static_cast<std::size_t>(g.capacity());

  hc.hole_pos.assign(cap, -1);
  for (int i = 0; i < h.length(); ++i)
    hc.hole_pos[static_cast<std::size_t>(h.vertices[static_cast<std::size_t>(i)])] = i;

  // A: common neighbors of V(H).
  hc.common = g.vertices();
  for (Vertex v : h.vertices) hc.common &= g.neighbors(v);
  if (!is_clique(g, hc.common)) structural_bug("common neighborhood A is not a clique");
  hc.common_m = hc.common & m;
  hc.common_free = hc.common - m;
  hc.v0 = g.vertices() - m - hc.common;

  for (Vertex v : h.vertices)
    if (hc.common_free.test(static_cast<std::size_t>(v))) structural_bug("hole meets A_0");

  // Every vertex outside A sees at most three hole vertices, consecutively.
  const int len = h.length();
  for_each_vertex(g.vertices() - hc.common, [&](Vertex v) {
    std::vector<int> hits;
    for_each_vertex(g.neighbors(v), [&](Vertex u) {
      if (hc.hole_pos[static_cast<std::size_t>(u)] >= 0)
        hits.push_back(hc.hole_pos[static_cast<std::size_t>(u)]);
    });
    if (hc.hole_pos[static_cast<std::size_t>(v)] >= 0) return;  // hole vertices see their 3-window
    if (hits.empty()) return;
    if (hits.size() > 3) structural_bug("vertex outside A sees more than 3 hole vertices");
    bool windowed = false;
    for (int s = 0; s < len && !windowed; ++s) {
      bool all = true;
      for (int p : hits)
        if (p != s && p != (s + 1) % len && p != (s + 2) % len) all = false;
      if (all) windowed = true;
    }
    if (!windowed) structural_bug("hole neighbors of a vertex outside A are not consecutive");
  });

  hc.g0 = induced_subgraph(g, hc.v0);
  auto cr = check_chordal(hc.g0);
  if (!cr.chordal) structural_bug("G_0 is not chordal");
  hc.tree = clique_tree(hc.g0);

  // Maximal runs of the hole outside M, in cycle order.
  bool hits_m = false;
  for (Vertex v : h.vertices)
    if (m.test(static_cast<std::size_t>(v))) hits_m = true;
  if (!hits_m) structural_bug("hole avoids the modulator");
  int start = 0;
  while (!m.test(static_cast<std::size_t>(h.vertices[static_cast<std::size_t>(start)]))) ++start;
  std::vector<Vertex> run;
  for (int off = 1; off <= len; ++off) {
    Vertex v = h.vertices[static_cast<std::size_t>((start + off) % len)];
    if (m.test(static_cast<std::size_t>(v))) {
      if (!run.empty()) hc.paths.push_back(std::move(run));
      run = {};
    } else {
      run.push_back(v);
    }
  }
  if (!run.empty()) hc.paths.push_back(std::move(run));
  return hc;
}

PathContext build_path_context(const HoleContext& hc, int path_index) {
  const auto& path = hc.paths[static_cast<std::size_t>(path_index)];
  const int p = static_cast<int>(path.size());
  if (p <= 3) throw std::invalid_argument("build_path_context: path too short (p <= 3)");

  PathContext pc;
  pc.path_index = path_index;
  pc.path = path;
  const Graph& g0 = hc.g0;
  const std::size_t cap = static_cast<std::size_t>(g0.capacity());

  if (g0.has_edge(path.front(), path.back()))
    structural_bug("endpoints of a long path are adjacent");

  BagPath bp = bag_path(hc.tree, path.front(), path.back());
  pc.bag_path = bp.bags;
  pc.separators = bp.separators;
  const int q = static_cast<int>(pc.bag_path.size());
  if (q <= 2) structural_bug("bag path too short for p > 3");

  pc.vertex_first.assign(cap, -1);
  pc.vertex_last.assign(cap, -1);
  for (int l = 0; l < q; ++l)
    for (Vertex v : hc.tree.bags[static_cast<std::size_t>(pc.bag_path[static_cast<std::size_t>(l)])]) {
      if (pc.vertex_first[static_cast<std::size_t>(v)] < 0) pc.vertex_first[static_cast<std::size_t>(v)] = l;
      pc.vertex_last[static_cast<std::size_t>(v)] = l;
    }

  pc.first.resize(static_cast<std::size_t>(p));
  pc.last.resize(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) {
    pc.first[static_cast<std::size_t>(i)] = pc.vertex_first[static_cast<std::size_t>(path[static_cast<std::size_t>(i)])];
    pc.last[static_cast<std::size_t>(i)] = pc.vertex_last[static_cast<std::size_t>(path[static_cast<std::size_t>(i)])];
    if (pc.first[static_cast<std::size_t>(i)] < 0) structural_bug("path vertex misses the bag path");
  }
  if (pc.first[0] != 0 || pc.last[0] != 0) structural_bug("v_1 appears beyond the first bag");
  if (pc.first[static_cast<std::size_t>(p - 1)] != q - 1 ||
      pc.last[static_cast<std::size_t>(p - 1)] != q - 1)
    structural_bug("v_p appears before the last bag");
  for (int i = 1; i + 1 < p; ++i) {
    if (!(pc.first[static_cast<std::size_t>(i)] <= pc.last[static_cast<std::size_t>(i - 1)] &&
          pc.last[static_cast<std::size_t>(i - 1)] < pc.first[static_cast<std::size_t>(i + 1)] &&
          pc.first[static_cast<std::size_t>(i + 1)] <= pc.last[static_cast<std::size_t>(i)]))
      structural_bug("interval ordering of first/last violated");
  }

  // V_1: bags of the middle subtree of T - {K_1, K_q}, plus the endpoints.
  const int first_bag = pc.bag_path.front(), last_bag = pc.bag_path.back();
  std::vector<char> reached(hc.tree.bags.size(), 0);
  std::vector<int> stack{pc.bag_path[1]};
  reached[static_cast<std::size_t>(pc.bag_path[1])] = 1;
  while (!stack.empty()) {
    int b = stack.back();
    stack.pop_back();
    for (int nb : hc.tree.tree_adj[static_cast<std::size_t>(b)]) {
      if (nb == first_bag || nb == last_bag || reached[static_cast<std::size_t>(nb)]) continue;
      reached[static_cast<std::size_t>(nb)] = 1;
      stack.push_back(nb);
    }
  }
  for (int l = 1; l + 1 < q; ++l)
    if (!reached[static_cast<std::size_t>(pc.bag_path[static_cast<std::size_t>(l)])])
      structural_bug("middle bags not in one subtree");
  pc.v1 = VertexSet(cap);
  for (std::size_t b = 0; b < reached.size(); ++b)
    if (reached[b]) pc.v1 |= vector_to_set(cap, hc.tree.bags[b]);
  pc.v1.set(static_cast<std::size_t>(path.front()));
  pc.v1.set(static_cast<std::size_t>(path.back()));

  // V_2: endpoints plus vertices lying in at least two bags of the bag path.
  pc.v2 = VertexSet(cap);
  pc.v2.set(static_cast<std::size_t>(path.front()));
  pc.v2.set(static_cast<std::size_t>(path.back()));
  for_each_vertex(g0.vertices(), [&](Vertex v) {
    if (pc.vertex_first[static_cast<std::size_t>(v)] >= 0 &&
        pc.vertex_last[static_cast<std::size_t>(v)] > pc.vertex_first[static_cast<std::size_t>(v)])
      pc.v2.set(static_cast<std::size_t>(v));
  });

  // V_2 and A_0 must be completely connected (else there is a hole in G - M).
  for_each_vertex(pc.v2, [&](Vertex x) {
    if ((hc.common_free - hc.host.neighbors(x)).any())
      structural_bug("V_2 and A_0 not completely connected");
  });

  // Branches: components of V_1 minus V_2 inside G_0.
  VertexSet hanging = pc.v1 - pc.v2;
  if (hanging.any()) {
    Graph sub = induced_subgraph(g0, hanging);
    for (const auto& comp : connected_components(sub)) {
      Branch br;
      br.vertices = vector_to_set(cap, comp);
      br.v0_neighbors = VertexSet(cap);
      for (Vertex c : comp) br.v0_neighbors |= g0.neighbors(c);
      br.v0_neighbors -= br.vertices;
      if (!is_clique(g0, br.v0_neighbors)) structural_bug("branch neighborhood is not a clique");
      bool in_middle_bag = false;
      for (int l = 1; l + 1 < q; ++l) {
        VertexSet bag = vector_to_set(cap, hc.tree.bags[static_cast<std::size_t>(pc.bag_path[static_cast<std::size_t>(l)])]);
        if (br.v0_neighbors.is_subset_of(bag)) in_middle_bag = true;
      }
      if (!in_middle_bag) structural_bug("branch neighborhood not inside a middle bag");
      for (int i = 0; i < p; ++i) {
        VertexSet closed = g0.closed_neighborhood(path[static_cast<std::size_t>(i)]);
        if (br.v0_neighbors.is_subset_of(closed)) br.near.push_back(i);
      }
      if (br.near.empty()) structural_bug("branch near no path vertex");
      if (br.near.size() > 3) structural_bug("branch near more than three path vertices");
      pc.branches.push_back(std::move(br));
    }
  }
  return pc;
}

std::vector<Junction> classify_junctions(const PathContext& pc, const Graph& g,
                                         const HoleContext& hc) {
  const std::size_t cap = static_cast<std::size_t>(g.capacity());
  const VertexSet outside = hc.modulator - hc.common_m;  // M minus A_M
  const int p = static_cast<int>(pc.path.size());

  std::vector<Junction> out;
  for (int i = 0; i < p; ++i) {
    Vertex v = pc.path[static_cast<std::size_t>(i)];
    Junction j;
    j.pos = i;
    j.witnesses1 = VertexSet(cap);
    j.witnesses2 = VertexSet(cap);

    // (1) some bag of T containing v is adjacent to M minus A_M
    for (int b : hc.tree.bags_of[static_cast<std::size_t>(v)]) {
      VertexSet bag = vector_to_set(cap, hc.tree.bags[static_cast<std::size_t>(b)]);
      for_each_vertex(outside, [&](Vertex w) {
        if ((g.neighbors(w) & bag).any()) j.witnesses1.set(static_cast<std::size_t>(w));
      });
    }
    if (j.witnesses1.any()) j.types |= 1u;

    // (2)/(3): branches near v
    for (const auto& br : pc.branches) {
      if (!std::binary_search(br.near.begin(), br.near.end(), i)) continue;
      for_each_vertex(outside, [&](Vertex w) {
        if ((g.neighbors(w) & br.vertices).any()) j.witnesses2.set(static_cast<std::size_t>(w));
      });
      if (!is_simplicial_set(g, br.vertices)) j.types |= 4u;
    }
    if (j.witnesses2.any()) j.types |= 2u;

    // (4) N_{V_2}(v) not completely connected to A
    bool incomplete = false;
    for_each_vertex(g.neighbors(v) & pc.v2, [&](Vertex x) {
      if ((hc.common - g.neighbors(x)).any()) incomplete = true;
    });
    if (incomplete) j.types |= 8u;

    if (j.types != 0) out.push_back(std::move(j));
  }

  // Endpoints are adjacent to M on the hole, hence always junctions.
  if (out.empty() || out.front().pos != 0 || out.back().pos != p - 1)
    structural_bug("path endpoints failed to classify as junctions");
  return out;
}

std::vector<Segment> decompose_segments(std::span<const PathDecomposition> paths) {
  std::vector<Segment> out;
  for (const auto& pd : paths) {
    if (pd.junctions.size() == 1) {
      out.push_back({pd.path_index, pd.junctions[0].pos, pd.junctions[0].pos});
      continue;
    }
    for (std::size_t i = 0; i + 1 < pd.junctions.size(); ++i)
      out.push_back({pd.path_index, pd.junctions[i].pos, pd.junctions[i + 1].pos});
  }
  return out;
}

SegmentDecomposition decompose_hole(const Graph& g, const HoleContext& hc) {
  SegmentDecomposition sd;
  const std::size_t cap = static_cast<std::size_t>(g.capacity());
  for (int idx = 0; idx < static_cast<int>(hc.paths.size()); ++idx) {
    const auto& path = hc.paths[static_cast<std::size_t>(idx)];
    PathDecomposition pd;
    pd.path_index = idx;
    if (static_cast<int>(path.size()) > 3) {
      pd.ctx = build_path_context(hc, idx);
      pd.junctions = classify_junctions(*pd.ctx, g, hc);
    } else {
      // Endpoints of every path are hole-adjacent to M, hence junctions.
      auto endpoint_junction = [&](int pos) {
        Junction j;
        j.pos = pos;
        j.types = 1u;
        j.witnesses1 = VertexSet(cap);
        j.witnesses2 = VertexSet(cap);
        Vertex v = path[static_cast<std::size_t>(pos)];
        int hp = hc.hole_pos[static_cast<std::size_t>(v)];
        int len = hc.hole.length();
        for (int nb : {(hp + 1) % len, (hp + len - 1) % len}) {
          Vertex w = hc.hole.vertices[static_cast<std::size_t>(nb)];
          if (hc.modulator.test(static_cast<std::size_t>(w)) &&
              !hc.common_m.test(static_cast<std::size_t>(w)))
            j.witnesses1.set(static_cast<std::size_t>(w));
        }
        return j;
      };
      pd.junctions.push_back(endpoint_junction(0));
      if (path.size() > 1)
        pd.junctions.push_back(endpoint_junction(static_cast<int>(path.size()) - 1));
    }
    sd.paths.push_back(std::move(pd));
  }
  sd.segments = decompose_segments(sd.paths);
  return sd;
}

long segment_count_bound(int modulator_size, int k) {
  return static_cast<long>(modulator_size) * (12L * k * k + 87L * k + 75L);
}

std::vector<std::pair<int, int>> witness_pairs(const std::vector<int>& positions,
                                               const std::vector<char>& is_type1) {
  std::vector<std::pair<int, int>> out;
  const std::size_t groups = positions.size() / 5;
  for (std::size_t gi = 0; gi < groups; ++gi) {
    bool has_type1 = false;
    for (std::size_t off = 0; off < 5; ++off)
      if (is_type1[gi * 5 + off]) has_type1 = true;
    if (has_type1) continue;
    out.emplace_back(positions[gi * 5 + 1], positions[gi * 5 + 4]);
  }
  return out;
}

GuardResult conclude_from_hole_family(std::vector<Hole> holes, const VertexSet& a0, int k) {
  std::map<Vertex, int> count;
  for (const auto& h : holes)
    for (Vertex v : h.vertices)
      if (a0.test(static_cast<std::size_t>(v))) ++count[v];
  for (const auto& [v, c] : count)
    if (c >= k + 1) return {GuardResult::Kind::forced_vertex, v, std::move(holes)};
  return {GuardResult::Kind::infeasible, -1, std::move(holes)};
}

namespace {

// Induced path from `from` to `to` whose internal vertices stay inside
// `internal`; shortest-path inside the restricted subgraph.
std::optional<std::vector<Vertex>> induced_path_within(const Graph& g, Vertex from, Vertex to,
                                                       const VertexSet& internal) {
  VertexSet allowed = internal;
  allowed.set(static_cast<std::size_t>(from));
  allowed.set(static_cast<std::size_t>(to));
  allowed &= g.vertices();
  Graph sub = induced_subgraph(g, allowed);
  return shortest_path(sub, from, to, VertexSet(static_cast<std::size_t>(g.capacity())));
}

// A hole through x (and forcibly through y, the only non-chordal ingredient)
// inside g restricted to sub.
std::optional<Hole> hole_through(const Graph& g, const VertexSet& sub, Vertex x) {
  Graph s = induced_subgraph(g, sub);
  std::optional<Hole> out;
  auto nbrs = set_to_vector(s.neighbors(x));
  for (std::size_t i = 0; i < nbrs.size() && !out; ++i)
    for (std::size_t j = i + 1; j < nbrs.size() && !out; ++j) {
      if (s.has_edge(nbrs[i], nbrs[j])) continue;
      VertexSet forbidden = s.closed_neighborhood(x);
      forbidden.reset(static_cast<std::size_t>(nbrs[i]));
      forbidden.reset(static_cast<std::size_t>(nbrs[j]));
      auto path = shortest_path(s, nbrs[i], nbrs[j], forbidden);
      if (!path) continue;
      std::vector<Vertex> cycle{x};
      cycle.insert(cycle.end(), path->begin(), path->end());
      out = canonical_hole(cycle);
    }
  return out;
}

// Case (i) of the bound proof: k+1 holes through w, pairwise meeting only
// in w, built from branch witnesses of paired type-(2) junctions.
std::optional<std::vector<Hole>> build_witness_holes(const Graph& g, const HoleContext& hc,
                                                     const PathDecomposition& pd, Vertex w,
                                                     int k) {
  const auto& pc = *pd.ctx;
  std::vector<int> positions;
  std::vector<char> type1;
  for (const auto& j : pd.junctions) {
    bool w1 = j.witnesses1.test(static_cast<std::size_t>(w));
    bool w2 = j.witnesses2.test(static_cast<std::size_t>(w));
    if (!w1 && !w2) continue;
    positions.push_back(j.pos);
    type1.push_back(w1 ? 1 : 0);
  }
  auto pairs = witness_pairs(positions, type1);
  if (static_cast<int>(pairs.size()) < k + 1) return std::nullopt;

  auto branch_near_adjacent = [&](int pos) -> const Branch* {
    for (const auto& br : pc.branches)
      if (std::binary_search(br.near.begin(), br.near.end(), pos) &&
          (g.neighbors(w) & br.vertices).any())
        return &br;
    return nullptr;
  };

  std::vector<Hole> holes;
  for (const auto& [lpos, rpos] : pairs) {
    if (static_cast<int>(holes.size()) == k + 1) break;
    const Branch* bl = branch_near_adjacent(lpos);
    const Branch* br = branch_near_adjacent(rpos);
    if (!bl || !br || lpos + 1 >= rpos - 1) return std::nullopt;
    const auto& path = pc.path;
    VertexSet left_internal = bl->vertices;
    if (lpos > 0) left_internal.set(static_cast<std::size_t>(path[static_cast<std::size_t>(lpos - 1)]));
    left_internal.set(static_cast<std::size_t>(path[static_cast<std::size_t>(lpos)]));
    auto pl = induced_path_within(g, w, path[static_cast<std::size_t>(lpos + 1)], left_internal);
    VertexSet right_internal = br->vertices;
    if (rpos + 1 < static_cast<int>(path.size()))
      right_internal.set(static_cast<std::size_t>(path[static_cast<std::size_t>(rpos + 1)]));
    right_internal.set(static_cast<std::size_t>(path[static_cast<std::size_t>(rpos)]));
    auto pr = induced_path_within(g, w, path[static_cast<std::size_t>(rpos - 1)], right_internal);
    if (!pl || !pr) return std::nullopt;
    // w, left path to v_{l+1}, middle of P, right path back to w.
    std::vector<Vertex> cycle(pl->begin(), pl->end());  // starts at w
    for (int i = lpos + 2; i <= rpos - 2; ++i) cycle.push_back(path[static_cast<std::size_t>(i)]);
    for (auto it = pr->rbegin(); it != pr->rend(); ++it)
      if (*it != w) cycle.push_back(*it);
    Hole h = canonical_hole(cycle);
    if (!verify_hole(g, h)) return std::nullopt;
    holes.push_back(std::move(h));
  }
  if (static_cast<int>(holes.size()) < k + 1) return std::nullopt;
  for (std::size_t i = 0; i < holes.size(); ++i)
    for (std::size_t j = i + 1; j < holes.size(); ++j) {
      std::vector<Vertex> a = holes[i].vertices, b = holes[j].vertices, inter;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
      if (inter != std::vector<Vertex>{w}) return std::nullopt;
    }
  return holes;
}

// Case (ii): a hole local to a type-(3)/(4) junction.
std::optional<Hole> build_b_hole(const Graph& g, const HoleContext& hc, const PathContext& pc,
                                 const Junction& j, int window_left_pos, int window_right_pos) {
  Vertex v = pc.path[static_cast<std::size_t>(j.pos)];
  const std::size_t cap = static_cast<std::size_t>(g.capacity());

  // A nonadjacent pair x in N_{V_2}(v), y in A.
  Vertex px = -1, py = -1;
  for_each_vertex(g.neighbors(v) & pc.v2, [&](Vertex x) {
    if (px >= 0) return;
    VertexSet missing = hc.common - g.neighbors(x);
    if (missing.any()) {
      px = x;
      py = static_cast<Vertex>(missing.find_first());
    }
  });
  if (px >= 0) {
    const int wl = pc.last[static_cast<std::size_t>(window_left_pos)];
    const int wr = pc.first[static_cast<std::size_t>(window_right_pos)];
    VertexSet sub(cap);
    for_each_vertex(pc.v2, [&](Vertex z) {
      int zf = pc.vertex_first[static_cast<std::size_t>(z)];
      int zl = pc.vertex_last[static_cast<std::size_t>(z)];
      if (zf >= 0 && zf <= wr && zl >= wl) sub.set(static_cast<std::size_t>(z));
    });
    sub.set(static_cast<std::size_t>(py));
    if (!sub.test(static_cast<std::size_t>(px))) return std::nullopt;
    return hole_through(g, sub, px);
  }

  // Otherwise a branch near v that is not simplicial: a hole inside N[C].
  for (const auto& br : pc.branches) {
    if (!std::binary_search(br.near.begin(), br.near.end(), j.pos)) continue;
    if (is_simplicial_set(g, br.vertices)) continue;
    VertexSet closed = br.vertices;
    for_each_vertex(br.vertices, [&](Vertex c) { closed |= g.neighbors(c); });
    auto res = check_chordal(induced_subgraph(g, closed & g.vertices()));
    if (!res.chordal) return res.hole;
  }
  return std::nullopt;
}

}  // namespace

namespace {

void collect_induced_paths(const Graph& g0, Vertex target, std::vector<Vertex>& cur,
                           VertexSet& on_path, VertexSet& out) {
  Vertex last = cur.back();
  if (last == target) {
    for (Vertex v : cur) out.set(static_cast<std::size_t>(v));
    return;
  }
  auto nbrs = set_to_vector(g0.neighbors(last));
  for (Vertex u : nbrs) {
    if (on_path.test(static_cast<std::size_t>(u))) continue;
    bool induced = true;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i)
      if (g0.has_edge(cur[i], u)) induced = false;
    if (!induced) continue;
    cur.push_back(u);
    on_path.set(static_cast<std::size_t>(u));
    collect_induced_paths(g0, target, cur, on_path, out);
    on_path.reset(static_cast<std::size_t>(u));
    cur.pop_back();
  }
}

}  // namespace

void deep_validate_contexts(const Graph& g, const HoleContext& hc,
                            const SegmentDecomposition& sd) {
  (void)g;
  if (hc.v0.count() > 12) return;
  for (const auto& pd : sd.paths) {
    if (!pd.ctx) continue;
    const PathContext& pc = *pd.ctx;
    VertexSet brute(static_cast<std::size_t>(hc.g0.capacity()));
    std::vector<Vertex> cur{pc.path.front()};
    VertexSet on_path(static_cast<std::size_t>(hc.g0.capacity()));
    on_path.set(static_cast<std::size_t>(pc.path.front()));
    collect_induced_paths(hc.g0, pc.path.back(), cur, on_path, brute);
    if (brute != pc.v2)
      throw std::logic_error("deep validation: V_2 differs from the induced-path enumeration");
  }
}

GuardResult segment_bound_guard(const SegmentDecomposition& sd, const HoleContext& hc,
                                const Graph& g, const SizeTriple& budget) {
  const int k = budget.total();
  const long bound = segment_count_bound(static_cast<int>(hc.modulator.count()), k);
  if (static_cast<long>(sd.segments.size()) <= bound) return {};

  // Some path carries the junction overload; take the densest.
  const PathDecomposition* dense = nullptr;
  for (const auto& pd : sd.paths)
    if (!dense || pd.junctions.size() > dense->junctions.size()) dense = &pd;
  if (!dense || !dense->ctx) return {};

  // Case (i): a single witness for 5k+75 junctions of types (1)/(2).
  VertexSet outside = hc.modulator - hc.common_m;
  GuardResult result;
  bool decided = false;
  for_each_vertex(outside, [&](Vertex w) {
    if (decided) return;
    int witnessed = 0;
    for (const auto& j : dense->junctions)
      if (j.witnesses1.test(static_cast<std::size_t>(w)) ||
          j.witnesses2.test(static_cast<std::size_t>(w)))
        ++witnessed;
    if (witnessed < 5 * k + 75) return;
    if (auto holes = build_witness_holes(g, hc, *dense, w, k)) {
      result = {GuardResult::Kind::infeasible, -1, std::move(*holes)};
      decided = true;
    }
  });
  if (decided) return result;

  // Case (ii): holes from junctions that are only of type (3)/(4).
  std::vector<const Junction*> b;
  for (const auto& j : dense->junctions)
    if ((j.types & 3u) == 0 && j.types != 0) b.push_back(&j);
  const long wanted = static_cast<long>(k) * (k + 1) + 1;
  if (static_cast<long>(b.size()) < 7 * (wanted - 1) + 5) return {};

  std::vector<Hole> holes;
  for (long i = 0; i < wanted; ++i) {
    const Junction* sel = b[static_cast<std::size_t>(7 * i + 2)];        // b_{7i+3}
    const Junction* left = b[static_cast<std::size_t>(7 * i)];           // b_{7i+1}
    const Junction* right = b[static_cast<std::size_t>(7 * i + 4)];      // b_{7i+5}
    auto h = build_b_hole(g, hc, *dense->ctx, *sel, left->pos, right->pos);
    if (!h || !verify_hole(g, *h)) return {};
    holes.push_back(std::move(*h));
  }
  // The family must pairwise meet only inside A, each with at most one
  // A_0 vertex; otherwise fall back to plain branching.
  for (const auto& h : holes) {
    int a0_count = 0;
    for (Vertex v : h.vertices)
      if (hc.common_free.test(static_cast<std::size_t>(v))) ++a0_count;
    if (a0_count > 1) return {};
  }
  for (std::size_t i = 0; i < holes.size(); ++i)
    for (std::size_t j = i + 1; j < holes.size(); ++j) {
      std::vector<Vertex> a = holes[i].vertices, c = holes[j].vertices, inter;
      std::sort(a.begin(), a.end());
      std::sort(c.begin(), c.end());
      std::set_intersection(a.begin(), a.end(), c.begin(), c.end(), std::back_inserter(inter));
      for (Vertex v : inter)
        if (!hc.common.test(static_cast<std::size_t>(v))) return {};
    }
  return conclude_from_hole_family(std::move(holes), hc.common_free, k);
}

}  // namespace chedit
