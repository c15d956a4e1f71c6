#include "chedit/hole.hpp"

#include <algorithm>

#include "chedit/chordality.hpp"

namespace chedit {

Hole canonical_hole(std::span<const Vertex> cycle) {
  const std::size_t len = cycle.size();
  std::vector<Vertex> best;
  auto consider = [&](const std::vector<Vertex>& cand) {
    if (best.empty() || cand < best) best = cand;
  };
  std::size_t start = 0;
  for (std::size_t i = 1; i < len; ++i)
    if (cycle[i] < cycle[start]) start = i;
  std::vector<Vertex> fwd(len), rev(len);
  for (std::size_t i = 0; i < len; ++i) {
    fwd[i] = cycle[(start + i) % len];
    rev[i] = cycle[(start + len - i) % len];
  }
  consider(fwd);
  consider(rev);
  return Hole{std::move(best)};
}

bool verify_hole(const Graph& g, const Hole& h) {
  const auto& seq = h.vertices;
  const std::size_t len = seq.size();
  if (len < 4) return false;
  for (Vertex v : seq)
    if (!g.has_vertex(v)) return false;
  std::vector<Vertex> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
      if (g.has_edge(seq[i], seq[j]) != consecutive) return false;
    }
  return true;
}

std::optional<Hole> shortest_hole(const Graph& g) {
  std::size_t best_len = 0;
  std::vector<Vertex> best;
  bool done = false;
  for_each_vertex(g.vertices(), [&](Vertex v1) {
    if (done) return;
    for_each_vertex(g.neighbors(v1), [&](Vertex v2) {
      if (done) return;
      for_each_vertex(g.neighbors(v2), [&](Vertex v3) {
        if (done || v3 == v1 || g.has_edge(v1, v3)) return;
        VertexSet forbidden = g.closed_neighborhood(v2);
        forbidden.reset(static_cast<std::size_t>(v1));
        forbidden.reset(static_cast<std::size_t>(v3));
        auto path = shortest_path(g, v1, v3, forbidden);
        if (!path) return;
        std::size_t len = path->size() + 1;
        if (best.empty() || len < best_len) {
          best.assign(1, v2);
          best.insert(best.end(), path->begin(), path->end());
          best_len = len;
          if (best_len == 4) done = true;
        }
      });
    });
  });
  if (best.empty()) return std::nullopt;
  return canonical_hole(best);
}

std::vector<UnitEdit> hole_fix_candidates(const Graph& g, const Hole& h, const VertexSet& m,
                                          const SizeTriple& budget) {
  (void)g;
  const auto& seq = h.vertices;
  const std::size_t len = seq.size();
  std::vector<UnitEdit> out;
  if (budget.a1 > 0)
    for (std::size_t i = 0; i < len; ++i)
      if (!m.test(static_cast<std::size_t>(seq[i])))
        out.push_back({UnitEdit::Kind::delete_vertex, seq[i], {}});
  if (budget.a2 > 0)
    for (std::size_t i = 0; i < len; ++i)
      out.push_back({UnitEdit::Kind::delete_edge, -1, make_edge(seq[i], seq[(i + 1) % len])});
  if (budget.a3 > 0)
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = i + 2; j < len; ++j) {
        if (i == 0 && j == len - 1) continue;
        out.push_back({UnitEdit::Kind::add_edge, -1, make_edge(seq[i], seq[j])});
      }
  return out;
}

}  // namespace chedit
