#include "doctest.h"

#include <algorithm>

#include "chedit/chordality.hpp"
#include "chedit/hole.hpp"
#include "chedit/oracle.hpp"
#include "test_util.hpp"

using namespace chedit;
using namespace chedit::test;

TEST_CASE("shortest_hole on fixed graphs") {
  Graph tree = from_edges(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
  CHECK_FALSE(shortest_hole(tree).has_value());

  auto h5 = shortest_hole(cycle_graph(5));
  REQUIRE(h5.has_value());
  CHECK(h5->length() == 5);
  CHECK(verify_hole(cycle_graph(5), *h5));
}

TEST_CASE("shortest_hole on C6 plus a chord finds a 4-hole") {
  Graph g = cycle_graph(6);
  g.add_edge(0, 3);
  auto h = shortest_hole(g);
  REQUIRE(h.has_value());
  CHECK(h->length() == 4);
  CHECK(verify_hole(g, *h));
  // Cross-check with the exhaustive enumeration: exactly two 4-holes.
  auto all = enumerate_induced_cycles(g, 6);
  REQUIRE(all.size() == 2);
  CHECK(all[0].length() == 4);
  CHECK(all[1].length() == 4);
  CHECK(std::find(all.begin(), all.end(), *h) != all.end());
}

TEST_CASE("verify_hole") {
  Graph c4 = cycle_graph(4);
  CHECK(verify_hole(c4, Hole{{0, 1, 2, 3}}));
  CHECK_FALSE(verify_hole(c4, Hole{{0, 2, 1, 3}}));
  CHECK_FALSE(verify_hole(complete_graph(3), Hole{{0, 1, 2}}));
}

TEST_CASE("shortest_hole matches enumeration on random graphs") {
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    int n = 4 + static_cast<int>(seed % 5);
    Graph g = random_graph(n, 0.2 + 0.07 * static_cast<double>(seed % 8), seed * 31 + 7);
    auto h = shortest_hole(g);
    CHECK(h.has_value() != is_chordal(g));
    if (seed % 10 == 0) {  // the exhaustive cross-check on a slice
      auto all = enumerate_induced_cycles(g, n);
      CHECK(h.has_value() == !all.empty());
      if (h) CHECK(h->length() == all.front().length());
    }
    if (h) CHECK(verify_hole(g, *h));
  }
}

TEST_CASE("shortest_hole is deterministic") {
  Graph g = random_graph(10, 0.4, 99);
  auto a = shortest_hole(g);
  auto b = shortest_hole(g);
  REQUIRE(a.has_value());
  CHECK(*a == *b);
}

TEST_CASE("hole_fix_candidates on C4 with full budget") {
  Graph c4 = cycle_graph(4);
  Hole h{{0, 1, 2, 3}};
  auto cands = hole_fix_candidates(c4, h, VertexSet(4), {1, 1, 1});
  // 4 vertex deletions + 4 edge deletions + 2 chords
  CHECK(cands.size() == 10);
  int dv = 0, de = 0, ae = 0;
  for (const auto& c : cands) {
    if (c.kind == UnitEdit::Kind::delete_vertex) ++dv;
    if (c.kind == UnitEdit::Kind::delete_edge) ++de;
    if (c.kind == UnitEdit::Kind::add_edge) ++ae;
  }
  CHECK(dv == 4);
  CHECK(de == 4);
  CHECK(ae == 2);
}

TEST_CASE("hole_fix_candidates honors the modulator and budget gates") {
  Graph c4 = cycle_graph(4);
  Hole h{{0, 1, 2, 3}};
  VertexSet all(4);
  all.set();
  auto cands = hole_fix_candidates(c4, h, all, {1, 0, 1});
  REQUIRE(cands.size() == 2);
  CHECK(cands[0].kind == UnitEdit::Kind::add_edge);
  CHECK(cands[1].kind == UnitEdit::Kind::add_edge);
}

TEST_CASE("hole_fix_candidates on C5 additions only lists the 5 chords") {
  Graph c5 = cycle_graph(5);
  Hole h{{0, 1, 2, 3, 4}};
  auto cands = hole_fix_candidates(c5, h, VertexSet(5), {0, 0, 1});
  REQUIRE(cands.size() == 5);
  for (const auto& c : cands) CHECK(c.kind == UnitEdit::Kind::add_edge);
}

TEST_CASE("every fix candidate destroys the hole; the list is complete") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = random_graph(8, 0.35, seed * 17 + 3);
    auto h = shortest_hole(g);
    if (!h) continue;
    auto cands = hole_fix_candidates(g, *h, VertexSet(static_cast<std::size_t>(g.capacity())), {1, 1, 1});

    VertexSet hole_set =
        vector_to_set(static_cast<std::size_t>(g.capacity()), h->vertices);
    auto destroyed = [&](const Graph& after) {
      // h is no longer an induced cycle of `after`.
      for (Vertex v : h->vertices)
        if (!after.has_vertex(v)) return true;
      return !verify_hole(after, *h);
    };

    std::vector<UnitEdit> destroying;
    // vertex deletions on the hole
    for (Vertex v : h->vertices) {
      Graph after = g;
      after.remove_vertex(v);
      CHECK(destroyed(after));
      destroying.push_back({UnitEdit::Kind::delete_vertex, v, {}});
    }
    // all edge deletions / additions touching only V(h)
    auto verts = h->vertices;
    std::sort(verts.begin(), verts.end());
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        Edge e = make_edge(verts[i], verts[j]);
        Graph after = g;
        if (g.has_edge(e.first, e.second))
          after.remove_edge(e.first, e.second);
        else
          after.add_edge(e.first, e.second);
        if (destroyed(after))
          destroying.push_back({g.has_edge(e.first, e.second) ? UnitEdit::Kind::delete_edge
                                                              : UnitEdit::Kind::add_edge,
                                -1, e});
      }

    // The candidate list equals the brute-force destroying list as a set.
    auto key = [](const UnitEdit& u) {
      return std::tuple<int, Vertex, Vertex, Vertex>(static_cast<int>(u.kind), u.v, u.e.first,
                                                     u.e.second);
    };
    auto sorted_keys = [&](std::vector<UnitEdit> v) {
      std::vector<std::tuple<int, Vertex, Vertex, Vertex>> ks;
      for (const auto& u : v) ks.push_back(key(u));
      std::sort(ks.begin(), ks.end());
      return ks;
    };
    CHECK(sorted_keys(cands) == sorted_keys(destroying));

    // And each candidate, applied alone, destroys the hole.
    for (const auto& c : cands) {
      Graph after = g;
      switch (c.kind) {
        case UnitEdit::Kind::delete_vertex: after.remove_vertex(c.v); break;
        case UnitEdit::Kind::delete_edge: after.remove_edge(c.e.first, c.e.second); break;
        case UnitEdit::Kind::add_edge: after.add_edge(c.e.first, c.e.second); break;
      }
      CHECK(destroyed(after));
    }
    (void)hole_set;
  }
}
