#include "doctest.h"

#include "chedit/chordality.hpp"
#include "chedit/generator.hpp"
#include "chedit/oracle.hpp"
#include "test_util.hpp"

using namespace chedit;
using namespace chedit::test;

TEST_CASE("random_chordal basics") {
  Graph g1 = random_chordal(1, 0.5, 42);
  CHECK(g1.num_vertices() == 1);
  CHECK(g1.num_edges() == 0);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = random_chordal(4 + static_cast<int>(seed % 30), 0.2 + 0.6 * (static_cast<double>(seed % 5) / 4.0), seed);
    CHECK(is_chordal(g));
  }
}

TEST_CASE("random_chordal is reproducible; golden edge count") {
  Graph a = random_chordal(20, 0.5, 7);
  Graph b = random_chordal(20, 0.5, 7);
  CHECK(a == b);
  // Pinned from the first run; guards the generator's sampling stream.
  CHECK(a.num_edges() == 10);
}

TEST_CASE("plant_edits identity") {
  Graph base = random_chordal(10, 0.5, 3);
  auto inst = plant_edits(base, 0, 0, 0, 9);
  CHECK(inst.graph == base);
  CHECK(inst.inverse.empty());
}

TEST_CASE("planting an edge on P4 yields C4") {
  Graph p4 = path_graph(4);
  // Plant one deletable edge; with seed search we just check the contract:
  // the instance differs from the base by exactly one extra edge and the
  // inverse recovers the base.
  auto inst = plant_edits(p4, 0, 1, 0, 5);
  CHECK(inst.graph.num_edges() == 4);
  CHECK(apply_editing(inst.graph, inst.inverse) == p4);
  // Whatever edge was added, deleting one edge or adding one chord fixes it.
  if (!is_chordal(inst.graph)) {
    CHECK(brute_force_edit(inst.graph, {0, 1, 0}).has_value());
    CHECK(brute_force_edit(inst.graph, {0, 0, 1}).has_value());
  }
}

TEST_CASE("planted vertices create holes detectable by shortest_hole") {
  int holes_seen = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph base = random_chordal(8, 0.6, seed);
    auto inst = plant_edits(base, 1, 0, 0, seed + 100);
    CHECK(apply_editing(inst.graph, inst.inverse) == base);
    auto h = shortest_hole(inst.graph);
    if (h) {
      ++holes_seen;
      // Any hole must pass through the planted vertex: the base is chordal.
      bool through_new = false;
      for (Vertex v : h->vertices)
        if (v >= 8) through_new = true;
      CHECK(through_new);
    }
  }
  CHECK(holes_seen > 0);
}

TEST_CASE("plant inverse is a valid editing set of the planted size") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph base = random_chordal(12, 0.5, seed * 3);
    auto inst = plant_edits(base, static_cast<int>(seed % 3), static_cast<int>((seed / 3) % 3),
                            static_cast<int>((seed / 9) % 2), seed);
    CHECK(size_of(inst.inverse) == inst.planted);
    Graph recovered = apply_editing(inst.graph, inst.inverse);
    CHECK(recovered == inst.base);
    CHECK(is_chordal(recovered));
  }
}

TEST_CASE("plant_edits rejects impossible requests") {
  CHECK_THROWS_AS(plant_edits(complete_graph(4), 0, 1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(plant_edits(Graph(3), 0, 0, 1, 1), std::invalid_argument);
}
