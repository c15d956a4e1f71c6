#pragma once

#include <cstdint>
#include <random>

#include "chedit/graph.hpp"

namespace chedit {

/// Seeded random source. Built on std::mt19937_64 (bit-exact across
/// platforms); bounded sampling uses plain modulo so the stream never depends
/// on implementation-defined distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Random chordal graph built by incremental simplicial insertion: each new
/// vertex is attached to a clique sampled inside an existing bag; `density`
/// is the per-member inclusion probability.
Graph random_chordal(int n, double density, std::uint64_t seed);

struct PlantedInstance {
  Graph graph;        // the perturbed instance
  Graph base;         // the chordal graph it was derived from
  SizeTriple planted;  // (p1, p2, p3)
  std::uint64_t seed = 0;
  /// Applying this to `graph` yields `base`, so a solution of size
  /// <= planted always exists.
  EditingSet inverse;
};

/// Perturbs a chordal base graph: p1 new vertices with random neighborhoods,
/// p2 added non-edges (deletable), p3 removed edges (addable).
/// Throws when the base graph lacks enough edges or non-edges.
PlantedInstance plant_edits(const Graph& gstar, int p1, int p2, int p3, std::uint64_t seed);

}  // namespace chedit
