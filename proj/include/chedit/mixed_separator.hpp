#pragma once

#include <optional>

#include "chedit/chordality.hpp"
#include "chedit/graph.hpp"

namespace chedit {

/// A pair of a vertex set and an edge set whose joint deletion disconnects
/// two terminals (or terminal sets) of a chordal host graph.
struct MixedSeparator {
  std::vector<Vertex> vertices;  // V_S, sorted
  std::vector<Edge> edges;       // E_S, sorted

  std::pair<int, int> size() const {
    return {static_cast<int>(vertices.size()), static_cast<int>(edges.size())};
  }
  bool operator==(const MixedSeparator&) const = default;
};

/// True iff s deletes no terminal, every E_S edge exists, and no residual
/// component meets both xs and ys.
bool separates(const Graph& f, const VertexSet& xs, const VertexSet& ys,
               const MixedSeparator& s);

/// A mixed (x,y)-separator of size at most (a, b), or nullopt. The host must
/// be chordal and x nonadjacent to y. Tries a pure vertex cut first, then the
/// queue-driven partition search seeded from bags of the x-y bag path (then
/// every remaining bag), enumerating partitions in smallest-id-first order.
/// The first feasible separator is shrunk to inclusion-wise minimal before
/// being returned.
std::optional<MixedSeparator> find_mixed_separator(const Graph& f, Vertex x, Vertex y, int a,
                                                   int b);

/// Multi-source variant for disjoint nonadjacent terminal sets; the search
/// starts from X = xs, Y = ys and seeds every bag.
std::optional<MixedSeparator> find_mixed_separator_sets(const Graph& f, const VertexSet& xs,
                                                        const VertexSet& ys, int a, int b);

/// True iff removing any single element of s yields a non-separator.
/// Rejects s when it does not separate x from y.
bool is_inclusion_minimal(const Graph& f, Vertex x, Vertex y, const MixedSeparator& s);

/// Greedy single-pass shrink, vertices first then edges, in ascending order.
MixedSeparator minimalize_separator(const Graph& f, const VertexSet& xs, const VertexSet& ys,
                                    MixedSeparator s);

struct ProfileEntry {
  int a = 0;
  std::optional<int> b;  // minimum feasible b <= k2, when one exists
  std::optional<MixedSeparator> separator;
};

/// For each a in 0..k1, the minimum b <= k2 admitting a mixed (xs,ys)-
/// separator of size (a, b), with a witness separator. b is found by linear
/// scan from 0.
std::vector<ProfileEntry> min_b_profile(const Graph& f, const VertexSet& xs, const VertexSet& ys,
                                        int k1, int k2);

}  // namespace chedit
