#pragma once

#include <optional>

#include "chedit/graph.hpp"
#include "chedit/hole.hpp"

namespace chedit {

/// Hard caps for the brute-force reference implementations. Exceeding a cap
/// is an error, never silent slowness.
struct OracleCaps {
  int max_n = 10;
  int max_k = 4;
};

/// Exhaustive search over all editing sets within the budget, in
/// (size, lexicographic) order per component; first feasible wins.
std::optional<EditingSet> brute_force_edit(const Graph& g, const SizeTriple& budget,
                                           const OracleCaps& caps = {});

/// True iff some pair (V_S, E_S) with |V_S| <= a, |E_S| <= b disconnects x
/// from y. Exhaustive over subsets.
bool brute_force_mixed_separator(const Graph& f, Vertex x, Vertex y, int a, int b,
                                 const OracleCaps& caps = {});

/// All induced cycles of length 4..max_len, canonicalized and ordered by
/// (length, lexicographic sequence). Exhaustive over vertex subsets.
std::vector<Hole> enumerate_induced_cycles(const Graph& g, int max_len);

}  // namespace chedit
