#include "chedit/mixed_separator.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace chedit {

namespace {

void check_terminals(const Graph& f, const VertexSet& xs, const VertexSet& ys) {
  if (xs.none() || ys.none()) throw std::invalid_argument("mixed separator: empty terminal set");
  if ((xs & ys).any()) throw std::invalid_argument("mixed separator: terminal sets intersect");
  if (!xs.is_subset_of(f.vertices()) || !ys.is_subset_of(f.vertices()))
    throw std::invalid_argument("mixed separator: terminal not in graph");
  bool adjacent = false;
  for_each_vertex(xs, [&](Vertex x) {
    if ((f.neighbors(x) & ys).any()) adjacent = true;
  });
  if (adjacent) throw std::invalid_argument("mixed separator: terminal sets are adjacent");
}

// Minimum vertex (xs,ys)-cut by unit-capacity flow on the split graph;
// terminals are uncapacitated. Returns nullopt when the minimum exceeds
// `limit`.
std::optional<std::vector<Vertex>> min_vertex_cut(const Graph& f, const VertexSet& xs,
                                                  const VertexSet& ys, int limit) {
  const int n = f.capacity();
  const int source = 2 * n, sink = 2 * n + 1;
  constexpr int kInf = 1 << 29;
  struct Arc {
    int to, cap, rev;
  };
  std::vector<std::vector<Arc>> arcs(static_cast<std::size_t>(2 * n + 2));
  auto add_arc = [&](int from, int to, int cap) {
    arcs[static_cast<std::size_t>(from)].push_back(
        {to, cap, static_cast<int>(arcs[static_cast<std::size_t>(to)].size())});
    arcs[static_cast<std::size_t>(to)].push_back(
        {from, 0, static_cast<int>(arcs[static_cast<std::size_t>(from)].size()) - 1});
  };
  for_each_vertex(f.vertices(), [&](Vertex v) {
    bool terminal = xs.test(static_cast<std::size_t>(v)) || ys.test(static_cast<std::size_t>(v));
    add_arc(2 * v, 2 * v + 1, terminal ? kInf : 1);
    for_each_vertex(f.neighbors(v), [&](Vertex u) { add_arc(2 * v + 1, 2 * u, kInf); });
  });
  for_each_vertex(xs, [&](Vertex v) { add_arc(source, 2 * v, kInf); });
  for_each_vertex(ys, [&](Vertex v) { add_arc(2 * v + 1, sink, kInf); });

  int flow = 0;
  while (flow <= limit) {
    std::vector<std::pair<int, int>> pred(static_cast<std::size_t>(2 * n + 2), {-1, -1});
    pred[static_cast<std::size_t>(source)] = {source, -1};
    std::deque<int> queue{source};
    while (!queue.empty() && pred[static_cast<std::size_t>(sink)].first == -1) {
      int u = queue.front();
      queue.pop_front();
      for (int i = 0; i < static_cast<int>(arcs[static_cast<std::size_t>(u)].size()); ++i) {
        const Arc& a = arcs[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
        if (a.cap <= 0 || pred[static_cast<std::size_t>(a.to)].first != -1) continue;
        pred[static_cast<std::size_t>(a.to)] = {u, i};
        if (a.to == sink) break;
        queue.push_back(a.to);
      }
    }
    if (pred[static_cast<std::size_t>(sink)].first == -1) break;
    for (int v = sink; v != source;) {
      auto [u, i] = pred[static_cast<std::size_t>(v)];
      Arc& a = arcs[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
      a.cap -= 1;
      arcs[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += 1;
      v = u;
    }
    ++flow;
  }
  if (flow > limit) return std::nullopt;

  std::vector<char> reach(static_cast<std::size_t>(2 * n + 2), 0);
  reach[static_cast<std::size_t>(source)] = 1;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const Arc& a : arcs[static_cast<std::size_t>(u)])
      if (a.cap > 0 && !reach[static_cast<std::size_t>(a.to)]) {
        reach[static_cast<std::size_t>(a.to)] = 1;
        queue.push_back(a.to);
      }
  }
  std::vector<Vertex> cut;
  for_each_vertex(f.vertices(), [&](Vertex v) {
    if (reach[static_cast<std::size_t>(2 * v)] && !reach[static_cast<std::size_t>(2 * v + 1)])
      cut.push_back(v);
  });
  return cut;
}

// Backtracking realization of the nondeterministic bag-partition search:
// process bags from a queue, partition each bag's unseen vertices into the
// x-side X, the y-side Y, or the deleted set Z, and let the final
// disconnection check accept or reject the branch.
class QueueSearch {
 public:
  QueueSearch(const Graph& f, const CliqueTree& tree, VertexSet xs, VertexSet ys, int a, int b)
      : f_(f), tree_(tree), xs_(std::move(xs)), ys_(std::move(ys)), a_(a), b_(b) {
    bag_sets_.reserve(tree.bags.size());
    for (const auto& bag : tree.bags)
      bag_sets_.push_back(vector_to_set(static_cast<std::size_t>(f.capacity()), bag));
  }

  std::optional<MixedSeparator> run(std::span<const int> seeds, bool preassign_terminals) {
    for (int seed : seeds) {
      State st;
      st.X = VertexSet(static_cast<std::size_t>(f_.capacity()));
      st.Y = st.X;
      st.Z = st.X;
      if (preassign_terminals) {
        st.X = xs_;
        st.Y = ys_;
      }
      st.processed.assign(tree_.bags.size(), 0);
      st.inqueue.assign(tree_.bags.size(), 0);
      st.queue.push_back(seed);
      st.inqueue[static_cast<std::size_t>(seed)] = 1;
      if (search(std::move(st))) return found_;
    }
    return std::nullopt;
  }

 private:
  struct State {
    VertexSet X, Y, Z;
    std::deque<int> queue;
    std::vector<char> processed, inqueue;
    int edges_xy = 0;
  };

  bool search(State st) {
    if (st.queue.empty()) {
      MixedSeparator sep;
      sep.vertices = set_to_vector(st.Z);
      for_each_vertex(st.X, [&](Vertex u) {
        for_each_vertex(f_.neighbors(u) & st.Y,
                        [&](Vertex w) { sep.edges.push_back(make_edge(u, w)); });
      });
      std::sort(sep.edges.begin(), sep.edges.end());
      if (!separates(f_, xs_, ys_, sep)) return false;
      found_ = std::move(sep);
      return true;
    }
    int bag = st.queue.front();
    st.queue.pop_front();
    st.inqueue[static_cast<std::size_t>(bag)] = 0;
    auto free = set_to_vector(bag_sets_[static_cast<std::size_t>(bag)] - (st.X | st.Y | st.Z));
    int room = (a_ - static_cast<int>(st.Z.count())) + (b_ - st.edges_xy) + 1;
    if (static_cast<int>(free.size()) > room) return false;
    return assign(st, bag, free, 0);
  }

  bool assign(State& st, int bag, const std::vector<Vertex>& free, std::size_t idx) {
    if (idx == free.size()) {
      State next = st;
      next.processed[static_cast<std::size_t>(bag)] = 1;
      for (int nb : tree_.tree_adj[static_cast<std::size_t>(bag)]) {
        if (next.processed[static_cast<std::size_t>(nb)] ||
            next.inqueue[static_cast<std::size_t>(nb)])
          continue;
        if ((bag_sets_[static_cast<std::size_t>(nb)] & next.X).any() &&
            (bag_sets_[static_cast<std::size_t>(nb)] & next.Y).any()) {
          next.queue.push_back(nb);
          next.inqueue[static_cast<std::size_t>(nb)] = 1;
        }
      }
      return search(std::move(next));
    }
    Vertex v = free[idx];
    const bool in_xs = xs_.test(static_cast<std::size_t>(v));
    const bool in_ys = ys_.test(static_cast<std::size_t>(v));
    if (!in_ys) {  // x-side
      int delta = static_cast<int>((f_.neighbors(v) & st.Y).count());
      if (st.edges_xy + delta <= b_) {
        st.X.set(static_cast<std::size_t>(v));
        st.edges_xy += delta;
        if (assign(st, bag, free, idx + 1)) return true;
        st.edges_xy -= delta;
        st.X.reset(static_cast<std::size_t>(v));
      }
    }
    if (!in_xs) {  // y-side
      int delta = static_cast<int>((f_.neighbors(v) & st.X).count());
      if (st.edges_xy + delta <= b_) {
        st.Y.set(static_cast<std::size_t>(v));
        st.edges_xy += delta;
        if (assign(st, bag, free, idx + 1)) return true;
        st.edges_xy -= delta;
        st.Y.reset(static_cast<std::size_t>(v));
      }
    }
    if (!in_xs && !in_ys && static_cast<int>(st.Z.count()) < a_) {  // deleted
      st.Z.set(static_cast<std::size_t>(v));
      if (assign(st, bag, free, idx + 1)) return true;
      st.Z.reset(static_cast<std::size_t>(v));
    }
    return false;
  }

  const Graph& f_;
  const CliqueTree& tree_;
  std::vector<VertexSet> bag_sets_;
  VertexSet xs_, ys_;
  int a_, b_;
  std::optional<MixedSeparator> found_;
};

std::optional<MixedSeparator> find_impl(const Graph& f, const VertexSet& xs, const VertexSet& ys,
                                        int a, int b, bool single_pair) {
  check_terminals(f, xs, ys);
  if (a < 0 || b < 0) throw std::invalid_argument("mixed separator: negative budget");
  if (!is_chordal(f)) throw std::invalid_argument("mixed separator: host graph is not chordal");

  if (auto cut = min_vertex_cut(f, xs, ys, a)) {
    MixedSeparator sep{*cut, {}};
    return minimalize_separator(f, xs, ys, std::move(sep));
  }
  if (b == 0) return std::nullopt;

  CliqueTree tree = clique_tree(f);
  std::vector<int> seeds;
  if (single_pair) {
    Vertex x = static_cast<Vertex>(xs.find_first());
    Vertex y = static_cast<Vertex>(ys.find_first());
    try {
      seeds = bag_path(tree, x, y).bags;
    } catch (const std::invalid_argument&) {
      seeds.clear();
    }
  }
  std::vector<char> seeded(tree.bags.size(), 0);
  for (int s : seeds) seeded[static_cast<std::size_t>(s)] = 1;
  for (int i = 0; i < tree.num_bags(); ++i)
    if (!seeded[static_cast<std::size_t>(i)]) seeds.push_back(i);

  QueueSearch qs(f, tree, xs, ys, a, b);
  auto sep = qs.run(seeds, !single_pair);
  if (!sep) return std::nullopt;
  return minimalize_separator(f, xs, ys, std::move(*sep));
}

}  // namespace

bool separates(const Graph& f, const VertexSet& xs, const VertexSet& ys,
               const MixedSeparator& s) {
  Graph rest = f;
  for (Vertex v : s.vertices) {
    if (xs.test(static_cast<std::size_t>(v)) || ys.test(static_cast<std::size_t>(v))) return false;
    if (!rest.has_vertex(v)) return false;
    rest.remove_vertex(v);
  }
  for (const auto& [u, w] : s.edges) {
    if (!rest.has_vertex(u) || !rest.has_vertex(w)) continue;  // dropped with a deleted endpoint
    if (!rest.has_edge(u, w)) return false;
    rest.remove_edge(u, w);
  }
  for (const auto& comp : connected_components(rest)) {
    bool has_x = false, has_y = false;
    for (Vertex v : comp) {
      if (xs.test(static_cast<std::size_t>(v))) has_x = true;
      if (ys.test(static_cast<std::size_t>(v))) has_y = true;
    }
    if (has_x && has_y) return false;
  }
  return true;
}

std::optional<MixedSeparator> find_mixed_separator(const Graph& f, Vertex x, Vertex y, int a,
                                                   int b) {
  if (!f.has_vertex(x) || !f.has_vertex(y) || x == y)
    throw std::invalid_argument("find_mixed_separator: bad terminals");
  if (f.has_edge(x, y))
    throw std::invalid_argument("find_mixed_separator: terminals are adjacent");
  VertexSet xs(static_cast<std::size_t>(f.capacity())), ys(static_cast<std::size_t>(f.capacity()));
  xs.set(static_cast<std::size_t>(x));
  ys.set(static_cast<std::size_t>(y));
  return find_impl(f, xs, ys, a, b, true);
}

std::optional<MixedSeparator> find_mixed_separator_sets(const Graph& f, const VertexSet& xs,
                                                        const VertexSet& ys, int a, int b) {
  return find_impl(f, xs, ys, a, b, false);
}

MixedSeparator minimalize_separator(const Graph& f, const VertexSet& xs, const VertexSet& ys,
                                    MixedSeparator s) {
  for (std::size_t i = 0; i < s.vertices.size();) {
    MixedSeparator trial = s;
    trial.vertices.erase(trial.vertices.begin() + static_cast<std::ptrdiff_t>(i));
    if (separates(f, xs, ys, trial))
      s = std::move(trial);
    else
      ++i;
  }
  for (std::size_t i = 0; i < s.edges.size();) {
    MixedSeparator trial = s;
    trial.edges.erase(trial.edges.begin() + static_cast<std::ptrdiff_t>(i));
    if (separates(f, xs, ys, trial))
      s = std::move(trial);
    else
      ++i;
  }
  return s;
}

bool is_inclusion_minimal(const Graph& f, Vertex x, Vertex y, const MixedSeparator& s) {
  VertexSet xs(static_cast<std::size_t>(f.capacity())), ys(static_cast<std::size_t>(f.capacity()));
  xs.set(static_cast<std::size_t>(x));
  ys.set(static_cast<std::size_t>(y));
  if (!separates(f, xs, ys, s))
    throw std::invalid_argument("is_inclusion_minimal: not a separator");
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    MixedSeparator trial = s;
    trial.vertices.erase(trial.vertices.begin() + static_cast<std::ptrdiff_t>(i));
    if (separates(f, xs, ys, trial)) return false;
  }
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    MixedSeparator trial = s;
    trial.edges.erase(trial.edges.begin() + static_cast<std::ptrdiff_t>(i));
    if (separates(f, xs, ys, trial)) return false;
  }
  return true;
}

std::vector<ProfileEntry> min_b_profile(const Graph& f, const VertexSet& xs, const VertexSet& ys,
                                        int k1, int k2) {
  check_terminals(f, xs, ys);
  std::vector<ProfileEntry> out;
  int scan_cap = k2;
  for (int a = 0; a <= k1; ++a) {
    ProfileEntry entry;
    entry.a = a;
    for (int b = 0; b <= scan_cap; ++b) {
      auto sep = find_mixed_separator_sets(f, xs, ys, a, b);
      if (sep) {
        entry.b = b;
        entry.separator = std::move(sep);
        break;
      }
    }
    if (entry.b) scan_cap = *entry.b;  // b_min is non-increasing in a
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace chedit
