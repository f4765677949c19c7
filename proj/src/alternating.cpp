#include "hindrance/alternating.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hindrance {
namespace {

bool is_forward_edge(const LinkedWeb& lw, Vertex u, Vertex w) {
  return lw.digraph().has_edge(u, w) && !lw.is_linkage_edge(u, w);
}

bool is_reversed_edge(const LinkedWeb& lw, Vertex u, Vertex w) {
  return lw.is_linkage_edge(w, u);
}

// One step in D*: the target, the id of the underlying D-edge, and whether
// the step walks a linkage edge backwards.
struct Move {
  Vertex target;
  std::size_t edge_id;
  bool reversed;
};

std::vector<std::vector<Move>> residual_moves(const LinkedWeb& lw) {
  const Digraph& d = lw.digraph();
  const auto& edges = d.edges();
  auto edge_id = [&](Vertex t, Vertex h) {
    return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), Edge{t, h}) -
                                    edges.begin());
  };
  std::vector<std::vector<Move>> moves(d.vertex_count());
  for (Vertex u = 0; u < d.vertex_count(); ++u) {
    for (Vertex w : d.out(u))
      if (!lw.is_linkage_edge(u, w)) moves[u].push_back({w, edge_id(u, w), false});
    if (auto p = lw.predecessor(u)) moves[u].push_back({*p, edge_id(*p, u), true});
    std::sort(moves[u].begin(), moves[u].end(),
              [](const Move& a, const Move& b) { return a.target < b.target; });
  }
  return moves;
}

// Split residual network: every vertex v becomes in(v)=2v and out(v)=2v+1.
// Non-linkage vertices have in(v)->out(v); linkage vertices have the internal
// edge reversed. A non-linkage edge u->w gives out(u)->in(w); a linkage edge
// u->w gives in(w)->out(u).
class SplitSearch {
 public:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  explicit SplitSearch(const LinkedWeb& lw) : lw_(lw) {
    const std::size_t nodes = 2 * lw.digraph().vertex_count();
    parent_.assign(nodes, kNone);
    seen_.assign(nodes, false);
    order_.assign(nodes, kNone);
  }

  /// BFS from the in-copies of all unlinked sources. Stops as soon as a node
  /// satisfying `stop` is discovered and returns it.
  template <typename Stop>
  std::optional<std::size_t> run(Stop stop) {
    std::deque<std::size_t> queue;
    for (Vertex a : lw_.unlinked_sources()) {
      const std::size_t node = 2 * a;
      if (seen_[node]) continue;
      discover(node, kNone);
      if (stop(node)) return node;
      queue.push_back(node);
    }
    std::vector<std::size_t> next;
    while (!queue.empty()) {
      const std::size_t node = queue.front();
      queue.pop_front();
      successors(node, next);
      for (std::size_t s : next) {
        if (seen_[s]) continue;
        discover(s, node);
        if (stop(s)) return s;
        queue.push_back(s);
      }
    }
    return std::nullopt;
  }

  bool seen(std::size_t node) const { return seen_[node]; }
  std::size_t order(std::size_t node) const { return order_[node]; }

  Trail trail_to(std::size_t node) const {
    std::vector<Vertex> reversed_seq;
    for (std::size_t at = node; at != kNone; at = parent_[at]) {
      const Vertex v = static_cast<Vertex>(at / 2);
      if (reversed_seq.empty() || reversed_seq.back() != v) reversed_seq.push_back(v);
    }
    return Trail{{reversed_seq.rbegin(), reversed_seq.rend()}};
  }

 private:
  void discover(std::size_t node, std::size_t parent) {
    seen_[node] = true;
    parent_[node] = parent;
    order_[node] = counter_++;
  }

  void successors(std::size_t node, std::vector<std::size_t>& out) const {
    out.clear();
    const Vertex v = static_cast<Vertex>(node / 2);
    const bool is_in_copy = node % 2 == 0;
    if (is_in_copy) {
      if (!lw_.on_linkage(v)) {
        out.push_back(2 * v + 1);
      } else if (auto p = lw_.predecessor(v)) {
        out.push_back(2 * *p + 1);
      }
      return;
    }
    if (lw_.on_linkage(v)) out.push_back(2 * v);
    for (Vertex w : lw_.digraph().out(v))
      if (!lw_.is_linkage_edge(v, w)) out.push_back(2 * w);
  }

  const LinkedWeb& lw_;
  std::vector<std::size_t> parent_;
  std::vector<bool> seen_;
  std::vector<std::size_t> order_;
  std::size_t counter_ = 0;
};

Trail validated(const LinkedWeb& lw, Trail trail) {
  if (auto violation = check_alternating_trail(lw, trail))
    throw std::logic_error("split-network reconstruction produced a non-alternating trail: " +
                           violation->detail);
  return trail;
}

}  // namespace

ResidualDigraph residual_digraph(const LinkedWeb& lw) {
  ResidualDigraph out;
  std::vector<Edge> all;
  for (const Edge& e : lw.digraph().edges()) {
    if (lw.is_linkage_edge(e.tail, e.head)) {
      out.reversed.push_back({e.head, e.tail});
      all.push_back({e.head, e.tail});
    } else {
      out.forward.push_back(e);
      all.push_back(e);
    }
  }
  std::sort(out.reversed.begin(), out.reversed.end());
  out.base = lw.digraph().with_edges(std::move(all));
  return out;
}

std::optional<TrailViolation> check_alternating_trail(const LinkedWeb& lw, const Trail& trail) {
  const auto& seq = trail.vertices;
  const Digraph& d = lw.digraph();
  if (seq.empty()) return TrailViolation{TrailProperty::kResidualTrail, 0, "empty trail"};
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] >= d.vertex_count())
      return TrailViolation{TrailProperty::kResidualTrail, i, "unknown vertex"};
  if (!lw.is_unlinked_source(seq.front()))
    return TrailViolation{TrailProperty::kStartsUnlinked, 0,
                          d.name(seq.front()) + " is not an unlinked source"};
  if (seq.size() == 1) return std::nullopt;

  const std::size_t last = seq.size() - 1;
  std::set<Edge> used;
  for (std::size_t i = 0; i < last; ++i) {
    const Vertex u = seq[i], w = seq[i + 1];
    const std::string step = d.name(u) + "->" + d.name(w);
    const bool forward = is_forward_edge(lw, u, w);
    if (!forward && !is_reversed_edge(lw, u, w))
      return TrailViolation{TrailProperty::kResidualTrail, i, step + " is not a residual edge"};
    if (!used.insert({u, w}).second)
      return TrailViolation{TrailProperty::kResidualTrail, i, step + " is used twice"};

    const std::size_t j = i + 1;
    const bool repeated = std::find(seq.begin(), seq.begin() + j, w) != seq.begin() + j;
    if (repeated && (!lw.on_linkage(w) || j == last))
      return TrailViolation{TrailProperty::kRepetition, j,
                            d.name(w) + (j == last ? " repeats as terminal vertex"
                                                   : " repeats outside the linkage")};

    if (j < last && lw.on_linkage(w) && forward && !is_reversed_edge(lw, w, seq[j + 1]))
      return TrailViolation{TrailProperty::kGoBack, j,
                            "forward arrival at " + d.name(w) + " must continue backwards"};
  }
  return std::nullopt;
}

bool is_augmenting_trail(const LinkedWeb& lw, const Trail& trail) {
  return !check_alternating_trail(lw, trail) && lw.is_unlinked_sink(trail.ter());
}

std::optional<Trail> find_augmenting_trail(const LinkedWeb& lw) {
  SplitSearch search(lw);
  auto hit = search.run([&](std::size_t node) {
    return node % 2 == 0 && lw.is_unlinked_sink(static_cast<Vertex>(node / 2));
  });
  if (!hit) return std::nullopt;
  return validated(lw, search.trail_to(*hit));
}

std::vector<bool> alternating_terminals(const LinkedWeb& lw) {
  SplitSearch search(lw);
  search.run([](std::size_t) { return false; });
  std::vector<bool> out(lw.digraph().vertex_count());
  for (Vertex v = 0; v < out.size(); ++v) out[v] = search.seen(2 * v) || search.seen(2 * v + 1);
  return out;
}

std::optional<Trail> alternating_trail_to(const LinkedWeb& lw, Vertex v) {
  SplitSearch search(lw);
  search.run([](std::size_t) { return false; });
  const std::size_t in = 2 * v, out = 2 * v + 1;
  std::optional<std::size_t> node;
  if (search.seen(in)) node = in;
  if (search.seen(out) && (!node || search.order(out) < search.order(*node))) node = out;
  if (!node) return std::nullopt;

  Trail trail = search.trail_to(*node);
  auto first = std::find(trail.vertices.begin(), trail.vertices.end(), v);
  trail.vertices.erase(first + 1, trail.vertices.end());
  return validated(lw, std::move(trail));
}

void for_each_alternating_trail(const LinkedWeb& lw,
                                const std::function<bool(const Trail&)>& visit) {
  const auto moves = residual_moves(lw);
  const std::size_t n = lw.digraph().vertex_count();
  std::vector<bool> used(lw.digraph().edge_count(), false);
  std::vector<int> visits(n, 0);
  Trail trail;
  bool stopped = false;

  std::function<void(Vertex, bool)> extend = [&](Vertex u, bool arrived_forward) {
    for (const Move& m : moves[u]) {
      if (stopped) return;
      if (used[m.edge_id]) continue;
      if (arrived_forward && lw.on_linkage(u) && !m.reversed) continue;
      const bool repeated = visits[m.target] > 0;
      if (repeated && !lw.on_linkage(m.target)) continue;

      used[m.edge_id] = true;
      ++visits[m.target];
      trail.vertices.push_back(m.target);
      if (!repeated && !visit(trail)) stopped = true;
      if (!stopped) extend(m.target, !m.reversed);
      trail.vertices.pop_back();
      --visits[m.target];
      used[m.edge_id] = false;
    }
  };

  for (Vertex a : lw.unlinked_sources()) {
    trail.vertices.assign(1, a);
    if (!visit(trail)) return;
    visits[a] = 1;
    extend(a, false);
    visits[a] = 0;
    if (stopped) return;
  }
}

std::vector<Trail> enumerate_alternating_trails(const LinkedWeb& lw, std::size_t limit) {
  std::vector<Trail> out;
  bool exceeded = false;
  for_each_alternating_trail(lw, [&](const Trail& t) {
    if (out.size() == limit) {
      exceeded = true;
      return false;
    }
    out.push_back(t);
    return true;
  });
  if (exceeded)
    throw SearchBudgetExceeded("more than " + std::to_string(limit) + " alternating trails");
  return out;
}

std::vector<Trail> enumerate_augmenting_trails(const LinkedWeb& lw, std::size_t limit) {
  std::vector<Trail> out;
  bool exceeded = false;
  for_each_alternating_trail(lw, [&](const Trail& t) {
    if (!lw.is_unlinked_sink(t.ter())) return true;
    if (out.size() == limit) {
      exceeded = true;
      return false;
    }
    out.push_back(t);
    return true;
  });
  if (exceeded)
    throw SearchBudgetExceeded("more than " + std::to_string(limit) + " augmenting trails");
  return out;
}

std::vector<int> paths_met(const LinkedWeb& lw, const Trail& trail) {
  std::vector<int> out;
  for (Vertex v : trail.vertices)
    if (lw.on_linkage(v)) out.push_back(lw.path_of(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

template <typename Range>
bool sorted_disjoint(const Range& a, const Range& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

std::vector<Vertex> sorted_vertices(const Trail& t) {
  std::vector<Vertex> vs = t.vertices;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

}  // namespace

bool strongly_disjoint(const LinkedWeb& lw, const Trail& r, const Trail& t) {
  return sorted_disjoint(sorted_vertices(r), sorted_vertices(t)) &&
         sorted_disjoint(paths_met(lw, r), paths_met(lw, t));
}

std::vector<Trail> strongly_disjoint_subset(const LinkedWeb& lw, std::span<const Trail> trails) {
  std::vector<std::vector<Vertex>> vertex_sets;
  for (const Trail& t : trails) vertex_sets.push_back(sorted_vertices(t));
  for (std::size_t i = 0; i < trails.size(); ++i)
    for (std::size_t j = i + 1; j < trails.size(); ++j)
      if (!sorted_disjoint(vertex_sets[i], vertex_sets[j]))
        throw Error("NotDisjointInput", "trails " + std::to_string(i) + " and " +
                                            std::to_string(j) + " share a vertex");

  std::vector<Trail> kept;
  std::vector<bool> path_taken(lw.paths().size(), false);
  for (const Trail& t : trails) {
    const auto met = paths_met(lw, t);
    if (std::any_of(met.begin(), met.end(), [&](int p) { return path_taken[p]; })) continue;
    for (int p : met) path_taken[p] = true;
    kept.push_back(t);
  }
  return kept;
}

std::optional<std::vector<Trail>> find_v_joint_family(const LinkedWeb& lw, Vertex v,
                                                      std::size_t k, std::size_t budget) {
  if (k == 0) return std::vector<Trail>{};
  std::size_t expansions = 0;
  auto spend = [&] {
    if (++expansions > budget)
      throw SearchBudgetExceeded("v-joint family search exceeded " + std::to_string(budget) +
                                 " expansions");
  };

  std::vector<Trail> candidates;
  for_each_alternating_trail(lw, [&](const Trail& t) {
    spend();
    if (t.ter() == v && lw.is_unlinked_sink(v)) candidates.push_back(t);
    return true;
  });
  if (candidates.size() < k) return std::nullopt;

  // Two trails ending at v are v-joint iff their vertex sets minus v are disjoint.
  std::vector<std::vector<Vertex>> bodies;
  for (const Trail& t : candidates) {
    auto vs = sorted_vertices(t);
    vs.erase(std::remove(vs.begin(), vs.end(), v), vs.end());
    bodies.push_back(std::move(vs));
  }
  const std::size_t m = candidates.size();
  std::vector<std::vector<bool>> compatible(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      compatible[i][j] = compatible[j][i] = sorted_disjoint(bodies[i], bodies[j]);

  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> search = [&](std::size_t from) {
    spend();
    if (chosen.size() == k) return true;
    for (std::size_t i = from; i + (k - chosen.size()) <= m; ++i) {
      bool ok = std::all_of(chosen.begin(), chosen.end(),
                            [&](std::size_t c) { return compatible[c][i]; });
      if (!ok) continue;
      chosen.push_back(i);
      if (search(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(0)) return std::nullopt;

  std::vector<Trail> family;
  for (std::size_t i : chosen) family.push_back(candidates[i]);
  return family;
}

}  // namespace hindrance
