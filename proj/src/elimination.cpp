#include "hindrance/elimination.hpp"

#include <algorithm>
#include <stdexcept>

namespace hindrance {
namespace {

VertexSet in_neighbourhood(const Digraph& d, const VertexSet& targets) {
  VertexSet out;
  for (Vertex u : targets)
    for (Vertex v : d.in(u))
      if (!targets.count(v)) out.insert(v);
  return out;
}

bool same_stage(const EliminationState& a, const EliminationState& b) {
  return a.sinks() == b.sinks() && a.linked.digraph().edges() == b.linked.digraph().edges() &&
         a.linked.paths() == b.linked.paths();
}

bool is_prefix(const Path& shorter, const Path& longer) {
  return shorter.vertices.size() <= longer.vertices.size() &&
         std::equal(shorter.vertices.begin(), shorter.vertices.end(), longer.vertices.begin());
}

bool subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// V(T) ∩ forbidden ⊆ {ter(T)}
bool avoids_except_end(const Trail& t, const VertexSet& forbidden) {
  for (std::size_t i = 0; i + 1 < t.vertices.size(); ++i)
    if (forbidden.count(t.vertices[i]) && t.vertices[i] != t.ter()) return false;
  return true;
}

}  // namespace

Popularity classify_popularity(const LinkedWeb& lw, std::size_t k, std::size_t budget) {
  Popularity out;
  for (Vertex v : lw.unlinked_sinks()) {
    if (find_v_joint_family(lw, v, k, budget))
      out.popular.insert(v);
    else
      out.unpopular.insert(v);
  }
  return out;
}

std::size_t default_popularity_threshold(const LinkedWeb& lw) {
  return std::max<std::size_t>(1, lw.unlinked_sources().size());
}

EliminationState make_elimination_state(LinkedWeb lw, std::size_t step, std::size_t k,
                                        std::size_t budget) {
  Popularity popularity = classify_popularity(lw, k, budget);
  VertexSet in_neighbours = in_neighbourhood(lw.digraph(), popularity.unpopular);
  return EliminationState{step, std::move(lw), std::move(popularity), std::move(in_neighbours),
                          std::nullopt};
}

EliminationState elimination_step(const EliminationState& state, std::size_t k,
                                  std::size_t budget) {
  const LinkedWeb& lw = state.linked;
  const Web& web = lw.web();
  const Digraph& d = lw.digraph();
  const VertexSet& unpopular = state.popularity.unpopular;
  const VertexSet& frontier = state.in_neighbours;

  VertexSet sinks;
  for (Vertex b : web.sinks())
    if (!unpopular.count(b) || web.is_source(b)) sinks.insert(b);
  sinks.insert(frontier.begin(), frontier.end());

  std::vector<Edge> edges;
  for (const Edge& e : d.edges())
    if (!frontier.count(e.tail)) edges.push_back(e);

  std::vector<Path> paths;
  for (const Path& p : lw.paths()) {
    auto cut = std::find_if(p.vertices.begin(), p.vertices.end(),
                            [&](Vertex v) { return sinks.count(v) > 0; });
    if (cut == p.vertices.end())
      throw std::logic_error("linkage path " + format_path(d, p) + " misses the new sinks");
    paths.push_back(Path{{p.vertices.begin(), cut + 1}});
  }

  if (!is_separator(d, web.sources(), web.sinks(), sinks))
    throw std::logic_error("new sinks do not separate the old sinks from the sources");

  Digraph next_digraph = d.with_edges(std::move(edges));
  LinkedWeb next(Web(std::move(next_digraph), web.sources(), std::move(sinks)), std::move(paths));
  return make_elimination_state(std::move(next), state.step + 1, k, budget);
}

VertexSet lost_vertices(const EliminationState& current, const EliminationState& next) {
  const VertexSet before = vertices_of(current.linked.paths());
  const VertexSet after = vertices_of(next.linked.paths());
  VertexSet out;
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                      std::inserter(out, out.end()));
  return out;
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::kFixpoint: return "fixpoint";
    case Termination::kStepCap: return "step-cap";
    case Termination::kCycleDetected: return "cycle-detected";
  }
  return "unknown";
}

EliminationTrace run_elimination(const LinkedWeb& lw, std::size_t k, std::size_t max_steps,
                                 std::size_t budget) {
  EliminationTrace trace;
  trace.threshold = k == 0 ? default_popularity_threshold(lw) : k;
  trace.states.push_back(make_elimination_state(lw, 0, trace.threshold, budget));
  for (std::size_t taken = 0; taken < max_steps; ++taken) {
    EliminationState next = elimination_step(trace.states.back(), trace.threshold, budget);
    trace.states.back().lost = lost_vertices(trace.states.back(), next);
    if (same_stage(trace.states.back(), next)) {
      const EliminationState& last = trace.states.back();
      trace.reason = Termination::kFixpoint;
      trace.limit = EliminationLimit{last.linked.digraph(), last.sinks(), last.linked.paths()};
      return trace;
    }
    for (const auto& earlier : trace.states) {
      if (same_stage(earlier, next)) {
        trace.reason = Termination::kCycleDetected;
        return trace;
      }
    }
    trace.states.push_back(std::move(next));
  }
  trace.reason = Termination::kStepCap;
  return trace;
}

bool InvariantReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const InvariantCheck& c) { return c.passed || !c.asserted; });
}

std::vector<const InvariantCheck*> InvariantReport::failures() const {
  std::vector<const InvariantCheck*> out;
  for (const auto& c : checks)
    if (!c.passed && c.asserted) out.push_back(&c);
  return out;
}

InvariantReport check_trace_invariants(const EliminationTrace& trace, const Web& original,
                                       std::size_t trail_budget) {
  InvariantReport report;
  if (trace.states.empty()) return report;
  auto record = [&](std::string clause, std::size_t step, bool passed, std::string detail = {},
                    bool asserted = true) {
    report.checks.push_back(
        {std::move(clause), step, passed, asserted, false, passed ? std::string{} : detail});
  };
  auto skip = [&](std::string clause, std::size_t step, std::string detail) {
    report.checks.push_back({std::move(clause), step, true, true, true, std::move(detail)});
    ++report.budget_exceeded;
  };

  const Digraph& d = original.digraph();
  const VertexSet& unlinked0 = trace.states.front().linked.unlinked_sources();

  for (std::size_t n = 0; n < trace.states.size(); ++n) {
    const EliminationState& s = trace.states[n];
    record("a", n, s.linked.unlinked_sources() == unlinked0, "unlinked sources changed");
    record("b", n, is_separator(d, original.sources(), original.sinks(), s.sinks()),
           "sinks " + d.format(s.sinks()) + " do not separate B from A");
    if (n + 1 >= trace.states.size()) continue;

    const EliminationState& t = trace.states[n + 1];
    const LinkedWeb& cur = s.linked;
    const LinkedWeb& nxt = t.linked;
    record("step-separation", n,
           is_separator(cur.digraph(), original.sources(), s.sinks(), t.sinks()),
           "B_{n+1} does not separate B_n from A in D_n");

    bool prefix = cur.paths().size() == nxt.paths().size();
    for (std::size_t i = 0; prefix && i < nxt.paths().size(); ++i)
      prefix = is_prefix(nxt.paths()[i], cur.paths()[i]);
    record("prefix", n, prefix, "P_{n+1} is not a set of initial segments of P_n");

    const auto& e0 = cur.digraph().edges();
    const auto& e1 = nxt.digraph().edges();
    record("edges-shrink", n, std::includes(e0.begin(), e0.end(), e1.begin(), e1.end()),
           "E_{n+1} is not a subset of E_n");

    record("popular-grows", n, subset(s.popularity.popular, t.popularity.popular),
           "expected-possible at finite threshold", false);

    const VertexSet lost = s.lost ? *s.lost : lost_vertices(s, t);
    VertexSet lost_or_frontier = lost;
    lost_or_frontier.insert(s.in_neighbours.begin(), s.in_neighbours.end());

    try {
      std::string bad;
      for (const Trail& tr : enumerate_alternating_trails(cur, trail_budget)) {
        if (!avoids_except_end(tr, lost_or_frontier)) continue;
        if (check_alternating_trail(nxt, tr)) {
          bad = format_trail(d, tr);
          break;
        }
      }
      record("c", n, bad.empty(), "trail " + bad + " stops being alternating");
    } catch (const SearchBudgetExceeded& e) {
      skip("c", n, e.what());
    }
    try {
      std::string bad;
      for (const Trail& tr : enumerate_alternating_trails(nxt, trail_budget)) {
        if (!avoids_except_end(tr, lost)) continue;
        if (check_alternating_trail(cur, tr)) {
          bad = format_trail(d, tr);
          break;
        }
      }
      record("d", n, bad.empty(), "trail " + bad + " was not alternating before");
    } catch (const SearchBudgetExceeded& e) {
      skip("d", n, e.what());
    }
  }

  if (trace.reason == Termination::kFixpoint && trace.limit)
    record("e", trace.states.size() - 1,
           is_separator(d, original.sources(), original.sinks(), trace.limit->sinks),
           "limit sinks do not separate B from A");
  return report;
}

}  // namespace hindrance
