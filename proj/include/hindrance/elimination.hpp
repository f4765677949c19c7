#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hindrance/alternating.hpp"
#include "hindrance/web.hpp"

namespace hindrance {

struct Popularity {
  VertexSet popular;
  VertexSet unpopular;
};

/// Splits the unlinked sinks into those admitting a v-joint family of `k`
/// augmenting trails (popular) and the rest.
Popularity classify_popularity(const LinkedWeb& lw, std::size_t k,
                               std::size_t budget = kDefaultSearchBudget);

/// max(1, number of unlinked sources).
std::size_t default_popularity_threshold(const LinkedWeb& lw);

/// One stage (D_n, A, B_n, P_n) of the elimination recursion with its
/// popularity split and the in-neighbourhood N⁻(U_n) in D_n.
struct EliminationState {
  std::size_t step = 0;
  LinkedWeb linked;
  Popularity popularity;
  VertexSet in_neighbours;
  /// V(P_n) \ V(P_{n+1}); set once the next state exists.
  std::optional<VertexSet> lost;

  const VertexSet& sinks() const { return linked.web().sinks(); }
};

EliminationState make_elimination_state(LinkedWeb lw, std::size_t step, std::size_t k,
                                        std::size_t budget = kDefaultSearchBudget);

/// B_{n+1} = (B_n \ (U_n \ A)) ∪ N⁻(U_n); E_{n+1} drops the out-edges of
/// N⁻(U_n); P_{n+1} cuts every path at its first vertex in B_{n+1}.
/// Throws `std::logic_error` if B_{n+1} fails to separate B_n from A in D_n.
EliminationState elimination_step(const EliminationState& state, std::size_t k,
                                  std::size_t budget = kDefaultSearchBudget);

/// V(P_n) \ V(P_{n+1}).
VertexSet lost_vertices(const EliminationState& current, const EliminationState& next);

enum class Termination { kFixpoint, kStepCap, kCycleDetected };

std::string to_string(Termination t);

struct EliminationLimit {
  Digraph digraph;
  VertexSet sinks;
  std::vector<Path> linkage;
};

struct EliminationTrace {
  std::vector<EliminationState> states;
  Termination reason = Termination::kStepCap;
  std::optional<EliminationLimit> limit;
  std::size_t threshold = 1;
};

/// Iterates `elimination_step` until the (sinks, edges, linkage) triple
/// repeats or `max_steps` steps were taken. `k == 0` selects
/// `default_popularity_threshold`.
EliminationTrace run_elimination(const LinkedWeb& lw, std::size_t k, std::size_t max_steps,
                                 std::size_t budget = kDefaultSearchBudget);

struct InvariantCheck {
  std::string clause;
  std::size_t step = 0;
  bool passed = true;
  /// Reported-only checks never fail the report.
  bool asserted = true;
  bool skipped = false;
  std::string detail;
};

struct InvariantReport {
  std::vector<InvariantCheck> checks;
  std::size_t budget_exceeded = 0;

  bool ok() const;
  std::vector<const InvariantCheck*> failures() const;
};

inline constexpr std::size_t kDefaultTrailBudget = 100'000;

/// Structural checks over a trace:
///  (a) unlinked sources never change;
///  (b) every B_n separates B from A in the original digraph;
///  (c) L_n-alternating trails avoiding W_n ∪ N⁻(U_n) except at their end
///      stay L_{n+1}-alternating;
///  (d) L_{n+1}-alternating trails avoiding W_n except at their end are
///      L_n-alternating;
///  (e) at a fixpoint the limit sinks separate B from A.
/// Also asserts the prefix property, E_{n+1} ⊆ E_n and per-step separation,
/// and reports (without asserting) whether the popular sets grow.
/// (c)/(d) enumerations exceeding `trail_budget` are counted, not failed.
InvariantReport check_trace_invariants(const EliminationTrace& trace, const Web& original,
                                       std::size_t trail_budget = kDefaultTrailBudget);

}  // namespace hindrance
