#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hindrance/web.hpp"

namespace hindrance {

/// D with every linkage edge reversed. `reversed` holds the D*-edges that came
/// from linkage edges, `forward` the rest; together they partition D*.
struct ResidualDigraph {
  Digraph base;
  std::vector<Edge> reversed;
  std::vector<Edge> forward;
};

ResidualDigraph residual_digraph(const LinkedWeb& lw);

enum class TrailProperty {
  kResidualTrail = 1,  // consecutive pairs are distinct D*-edges
  kStartsUnlinked = 2,
  kRepetition = 3,
  kGoBack = 4,
};

struct TrailViolation {
  TrailProperty property;
  /// Index into the trail's vertex sequence where the check failed.
  std::size_t position;
  std::string detail;
};

/// Checks the four alternating-trail properties; nullopt when all hold.
std::optional<TrailViolation> check_alternating_trail(const LinkedWeb& lw, const Trail& trail);

/// Alternating and terminating in the unlinked sinks.
bool is_augmenting_trail(const LinkedWeb& lw, const Trail& trail);

/// Searches the vertex-split residual network. Returns the BFS-first
/// augmenting trail (least vertex ids win ties), re-validated against the
/// alternating properties.
std::optional<Trail> find_augmenting_trail(const LinkedWeb& lw);

/// For every vertex, whether it is the terminal vertex of some alternating
/// trail. Computed by reachability in the split residual network.
std::vector<bool> alternating_terminals(const LinkedWeb& lw);

/// Some alternating trail ending at `v`, if one exists.
std::optional<Trail> alternating_trail_to(const LinkedWeb& lw, Vertex v);

/// Depth-first enumeration of all alternating trails directly from the
/// property definitions (no split network). Trails arrive in a deterministic
/// order: by start vertex, then least next vertex first. The visitor returns
/// false to stop early.
void for_each_alternating_trail(const LinkedWeb& lw,
                                const std::function<bool(const Trail&)>& visit);

/// All alternating trails. Throws `SearchBudgetExceeded` if there are more
/// than `limit`.
std::vector<Trail> enumerate_alternating_trails(const LinkedWeb& lw, std::size_t limit);

/// All augmenting trails. Throws `SearchBudgetExceeded` if there are more
/// than `limit`.
std::vector<Trail> enumerate_augmenting_trails(const LinkedWeb& lw, std::size_t limit);

/// Indices of the linkage paths that `trail` meets.
std::vector<int> paths_met(const LinkedWeb& lw, const Trail& trail);

bool strongly_disjoint(const LinkedWeb& lw, const Trail& r, const Trail& t);

/// Greedy scan in input order, keeping each trail that is strongly disjoint
/// from all kept ones. Input trails must be pairwise vertex-disjoint
/// (`Error("NotDisjointInput")` otherwise).
std::vector<Trail> strongly_disjoint_subset(const LinkedWeb& lw, std::span<const Trail> trails);

inline constexpr std::size_t kDefaultSearchBudget = 1'000'000;

/// A family of `k` augmenting trails ending at `v` that pairwise meet only in
/// `v`, or nullopt if none exists. Exact search; `budget` bounds the total
/// number of search expansions (`SearchBudgetExceeded`).
std::optional<std::vector<Trail>> find_v_joint_family(const LinkedWeb& lw, Vertex v,
                                                      std::size_t k,
                                                      std::size_t budget = kDefaultSearchBudget);

}  // namespace hindrance
