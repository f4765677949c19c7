#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hindrance/web.hpp"

namespace hindrance {

/// Reroutes the linkage along a set of strongly disjoint augmenting trails.
///
/// The returned linkage Q satisfies in(Q) = in(P) ∪ in(T),
/// ter(Q) = ter(P) ∪ ter(T) and |Q| = |P| + |T|. It is built from the edge
/// set E(P) with every reversed trail edge removed and every forward trail
/// edge added, by following out-edges from each initial vertex; directed
/// cycles left over in that edge set are discarded.
///
/// Throws `Error("NotAugmenting")` or `Error("NotStronglyDisjoint")` when the
/// preconditions fail, and `std::logic_error` if the rerouted edge set
/// branches (which the preconditions rule out).
std::vector<Path> apply_augmenting_set(const LinkedWeb& lw, std::span<const Trail> trails);

/// One augmentation along `find_augmenting_trail`, or nullopt if there is
/// no augmenting trail.
std::optional<LinkedWeb> augment_once(const LinkedWeb& lw);

}  // namespace hindrance
