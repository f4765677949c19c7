#pragma once

#include <vector>

#include "hindrance/web.hpp"

namespace hindrance {

/// For each linkage path (in `lw.paths()` order), the last vertex along it
/// that terminates some alternating trail; the initial vertex when no
/// alternating trail meets the path.
std::vector<Vertex> last_reachable_vertices(const LinkedWeb& lw);

/// Separator of the last reachable vertices, with the initial segment of every
/// linkage path up to its last reachable vertex.
///
/// Requires unlinked sources and no augmenting trail: throws
/// `Error("EmptyADeficiency")` / `Error("HasAugmentingTrail")`. The result is
/// checked against `validate_hindrance` before returning.
HindranceCertificate extract_hindrance(const LinkedWeb& lw);

}  // namespace hindrance
