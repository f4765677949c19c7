#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hindrance/web.hpp"

namespace hindrance {

/// Optional observers for the solver loops. Each is called after the step it
/// names; the acceptance suite uses them to audit every augmentation and
/// extraction.
struct SolveHooks {
  std::function<void(const LinkedWeb& before, const Trail& trail, const LinkedWeb& after)>
      on_augment;
  std::function<void(const LinkedWeb& lw, const HindranceCertificate& cert)> on_extract;
};

struct MaxLinkage {
  std::vector<Path> linkage;
  VertexSet separator;
};

/// Maximum partial linkage by repeated augmentation from the empty linkage,
/// together with an AB-separator of the same size.
MaxLinkage max_linkage(const Web& web, const SolveHooks* hooks = nullptr);

struct HinderOptions {
  /// Detach this many unlinked sources (lexicographically last first) before
  /// solving, then put them back as trivial hindrance paths.
  std::size_t trim_sources = 0;
  const SolveHooks* hooks = nullptr;
};

/// Hindrance certificate from a wasteful partial linkage.
///
/// Augments while both the unlinked-sink set is nonempty and an augmenting
/// trail exists; each round lowers both deficiencies by one. Ends either with
/// all sinks linked (the linkage itself is the hindrance, onto B) or with
/// `extract_hindrance`. Throws `Error("NotWasteful")`.
HindranceCertificate hinder_from_wasteful(const LinkedWeb& lw, const HinderOptions& options = {});

}  // namespace hindrance
