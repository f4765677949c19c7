#include "hindrance/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "hindrance/alternating.hpp"
#include "hindrance/augment.hpp"
#include "hindrance/hindrance_extract.hpp"

namespace hindrance {
namespace {

// Augments once along the BFS-first trail, reporting to hooks.
std::optional<LinkedWeb> step(const LinkedWeb& lw, const SolveHooks* hooks) {
  auto trail = find_augmenting_trail(lw);
  if (!trail) return std::nullopt;
  const Trail single[] = {*trail};
  LinkedWeb next(lw.web(), apply_augmenting_set(lw, single));
  if (hooks && hooks->on_augment) hooks->on_augment(lw, *trail, next);
  return next;
}

HindranceCertificate extract(const LinkedWeb& lw, const SolveHooks* hooks) {
  HindranceCertificate cert = extract_hindrance(lw);
  if (hooks && hooks->on_extract) hooks->on_extract(lw, cert);
  return cert;
}

Path reversed(Path p) {
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

}  // namespace

MaxLinkage max_linkage(const Web& web, const SolveHooks* hooks) {
  LinkedWeb lw(web, {});
  while (auto next = step(lw, hooks)) lw = std::move(*next);

  MaxLinkage out{lw.paths(), {}};
  if (!lw.unlinked_sources().empty()) {
    out.separator = extract(lw, hooks).separator;
  } else if (lw.unlinked_sinks().empty()) {
    out.separator = terminal_vertices(lw.paths());
  } else {
    // All sources are linked but some sinks are not: cut from the sink side.
    std::vector<Path> back;
    for (const Path& p : lw.paths()) back.push_back(reversed(p));
    LinkedWeb mirror(Web(web.digraph().reversed(), web.sinks(), web.sources()), std::move(back));
    out.separator = extract(mirror, hooks).separator;
  }
  return out;
}

HindranceCertificate hinder_from_wasteful(const LinkedWeb& lw, const HinderOptions& options) {
  const std::size_t free_sources = lw.unlinked_sources().size();
  const std::size_t free_sinks = lw.unlinked_sinks().size();
  if (free_sources <= free_sinks)
    throw Error("NotWasteful", std::to_string(free_sources) + " unlinked sources vs " +
                                   std::to_string(free_sinks) + " unlinked sinks");

  if (options.trim_sources > 0) {
    if (options.trim_sources > free_sources || free_sources - options.trim_sources <= free_sinks)
      throw Error("NotWasteful", "trimming " + std::to_string(options.trim_sources) +
                                     " sources leaves no wasteful linkage");
    VertexSet detached;
    auto it = lw.unlinked_sources().rbegin();
    for (std::size_t i = 0; i < options.trim_sources; ++i) detached.insert(*it++);

    std::vector<Edge> kept;
    for (const Edge& e : lw.digraph().edges())
      if (!detached.count(e.tail)) kept.push_back(e);
    VertexSet sources;
    std::set_difference(lw.web().sources().begin(), lw.web().sources().end(), detached.begin(),
                        detached.end(), std::inserter(sources, sources.end()));
    LinkedWeb trimmed(Web(lw.digraph().with_edges(std::move(kept)), std::move(sources),
                          lw.web().sinks()),
                      lw.paths());

    HindranceCertificate cert = hinder_from_wasteful(trimmed, {0, options.hooks});
    for (Vertex a : detached) {
      cert.separator.insert(a);
      cert.paths.push_back(Path{{a}});
    }
    if (auto report = validate_hindrance(lw.web(), cert); !report)
      throw std::logic_error("re-attached certificate is not a hindrance: " + report.clause);
    return cert;
  }

  LinkedWeb current = lw;
  while (!current.unlinked_sinks().empty()) {
    auto next = step(current, options.hooks);
    if (!next) return extract(current, options.hooks);
    if (next->unlinked_sources().size() + 1 != current.unlinked_sources().size() ||
        next->unlinked_sinks().size() + 1 != current.unlinked_sinks().size())
      throw std::logic_error("augmentation did not lower both deficiencies by one");
    current = std::move(*next);
  }
  return HindranceCertificate{terminal_vertices(current.paths()), current.paths()};
}

}  // namespace hindrance
