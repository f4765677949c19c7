#include "hindrance/hindrance_extract.hpp"

#include <stdexcept>

#include "hindrance/alternating.hpp"

namespace hindrance {

std::vector<Vertex> last_reachable_vertices(const LinkedWeb& lw) {
  const auto terminal = alternating_terminals(lw);
  std::vector<Vertex> out;
  out.reserve(lw.paths().size());
  for (const Path& p : lw.paths()) {
    Vertex last = p.in();
    for (Vertex v : p.vertices)
      if (terminal[v]) last = v;
    out.push_back(last);
  }
  return out;
}

HindranceCertificate extract_hindrance(const LinkedWeb& lw) {
  if (lw.unlinked_sources().empty())
    throw Error("EmptyADeficiency", "every source is linked");
  if (auto trail = find_augmenting_trail(lw))
    throw Error("HasAugmentingTrail",
                "augmenting trail " + format_trail(lw.digraph(), *trail) + " exists");

  HindranceCertificate cert;
  const auto cut = last_reachable_vertices(lw);
  for (std::size_t i = 0; i < lw.paths().size(); ++i) {
    const auto& vs = lw.paths()[i].vertices;
    const std::size_t end = lw.position(cut[i]);
    cert.separator.insert(cut[i]);
    cert.paths.push_back(Path{{vs.begin(), vs.begin() + end + 1}});
  }
  if (auto report = validate_hindrance(lw.web(), cert); !report)
    throw std::logic_error("extracted certificate is not a hindrance: " + report.clause);
  return cert;
}

}  // namespace hindrance
