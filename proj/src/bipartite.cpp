#include "hindrance/bipartite.hpp"

#include <algorithm>
#include <stdexcept>

namespace hindrance {

BipartiteGraph::BipartiteGraph(std::vector<std::string> left, std::vector<std::string> right,
                               std::vector<TokenEdge> edges)
    : left_(std::move(left)), right_(std::move(right)), edges_(std::move(edges)) {
  std::vector<Violation> violations;
  std::sort(left_.begin(), left_.end());
  std::sort(right_.begin(), right_.end());
  std::sort(edges_.begin(), edges_.end());
  for (const auto* side : {&left_, &right_}) {
    auto dup = std::adjacent_find(side->begin(), side->end());
    if (dup != side->end()) violations.push_back({"DuplicateVertex", *dup});
  }
  std::vector<std::string> both;
  std::set_intersection(left_.begin(), left_.end(), right_.begin(), right_.end(),
                        std::back_inserter(both));
  for (const auto& v : both) violations.push_back({"SidesOverlap", v});
  for (const auto& [a, b] : edges_) {
    if (!std::binary_search(left_.begin(), left_.end(), a) ||
        !std::binary_search(right_.begin(), right_.end(), b))
      violations.push_back({"EdgeViolatesSides", a + " " + b});
  }
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) violations.push_back({"DuplicateEdge", dup->first + " " + dup->second});
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

bool BipartiteGraph::has_edge(const std::string& a, const std::string& b) const {
  return std::binary_search(edges_.begin(), edges_.end(), TokenEdge{a, b});
}

bool BipartiteGraph::is_left(const std::string& v) const {
  return std::binary_search(left_.begin(), left_.end(), v);
}

std::set<std::string> BipartiteGraph::neighbourhood(const std::set<std::string>& xs) const {
  std::set<std::string> out;
  for (const auto& [a, b] : edges_)
    if (xs.count(a)) out.insert(b);
  return out;
}

Web orient_bipartite(const BipartiteGraph& g) {
  std::vector<std::string> vertices = g.left();
  vertices.insert(vertices.end(), g.right().begin(), g.right().end());
  Digraph d(std::move(vertices), g.edges());
  VertexSet sources, sinks;
  for (const auto& a : g.left()) sources.insert(d.id(a));
  for (const auto& b : g.right()) sinks.insert(d.id(b));
  return Web(std::move(d), std::move(sources), std::move(sinks));
}

LinkedWeb matching_to_linkage(const BipartiteGraph& g, const Matching& m) {
  std::set<std::string> used;
  for (const auto& [a, b] : m) {
    if (!g.has_edge(a, b)) throw Error("NotAMatching", a + " " + b + " is not an edge");
    if (!used.insert(a).second || !used.insert(b).second)
      throw Error("NotAMatching", "matching edges share an endpoint at " + a + " " + b);
  }
  Web web = orient_bipartite(g);
  std::vector<Path> paths;
  for (const auto& [a, b] : m) paths.push_back(Path{{web.digraph().id(a), web.digraph().id(b)}});
  return LinkedWeb(std::move(web), std::move(paths));
}

HinderedSet hindered_set_from_hindrance(const BipartiteGraph& g,
                                        const HindranceCertificate& cert) {
  const Web web = orient_bipartite(g);
  if (auto report = validate_hindrance(web, cert); !report)
    throw Error("InvalidCertificate", report.clause);

  const Digraph& d = web.digraph();
  std::set<std::string> x;
  HinderedSet out;
  const VertexSet covered = vertices_of(cert.paths);
  for (const Path& p : cert.paths) {
    if (p.trivial()) continue;
    if (p.edge_count() != 1)
      throw std::logic_error("hindrance path in an oriented bipartite graph has several edges");
    x.insert(d.name(p.in()));
    out.matching.emplace_back(d.name(p.in()), d.name(p.ter()));
  }
  for (Vertex a : web.sources())
    if (!covered.count(a)) x.insert(d.name(a));
  out.x.assign(x.begin(), x.end());
  std::sort(out.matching.begin(), out.matching.end());
  return out;
}

bool verify_hindered_set(const BipartiteGraph& g, const HinderedSet& h) {
  const std::set<std::string> x(h.x.begin(), h.x.end());
  if (x.empty() || x.size() != h.x.size()) return false;
  for (const auto& v : x)
    if (!g.is_left(v)) return false;

  std::set<std::string> image, matched_right;
  for (const auto& [a, b] : h.matching) {
    if (!g.has_edge(a, b) || !x.count(a)) return false;
    if (!image.insert(a).second || !matched_right.insert(b).second) return false;
  }
  return matched_right == g.neighbourhood(x) && image.size() < x.size();
}

}  // namespace hindrance
