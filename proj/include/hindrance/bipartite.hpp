#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hindrance/web.hpp"

namespace hindrance {

using TokenEdge = std::pair<std::string, std::string>;

/// Undirected bipartite graph with sides `left` (A) and `right` (B). Edges are
/// stored as (left, right) pairs.
class BipartiteGraph {
 public:
  /// Throws `ValidationError` (DuplicateVertex, SidesOverlap,
  /// EdgeViolatesSides, DuplicateEdge).
  BipartiteGraph(std::vector<std::string> left, std::vector<std::string> right,
                 std::vector<TokenEdge> edges);

  const std::vector<std::string>& left() const noexcept { return left_; }
  const std::vector<std::string>& right() const noexcept { return right_; }
  const std::vector<TokenEdge>& edges() const noexcept { return edges_; }
  bool has_edge(const std::string& a, const std::string& b) const;
  bool is_left(const std::string& v) const;
  std::set<std::string> neighbourhood(const std::set<std::string>& xs) const;

 private:
  std::vector<std::string> left_;
  std::vector<std::string> right_;
  std::vector<TokenEdge> edges_;
};

/// (left, right) pairs.
using Matching = std::vector<TokenEdge>;

/// X ⊆ A whose neighbourhood is matched into a proper subset of X.
struct HinderedSet {
  std::vector<std::string> x;  // sorted
  Matching matching;           // sorted
};

/// Every edge oriented towards the right side; sources = left, sinks = right.
Web orient_bipartite(const BipartiteGraph& g);

/// One-edge linkage path per matching edge. Throws `Error("NotAMatching")`.
LinkedWeb matching_to_linkage(const BipartiteGraph& g, const Matching& m);

/// Translates a hindrance of `orient_bipartite(g)` (vertex ids of that web).
/// Throws `Error("InvalidCertificate")`.
HinderedSet hindered_set_from_hindrance(const BipartiteGraph& g, const HindranceCertificate& cert);

bool verify_hindered_set(const BipartiteGraph& g, const HinderedSet& h);

}  // namespace hindrance
