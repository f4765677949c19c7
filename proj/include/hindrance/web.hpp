#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "hindrance/digraph.hpp"
#include "hindrance/error.hpp"

namespace hindrance {

/// Vertex sequence v0..vn. A single vertex is the trivial path.
struct Path {
  std::vector<Vertex> vertices;

  Vertex in() const { return vertices.front(); }
  Vertex ter() const { return vertices.back(); }
  bool trivial() const noexcept { return vertices.size() == 1; }
  std::size_t edge_count() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }

  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Like `Path`, but vertices may repeat (edges may not). Alternating trails
/// live in the residual digraph, so consecutive pairs are not necessarily
/// edges of the underlying digraph.
struct Trail {
  std::vector<Vertex> vertices;

  Vertex in() const { return vertices.front(); }
  Vertex ter() const { return vertices.back(); }
  bool trivial() const noexcept { return vertices.size() == 1; }
  std::size_t edge_count() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }

  friend auto operator<=>(const Trail&, const Trail&) = default;
};

/// A digraph with sources A (no in-edges) and sinks B (no out-edges).
class Web {
 public:
  Web() = default;
  /// Throws `ValidationError` listing LoopEdge, AntiparallelPair,
  /// SourceHasInEdge, SinkHasOutEdge violations.
  Web(Digraph digraph, VertexSet sources, VertexSet sinks);

  const Digraph& digraph() const noexcept { return digraph_; }
  const VertexSet& sources() const noexcept { return sources_; }
  const VertexSet& sinks() const noexcept { return sinks_; }
  bool is_source(Vertex v) const { return source_mask_[v]; }
  bool is_sink(Vertex v) const { return sink_mask_[v]; }
  std::size_t vertex_count() const noexcept { return digraph_.vertex_count(); }

 private:
  Digraph digraph_;
  VertexSet sources_;
  VertexSet sinks_;
  std::vector<bool> source_mask_;
  std::vector<bool> sink_mask_;
};

/// Every violation of the web invariants, in a deterministic order.
std::vector<Violation> web_violations(const Digraph& digraph, const VertexSet& sources,
                                      const VertexSet& sinks);

/// Token-level entry point; additionally reports DanglingEndpoint for edges or
/// terminals that name undeclared vertices. Throws `ValidationError`.
Web validate_web(const RawDigraph& raw, std::span<const std::string> sources,
                 std::span<const std::string> sinks);

/// A web together with a partial linkage: disjoint AB-paths.
///
/// Paths are stored sorted by initial vertex. The unlinked sets are
/// A \ in(P) and B \ ter(P).
class LinkedWeb {
 public:
  /// Throws `ValidationError` (NotAnABPath, PathsShareVertex, EdgeNotInDigraph).
  LinkedWeb(Web web, std::vector<Path> paths);

  const Web& web() const noexcept { return web_; }
  const Digraph& digraph() const noexcept { return web_.digraph(); }
  const std::vector<Path>& paths() const noexcept { return paths_; }

  const VertexSet& unlinked_sources() const noexcept { return unlinked_sources_; }
  const VertexSet& unlinked_sinks() const noexcept { return unlinked_sinks_; }

  bool on_linkage(Vertex v) const { return path_of_[v] >= 0; }
  /// Index into `paths()` or -1.
  int path_of(Vertex v) const { return path_of_[v]; }
  std::size_t position(Vertex v) const { return position_[v]; }
  /// Predecessor along its linkage path, if any.
  std::optional<Vertex> predecessor(Vertex v) const;
  bool is_linkage_edge(Vertex tail, Vertex head) const;
  bool is_unlinked_source(Vertex v) const { return web_.is_source(v) && !linked_start_[v]; }
  bool is_unlinked_sink(Vertex v) const { return web_.is_sink(v) && !linked_end_[v]; }

 private:
  Web web_;
  std::vector<Path> paths_;
  VertexSet unlinked_sources_;
  VertexSet unlinked_sinks_;
  std::vector<int> path_of_;
  std::vector<std::size_t> position_;
  std::vector<bool> linked_start_;
  std::vector<bool> linked_end_;
};

inline LinkedWeb validate_partial_linkage(Web web, std::vector<Path> paths) {
  return LinkedWeb(std::move(web), std::move(paths));
}

struct Deficiency {
  VertexSet unlinked_sources;
  VertexSet unlinked_sinks;
  bool wasteful = false;
};

Deficiency deficiency(const LinkedWeb& lw);

/// True iff every XY-path of `digraph` contains a vertex of `separator`.
/// A vertex of X∩Y outside the separator is itself an XY-path.
bool is_separator(const Digraph& digraph, const VertexSet& from, const VertexSet& to,
                  const VertexSet& separator);

inline bool is_separator(const Web& web, const VertexSet& separator) {
  return is_separator(web.digraph(), web.sources(), web.sinks(), separator);
}

/// Separator S together with disjoint AS-paths linking a proper subset of A
/// onto S.
struct HindranceCertificate {
  VertexSet separator;
  std::vector<Path> paths;
};

struct CheckReport {
  bool ok = true;
  /// First failed clause, empty when `ok`.
  std::string clause;

  explicit operator bool() const noexcept { return ok; }
  static CheckReport pass() { return {}; }
  static CheckReport fail(std::string clause) { return {false, std::move(clause)}; }
};

CheckReport validate_hindrance(const Web& web, const HindranceCertificate& cert);

VertexSet initial_vertices(std::span<const Path> paths);
VertexSet terminal_vertices(std::span<const Path> paths);
VertexSet vertices_of(std::span<const Path> paths);

/// True when `path` is a path of `digraph` (edges present, no vertex repeated).
bool is_path_in(const Digraph& digraph, const Path& path);

std::string format_path(const Digraph& digraph, const Path& path);
std::string format_trail(const Digraph& digraph, const Trail& trail);

}  // namespace hindrance
