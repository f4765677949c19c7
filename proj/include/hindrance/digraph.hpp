#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hindrance {

/// Index into a digraph's vertex table. Tables are kept sorted, so comparing
/// vertex ids is the same as comparing their tokens lexicographically.
using Vertex = std::uint32_t;
using VertexSet = std::set<Vertex>;

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Token-level digraph as read from input, before any validation.
struct RawDigraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

/// Immutable digraph over a sorted table of opaque vertex tokens.
///
/// The structure itself only guarantees that edge endpoints are vertices and
/// that edges are not duplicated. Loops and antiparallel pairs are rejected by
/// `Web`, not here, so that `normalize_subdivide` can accept them.
/// Copies are cheap: the data is shared.
class Digraph {
 public:
  Digraph();

  /// Builds from tokens. Duplicate tokens or edges, and edges naming unknown
  /// tokens, throw `Error` ("DuplicateVertex", "DuplicateEdge",
  /// "DanglingEndpoint").
  Digraph(std::vector<std::string> vertices,
          std::span<const std::pair<std::string, std::string>> edges);

  /// Same vertex table as `this`, different edge set.
  Digraph with_edges(std::vector<Edge> edges) const;

  std::size_t vertex_count() const noexcept { return data_->names->size(); }
  std::size_t edge_count() const noexcept { return data_->edges.size(); }

  const std::string& name(Vertex v) const { return data_->names->at(v); }
  const std::vector<std::string>& names() const noexcept { return *data_->names; }
  std::optional<Vertex> find(std::string_view token) const;
  /// Throws `Error("UnknownVertex")`.
  Vertex id(std::string_view token) const;

  std::span<const Vertex> out(Vertex v) const { return data_->out[v]; }
  std::span<const Vertex> in(Vertex v) const { return data_->in[v]; }
  bool has_edge(Vertex tail, Vertex head) const;
  /// Sorted.
  const std::vector<Edge>& edges() const noexcept { return data_->edges; }

  /// Same vertex table, every edge reversed.
  Digraph reversed() const;

  bool same_vertex_table(const Digraph& other) const noexcept {
    return data_->names == other.data_->names;
  }

  std::string format(const VertexSet& vs) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.names() == b.names() && a.edges() == b.edges();
  }

 private:
  struct Data {
    std::shared_ptr<const std::vector<std::string>> names;
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> out;
    std::vector<std::vector<Vertex>> in;
  };

  Digraph(std::shared_ptr<const std::vector<std::string>> table, std::vector<Edge> edges);

  std::shared_ptr<const Data> data_;
};

/// Replaces every edge u->v by u->m->v with a fresh vertex m. Accepts
/// antiparallel pairs; the result has none. Loops throw `Error("LoopEdge")`.
/// Fresh tokens are m1, m2, ... in sorted edge order, skipping taken names.
Digraph normalize_subdivide(const Digraph& digraph);

}  // namespace hindrance
