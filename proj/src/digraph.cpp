#include "hindrance/digraph.hpp"

#include <algorithm>

#include "hindrance/error.hpp"

namespace hindrance {

Digraph::Digraph()
    : Digraph(std::make_shared<const std::vector<std::string>>(), std::vector<Edge>{}) {}

Digraph::Digraph(std::vector<std::string> vertices,
                 std::span<const std::pair<std::string, std::string>> edges) {
  std::sort(vertices.begin(), vertices.end());
  auto dup = std::adjacent_find(vertices.begin(), vertices.end());
  if (dup != vertices.end()) throw Error("DuplicateVertex", "duplicate vertex " + *dup);

  auto table = std::make_shared<const std::vector<std::string>>(std::move(vertices));
  auto lookup = [&](const std::string& token) {
    auto it = std::lower_bound(table->begin(), table->end(), token);
    if (it == table->end() || *it != token)
      throw Error("DanglingEndpoint", "edge endpoint " + token + " is not a vertex");
    return static_cast<Vertex>(it - table->begin());
  };

  std::vector<Edge> ids;
  ids.reserve(edges.size());
  for (const auto& [u, v] : edges) ids.push_back({lookup(u), lookup(v)});
  std::sort(ids.begin(), ids.end());
  auto dup_edge = std::adjacent_find(ids.begin(), ids.end());
  if (dup_edge != ids.end())
    throw Error("DuplicateEdge",
                "duplicate edge " + (*table)[dup_edge->tail] + " " + (*table)[dup_edge->head]);

  *this = Digraph(std::move(table), std::move(ids));
}

Digraph::Digraph(std::shared_ptr<const std::vector<std::string>> table, std::vector<Edge> edges) {
  auto data = std::make_shared<Data>();
  const std::size_t n = table->size();
  data->names = std::move(table);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  data->out.resize(n);
  data->in.resize(n);
  for (const Edge& e : edges) {
    if (e.tail >= n || e.head >= n) throw std::out_of_range("edge endpoint outside vertex table");
    data->out[e.tail].push_back(e.head);
    data->in[e.head].push_back(e.tail);
  }
  // edges are sorted by (tail, head), so out lists are sorted; in lists need it
  for (auto& list : data->in) std::sort(list.begin(), list.end());
  data->edges = std::move(edges);
  data_ = std::move(data);
}

Digraph Digraph::with_edges(std::vector<Edge> edges) const {
  return Digraph(data_->names, std::move(edges));
}

std::optional<Vertex> Digraph::find(std::string_view token) const {
  const auto& names = *data_->names;
  auto it = std::lower_bound(names.begin(), names.end(), token,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == names.end() || *it != token) return std::nullopt;
  return static_cast<Vertex>(it - names.begin());
}

Vertex Digraph::id(std::string_view token) const {
  if (auto v = find(token)) return *v;
  throw Error("UnknownVertex", "unknown vertex " + std::string(token));
}

bool Digraph::has_edge(Vertex tail, Vertex head) const {
  const auto& list = data_->out[tail];
  return std::binary_search(list.begin(), list.end(), head);
}

Digraph Digraph::reversed() const {
  std::vector<Edge> flipped;
  flipped.reserve(edge_count());
  for (const Edge& e : edges()) flipped.push_back({e.head, e.tail});
  return with_edges(std::move(flipped));
}

std::string Digraph::format(const VertexSet& vs) const {
  std::string out;
  for (Vertex v : vs) {
    if (!out.empty()) out += ' ';
    out += name(v);
  }
  return out;
}

Digraph normalize_subdivide(const Digraph& digraph) {
  std::vector<std::string> names = digraph.names();
  std::set<std::string> taken(names.begin(), names.end());
  std::vector<std::pair<std::string, std::string>> edges;
  edges.reserve(2 * digraph.edge_count());

  std::size_t counter = 0;
  for (const Edge& e : digraph.edges()) {
    if (e.tail == e.head) throw Error("LoopEdge", "loop at " + digraph.name(e.tail));
    std::string mid;
    do {
      mid = "m" + std::to_string(++counter);
    } while (taken.count(mid));
    taken.insert(mid);
    names.push_back(mid);
    edges.emplace_back(digraph.name(e.tail), mid);
    edges.emplace_back(mid, digraph.name(e.head));
  }
  return Digraph(std::move(names), edges);
}

}  // namespace hindrance
