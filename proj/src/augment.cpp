#include "hindrance/augment.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hindrance/alternating.hpp"

namespace hindrance {

std::vector<Path> apply_augmenting_set(const LinkedWeb& lw, std::span<const Trail> trails) {
  const Digraph& d = lw.digraph();
  for (const Trail& t : trails) {
    if (!is_augmenting_trail(lw, t))
      throw Error("NotAugmenting", "trail " + format_trail(d, t) + " is not augmenting");
  }
  for (std::size_t i = 0; i < trails.size(); ++i)
    for (std::size_t j = i + 1; j < trails.size(); ++j)
      if (!strongly_disjoint(lw, trails[i], trails[j]))
        throw Error("NotStronglyDisjoint", "trails " + format_trail(d, trails[i]) + " and " +
                                               format_trail(d, trails[j]));

  std::set<Edge> edges;
  for (const Path& p : lw.paths())
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
      edges.insert({p.vertices[i], p.vertices[i + 1]});

  std::vector<Vertex> starts;
  for (const Path& p : lw.paths()) starts.push_back(p.in());
  for (const Trail& t : trails) {
    starts.push_back(t.in());
    for (std::size_t i = 0; i + 1 < t.vertices.size(); ++i) {
      const Vertex u = t.vertices[i], w = t.vertices[i + 1];
      if (lw.is_linkage_edge(w, u)) {
        edges.erase({w, u});
      } else {
        edges.insert({u, w});
      }
    }
  }

  std::map<Vertex, Vertex> next;
  for (const Edge& e : edges) {
    if (!next.emplace(e.tail, e.head).second)
      throw std::logic_error("rerouted linkage branches at " + d.name(e.tail));
  }

  std::vector<Path> out;
  std::vector<bool> visited(d.vertex_count(), false);
  std::sort(starts.begin(), starts.end());
  for (Vertex s : starts) {
    Path p;
    for (Vertex at = s;;) {
      if (visited[at]) throw std::logic_error("rerouted linkage revisits " + d.name(at));
      visited[at] = true;
      p.vertices.push_back(at);
      auto it = next.find(at);
      if (it == next.end()) break;
      at = it->second;
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::optional<LinkedWeb> augment_once(const LinkedWeb& lw) {
  auto trail = find_augmenting_trail(lw);
  if (!trail) return std::nullopt;
  const Trail single[] = {*trail};
  return LinkedWeb(lw.web(), apply_augmenting_set(lw, single));
}

}  // namespace hindrance
