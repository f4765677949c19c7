#include "hindrance/web.hpp"

#include <algorithm>
#include <deque>

namespace hindrance {
namespace {

std::vector<bool> mask_of(const VertexSet& vs, std::size_t n) {
  std::vector<bool> mask(n, false);
  for (Vertex v : vs) mask.at(v) = true;
  return mask;
}

}  // namespace

std::vector<Violation> web_violations(const Digraph& digraph, const VertexSet& sources,
                                      const VertexSet& sinks) {
  std::vector<Violation> out;
  const std::size_t n = digraph.vertex_count();
  for (Vertex v : sources)
    if (v >= n) out.push_back({"DanglingEndpoint", "source id out of range"});
  for (Vertex v : sinks)
    if (v >= n) out.push_back({"DanglingEndpoint", "sink id out of range"});
  if (!out.empty()) return out;

  for (const Edge& e : digraph.edges()) {
    const std::string pair = digraph.name(e.tail) + "->" + digraph.name(e.head);
    if (e.tail == e.head) {
      out.push_back({"LoopEdge", pair});
      continue;
    }
    if (e.tail < e.head && digraph.has_edge(e.head, e.tail))
      out.push_back({"AntiparallelPair", pair});
  }
  for (Vertex a : sources)
    if (!digraph.in(a).empty()) out.push_back({"SourceHasInEdge", digraph.name(a)});
  for (Vertex b : sinks)
    if (!digraph.out(b).empty()) out.push_back({"SinkHasOutEdge", digraph.name(b)});
  return out;
}

Web::Web(Digraph digraph, VertexSet sources, VertexSet sinks)
    : digraph_(std::move(digraph)), sources_(std::move(sources)), sinks_(std::move(sinks)) {
  auto violations = web_violations(digraph_, sources_, sinks_);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  source_mask_ = mask_of(sources_, digraph_.vertex_count());
  sink_mask_ = mask_of(sinks_, digraph_.vertex_count());
}

Web validate_web(const RawDigraph& raw, std::span<const std::string> sources,
                 std::span<const std::string> sinks) {
  std::vector<Violation> violations;
  std::set<std::string> declared;
  for (const auto& v : raw.vertices)
    if (!declared.insert(v).second) violations.push_back({"DuplicateVertex", v});

  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : raw.edges) {
    bool ok = true;
    for (const auto* end : {&u, &v}) {
      if (!declared.count(*end)) {
        violations.push_back({"DanglingEndpoint", *end});
        ok = false;
      }
    }
    if (ok) edges.emplace_back(u, v);
  }
  auto terminals = [&](std::span<const std::string> tokens) {
    std::set<std::string> seen;
    for (const auto& t : tokens) {
      if (!declared.count(t)) violations.push_back({"DanglingEndpoint", t});
      seen.insert(t);
    }
    return seen;
  };
  auto source_tokens = terminals(sources);
  auto sink_tokens = terminals(sinks);
  if (!violations.empty()) throw ValidationError(std::move(violations));

  Digraph digraph(std::vector<std::string>(declared.begin(), declared.end()), edges);
  VertexSet a, b;
  for (const auto& t : source_tokens) a.insert(digraph.id(t));
  for (const auto& t : sink_tokens) b.insert(digraph.id(t));
  return Web(std::move(digraph), std::move(a), std::move(b));
}

LinkedWeb::LinkedWeb(Web web, std::vector<Path> paths)
    : web_(std::move(web)), paths_(std::move(paths)) {
  const Digraph& d = web_.digraph();
  const std::size_t n = d.vertex_count();
  path_of_.assign(n, -1);
  position_.assign(n, 0);
  linked_start_.assign(n, false);
  linked_end_.assign(n, false);

  std::sort(paths_.begin(), paths_.end(), [](const Path& x, const Path& y) {
    if (x.vertices.empty() || y.vertices.empty()) return x.vertices.size() < y.vertices.size();
    return x.in() < y.in();
  });

  std::vector<Violation> violations;
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    const Path& p = paths_[i];
    if (p.vertices.empty()) {
      violations.push_back({"NotAnABPath", "empty path"});
      continue;
    }
    bool bad_id = false;
    for (Vertex v : p.vertices) bad_id |= v >= n;
    if (bad_id) {
      violations.push_back({"NotAnABPath", "path names an unknown vertex"});
      continue;
    }
    const std::string label = format_path(d, p);
    bool ok = web_.is_source(p.in()) && web_.is_sink(p.ter());
    for (std::size_t j = 1; j + 1 < p.vertices.size(); ++j)
      ok &= !web_.is_source(p.vertices[j]) && !web_.is_sink(p.vertices[j]);
    std::vector<Vertex> sorted = p.vertices;
    std::sort(sorted.begin(), sorted.end());
    ok &= std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (!ok) {
      violations.push_back({"NotAnABPath", label});
      continue;
    }
    for (std::size_t j = 0; j + 1 < p.vertices.size(); ++j) {
      if (!d.has_edge(p.vertices[j], p.vertices[j + 1])) {
        violations.push_back(
            {"EdgeNotInDigraph", d.name(p.vertices[j]) + "->" + d.name(p.vertices[j + 1])});
        ok = false;
      }
    }
    if (!ok) continue;
    for (std::size_t j = 0; j < p.vertices.size(); ++j) {
      Vertex v = p.vertices[j];
      if (path_of_[v] >= 0) {
        violations.push_back({"PathsShareVertex", d.name(v)});
        continue;
      }
      path_of_[v] = static_cast<int>(i);
      position_[v] = j;
    }
    linked_start_[p.in()] = true;
    linked_end_[p.ter()] = true;
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));

  for (Vertex a : web_.sources())
    if (!linked_start_[a]) unlinked_sources_.insert(a);
  for (Vertex b : web_.sinks())
    if (!linked_end_[b]) unlinked_sinks_.insert(b);
}

std::optional<Vertex> LinkedWeb::predecessor(Vertex v) const {
  const int p = path_of_[v];
  if (p < 0 || position_[v] == 0) return std::nullopt;
  return paths_[p].vertices[position_[v] - 1];
}

bool LinkedWeb::is_linkage_edge(Vertex tail, Vertex head) const {
  return path_of_[tail] >= 0 && path_of_[tail] == path_of_[head] &&
         position_[head] == position_[tail] + 1;
}

Deficiency deficiency(const LinkedWeb& lw) {
  return {lw.unlinked_sources(), lw.unlinked_sinks(),
          lw.unlinked_sources().size() > lw.unlinked_sinks().size()};
}

bool is_separator(const Digraph& digraph, const VertexSet& from, const VertexSet& to,
                  const VertexSet& separator) {
  const std::size_t n = digraph.vertex_count();
  std::vector<bool> blocked(n, false), target(n, false), seen(n, false);
  for (Vertex s : separator) blocked.at(s) = true;
  for (Vertex y : to) target.at(y) = !blocked[y];

  std::deque<Vertex> queue;
  for (Vertex x : from) {
    if (blocked.at(x)) continue;
    if (target[x]) return false;
    seen[x] = true;
    queue.push_back(x);
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : digraph.out(u)) {
      if (blocked[w] || seen[w]) continue;
      if (target[w]) return false;
      seen[w] = true;
      queue.push_back(w);
    }
  }
  return true;
}

VertexSet initial_vertices(std::span<const Path> paths) {
  VertexSet out;
  for (const Path& p : paths) out.insert(p.in());
  return out;
}

VertexSet terminal_vertices(std::span<const Path> paths) {
  VertexSet out;
  for (const Path& p : paths) out.insert(p.ter());
  return out;
}

VertexSet vertices_of(std::span<const Path> paths) {
  VertexSet out;
  for (const Path& p : paths) out.insert(p.vertices.begin(), p.vertices.end());
  return out;
}

bool is_path_in(const Digraph& digraph, const Path& path) {
  if (path.vertices.empty()) return false;
  for (Vertex v : path.vertices)
    if (v >= digraph.vertex_count()) return false;
  std::vector<Vertex> sorted = path.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i)
    if (!digraph.has_edge(path.vertices[i], path.vertices[i + 1])) return false;
  return true;
}

CheckReport validate_hindrance(const Web& web, const HindranceCertificate& cert) {
  const Digraph& d = web.digraph();
  for (Vertex s : cert.separator)
    if (s >= d.vertex_count()) return CheckReport::fail("separator names an unknown vertex");

  std::vector<bool> used(d.vertex_count(), false);
  for (const Path& p : cert.paths) {
    if (!is_path_in(d, p)) return CheckReport::fail("not a path of the digraph");
    const std::string label = format_path(d, p);
    if (!web.is_source(p.in())) return CheckReport::fail("path does not start in A: " + label);
    if (!cert.separator.count(p.ter()))
      return CheckReport::fail("path does not end in S: " + label);
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
      Vertex v = p.vertices[i];
      if (web.is_source(v) || cert.separator.count(v))
        return CheckReport::fail("path interior meets A or S: " + label);
    }
    for (Vertex v : p.vertices) {
      if (used[v]) return CheckReport::fail("paths share vertex " + d.name(v));
      used[v] = true;
    }
  }
  if (terminal_vertices(cert.paths) != cert.separator)
    return CheckReport::fail("ter(paths) != S");
  if (initial_vertices(cert.paths).size() >= web.sources().size())
    return CheckReport::fail("in(paths) is not a proper subset of A");
  if (!is_separator(web, cert.separator)) return CheckReport::fail("S is not an AB-separator");
  return CheckReport::pass();
}

std::string format_path(const Digraph& digraph, const Path& path) {
  std::string out;
  for (Vertex v : path.vertices) {
    if (!out.empty()) out += ' ';
    out += digraph.name(v);
  }
  return out;
}

std::string format_trail(const Digraph& digraph, const Trail& trail) {
  return format_path(digraph, Path{trail.vertices});
}

}  // namespace hindrance
