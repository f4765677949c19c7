#pragma once

#include <set>
#include <string>
#include <vector>

#include "hindrance/alternating.hpp"
#include "hindrance/fixtures.hpp"
#include "hindrance/oracle.hpp"
#include "hindrance/web.hpp"

namespace hindrance::testing {

namespace fx = hindrance::fixtures;

inline std::vector<std::string> names(const Digraph& d, const VertexSet& vs) {
  std::vector<std::string> out;
  for (Vertex v : vs) out.push_back(d.name(v));
  return out;
}

inline std::vector<std::string> names(const Digraph& d, const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  for (Vertex v : vs) out.push_back(d.name(v));
  return out;
}

inline std::vector<std::vector<std::string>> names(const Digraph& d, const std::vector<Path>& ps) {
  std::vector<std::vector<std::string>> out;
  for (const Path& p : ps) out.push_back(names(d, p.vertices));
  return out;
}

/// Seeded random webs with 3..max_n vertices and varying density.
inline std::vector<Web> random_webs(std::size_t count, std::uint64_t seed, std::size_t max_n) {
  std::vector<Web> out;
  oracle::Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    oracle::RandomWebParams p;
    p.seed = rng.next();
    p.vertices = 3 + rng.below(max_n - 2);
    p.edge_probability = 0.15 + 0.45 * rng.uniform();
    p.allow_overlap = rng.below(4) == 0;
    p.sources = 1 + rng.below(p.vertices / 2);
    p.sinks = 1 + rng.below(p.allow_overlap ? p.vertices / 2 : p.vertices - p.sources);
    out.push_back(oracle::gen_random_web(p));
  }
  return out;
}

/// Every partial linkage of `web`, each as a LinkedWeb.
inline std::vector<LinkedWeb> all_linkages(const Web& web, std::size_t max_size = 64) {
  std::vector<LinkedWeb> out;
  for (auto& paths : oracle::enumerate_partial_linkages(web, max_size))
    out.emplace_back(web, std::move(paths));
  return out;
}

// Every walk in D* without repeated edges, filtered through the property
// checker. Independent of the depth-first enumerator and the split network.
inline std::set<Trail> brute_alternating(const LinkedWeb& lw) {
  ResidualDigraph r = residual_digraph(lw);
  std::vector<Edge> all = r.reversed;
  all.insert(all.end(), r.forward.begin(), r.forward.end());
  std::set<Trail> out;
  std::vector<bool> used(all.size(), false);
  Trail t;
  auto extend = [&](auto&& self) -> void {
    if (!check_alternating_trail(lw, t)) out.insert(t);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (used[i] || all[i].tail != t.ter()) continue;
      used[i] = true;
      t.vertices.push_back(all[i].head);
      self(self);
      t.vertices.pop_back();
      used[i] = false;
    }
  };
  for (Vertex v = 0; v < lw.digraph().vertex_count(); ++v) {
    t.vertices.assign(1, v);
    extend(extend);
  }
  return out;
}

}  // namespace hindrance::testing
