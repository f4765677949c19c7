#include "hindrance/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace hindrance::oracle {
namespace {

using Mask = std::uint64_t;

Mask mask_of(const Path& p) {
  Mask m = 0;
  for (Vertex v : p.vertices) m |= Mask{1} << v;
  return m;
}

VertexSet set_of(Mask m) {
  VertexSet out;
  for (Vertex v = 0; m; ++v, m >>= 1)
    if (m & 1) out.insert(v);
  return out;
}

// Calls visit(mask) for every k-subset of n vertices, in lexicographic order of
// the sorted member lists; stops when visit returns true.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (std::size_t i : idx) m |= Mask{1} << i;
    if (visit(m)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::string vertex_name(std::size_t i, std::size_t n) {
  const std::size_t width = std::to_string(n > 0 ? n - 1 : 0).size();
  std::string digits = std::to_string(i);
  return "v" + std::string(width - digits.size(), '0') + digits;
}

std::vector<std::string> vertex_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(vertex_name(i, n));
  return out;
}

}  // namespace

void require_within_cap(const Web& web, std::size_t cap) {
  if (web.vertex_count() > cap || web.vertex_count() > 64)
    throw Error("CapExceeded", "web has " + std::to_string(web.vertex_count()) +
                                   " vertices, oracle cap is " + std::to_string(cap));
}

std::vector<Path> enumerate_paths(const Digraph& digraph, const VertexSet& from,
                                  const VertexSet& to) {
  std::vector<Path> out;
  std::vector<bool> on_path(digraph.vertex_count(), false);
  Path current;
  auto extend = [&](auto&& self, Vertex u) -> void {
    for (Vertex w : digraph.out(u)) {
      if (on_path[w]) continue;
      if (to.count(w)) {
        current.vertices.push_back(w);
        out.push_back(current);
        current.vertices.pop_back();
        continue;
      }
      if (from.count(w)) continue;
      on_path[w] = true;
      current.vertices.push_back(w);
      self(self, w);
      current.vertices.pop_back();
      on_path[w] = false;
    }
  };
  for (Vertex x : from) {
    current.vertices.assign(1, x);
    if (to.count(x)) out.push_back(current);
    on_path[x] = true;
    extend(extend, x);
    on_path[x] = false;
  }
  return out;
}

bool meets_all(const std::vector<Path>& paths, const VertexSet& separator) {
  return std::all_of(paths.begin(), paths.end(), [&](const Path& p) {
    return std::any_of(p.vertices.begin(), p.vertices.end(),
                       [&](Vertex v) { return separator.count(v) > 0; });
  });
}

LinkageResult brute_max_linkage(const Web& web, std::size_t cap) {
  require_within_cap(web, cap);
  const auto paths = enumerate_paths(web.digraph(), web.sources(), web.sinks());
  // Group by initial vertex; each source contributes at most one path.
  std::vector<Vertex> sources(web.sources().begin(), web.sources().end());
  std::vector<std::vector<std::size_t>> by_source(sources.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    auto it = std::lower_bound(sources.begin(), sources.end(), paths[i].in());
    by_source[it - sources.begin()].push_back(i);
  }
  std::vector<Mask> masks;
  for (const Path& p : paths) masks.push_back(mask_of(p));

  const std::size_t ceiling = std::min(web.sources().size(), web.sinks().size());
  std::vector<std::size_t> chosen, best;
  auto search = [&](auto&& self, std::size_t s, Mask used) -> void {
    if (chosen.size() > best.size()) best = chosen;
    if (best.size() == ceiling) return;
    if (s == sources.size() || chosen.size() + (sources.size() - s) <= best.size()) return;
    for (std::size_t i : by_source[s]) {
      if (masks[i] & used) continue;
      chosen.push_back(i);
      self(self, s + 1, used | masks[i]);
      chosen.pop_back();
      if (best.size() == ceiling) return;
    }
    self(self, s + 1, used);
  };
  search(search, 0, 0);

  LinkageResult out;
  out.size = best.size();
  for (std::size_t i : best) out.witness.push_back(paths[i]);
  return out;
}

SeparatorResult brute_min_separator(const Web& web, std::size_t cap) {
  require_within_cap(web, cap);
  const auto paths = enumerate_paths(web.digraph(), web.sources(), web.sinks());
  std::vector<Mask> masks;
  for (const Path& p : paths) masks.push_back(mask_of(p));
  const std::size_t n = web.vertex_count();
  for (std::size_t k = 0; k <= n; ++k) {
    Mask found = 0;
    bool hit = for_each_subset(n, k, [&](Mask s) {
      if (std::all_of(masks.begin(), masks.end(), [&](Mask p) { return (p & s) != 0; })) {
        found = s;
        return true;
      }
      return false;
    });
    if (hit) return {k, set_of(found)};
  }
  throw std::logic_error("the full vertex set always separates");
}

std::optional<HindranceCertificate> brute_find_hindrance(const Web& web, std::size_t cap) {
  require_within_cap(web, cap);
  const std::size_t a = web.sources().size();
  if (a == 0) return std::nullopt;
  const auto ab_paths = enumerate_paths(web.digraph(), web.sources(), web.sinks());
  std::vector<Mask> ab_masks;
  for (const Path& p : ab_paths) ab_masks.push_back(mask_of(p));
  const std::size_t n = web.vertex_count();

  std::optional<HindranceCertificate> result;
  for (std::size_t k = 0; k < a && !result; ++k) {
    for_each_subset(n, k, [&](Mask s) {
      if (!std::all_of(ab_masks.begin(), ab_masks.end(), [&](Mask p) { return (p & s) != 0; }))
        return false;
      const VertexSet separator = set_of(s);
      const auto as_paths = enumerate_paths(web.digraph(), web.sources(), separator);
      const std::vector<Vertex> targets(separator.begin(), separator.end());
      std::vector<std::size_t> chosen;
      auto link = [&](auto&& self, std::size_t t, Mask used) -> bool {
        if (t == targets.size()) return true;
        for (std::size_t i = 0; i < as_paths.size(); ++i) {
          if (as_paths[i].ter() != targets[t]) continue;
          const Mask m = mask_of(as_paths[i]);
          if (m & used) continue;
          chosen.push_back(i);
          if (self(self, t + 1, used | m)) return true;
          chosen.pop_back();
        }
        return false;
      };
      if (!link(link, 0, 0)) return false;
      HindranceCertificate cert{separator, {}};
      for (std::size_t i : chosen) cert.paths.push_back(as_paths[i]);
      result = std::move(cert);
      return true;
    });
  }
  return result;
}

bool brute_is_hindrance(const Web& web, const HindranceCertificate& cert) {
  const std::size_t n = web.vertex_count();
  for (Vertex s : cert.separator)
    if (s >= n) return false;
  for (const Path& p : cert.paths) {
    if (p.vertices.empty()) return false;
    for (Vertex v : p.vertices)
      if (v >= n) return false;
  }
  if (!meets_all(enumerate_paths(web.digraph(), web.sources(), web.sinks()), cert.separator))
    return false;

  const auto as_paths = enumerate_paths(web.digraph(), web.sources(), cert.separator);
  VertexSet seen, starts, ends;
  for (const Path& p : cert.paths) {
    if (std::find(as_paths.begin(), as_paths.end(), p) == as_paths.end()) return false;
    for (Vertex v : p.vertices)
      if (!seen.insert(v).second) return false;
    starts.insert(p.in());
    ends.insert(p.ter());
  }
  return ends == cert.separator && starts.size() < web.sources().size();
}

std::vector<std::vector<Path>> enumerate_partial_linkages(const Web& web, std::size_t max_size) {
  const auto paths = enumerate_paths(web.digraph(), web.sources(), web.sinks());
  std::vector<Mask> masks;
  for (const Path& p : paths) masks.push_back(mask_of(p));
  std::vector<std::vector<Path>> out;
  std::vector<Path> current;
  auto search = [&](auto&& self, std::size_t from, Mask used) -> void {
    out.push_back(current);
    if (current.size() == max_size) return;
    for (std::size_t i = from; i < paths.size(); ++i) {
      if (masks[i] & used) continue;
      current.push_back(paths[i]);
      self(self, i + 1, used | masks[i]);
      current.pop_back();
    }
  };
  search(search, 0, 0);
  return out;
}

Rng::Rng(std::uint64_t seed) {
  // splitmix64 expansion of the seed
  for (auto& word : s_) {
    seed += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = seed;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    word = z ^ (z >> 31);
  }
}

std::uint64_t Rng::next() {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

Web gen_random_web(const RandomWebParams& params) {
  const std::size_t n = params.vertices;
  if (params.sources > n || params.sinks > n ||
      (!params.allow_overlap && params.sources + params.sinks > n))
    throw std::invalid_argument("not enough vertices for the requested sources and sinks");

  Rng rng(params.seed);
  auto shuffled = [&] {
    std::vector<Vertex> order(n);
    for (Vertex i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    return order;
  };
  const auto order = shuffled();
  VertexSet sources(order.begin(), order.begin() + params.sources);
  VertexSet sinks;
  if (params.allow_overlap) {
    const auto second = shuffled();
    sinks.insert(second.begin(), second.begin() + params.sinks);
  } else {
    sinks.insert(order.begin() + params.sources, order.begin() + params.sources + params.sinks);
  }

  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<std::pair<std::string, std::string>> edges;
  const auto names = vertex_names(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      const bool draw = rng.uniform() < params.edge_probability;
      if (!draw || sinks.count(u) || sources.count(v) || adj[v][u]) continue;
      adj[u][v] = true;
      edges.emplace_back(names[u], names[v]);
    }
  }
  return Web(Digraph(names, edges), std::move(sources), std::move(sinks));
}

namespace {

enum Role : int { kSource = 0, kSink = 1, kBoth = 2, kNeither = 3 };

bool may_leave(int role) { return role == kSource || role == kNeither; }
bool may_enter(int role) { return role == kSink || role == kNeither; }

class WebEnumerator {
 public:
  WebEnumerator(std::size_t n, bool up_to_isomorphism, const std::function<void(const Web&)>& visit)
      : n_(n), iso_(up_to_isomorphism), visit_(visit), names_(vertex_names(n)) {
    if (n > 8) throw std::invalid_argument("web enumeration supports at most 8 vertices");
  }

  void run() {
    std::vector<int> roles(n_, 0);
    assign_roles(roles, 0);
  }

 private:
  void assign_roles(std::vector<int>& roles, std::size_t i) {
    if (i == n_) {
      enumerate_edges(roles);
      return;
    }
    const int start = (iso_ && i > 0) ? roles[i - 1] : 0;
    for (int r = start; r < 4; ++r) {
      roles[i] = r;
      assign_roles(roles, i + 1);
    }
  }

  void enumerate_edges(const std::vector<int>& roles) {
    // Per unordered pair: the list of allowed orientations (0 = none).
    struct Slot {
      Vertex i, j;
      std::vector<int> options;  // 0 none, 1 i->j, 2 j->i
    };
    std::vector<Slot> slots;
    for (Vertex i = 0; i < n_; ++i) {
      for (Vertex j = i + 1; j < n_; ++j) {
        Slot s{i, j, {0}};
        if (may_leave(roles[i]) && may_enter(roles[j])) s.options.push_back(1);
        if (may_leave(roles[j]) && may_enter(roles[i])) s.options.push_back(2);
        if (s.options.size() > 1) slots.push_back(std::move(s));
      }
    }
    std::vector<std::size_t> digit(slots.size(), 0);
    std::vector<Edge> edges;
    while (true) {
      edges.clear();
      for (std::size_t k = 0; k < slots.size(); ++k) {
        const int o = slots[k].options[digit[k]];
        if (o == 1) edges.push_back({slots[k].i, slots[k].j});
        if (o == 2) edges.push_back({slots[k].j, slots[k].i});
      }
      if (!iso_ || canonical(roles, edges)) emit(roles, edges);

      std::size_t k = 0;
      while (k < slots.size() && ++digit[k] == slots[k].options.size()) digit[k++] = 0;
      if (k == slots.size()) break;
    }
  }

  // True iff this labelled web is the chosen representative of its class:
  // vertex keys (role, out-degree, in-degree) are nondecreasing and no
  // key-preserving relabelling gives a smaller adjacency code.
  bool canonical(const std::vector<int>& roles, const std::vector<Edge>& edges) const {
    std::vector<std::array<int, 3>> key(n_);
    for (Vertex v = 0; v < n_; ++v) key[v] = {roles[v], 0, 0};
    for (const Edge& e : edges) {
      ++key[e.tail][1];
      ++key[e.head][2];
    }
    for (Vertex v = 1; v < n_; ++v)
      if (key[v] < key[v - 1]) return false;

    const Mask code = encode(edges, identity());
    std::vector<std::vector<Vertex>> cells;
    for (Vertex v = 0; v < n_; ++v) {
      if (v == 0 || key[v] != key[v - 1]) cells.emplace_back();
      cells.back().push_back(v);
    }
    std::erase_if(cells, [](const auto& c) { return c.size() < 2; });
    if (cells.empty()) return true;

    std::vector<Vertex> perm = identity();
    auto smaller = [&](auto&& self, std::size_t c) -> bool {
      if (c == cells.size()) return encode(edges, perm) < code;
      std::vector<Vertex> image = cells[c];
      do {
        for (std::size_t t = 0; t < image.size(); ++t) perm[cells[c][t]] = image[t];
        if (self(self, c + 1)) return true;
      } while (std::next_permutation(image.begin(), image.end()));
      for (Vertex v : cells[c]) perm[v] = v;
      return false;
    };
    return !smaller(smaller, 0);
  }

  std::vector<Vertex> identity() const {
    std::vector<Vertex> p(n_);
    for (Vertex v = 0; v < n_; ++v) p[v] = v;
    return p;
  }

  Mask encode(const std::vector<Edge>& edges, const std::vector<Vertex>& perm) const {
    Mask m = 0;
    for (const Edge& e : edges) m |= Mask{1} << (perm[e.tail] * n_ + perm[e.head]);
    return m;
  }

  void emit(const std::vector<int>& roles, const std::vector<Edge>& edges) {
    VertexSet sources, sinks;
    for (Vertex v = 0; v < n_; ++v) {
      if (roles[v] == kSource || roles[v] == kBoth) sources.insert(v);
      if (roles[v] == kSink || roles[v] == kBoth) sinks.insert(v);
    }
    std::vector<std::pair<std::string, std::string>> tokens;
    for (const Edge& e : edges) tokens.emplace_back(names_[e.tail], names_[e.head]);
    visit_(Web(Digraph(names_, tokens), std::move(sources), std::move(sinks)));
  }

  std::size_t n_;
  bool iso_;
  const std::function<void(const Web&)>& visit_;
  std::vector<std::string> names_;
};

}  // namespace

void for_each_web(std::size_t n, bool up_to_isomorphism,
                  const std::function<void(const Web&)>& visit) {
  WebEnumerator(n, up_to_isomorphism, visit).run();
}

}  // namespace hindrance::oracle
