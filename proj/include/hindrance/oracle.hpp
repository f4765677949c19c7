#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hindrance/web.hpp"

// Brute-force references. Nothing here calls the alternating-trail machinery;
// everything is decided by enumerating paths and vertex subsets.

namespace hindrance::oracle {

inline constexpr std::size_t kDefaultVertexCap = 10;

/// Throws `Error("CapExceeded")` when the web has more than `cap` vertices.
void require_within_cap(const Web& web, std::size_t cap);

/// Every XY-path: starts in X, ends in Y, interior avoids X ∪ Y. Vertices of
/// X ∩ Y appear as trivial paths. Deterministic order.
std::vector<Path> enumerate_paths(const Digraph& digraph, const VertexSet& from,
                                  const VertexSet& to);

/// S meets every path in `paths`.
bool meets_all(const std::vector<Path>& paths, const VertexSet& separator);

struct LinkageResult {
  std::size_t size = 0;
  std::vector<Path> witness;
};

LinkageResult brute_max_linkage(const Web& web, std::size_t cap = kDefaultVertexCap);

struct SeparatorResult {
  std::size_t size = 0;
  VertexSet witness;
};

SeparatorResult brute_min_separator(const Web& web, std::size_t cap = kDefaultVertexCap);

/// First hindrance found by scanning separators by size, then disjoint
/// AS-path systems onto them. When no AB-path exists and A is nonempty the
/// answer is S = ∅ with no paths.
std::optional<HindranceCertificate> brute_find_hindrance(const Web& web,
                                                         std::size_t cap = kDefaultVertexCap);

/// Independent certificate checker: every clause is decided against the
/// enumerated AB-paths and AS-paths.
bool brute_is_hindrance(const Web& web, const HindranceCertificate& cert);

/// Every partial linkage with at most `max_size` paths (including the empty
/// one), each as a sorted path list.
std::vector<std::vector<Path>> enumerate_partial_linkages(const Web& web, std::size_t max_size);

struct RandomWebParams {
  std::uint64_t seed = 1;
  std::size_t vertices = 6;
  double edge_probability = 0.3;
  std::size_t sources = 2;
  std::size_t sinks = 2;
  /// Draw sinks independently of sources, so A ∩ B may be nonempty.
  bool allow_overlap = false;
};

/// Deterministic for fixed parameters on every platform (splitmix64-seeded
/// xoshiro256** and explicit bit-to-probability conversion). Vertices are
/// v0, v1, ... zero-padded to a common width. Candidate edges are scanned by
/// (tail, head); edges into sources or out of sinks are skipped, as is any
/// edge whose reverse was already generated.
Web gen_random_web(const RandomWebParams& params);

/// Small deterministic PRNG shared by generators and sampling harnesses.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t s_[4];
};

/// Calls `visit` for every web on exactly `n` vertices named v0..v{n-1}.
/// With `up_to_isomorphism`, only one labelled representative per
/// isomorphism class is produced.
void for_each_web(std::size_t n, bool up_to_isomorphism,
                  const std::function<void(const Web&)>& visit);

}  // namespace hindrance::oracle
