#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hindrance/alternating.hpp"
#include "hindrance/augment.hpp"
#include "hindrance/hindrance_extract.hpp"

using namespace hindrance;
using namespace hindrance::testing;

namespace {

// Last vertex along each path that ends some enumerated alternating trail.
std::vector<Vertex> last_reachable_by_enumeration(const LinkedWeb& lw) {
  std::vector<bool> terminal(lw.digraph().vertex_count(), false);
  for (const Trail& t : enumerate_alternating_trails(lw, 1'000'000)) terminal[t.ter()] = true;
  std::vector<Vertex> out;
  for (const Path& p : lw.paths()) {
    Vertex best = p.in();
    for (Vertex v : p.vertices)
      if (terminal[v]) best = v;
    out.push_back(best);
  }
  return out;
}

LinkedWeb saturate(LinkedWeb lw) {
  while (auto next = augment_once(lw)) lw = std::move(*next);
  return lw;
}

}  // namespace

TEST(LastReachable, Fixtures) {
  LinkedWeb fan = fx::fan_linked();
  EXPECT_EQ(names(fan.digraph(), last_reachable_vertices(fan)), (std::vector<std::string>{"v"}));

  Web pop = fx::popular();
  LinkedWeb linked(pop, {fx::path(pop.digraph(), {"a1", "b"})});
  EXPECT_EQ(names(pop.digraph(), last_reachable_vertices(linked)), (std::vector<std::string>{"b"}));
}

TEST(LastReachable, SwapStopsAtP2) {
  // b1 has no in-edge in the residual digraph (p2->b1 is reversed), so the
  // last reachable vertex on a1 p1 p2 b1 is p2.
  LinkedWeb swap = fx::swap_linked();
  auto expected = last_reachable_by_enumeration(swap);
  EXPECT_EQ(names(swap.digraph(), expected), (std::vector<std::string>{"p2"}));
  EXPECT_EQ(last_reachable_vertices(swap), expected);
}

TEST(LastReachable, AgreesWithEnumeration) {
  for (const Web& w : random_webs(100, 17, 7))
    for (const LinkedWeb& lw : all_linkages(w, 3))
      EXPECT_EQ(last_reachable_vertices(lw), last_reachable_by_enumeration(lw));
}

TEST(ExtractHindrance, Fan) {
  LinkedWeb lw = fx::fan_linked();
  HindranceCertificate cert = extract_hindrance(lw);
  const Digraph& d = lw.digraph();
  EXPECT_EQ(names(d, cert.separator), (std::vector<std::string>{"v"}));
  EXPECT_EQ(names(d, cert.paths), (std::vector<std::vector<std::string>>{{"a1", "v"}}));
}

TEST(ExtractHindrance, FanSymmetric) {
  Web w = fx::fan();
  const Digraph& d = w.digraph();
  HindranceCertificate cert = extract_hindrance(LinkedWeb(w, {fx::path(d, {"a2", "v", "b2"})}));
  EXPECT_EQ(names(d, cert.separator), (std::vector<std::string>{"v"}));
  EXPECT_EQ(names(d, cert.paths), (std::vector<std::vector<std::string>>{{"a2", "v"}}));
}

TEST(ExtractHindrance, Preconditions) {
  try {
    extract_hindrance(fx::swap_linked());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "HasAugmentingTrail");
  }
  Web w = fx::popular();
  auto full = saturate(LinkedWeb(w, {}));
  Web k11 = fx::make_web({"a", "b"}, {{"a", "b"}}, {"a"}, {"b"});
  try {
    extract_hindrance(LinkedWeb(k11, {fx::path(k11.digraph(), {"a", "b"})}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "EmptyADeficiency");
  }
  HindranceCertificate cert = extract_hindrance(full);
  EXPECT_TRUE(validate_hindrance(w, cert).ok);
}

TEST(ExtractHindrance, NoPathsGivesEmptySeparator) {
  Web w = fx::make_web({"a", "b"}, {}, {"a"}, {"b"});
  HindranceCertificate cert = extract_hindrance(LinkedWeb(w, {}));
  EXPECT_TRUE(cert.separator.empty());
  EXPECT_TRUE(cert.paths.empty());
  EXPECT_TRUE(validate_hindrance(w, cert).ok);
}

TEST(ExtractHindrance, MengerTightOnRandomWebs) {
  std::size_t extracted = 0;
  for (const Web& w : random_webs(200, 23, 8)) {
    LinkedWeb lw = saturate(LinkedWeb(w, {}));
    if (lw.unlinked_sources().empty()) continue;
    HindranceCertificate cert = extract_hindrance(lw);
    ++extracted;
    EXPECT_TRUE(is_separator(w, cert.separator));
    EXPECT_EQ(cert.separator.size(), lw.paths().size());
    EXPECT_EQ(cert.separator.size(), oracle::brute_min_separator(w).size);
    EXPECT_EQ(lw.paths().size(), oracle::brute_max_linkage(w).size);
    EXPECT_TRUE(oracle::brute_is_hindrance(w, cert));
    auto last = last_reachable_vertices(lw);
    for (std::size_t i = 0; i < lw.paths().size(); ++i) EXPECT_EQ(lw.path_of(last[i]), int(i));
  }
  EXPECT_GT(extracted, 50u);
}
