#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hindrance/web.hpp"

// Small hand-built webs shared by tests, the acceptance suite and the CLI
// smoke checks.

namespace hindrance::fixtures {

Web make_web(std::vector<std::string> vertices,
             std::vector<std::pair<std::string, std::string>> edges,
             std::initializer_list<std::string_view> sources,
             std::initializer_list<std::string_view> sinks);

Path path(const Digraph& d, std::initializer_list<std::string_view> tokens);
Trail trail(const Digraph& d, std::initializer_list<std::string_view> tokens);
VertexSet vertex_set(const Digraph& d, std::initializer_list<std::string_view> tokens);

/// a1, a2, a3 all feed v, which feeds b1 and b2.
Web fan();
/// a1->p1->p2->b1 with the cross edges a2->p2 and p1->b2.
Web swap();
/// a->b plus the isolated x in both A and B.
Web trivial();
/// a1->b, a2->b.
Web popular();
/// `swap` with a third source a3->p1.
Web swap_extra_source();

/// fan with {a1 v b1}.
LinkedWeb fan_linked();
/// swap with {a1 p1 p2 b1}.
LinkedWeb swap_linked();

}  // namespace hindrance::fixtures
