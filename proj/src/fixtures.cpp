#include "hindrance/fixtures.hpp"

namespace hindrance::fixtures {
namespace {

VertexSet resolve(const Digraph& d, std::initializer_list<std::string_view> tokens) {
  VertexSet out;
  for (auto t : tokens) out.insert(d.id(t));
  return out;
}

}  // namespace

Web make_web(std::vector<std::string> vertices,
             std::vector<std::pair<std::string, std::string>> edges,
             std::initializer_list<std::string_view> sources,
             std::initializer_list<std::string_view> sinks) {
  Digraph d(std::move(vertices), edges);
  VertexSet a = resolve(d, sources);
  VertexSet b = resolve(d, sinks);
  return Web(std::move(d), std::move(a), std::move(b));
}

Path path(const Digraph& d, std::initializer_list<std::string_view> tokens) {
  Path p;
  for (auto t : tokens) p.vertices.push_back(d.id(t));
  return p;
}

Trail trail(const Digraph& d, std::initializer_list<std::string_view> tokens) {
  Trail t;
  for (auto tok : tokens) t.vertices.push_back(d.id(tok));
  return t;
}

VertexSet vertex_set(const Digraph& d, std::initializer_list<std::string_view> tokens) {
  return resolve(d, tokens);
}

Web fan() {
  return make_web({"a1", "a2", "a3", "v", "b1", "b2"},
                  {{"a1", "v"}, {"a2", "v"}, {"a3", "v"}, {"v", "b1"}, {"v", "b2"}},
                  {"a1", "a2", "a3"}, {"b1", "b2"});
}

Web swap() {
  return make_web({"a1", "a2", "p1", "p2", "b1", "b2"},
                  {{"a1", "p1"}, {"p1", "p2"}, {"p2", "b1"}, {"a2", "p2"}, {"p1", "b2"}},
                  {"a1", "a2"}, {"b1", "b2"});
}

Web trivial() { return make_web({"a", "b", "x"}, {{"a", "b"}}, {"a", "x"}, {"b", "x"}); }

Web popular() {
  return make_web({"a1", "a2", "b"}, {{"a1", "b"}, {"a2", "b"}}, {"a1", "a2"}, {"b"});
}

Web swap_extra_source() {
  return make_web(
      {"a1", "a2", "a3", "p1", "p2", "b1", "b2"},
      {{"a1", "p1"}, {"p1", "p2"}, {"p2", "b1"}, {"a2", "p2"}, {"p1", "b2"}, {"a3", "p1"}},
      {"a1", "a2", "a3"}, {"b1", "b2"});
}

LinkedWeb fan_linked() {
  Web w = fan();
  Path p = path(w.digraph(), {"a1", "v", "b1"});
  return LinkedWeb(std::move(w), {p});
}

LinkedWeb swap_linked() {
  Web w = swap();
  Path p = path(w.digraph(), {"a1", "p1", "p2", "b1"});
  return LinkedWeb(std::move(w), {p});
}

}  // namespace hindrance::fixtures
