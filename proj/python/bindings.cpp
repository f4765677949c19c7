#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "hindrance/alternating.hpp"
#include "hindrance/bipartite.hpp"
#include "hindrance/elimination.hpp"
#include "hindrance/io.hpp"
#include "hindrance/oracle.hpp"
#include "hindrance/solver.hpp"

namespace py = pybind11;
using namespace hindrance;

namespace {

using Tokens = std::vector<std::string>;

Tokens names(const Digraph& d, const VertexSet& vs) {
  Tokens out;
  for (Vertex v : vs) out.push_back(d.name(v));
  return out;
}

Tokens names(const Digraph& d, const std::vector<Vertex>& vs) {
  Tokens out;
  for (Vertex v : vs) out.push_back(d.name(v));
  return out;
}

std::vector<Tokens> paths_to_tokens(const Digraph& d, const std::vector<Path>& paths) {
  std::vector<Tokens> out;
  for (const Path& p : paths) out.push_back(names(d, p.vertices));
  return out;
}

std::vector<Path> paths_from_tokens(const Digraph& d, const std::vector<Tokens>& paths) {
  std::vector<Path> out;
  for (const Tokens& p : paths) {
    Path path;
    for (const auto& t : p) path.vertices.push_back(d.id(t));
    out.push_back(std::move(path));
  }
  return out;
}

VertexSet set_from_tokens(const Digraph& d, const Tokens& ts) {
  VertexSet out;
  for (const auto& t : ts) out.insert(d.id(t));
  return out;
}

Web make_web(Tokens vertices, const std::vector<std::pair<std::string, std::string>>& edges,
             const Tokens& sources, const Tokens& sinks) {
  return validate_web(RawDigraph{std::move(vertices), edges}, sources, sinks);
}

py::dict certificate_dict(const Digraph& d, const HindranceCertificate& cert) {
  py::dict out;
  out["separator"] = names(d, cert.separator);
  out["paths"] = paths_to_tokens(d, cert.paths);
  return out;
}

HindranceCertificate certificate_from(const Digraph& d, const Tokens& separator,
                                      const std::vector<Tokens>& paths) {
  return {set_from_tokens(d, separator), paths_from_tokens(d, paths)};
}

}  // namespace

PYBIND11_MODULE(_hindrance, m) {
  m.doc() = "Linkages, augmenting trails and hindrance certificates in webs";

  static py::exception<Error> error(m, "HindranceError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (e.code() + ": " + e.what()).c_str());
    }
  });

  py::class_<Web>(m, "Web")
      .def(py::init(&make_web), py::arg("vertices"), py::arg("edges"), py::arg("sources"),
           py::arg("sinks"))
      .def_property_readonly("vertices", [](const Web& w) { return w.digraph().names(); })
      .def_property_readonly("edges",
                             [](const Web& w) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const Edge& e : w.digraph().edges())
                                 out.emplace_back(w.digraph().name(e.tail), w.digraph().name(e.head));
                               return out;
                             })
      .def_property_readonly("sources", [](const Web& w) { return names(w.digraph(), w.sources()); })
      .def_property_readonly("sinks", [](const Web& w) { return names(w.digraph(), w.sinks()); })
      .def("to_text", [](const Web& w) { return io::write_web(w); });

  m.def(
      "parse_input",
      [](const std::string& text) {
        io::Input in = io::parse_input(text);
        auto paths = paths_to_tokens(in.web.digraph(), in.paths);
        return py::make_tuple(in.web, paths);
      },
      py::arg("text"), "Parses a web or bipartite file; returns (web, linkage paths).");

  m.def(
      "deficiency",
      [](const Web& w, const std::vector<Tokens>& paths) {
        const Digraph& d = w.digraph();
        Deficiency def = deficiency(LinkedWeb(w, paths_from_tokens(d, paths)));
        return py::make_tuple(names(d, def.unlinked_sources), names(d, def.unlinked_sinks),
                              def.wasteful);
      },
      py::arg("web"), py::arg("paths"));

  m.def(
      "max_linkage",
      [](const Web& w) {
        MaxLinkage res = max_linkage(w);
        py::dict out;
        out["linkage"] = paths_to_tokens(w.digraph(), res.linkage);
        out["separator"] = names(w.digraph(), res.separator);
        return out;
      },
      py::arg("web"));

  m.def(
      "find_augmenting_trail",
      [](const Web& w, const std::vector<Tokens>& paths) -> std::optional<Tokens> {
        auto t = find_augmenting_trail(LinkedWeb(w, paths_from_tokens(w.digraph(), paths)));
        if (!t) return std::nullopt;
        return names(w.digraph(), t->vertices);
      },
      py::arg("web"), py::arg("paths"));

  m.def(
      "hinder_from_wasteful",
      [](const Web& w, const std::vector<Tokens>& paths, std::size_t trim_sources) {
        HinderOptions options;
        options.trim_sources = trim_sources;
        auto cert =
            hinder_from_wasteful(LinkedWeb(w, paths_from_tokens(w.digraph(), paths)), options);
        return certificate_dict(w.digraph(), cert);
      },
      py::arg("web"), py::arg("paths"), py::arg("trim_sources") = 0);

  m.def(
      "validate_hindrance",
      [](const Web& w, const Tokens& separator, const std::vector<Tokens>& paths) {
        CheckReport r = validate_hindrance(w, certificate_from(w.digraph(), separator, paths));
        return py::make_tuple(r.ok, r.clause);
      },
      py::arg("web"), py::arg("separator"), py::arg("paths"));

  m.def(
      "is_separator",
      [](const Web& w, const Tokens& separator) {
        return is_separator(w, set_from_tokens(w.digraph(), separator));
      },
      py::arg("web"), py::arg("separator"));

  m.def(
      "brute_max_linkage",
      [](const Web& w, std::size_t cap) { return oracle::brute_max_linkage(w, cap).size; },
      py::arg("web"), py::arg("cap") = oracle::kDefaultVertexCap);
  m.def(
      "brute_min_separator",
      [](const Web& w, std::size_t cap) { return oracle::brute_min_separator(w, cap).size; },
      py::arg("web"), py::arg("cap") = oracle::kDefaultVertexCap);
  m.def(
      "brute_find_hindrance",
      [](const Web& w, std::size_t cap) -> std::optional<py::dict> {
        auto cert = oracle::brute_find_hindrance(w, cap);
        if (!cert) return std::nullopt;
        return certificate_dict(w.digraph(), *cert);
      },
      py::arg("web"), py::arg("cap") = oracle::kDefaultVertexCap);

  m.def(
      "gen_random_web",
      [](std::uint64_t seed, std::size_t n, double p, std::size_t sources, std::size_t sinks,
         bool overlap) {
        return oracle::gen_random_web({seed, n, p, sources, sinks, overlap});
      },
      py::arg("seed"), py::arg("n"), py::arg("p"), py::arg("sources"), py::arg("sinks"),
      py::arg("overlap") = false);

  m.def(
      "hindered_set",
      [](Tokens left, Tokens right, std::vector<TokenEdge> edges, const Matching& matching) {
        BipartiteGraph g(std::move(left), std::move(right), std::move(edges));
        auto cert = hinder_from_wasteful(matching_to_linkage(g, matching));
        HinderedSet h = hindered_set_from_hindrance(g, cert);
        py::dict out;
        out["x"] = h.x;
        out["matching"] = h.matching;
        out["verified"] = verify_hindered_set(g, h);
        return out;
      },
      py::arg("left"), py::arg("right"), py::arg("edges"), py::arg("matching"));

  m.def(
      "run_elimination",
      [](const Web& w, const std::vector<Tokens>& paths, std::size_t k, std::size_t max_steps) {
        const Digraph& d = w.digraph();
        EliminationTrace trace =
            run_elimination(LinkedWeb(w, paths_from_tokens(d, paths)), k, max_steps);
        py::list steps;
        for (const EliminationState& s : trace.states) {
          py::dict step;
          step["sinks"] = names(d, s.sinks());
          step["linkage"] = paths_to_tokens(d, s.linked.paths());
          step["popular"] = names(d, s.popularity.popular);
          step["unpopular"] = names(d, s.popularity.unpopular);
          steps.append(step);
        }
        py::dict out;
        out["reason"] = to_string(trace.reason);
        out["threshold"] = trace.threshold;
        out["steps"] = steps;
        out["invariants_ok"] = check_trace_invariants(trace, w).ok();
        if (trace.limit) out["limit_sinks"] = names(d, trace.limit->sinks);
        return out;
      },
      py::arg("web"), py::arg("paths"), py::arg("k") = 0, py::arg("max_steps") = 50);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one CLI command; returns (exit code, stdout, stderr).");
}
