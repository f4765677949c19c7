#include "hindrance/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace hindrance::io {

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}, {}};
    if (!(in >> line.keyword)) continue;
    for (std::string tok; in >> tok;) line.args.push_back(tok);
    out.push_back(std::move(line));
  }
  return out;
}

void parse_error(std::size_t line, const std::string& message) {
  throw Error("ParseError", "line " + std::to_string(line) + ": " + message);
}

namespace {

void expect_args(const Line& line, std::size_t n) {
  if (line.args.size() != n)
    parse_error(line.number, "'" + line.keyword + "' takes " + std::to_string(n) +
                                 (n == 1 ? " token" : " tokens"));
}

bool is_bipartite_keyword(const std::string& k) {
  return k == "left" || k == "right" || k == "bedge" || k == "match";
}

bool is_web_keyword(const std::string& k) {
  return k == "vertex" || k == "source" || k == "sink" || k == "edge" || k == "path";
}

template <typename T>
void declare_once(std::set<T>& seen, const T& value, const Line& line) {
  if (!seen.insert(value).second) parse_error(line.number, "duplicate '" + line.keyword + "'");
}

}  // namespace

std::vector<Vertex> resolve(const Line& line, const Digraph& d) {
  std::vector<Vertex> out;
  for (const auto& tok : line.args) {
    auto v = d.find(tok);
    if (!v) parse_error(line.number, "unknown vertex '" + tok + "'");
    out.push_back(*v);
  }
  return out;
}

Input parse_web_text(std::string_view text) {
  RawDigraph raw;
  std::vector<std::string> sources, sinks;
  std::set<std::string> seen_vertex, seen_source, seen_sink;
  std::set<std::pair<std::string, std::string>> seen_edge;
  std::vector<Line> path_lines;
  for (Line& line : tokenize(text)) {
    const std::string& k = line.keyword;
    if (k == "vertex") {
      expect_args(line, 1);
      declare_once(seen_vertex, line.args[0], line);
      raw.vertices.push_back(line.args[0]);
    } else if (k == "source") {
      expect_args(line, 1);
      declare_once(seen_source, line.args[0], line);
      sources.push_back(line.args[0]);
    } else if (k == "sink") {
      expect_args(line, 1);
      declare_once(seen_sink, line.args[0], line);
      sinks.push_back(line.args[0]);
    } else if (k == "edge") {
      expect_args(line, 2);
      std::pair<std::string, std::string> e{line.args[0], line.args[1]};
      declare_once(seen_edge, e, line);
      raw.edges.push_back(std::move(e));
    } else if (k == "path") {
      if (line.args.empty()) parse_error(line.number, "'path' needs at least one vertex");
      path_lines.push_back(std::move(line));
    } else {
      parse_error(line.number, "unknown keyword '" + k + "'");
    }
  }
  Input input;
  input.web = validate_web(raw, sources, sinks);
  for (const Line& line : path_lines) input.paths.push_back(Path{resolve(line, input.web.digraph())});
  (void)LinkedWeb(input.web, input.paths);
  return input;
}

Input parse_bipartite_text(std::string_view text) {
  std::vector<std::string> left, right;
  std::vector<TokenEdge> edges;
  Matching matching;
  std::set<std::string> seen_left, seen_right;
  std::set<TokenEdge> seen_edge, seen_match;
  for (const Line& line : tokenize(text)) {
    const std::string& k = line.keyword;
    if (k == "left") {
      expect_args(line, 1);
      declare_once(seen_left, line.args[0], line);
      left.push_back(line.args[0]);
    } else if (k == "right") {
      expect_args(line, 1);
      declare_once(seen_right, line.args[0], line);
      right.push_back(line.args[0]);
    } else if (k == "bedge") {
      expect_args(line, 2);
      TokenEdge e{line.args[0], line.args[1]};
      declare_once(seen_edge, e, line);
      edges.push_back(std::move(e));
    } else if (k == "match") {
      expect_args(line, 2);
      TokenEdge e{line.args[0], line.args[1]};
      declare_once(seen_match, e, line);
      matching.push_back(std::move(e));
    } else {
      parse_error(line.number, "unknown keyword '" + k + "'");
    }
  }
  BipartiteGraph g(std::move(left), std::move(right), std::move(edges));
  LinkedWeb lw = matching_to_linkage(g, matching);
  Input input;
  input.web = lw.web();
  input.paths = lw.paths();
  input.bipartite = std::move(g);
  input.matching = std::move(matching);
  return input;
}

Input parse_input(std::string_view text) {
  bool web = false, bipartite = false;
  for (const Line& line : tokenize(text)) {
    web = web || is_web_keyword(line.keyword);
    bipartite = bipartite || is_bipartite_keyword(line.keyword);
    if (web && bipartite) parse_error(line.number, "web and bipartite keywords mixed");
  }
  return bipartite ? parse_bipartite_text(text) : parse_web_text(text);
}

std::string read_file(const std::string& filename) {
  std::ifstream in(filename, std::ios::binary);
  if (!in) throw Error("FileNotFound", filename);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string join_path(const Digraph& d, const std::vector<Vertex>& vertices) {
  std::string out;
  for (Vertex v : vertices) {
    if (!out.empty()) out += ' ';
    out += d.name(v);
  }
  return out;
}

std::string write_web(const Web& web, const std::vector<Path>& paths) {
  const Digraph& d = web.digraph();
  std::string out;
  for (Vertex v = 0; v < d.vertex_count(); ++v) out += "vertex " + d.name(v) + "\n";
  for (Vertex v : web.sources()) out += "source " + d.name(v) + "\n";
  for (Vertex v : web.sinks()) out += "sink " + d.name(v) + "\n";
  for (const Edge& e : d.edges()) out += "edge " + d.name(e.tail) + " " + d.name(e.head) + "\n";
  for (const Path& p : paths) out += "path " + join_path(d, p.vertices) + "\n";
  return out;
}

std::string write_trail(const Digraph& d, const Trail& trail) {
  return "trail " + join_path(d, trail.vertices);
}

Trail parse_trail(std::string_view line, const Digraph& d) {
  auto lines = tokenize(line);
  if (lines.size() != 1 || lines[0].keyword != "trail" || lines[0].args.empty())
    parse_error(1, "expected a single 'trail' line");
  return Trail{resolve(lines[0], d)};
}

std::string write_hindrance(const Digraph& d, const HindranceCertificate& cert) {
  std::string sep = "separator";
  for (Vertex v : cert.separator) sep += " " + d.name(v);
  std::string out = sep + "\n";
  for (const Path& p : cert.paths) out += "hpath " + join_path(d, p.vertices) + "\n";
  return out;
}

HindranceCertificate parse_hindrance(std::string_view text, const Digraph& d) {
  HindranceCertificate cert;
  bool have_separator = false;
  for (const Line& line : tokenize(text)) {
    if (line.keyword == "separator") {
      if (have_separator) parse_error(line.number, "duplicate 'separator'");
      have_separator = true;
      for (Vertex v : resolve(line, d))
        if (!cert.separator.insert(v).second)
          parse_error(line.number, "separator repeats a vertex");
    } else if (line.keyword == "hpath") {
      if (line.args.empty()) parse_error(line.number, "'hpath' needs at least one vertex");
      cert.paths.push_back(Path{resolve(line, d)});
    }
  }
  if (!have_separator) parse_error(0, "no 'separator' line");
  return cert;
}

std::string write_hindered_set(const HinderedSet& h) {
  std::string out = "hindered";
  for (const auto& x : h.x) out += " " + x;
  out += "\n";
  for (const auto& [a, b] : h.matching) out += "hmatch " + a + " " + b + "\n";
  return out;
}

}  // namespace hindrance::io
