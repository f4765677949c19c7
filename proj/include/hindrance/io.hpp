#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hindrance/bipartite.hpp"
#include "hindrance/web.hpp"

// Line-based text formats. Tokens are whitespace separated; '#' starts a
// comment running to the end of the line.
//
//   web files:        vertex <id> | source <id> | sink <id> | edge <u> <v> | path <v...>
//   bipartite files:  left <id> | right <id> | bedge <a> <b> | match <a> <b>
//   certificates:     separator <v...> | hpath <v...> | path <v...> | hindered <a...> | hmatch <a> <b>
//   trails:           trail <v...>
//
// Syntax problems throw Error("ParseError") with detail "line N: ...".

namespace hindrance::io {

struct Line {
  std::size_t number = 0;
  std::string keyword;
  std::vector<std::string> args;
};

/// Non-empty lines with comments stripped.
std::vector<Line> tokenize(std::string_view text);

[[noreturn]] void parse_error(std::size_t line, const std::string& message);

/// A parsed problem file. Bipartite files are oriented into a web and their
/// matching becomes one-edge paths.
struct Input {
  Web web;
  std::vector<Path> paths;
  std::optional<BipartiteGraph> bipartite;
  Matching matching;

  LinkedWeb linked() const { return LinkedWeb(web, paths); }
};

Input parse_web_text(std::string_view text);
Input parse_bipartite_text(std::string_view text);
/// Dispatches on the keywords present; mixing the two formats is a ParseError.
Input parse_input(std::string_view text);

/// Throws Error("FileNotFound").
std::string read_file(const std::string& filename);

std::string write_web(const Web& web, const std::vector<Path>& paths = {});

std::string join_path(const Digraph& d, const std::vector<Vertex>& vertices);
std::string write_trail(const Digraph& d, const Trail& trail);
/// `trail ...` line, vertices resolved against `d`.
Trail parse_trail(std::string_view line, const Digraph& d);

/// `separator` line followed by one `hpath` line per path.
std::string write_hindrance(const Digraph& d, const HindranceCertificate& cert);
/// Reads `separator` and `hpath` lines, ignoring other keywords.
HindranceCertificate parse_hindrance(std::string_view text, const Digraph& d);

std::string write_hindered_set(const HinderedSet& h);

/// Resolves tokens of `line` against `d`; unknown tokens are a ParseError.
std::vector<Vertex> resolve(const Line& line, const Digraph& d);

}  // namespace hindrance::io
