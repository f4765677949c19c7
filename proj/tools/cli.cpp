#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <set>
#include <sstream>

#include "hindrance/bipartite.hpp"
#include "hindrance/elimination.hpp"
#include "hindrance/io.hpp"
#include "hindrance/oracle.hpp"
#include "hindrance/solver.hpp"

namespace hindrance::cli {
namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kAnswerNo = 2;

struct Failure {
  std::string code;
  std::string detail;
};

bool is_negative_answer(const std::string& code) {
  return code == "NotWasteful" || code == "InvalidCertificate" || code == "InvariantFailed";
}

std::string vertex_list(const Digraph& d, const VertexSet& vs) {
  std::string out;
  for (Vertex v : vs) out += " " + d.name(v);
  return out;
}

std::string linkage_list(const Digraph& d, const std::vector<Path>& paths) {
  std::string out;
  for (std::size_t i = 0; i < paths.size(); ++i)
    out += (i == 0 ? " " : " | ") + io::join_path(d, paths[i].vertices);
  return out;
}

std::string deleted_edges(const Digraph& original, const Digraph& current) {
  std::string out;
  for (const Edge& e : original.edges())
    if (!current.has_edge(e.tail, e.head))
      out += " " + original.name(e.tail) + "->" + original.name(e.head);
  return out;
}

io::Input load(const std::string& file) { return io::parse_input(io::read_file(file)); }

void write_max_linkage(std::ostream& out, const Digraph& d, const std::vector<Path>& paths,
                       const VertexSet& separator) {
  out << "kind max-linkage\n";
  for (const Path& p : paths) out << "path " << io::join_path(d, p.vertices) << "\n";
  out << "separator" << vertex_list(d, separator) << "\n";
}

int cmd_solve(const std::string& file, std::ostream& out) {
  const io::Input input = load(file);
  const MaxLinkage res = max_linkage(input.web);
  write_max_linkage(out, input.web.digraph(), res.linkage, res.separator);
  return kOk;
}

int cmd_hinder(const std::string& file, std::size_t trim, std::ostream& out) {
  const io::Input input = load(file);
  HinderOptions options;
  options.trim_sources = trim;
  const HindranceCertificate cert = hinder_from_wasteful(input.linked(), options);
  out << "kind hindrance\n" << io::write_hindrance(input.web.digraph(), cert);
  if (input.bipartite)
    out << io::write_hindered_set(hindered_set_from_hindrance(*input.bipartite, cert));
  return kOk;
}

int cmd_eliminate(const std::string& file, std::size_t k, std::size_t max_steps, bool invariants,
                  std::size_t trail_budget, std::ostream& out) {
  const io::Input input = load(file);
  const Digraph& d = input.web.digraph();
  const EliminationTrace trace = run_elimination(input.linked(), k, max_steps);
  out << "threshold " << trace.threshold << "\n";
  for (const EliminationState& s : trace.states) {
    out << "step " << s.step << "\n";
    out << "sinks" << vertex_list(d, s.sinks()) << "\n";
    out << "deleted-edges" << deleted_edges(d, s.linked.digraph()) << "\n";
    out << "linkage" << linkage_list(d, s.linked.paths()) << "\n";
    out << "popular" << vertex_list(d, s.popularity.popular) << "\n";
    out << "unpopular" << vertex_list(d, s.popularity.unpopular) << "\n";
    if (s.lost) out << "wn" << vertex_list(d, *s.lost) << "\n";
  }
  out << "limit " << to_string(trace.reason) << "\n";
  if (trace.limit) {
    out << "sinks" << vertex_list(d, trace.limit->sinks) << "\n";
    out << "deleted-edges" << deleted_edges(d, trace.limit->digraph) << "\n";
    out << "linkage" << linkage_list(d, trace.limit->linkage) << "\n";
  }
  if (!invariants) return kOk;

  const InvariantReport report = check_trace_invariants(trace, input.web, trail_budget);
  for (const InvariantCheck& c : report.checks) {
    std::string status = c.skipped ? "skipped" : c.passed ? "pass" : c.asserted ? "fail" : "reported";
    out << "invariant " << c.clause << " " << c.step << " " << status;
    if (!c.detail.empty()) out << " " << c.detail;
    out << "\n";
  }
  out << "invariants " << (report.ok() ? "ok" : "failed") << "\n";
  if (!report.ok()) throw Error("InvariantFailed", report.failures().front()->clause);
  return kOk;
}

int cmd_oracle(const std::string& file, std::size_t cap, std::ostream& out) {
  const io::Input input = load(file);
  const Digraph& d = input.web.digraph();
  const auto linkage = oracle::brute_max_linkage(input.web, cap);
  const auto separator = oracle::brute_min_separator(input.web, cap);
  const auto hindrance = oracle::brute_find_hindrance(input.web, cap);
  write_max_linkage(out, d, linkage.witness, separator.witness);
  if (hindrance)
    out << "kind hindrance\n" << io::write_hindrance(d, *hindrance);
  else
    out << "kind no-hindrance\n";
  return kOk;
}

int cmd_gen(const oracle::RandomWebParams& params, std::ostream& out) {
  out << io::write_web(oracle::gen_random_web(params));
  return kOk;
}

// Verification of emitted certificates.

std::optional<Failure> verify_hindrance_section(const io::Input& input,
                                                const std::vector<io::Line>& lines) {
  const Digraph& d = input.web.digraph();
  HindranceCertificate cert;
  bool have_separator = false;
  std::optional<HinderedSet> hindered;
  for (const io::Line& line : lines) {
    if (line.keyword == "separator") {
      if (have_separator) io::parse_error(line.number, "duplicate 'separator'");
      have_separator = true;
      for (Vertex v : io::resolve(line, d))
        if (!cert.separator.insert(v).second)
          io::parse_error(line.number, "separator repeats a vertex");
    } else if (line.keyword == "hpath") {
      if (line.args.empty()) io::parse_error(line.number, "'hpath' needs at least one vertex");
      cert.paths.push_back(Path{io::resolve(line, d)});
    } else if (line.keyword == "hindered") {
      if (!hindered) hindered.emplace();
      hindered->x.insert(hindered->x.end(), line.args.begin(), line.args.end());
    } else if (line.keyword == "hmatch") {
      if (line.args.size() != 2) io::parse_error(line.number, "'hmatch' takes 2 tokens");
      if (!hindered) hindered.emplace();
      hindered->matching.emplace_back(line.args[0], line.args[1]);
    } else {
      io::parse_error(line.number, "unexpected '" + line.keyword + "' in a hindrance");
    }
  }
  if (!have_separator) return Failure{"InvalidCertificate", "no separator line"};
  if (auto report = validate_hindrance(input.web, cert); !report)
    return Failure{"InvalidCertificate", report.clause};
  if (hindered) {
    if (!input.bipartite) return Failure{"InvalidCertificate", "hindered set for a non-bipartite input"};
    if (!verify_hindered_set(*input.bipartite, *hindered))
      return Failure{"InvalidCertificate", "hindered set does not verify"};
  }
  return std::nullopt;
}

std::optional<Failure> verify_max_linkage_section(const io::Input& input,
                                                  const std::vector<io::Line>& lines) {
  const Digraph& d = input.web.digraph();
  std::vector<Path> paths;
  std::optional<VertexSet> separator;
  for (const io::Line& line : lines) {
    if (line.keyword == "path") {
      if (line.args.empty()) io::parse_error(line.number, "'path' needs at least one vertex");
      paths.push_back(Path{io::resolve(line, d)});
    } else if (line.keyword == "separator") {
      if (separator) io::parse_error(line.number, "duplicate 'separator'");
      auto vs = io::resolve(line, d);
      separator.emplace(vs.begin(), vs.end());
    } else {
      io::parse_error(line.number, "unexpected '" + line.keyword + "' in a max-linkage");
    }
  }
  if (!separator) return Failure{"InvalidCertificate", "no separator line"};
  try {
    LinkedWeb lw(input.web, paths);
  } catch (const ValidationError& e) {
    return Failure{"InvalidCertificate", e.code() + " " + e.what()};
  }
  if (!is_separator(input.web, *separator))
    return Failure{"InvalidCertificate", "S is not an AB-separator"};
  if (separator->size() != paths.size())
    return Failure{"InvalidCertificate", "|separator| != |linkage|"};
  return std::nullopt;
}

std::optional<Failure> verify_no_hindrance(const io::Input& input) {
  if (oracle::brute_find_hindrance(input.web)) return Failure{"InvalidCertificate", "a hindrance exists"};
  return std::nullopt;
}

std::vector<Path> parse_linkage_line(const io::Line& line, const Digraph& d) {
  std::vector<Path> out;
  io::Line piece{line.number, line.keyword, {}};
  auto flush = [&] {
    if (piece.args.empty()) io::parse_error(line.number, "empty path in 'linkage'");
    out.push_back(Path{io::resolve(piece, d)});
    piece.args.clear();
  };
  for (const auto& tok : line.args) {
    if (tok == "|")
      flush();
    else
      piece.args.push_back(tok);
  }
  if (!line.args.empty()) flush();
  return out;
}

// Every B_n separates B from A in the original digraph; the limit linkage is
// a set of disjoint paths from A onto the limit sinks in the remaining digraph.
std::optional<Failure> verify_elimination(const io::Input& input, const std::vector<io::Line>& lines) {
  const Digraph& d = input.web.digraph();
  bool in_limit = false;
  std::optional<VertexSet> limit_sinks;
  std::vector<Edge> deleted;
  std::vector<Path> limit_paths;
  for (const io::Line& line : lines) {
    const std::string& k = line.keyword;
    if (k == "limit") {
      in_limit = true;
    } else if (k == "sinks") {
      auto vs = io::resolve(line, d);
      VertexSet sinks(vs.begin(), vs.end());
      if (!is_separator(input.web, sinks))
        return Failure{"InvalidCertificate",
                       "line " + std::to_string(line.number) + ": sinks do not separate B from A"};
      if (in_limit) limit_sinks = sinks;
    } else if (k == "deleted-edges") {
      for (const auto& tok : line.args) {
        auto arrow = tok.find("->");
        if (arrow == std::string::npos) io::parse_error(line.number, "edge tokens look like u->v");
        auto u = d.find(tok.substr(0, arrow));
        auto v = d.find(tok.substr(arrow + 2));
        if (!u || !v || !d.has_edge(*u, *v))
          return Failure{"InvalidCertificate", "deleted edge " + tok + " is not an edge"};
        if (in_limit) deleted.push_back({*u, *v});
      }
    } else if (k == "linkage") {
      auto paths = parse_linkage_line(line, d);
      if (in_limit) limit_paths = std::move(paths);
    } else if (k != "threshold" && k != "step" && k != "popular" && k != "unpopular" && k != "wn" &&
               k != "invariant" && k != "invariants") {
      io::parse_error(line.number, "unexpected '" + k + "' in an elimination trace");
    }
  }
  if (!limit_sinks) return std::nullopt;

  std::vector<Edge> kept;
  std::sort(deleted.begin(), deleted.end());
  for (const Edge& e : d.edges())
    if (!std::binary_search(deleted.begin(), deleted.end(), e)) kept.push_back(e);
  try {
    LinkedWeb lw(Web(d.with_edges(std::move(kept)), input.web.sources(), *limit_sinks), limit_paths);
  } catch (const ValidationError& e) {
    return Failure{"InvalidCertificate", e.code() + " " + e.what()};
  }
  return std::nullopt;
}

int cmd_verify(const std::string& file, const std::string& certfile, std::ostream& out) {
  const io::Input input = load(file);
  const auto lines = io::tokenize(io::read_file(certfile));

  std::optional<Failure> failure;
  const bool trace = std::any_of(lines.begin(), lines.end(), [](const io::Line& l) {
    return l.keyword == "step" || l.keyword == "limit" || l.keyword == "threshold";
  });
  if (trace) {
    failure = verify_elimination(input, lines);
  } else {
    // Sections start at `kind` lines; a file without any is one section whose
    // kind follows from its keywords.
    std::vector<std::pair<std::string, std::vector<io::Line>>> sections;
    for (const io::Line& line : lines) {
      if (line.keyword == "kind") {
        if (line.args.size() != 1) io::parse_error(line.number, "'kind' takes 1 token");
        sections.emplace_back(line.args[0], std::vector<io::Line>{});
        continue;
      }
      if (sections.empty()) {
        const bool linkage = std::any_of(lines.begin(), lines.end(),
                                         [](const io::Line& l) { return l.keyword == "path"; });
        sections.emplace_back(linkage ? "max-linkage" : "hindrance", std::vector<io::Line>{});
      }
      sections.back().second.push_back(line);
    }
    if (sections.empty()) io::parse_error(0, "empty certificate");
    for (const auto& [kind, body] : sections) {
      if (kind == "hindrance")
        failure = verify_hindrance_section(input, body);
      else if (kind == "max-linkage")
        failure = verify_max_linkage_section(input, body);
      else if (kind == "no-hindrance")
        failure = verify_no_hindrance(input);
      else
        throw Error("ParseError", "unknown certificate kind '" + kind + "'");
      if (failure) break;
    }
  }
  if (failure) throw Error(failure->code, failure->detail);
  out << "ok\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linkages, augmenting trails and hindrance certificates in webs", "hindrance"};
  app.require_subcommand(1);

  std::string file, certfile;
  std::size_t trim = 0, k = 0, max_steps = 50, cap = oracle::kDefaultVertexCap;
  std::size_t trail_budget = kDefaultTrailBudget;
  bool invariants = false;
  oracle::RandomWebParams params;

  auto* solve = app.add_subcommand("solve", "maximum linkage with a separator of the same size");
  solve->add_option("file", file, "web or bipartite file")->required();

  auto* hinder = app.add_subcommand("hinder", "hindrance from the wasteful linkage in the file");
  hinder->add_option("file", file, "web or bipartite file")->required();
  hinder->add_option("--trim-sources", trim, "detach this many unlinked sources first");

  auto* eliminate = app.add_subcommand("eliminate", "run the elimination recursion");
  eliminate->add_option("file", file, "web or bipartite file")->required();
  eliminate->add_option("--k", k, "popularity threshold (0: max(1, |unlinked sources|))");
  eliminate->add_option("--max-steps", max_steps, "step cap")->check(CLI::PositiveNumber);
  eliminate->add_flag("--invariants", invariants, "append the invariant report");
  eliminate->add_option("--trail-budget", trail_budget, "trail enumeration budget per check");

  auto* verify = app.add_subcommand("verify", "re-check a certificate against its input file");
  verify->add_option("file", file, "web or bipartite file")->required();
  verify->add_option("certfile", certfile, "certificate produced by another command")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force linkage, separator and hindrance");
  oracle_cmd->add_option("file", file, "web or bipartite file")->required();
  oracle_cmd->add_option("--cap", cap, "vertex cap");

  auto* gen = app.add_subcommand("gen", "seeded random web");
  gen->add_option("--seed", params.seed, "seed");
  gen->add_option("--n", params.vertices, "number of vertices");
  gen->add_option("--p", params.edge_probability, "edge probability")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--sources", params.sources, "number of sources");
  gen->add_option("--sinks", params.sinks, "number of sinks");
  gen->add_flag("--overlap", params.allow_overlap, "draw sinks independently of sources");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error:Usage:" << e.what() << "\n";
    return kInputError;
  }

  std::ostringstream buffer;
  try {
    int code = kOk;
    if (solve->parsed())
      code = cmd_solve(file, buffer);
    else if (hinder->parsed())
      code = cmd_hinder(file, trim, buffer);
    else if (eliminate->parsed())
      code = cmd_eliminate(file, k, max_steps, invariants, trail_budget, buffer);
    else if (verify->parsed())
      code = cmd_verify(file, certfile, buffer);
    else if (oracle_cmd->parsed())
      code = cmd_oracle(file, cap, buffer);
    else if (gen->parsed())
      code = cmd_gen(params, buffer);
    out << buffer.str();
    return code;
  } catch (const ValidationError& e) {
    for (const Violation& v : e.violations()) err << "error:" << v.code << ":" << v.detail << "\n";
    return kInputError;
  } catch (const Error& e) {
    if (e.code() == "InvariantFailed") out << buffer.str();
    err << "error:" << e.code() << ":" << e.what() << "\n";
    return is_negative_answer(e.code()) ? kAnswerNo : kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error:InvalidArgument:" << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace hindrance::cli
