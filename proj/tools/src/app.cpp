#include "bookfree_cli/app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bookfree/errors.hpp"
#include "bookfree/families.hpp"
#include "bookfree/graph6.hpp"
#include "bookfree/invariants.hpp"
#include "bookfree/quintic.hpp"
#include "bookfree/search.hpp"
#include "bookfree/spectral.hpp"
#include "bookfree/verify.hpp"
#include "bookfree_cli/report.hpp"

#ifndef BOOKFREE_VERSION
#define BOOKFREE_VERSION "0.0.0"
#endif

namespace bookfree::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

struct OutputOptions {
  std::string format = "json";
  std::string path;
  bool no_timing = false;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw UsageError("invalid " + what + " '" + text + "'");
  return value;
}

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnv);
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  const std::string text(env);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError(std::string(kSeedEnv) + " is not an unsigned integer: '" + text + "'");
  }
  return value;
}

Report new_report(std::string command, Json config) {
  Report r;
  r.tool_version = BOOKFREE_VERSION;
  r.command = std::move(command);
  r.config = std::move(config);
  r.timestamp = utc_timestamp();
  return r;
}

template <class F>
void timed(Report& report, const OutputOptions& output, F&& produce) {
  Stopwatch clock;
  Payload payload = produce();
  report.items.push_back({std::move(payload), output.no_timing ? 0.0 : clock.seconds()});
}

std::string render(const Report& report, const std::string& format) {
  if (format == "csv") return dump_csv(report);
  if (format == "plain") return dump_plain(report);
  return dump_json(report);
}

void write_text(const std::string& path, const std::string& text, Streams& io) {
  if (path.empty() || path == "-") {
    io.out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw std::runtime_error("write to '" + path + "' failed");
}

int finish(const Report& report, const OutputOptions& output, Streams& io) {
  write_text(output.path, render(report, output.format), io);
  return report.count(Status::Fail) > 0 ? kExitFail : kExitOk;
}

struct Line {
  std::int64_t number;
  std::string text;
};

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  std::int64_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    lines.push_back({number, text});
  }
  return lines;
}

std::vector<Line> gather_graphs(const std::vector<std::string>& inline_graphs, const std::string& path, Streams& io) {
  std::vector<Line> lines;
  std::int64_t k = 0;
  for (const auto& g6 : inline_graphs) lines.push_back({++k, g6});
  if (path.empty()) return lines;
  std::vector<Line> more;
  if (path == "-") {
    more = read_lines(io.in);
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open '" + path + "'");
    more = read_lines(file);
  }
  for (auto& l : more) lines.push_back({l.number + k, std::move(l.text)});
  return lines;
}

void add_output_options(CLI::App* sub, OutputOptions& output, const std::string& default_format) {
  output.format = default_format;
  sub->add_option("--format", output.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();
  sub->add_flag("--no-timing", output.no_timing, "Report every wall time as 0");
}

// construct ------------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  ConstructionParams params;
  bool stats = false;
};

int cmd_construct(const ConstructArgs& a, Streams& io) {
  const auto family = family_from_name(a.family);
  if (!family) throw UsageError("unknown family '" + a.family + "'");
  ConstructionParams p = a.params;
  p.family = *family;
  const Graph g = construct(p);
  io.out << emit_graph6(g) << '\n';
  if (a.stats) {
    io.out << "n=" << g.order() << " m=" << g.edge_count() << " bk=" << booksize(g) << " nu=" << matching_number(g)
           << " bipartite=" << (is_bipartite(g) ? "yes" : "no") << " connected=" << (is_connected(g) ? "yes" : "no")
           << '\n';
  }
  return kExitOk;
}

// rho ------------------------------------------------------------------------

struct RhoArgs {
  std::string input;
  std::vector<std::string> graphs;
  std::string quotient;
  double tol = kDefaultTolerance;
  std::int64_t max_iter = 0;
  OutputOptions output;
};

int cmd_rho(const RhoArgs& a, Streams& io) {
  if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");
  if (a.max_iter < 0) throw UsageError("--max-iter must be >= 0");
  std::optional<double> root;
  Json config;
  config["input"] = a.input.empty() && !a.graphs.empty() ? "inline" : (a.input.empty() ? "-" : a.input);
  config["tol"] = a.tol;
  config["max_iter"] = a.max_iter;
  config["quotient"] = a.quotient.empty() ? Json(nullptr) : Json(a.quotient);
  if (!a.quotient.empty()) {
    std::vector<int> str;
    std::stringstream ss(a.quotient);
    for (std::string part; std::getline(ss, part, ',');) str.push_back(parse_int(part, "--quotient entry"));
    if (str.size() != 3) throw UsageError("--quotient expects s,t,r");
    root = largest_root(book_quintic(str[0], str[1], str[2])).root;
  }

  const std::string source = a.input.empty() && a.graphs.empty() ? "-" : a.input;
  const std::vector<Line> lines = gather_graphs(a.graphs, source, io);
  Report report = new_report("rho", config);
  bool bad = false;
  for (const Line& line : lines) {
    Graph g;
    try {
      g = parse_graph6(line.text);
    } catch (const ParseError& e) {
      io.err << "line " << line.number << ": " << e.what() << '\n';
      bad = true;
      continue;
    }
    timed(report, a.output, [&]() -> Payload {
      PerronOptions opt;
      opt.tol = a.tol;
      opt.max_iter = a.max_iter;
      const PerronCertificate cert = perron(g, opt);
      RhoRow row;
      row.line = line.number;
      row.graph6 = line.text;
      row.rho = cert.rho;
      row.residual = cert.residual;
      row.error_bound = cert.error_bound();
      row.iterations = cert.iterations;
      row.converged = cert.converged;
      if (root) {
        row.quintic_root = *root;
        row.quintic_difference = cert.rho - *root;
      }
      return row;
    });
  }
  write_text(a.output.path, render(report, a.output.format), io);
  return bad ? kExitUsage : kExitOk;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::string n;
  std::string r;
  std::string m;
  int trials = 500;
  int n_max = 12;
  int restarts = 50;
  std::int64_t steps = 10000;
  std::uint64_t seed = kDefaultSeed;
  int workers = 1;
  std::vector<std::string> graphs;
  std::string input;
  int sweep = 0;
  OutputOptions output;
};

const std::vector<std::string> kSuites = {"turan",       "sk",         "book-extremal", "rotation",
                                          "lower-bounds", "structural", "booksize",      "splus"};

std::vector<int> range_or(const std::string& text, const std::string& fallback) {
  return parse_range(text.empty() ? fallback : text);
}

Verdict labelled(Verdict v, const std::string& label) {
  v.notes = v.notes.empty() ? label : label + ": " + v.notes;
  return v;
}

std::string nr_label(int n, int r) { return "n=" + std::to_string(n) + " r=" + std::to_string(r); }

int cmd_verify(const VerifyArgs& a, Streams& io) {
  if (a.workers < 0) throw UsageError("--workers must be >= 0");
  EnumOptions enum_opt;
  enum_opt.workers = a.workers;

  Json config;
  config["suite"] = a.suite;
  Report report;
  const auto start = [&](Json extra) {
    for (auto& [key, value] : extra.items()) config[key] = value;
    config["workers"] = a.workers;
    report = new_report("verify " + a.suite, config);
  };

  if (a.suite == "turan" || a.suite == "sk") {
    const bool turan = a.suite == "turan";
    const auto ns = range_or(a.n, turan ? "7" : "5..8");
    const auto rs = turan ? range_or(a.r, "1") : std::vector<int>{0};
    start({{"n", ns}, {"r", rs}});
    for (int r : rs) {
      for (int n : ns) {
        timed(report, a.output, [&]() -> Payload {
          return labelled(turan ? check_turan_maximality(n, r, enum_opt) : check_sk_maximality(n, enum_opt),
                          nr_label(n, r));
        });
      }
    }
  } else if (a.suite == "book-extremal") {
    const auto ns = range_or(a.n, "48");
    const auto rs = range_or(a.r, "1");
    start({{"n", ns}, {"r", rs}, {"restarts", a.restarts}, {"steps", a.steps}, {"seed", a.seed}});
    SearchBudget budget{a.restarts, a.steps, a.seed, a.workers};
    for (int r : rs) {
      for (int n : ns) {
        timed(report, a.output, [&]() -> Payload { return labelled(check_book_extremal(n, r, budget), nr_label(n, r)); });
      }
    }
  } else if (a.suite == "rotation") {
    start({{"trials", a.trials}, {"n_max", a.n_max}, {"seed", a.seed}});
    timed(report, a.output, [&]() -> Payload { return rotation_property_suite(a.trials, a.n_max, a.seed).verdict; });
  } else if (a.suite == "lower-bounds") {
    const auto rs = range_or(a.r, "1");
    start({{"n", a.n.empty() ? Json("threshold..300") : Json(a.n)}, {"r", rs}});
    for (int r : rs) {
      const auto ns = a.n.empty() ? parse_range(std::to_string(std::max<std::int64_t>(structural_threshold(r), 1)) + "..300")
                                  : parse_range(a.n);
      for (int n : ns) {
        timed(report, a.output, [&]() -> Payload { return labelled(check_lower_bound_verdict(n, r), nr_label(n, r)); });
      }
    }
  } else if (a.suite == "structural") {
    const auto rs = range_or(a.r, "1");
    const auto lines = gather_graphs(a.graphs, a.input, io);
    if (lines.empty()) {
      const auto ns = range_or(a.n, "48,100,200");
      start({{"n", ns}, {"r", rs}, {"graphs", "reference"}});
      for (int r : rs) {
        for (int n : ns) {
          Stopwatch clock;
          const StructuralProfile prof = structural_profile(make_book_extremal(n, r), r);
          const double t = a.output.no_timing ? 0.0 : clock.seconds();
          for (const auto& v : prof.verdicts) report.items.push_back({labelled(v, nr_label(n, r)), t});
        }
      }
    } else {
      std::vector<std::string> g6;
      for (const auto& l : lines) g6.push_back(l.text);
      start({{"r", rs}, {"graphs", g6}});
      for (int r : rs) {
        for (const auto& l : lines) {
          Stopwatch clock;
          const StructuralProfile prof = structural_profile(parse_graph6(l.text), r);
          const double t = a.output.no_timing ? 0.0 : clock.seconds();
          for (const auto& v : prof.verdicts) {
            report.items.push_back({labelled(v, "graph " + std::to_string(l.number) + " r=" + std::to_string(r)), t});
          }
        }
      }
    }
  } else if (a.suite == "booksize") {
    if (a.sweep > 0) {
      start({{"sweep", a.sweep}});
      timed(report, a.output, [&]() -> Payload { return booksize_bound_sweep(a.sweep, enum_opt); });
    } else {
      const auto lines = gather_graphs(a.graphs, a.input, io);
      if (lines.empty()) throw UsageError("verify booksize needs --sweep, --graph or --input");
      std::vector<std::string> g6;
      for (const auto& l : lines) g6.push_back(l.text);
      start({{"graphs", g6}});
      for (const auto& l : lines) {
        const Graph g = parse_graph6(l.text);
        timed(report, a.output,
              [&]() -> Payload { return labelled(check_booksize_bound(g), "graph " + std::to_string(l.number)); });
      }
    }
  } else if (a.suite == "splus") {
    const auto ms = range_or(a.m, "3..12");
    const auto rs = range_or(a.r, "1");
    start({{"m", ms}, {"r", rs}});
    for (int r : rs) {
      for (int m : ms) {
        timed(report, a.output, [&]() -> Payload {
          return labelled(check_splus(m, r, enum_opt), "m=" + std::to_string(m) + " r=" + std::to_string(r));
        });
      }
    }
  } else {
    throw UsageError("unknown suite '" + a.suite + "'");
  }
  return finish(report, a.output, io);
}

// search ---------------------------------------------------------------------

struct SearchArgs {
  std::string mode;
  int n = 0;
  int book_free = -1;
  bool non_bipartite = false;
  bool connected = false;
  std::int64_t edges = -1;
  std::int64_t max_edges = -1;
  int max_degree = -1;
  double tie_tol = 1e-9;
  int restarts = 50;
  std::int64_t steps = 10000;
  std::uint64_t seed = kDefaultSeed;
  int workers = 1;
  std::string maximizers_path;
  OutputOptions output;
};

int cmd_search(const SearchArgs& a, Streams& io) {
  if (!(a.tie_tol > 0.0)) throw UsageError("--tie-tol must be positive");
  if (a.workers < 0) throw UsageError("--workers must be >= 0");
  Constraint c;
  c.order = a.n;
  c.non_bipartite = a.non_bipartite;
  c.connected = a.connected;
  if (a.book_free >= 0) c.book_bound = a.book_free;
  if (a.edges >= 0) c.edge_count = a.edges;
  if (a.max_edges >= 0) c.max_edges = a.max_edges;
  if (a.max_degree >= 0) c.max_degree = a.max_degree;
  validate(c);

  Json config;
  config["mode"] = a.mode;
  config["n"] = a.n;
  config["book_free"] = c.book_bound ? Json(*c.book_bound) : Json(nullptr);
  config["non_bipartite"] = a.non_bipartite;
  config["connected"] = a.connected;
  config["edges"] = c.edge_count ? Json(*c.edge_count) : Json(nullptr);
  config["max_edges"] = c.max_edges ? Json(*c.max_edges) : Json(nullptr);
  config["max_degree"] = c.max_degree ? Json(*c.max_degree) : Json(nullptr);
  config["tie_tol"] = a.tie_tol;
  if (a.mode == "local") {
    config["restarts"] = a.restarts;
    config["steps"] = a.steps;
    config["seed"] = a.seed;
  }
  config["workers"] = a.workers;
  Report report = new_report("search " + a.mode, config);

  ExtremalRecord record;
  timed(report, a.output, [&]() -> Payload {
    if (a.mode == "exhaustive") {
      EnumOptions opt;
      opt.workers = a.workers;
      record = extremal_exhaustive(c, a.tie_tol, opt);
    } else {
      LocalSearchOptions opt;
      opt.restarts = a.restarts;
      opt.steps = a.steps;
      opt.seed = a.seed;
      opt.workers = a.workers;
      opt.tie_tol = a.tie_tol;
      record = local_search(c, opt);
    }
    return record;
  });
  if (!a.maximizers_path.empty()) {
    std::string text;
    for (const auto& g6 : record.maximizers) text += g6 + '\n';
    write_text(a.maximizers_path, text, io);
  }
  return finish(report, a.output, io);
}

}  // namespace

std::vector<int> parse_range(const std::string& text) {
  std::vector<int> values;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      values.push_back(parse_int(part, "range value"));
      continue;
    }
    const int lo = parse_int(part.substr(0, dots), "range start");
    const int hi = parse_int(part.substr(dots + 2), "range end");
    if (lo > hi) throw UsageError("empty range '" + part + "'");
    for (int v = lo; v <= hi; ++v) values.push_back(v);
  }
  if (values.empty()) throw UsageError("empty range '" + text + "'");
  return values;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"Book-free extremal graph workbench", "bookfree"};
  app.set_version_flag("--version", BOOKFREE_VERSION);
  app.require_subcommand(1);

  ConstructArgs construct_args;
  auto* construct_cmd = app.add_subcommand("construct", "Print a graph of a named family as graph6");
  std::vector<std::string> family_names;
  for (Family f : {Family::Turan2, Family::CompleteBipartite, Family::Sk, Family::KstPendant, Family::KabDotK3,
                   Family::Book, Family::SPlus}) {
    family_names.emplace_back(family_name(f));
  }
  construct_cmd->add_option("family", construct_args.family, "Family name")
      ->required()
      ->check(CLI::IsMember(family_names));
  auto& cp = construct_args.params;
  construct_cmd->add_option("--n", cp.n, "Order");
  construct_cmd->add_option("--s", cp.s, "First part size");
  construct_cmd->add_option("--t", cp.t, "Second part size");
  construct_cmd->add_option("--r1", cp.r1, "Pendant neighbours in the first part");
  construct_cmd->add_option("--r2", cp.r2, "Pendant neighbours in the second part");
  construct_cmd->add_option("--a", cp.a, "First part of K_{a,b}");
  construct_cmd->add_option("--b", cp.b, "Second part of K_{a,b}");
  construct_cmd->add_option("--m", cp.m, "Edge count of S+_m");
  construct_cmd->add_option("--pages", cp.pages, "Number of book pages");
  construct_cmd->add_flag("--stats", construct_args.stats, "Also print n, m, bk, nu, bipartite, connected");

  RhoArgs rho_args;
  auto* rho_cmd = app.add_subcommand("rho", "Spectral radius of graph6 input, one graph per line");
  rho_cmd->add_option("input", rho_args.input, "graph6 file, '-' for stdin (default)");
  rho_cmd->add_option("--graph", rho_args.graphs, "Inline graph6 (repeatable)");
  rho_cmd->add_option("--quotient", rho_args.quotient, "s,t,r: also report the quintic root and the difference");
  rho_cmd->add_option("--tol", rho_args.tol, "Power-iteration tolerance")->capture_default_str();
  rho_cmd->add_option("--max-iter", rho_args.max_iter, "Iteration cap (0: 200n + 10^4)")->capture_default_str();
  rho_cmd->add_option("--out", rho_args.output.path, "Write the table here instead of stdout");
  add_output_options(rho_cmd, rho_args.output, "plain");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and emit a report");
  verify_cmd->add_option("suite", verify_args.suite, "Suite name")->required()->check(CLI::IsMember(kSuites));
  verify_cmd->add_option("--n", verify_args.n, "Order range, e.g. 5..8");
  verify_cmd->add_option("--r", verify_args.r, "Book bound range");
  verify_cmd->add_option("--m", verify_args.m, "Edge-count range (splus)");
  verify_cmd->add_option("--trials", verify_args.trials, "Rotation trials")->capture_default_str();
  verify_cmd->add_option("--n-max", verify_args.n_max, "Largest order in the rotation suite")->capture_default_str();
  verify_cmd->add_option("--restarts", verify_args.restarts, "Local-search restarts")->capture_default_str();
  verify_cmd->add_option("--steps", verify_args.steps, "Local-search steps per restart")->capture_default_str();
  auto* verify_seed = verify_cmd->add_option("--seed", verify_args.seed, "Seed (default 1 or $BOOKFREE_SEED)");
  verify_cmd->add_option("--workers", verify_args.workers, "Worker threads (0: all cores)")->capture_default_str();
  verify_cmd->add_option("--graph", verify_args.graphs, "Inline graph6 (repeatable)");
  verify_cmd->add_option("--input", verify_args.input, "graph6 file, '-' for stdin");
  verify_cmd->add_option("--sweep", verify_args.sweep, "booksize: check every class on up to this many vertices");
  verify_cmd->add_option("--out", verify_args.output.path, "Write the report here instead of stdout");
  add_output_options(verify_cmd, verify_args.output, "json");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Maximise rho under a constraint");
  search_cmd->add_option("mode", search_args.mode, "exhaustive or local")
      ->required()
      ->check(CLI::IsMember({"exhaustive", "local"}));
  search_cmd->add_option("--n", search_args.n, "Order")->required();
  search_cmd->add_option("--book-free", search_args.book_free, "Require bk <= r");
  search_cmd->add_flag("--non-bipartite", search_args.non_bipartite, "Require an odd cycle");
  search_cmd->add_flag("--connected", search_args.connected, "Require connectivity");
  search_cmd->add_option("--edges", search_args.edges, "Exact edge count");
  search_cmd->add_option("--max-edges", search_args.max_edges, "Edge cap");
  search_cmd->add_option("--max-degree", search_args.max_degree, "Degree cap");
  search_cmd->add_option("--tie-tol", search_args.tie_tol, "Maximiser tie tolerance")->capture_default_str();
  search_cmd->add_option("--restarts", search_args.restarts, "Local-search restarts")->capture_default_str();
  search_cmd->add_option("--steps", search_args.steps, "Local-search steps per restart")->capture_default_str();
  auto* search_seed = search_cmd->add_option("--seed", search_args.seed, "Seed (default 1 or $BOOKFREE_SEED)");
  search_cmd->add_option("--workers", search_args.workers, "Worker threads (0: all cores)")->capture_default_str();
  search_cmd->add_option("--out", search_args.maximizers_path, "Write maximisers as graph6 lines here");
  search_cmd->add_option("--report", search_args.output.path, "Write the report here instead of stdout");
  add_output_options(search_cmd, search_args.output, "json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify_cmd->parsed() && verify_seed->count() == 0) verify_args.seed = default_seed();
    if (search_cmd->parsed() && search_seed->count() == 0) search_args.seed = default_seed();
    if (construct_cmd->parsed()) return cmd_construct(construct_args, io);
    if (rho_cmd->parsed()) return cmd_rho(rho_args, io);
    if (verify_cmd->parsed()) return cmd_verify(verify_args, io);
    return cmd_search(search_args, io);
  } catch (const UsageError& e) {
    err << "bookfree: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "bookfree: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidParameter& e) {
    err << "bookfree: invalid parameter: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "bookfree: capacity: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "bookfree: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "bookfree: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace bookfree::cli
