#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bookfree/canonical.hpp"
#include "bookfree/families.hpp"
#include "bookfree/graph6.hpp"
#include "bookfree/quintic.hpp"
#include "bookfree_cli/app.hpp"
#include "bookfree_cli/report.hpp"

using namespace bookfree;
using nlohmann::ordered_json;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string strip_timestamp(const std::string& report) {
  static const std::regex stamp("\"timestamp\": \"[^\"]*\"");
  return std::regex_replace(report, stamp, "\"timestamp\": \"\"");
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("bookfree_test_" + name)).string();
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) {
    if (const char* old = std::getenv(name)) old_ = old;
    if (value) {
      setenv(name, value, 1);
    } else {
      unsetenv(name);
    }
  }
  ~ScopedEnv() {
    if (old_) {
      setenv(name_, old_->c_str(), 1);
    } else {
      unsetenv(name_);
    }
  }

 private:
  const char* name_;
  std::optional<std::string> old_;
};

}  // namespace

TEST(Cli, ConstructExamples) {
  const CliResult a = run_cli({"construct", "kst-pendant", "--s", "23", "--t", "24", "--r1", "1", "--r2", "1", "--stats"});
  ASSERT_EQ(a.code, 0) << a.err;
  std::istringstream lines(a.out);
  std::string g6;
  std::string stats;
  std::getline(lines, g6);
  std::getline(lines, stats);
  EXPECT_EQ(parse_graph6(g6), make_kst_pendant(23, 24, 1, 1));
  EXPECT_NE(stats.find("bk=1"), std::string::npos) << stats;
  EXPECT_NE(stats.find("n=48"), std::string::npos);
  EXPECT_NE(stats.find("bipartite=no"), std::string::npos);

  const CliResult b = run_cli({"construct", "sk", "--n", "5"});
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(canonical_graph6(parse_graph6(b.out.substr(0, b.out.size() - 1))), canonical_graph6(make_cycle(5)));

  const CliResult c = run_cli({"construct", "book", "--pages", "0"});
  EXPECT_EQ(c.code, 1);
  EXPECT_NE(c.err.find("pages"), std::string::npos) << c.err;
  EXPECT_EQ(run_cli({"construct", "petersen"}).code, 1);
}

TEST(Cli, RhoExamples) {
  const CliResult a = run_cli({"rho"}, emit_graph6(make_complete_bipartite(4, 4)) + "\n");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_NE(a.out.find("rho=4.000000000"), std::string::npos) << a.out;

  const CliResult b = run_cli({"rho", "--quotient", "2,2,1", "--format", "json"},
                        emit_graph6(make_kst_pendant(2, 2, 1, 1)) + "\n");
  ASSERT_EQ(b.code, 0) << b.err;
  const auto j = ordered_json::parse(b.out);
  const auto& row = j["items"][0]["payload"];
  EXPECT_LE(std::abs(row["quintic_difference"].get<double>()), 1e-8);
  EXPECT_NEAR(row["quintic_root"].get<double>(), largest_root(book_quintic(2, 2, 1)).root, 1e-11);

  const CliResult c = run_cli({"rho"}, "Bw\nC~x\n\nA_\n");
  EXPECT_EQ(c.code, 1);
  EXPECT_NE(c.err.find("line 2"), std::string::npos) << c.err;
  EXPECT_NE(c.err.find("at byte 2"), std::string::npos) << c.err;
  EXPECT_NE(c.out.find("line 1"), std::string::npos);
  EXPECT_NE(c.out.find("line 4"), std::string::npos);

  const CliResult d = run_cli({"rho", "--graph", "Bw", "--tol", "0"});
  EXPECT_EQ(d.code, 1);
}

TEST(Cli, VerifySkExample) {
  const CliResult r = run_cli({"verify", "sk", "--n", "5..8"});
  ASSERT_EQ(r.code, 0) << r.err;
  const cli::Report rep = cli::parse_report(r.out);
  EXPECT_EQ(rep.items.size(), 4U);
  EXPECT_EQ(rep.count(Status::Pass), 4);
  EXPECT_EQ(rep.command, "verify sk");
}

TEST(Cli, VerifyLowerBoundsExample) {
  const CliResult r = run_cli({"verify", "lower-bounds", "--r", "1", "--n", "48..300", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "kind,id,status,value,margin,error,examined,graph6,notes,wall_time");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_NE(line.find(",PASS,"), std::string::npos) << line;
  }
  EXPECT_EQ(rows, 253);
}

TEST(Cli, VerifySplusScanCompletesAndReportsFindings) {
  const CliResult r = run_cli({"verify", "splus", "--m", "3..12", "--r", "1", "--no-timing"});
  const cli::Report rep = cli::parse_report(r.out);
  ASSERT_EQ(rep.items.size(), 10U);
  const auto& first = std::get<Verdict>(rep.items[0].payload);
  EXPECT_EQ(first.status, Status::Pass);
  EXPECT_NE(first.notes.find("SUPPORTED"), std::string::npos);
  EXPECT_NE(first.notes.find("maximizer Bw"), std::string::npos);
  // The small counterexamples at m = 6..8 surface as FAIL, so the exit code says so.
  EXPECT_EQ(r.code, rep.count(Status::Fail) > 0 ? 2 : 0);
}

TEST(Cli, SearchExamples) {
  const std::string path = temp_path("maximizers.g6");
  const CliResult a = run_cli({"search", "exhaustive", "--n", "7", "--book-free", "1", "--out", path});
  ASSERT_EQ(a.code, 0) << a.err;
  std::ifstream file(path);
  std::string g6;
  std::getline(file, g6);
  EXPECT_EQ(g6, canonical_graph6(make_complete_bipartite(3, 4)));
  std::filesystem::remove(path);
  const cli::Report rep = cli::parse_report(a.out);
  const auto& rec = std::get<ExtremalRecord>(rep.items.at(0).payload);
  EXPECT_NEAR(rec.best_rho, std::sqrt(12.0), 1e-9);

  const CliResult b = run_cli({"search", "local", "--n", "48", "--book-free", "1", "--non-bipartite", "--restarts", "50"});
  ASSERT_EQ(b.code, 0) << b.err;
  const cli::Report loc_rep = cli::parse_report(b.out);
  const auto& loc = std::get<ExtremalRecord>(loc_rep.items.at(0).payload);
  ASSERT_TRUE(loc.reference_rho.has_value());
  EXPECT_LE(loc.best_rho, *loc.reference_rho + 1e-9);

  const CliResult c = run_cli({"search", "exhaustive", "--n", "12"});
  EXPECT_EQ(c.code, 1);
  EXPECT_NE(c.err.find("capacity"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({"verify", "bogus"}).code, 1);
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"verify", "sk", "--n", "8..5"}).code, 1);
  EXPECT_EQ(run_cli({"verify", "booksize"}).code, 1);
  EXPECT_EQ(run_cli({"search", "sideways", "--n", "5"}).code, 1);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  EXPECT_EQ(run_cli({"--version"}).code, 0);
}

TEST(Cli, FailVerdictGivesExitTwo) {
  const CliResult r = run_cli({"verify", "structural", "--r", "1", "--graph", emit_graph6(make_complete_bipartite(3, 3))});
  EXPECT_EQ(r.code, 2);
  const cli::Report rep = cli::parse_report(r.out);
  EXPECT_EQ(rep.count(Status::Fail), 1);
}

TEST(Cli, ReportsRoundTrip) {
  const std::vector<std::vector<std::string>> commands{
      {"verify", "sk", "--n", "5..7"},
      {"verify", "structural", "--r", "1", "--n", "48"},
      {"verify", "splus", "--m", "5..6", "--r", "1"},
      {"search", "local", "--n", "14", "--book-free", "1", "--non-bipartite", "--restarts", "3", "--steps", "300"},
      {"rho", "--graph", "Bw", "--graph", emit_graph6(make_kst_pendant(3, 4, 1, 1)), "--quotient", "3,4,1",
       "--format", "json"},
      {"verify", "rotation", "--trials", "50"},
  };
  for (const auto& args : commands) {
    const CliResult r = run_cli(args);
    ASSERT_NE(r.code, 1) << r.err;
    const cli::Report rep = cli::parse_report(r.out);
    EXPECT_EQ(cli::dump_json(rep), r.out) << args[0] << ' ' << args[1];
  }
}

TEST(Cli, ReportsAreByteIdenticalExceptTimestamp) {
  const std::vector<std::string> args{"search", "local", "--n", "16", "--book-free", "1", "--non-bipartite",
                                      "--restarts", "4", "--steps", "500", "--workers", "1", "--no-timing"};
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(strip_timestamp(a.out), strip_timestamp(b.out));

  std::vector<std::string> more = args;
  more[12] = "3";
  const CliResult c = run_cli(more);
  ordered_json ja = ordered_json::parse(a.out);
  ordered_json jc = ordered_json::parse(c.out);
  ja["config"].erase("workers");
  jc["config"].erase("workers");
  ja["timestamp"] = "";
  jc["timestamp"] = "";
  EXPECT_EQ(ja.dump(), jc.dump());
}

TEST(Cli, CsvAndJsonCarryTheSameNumbers) {
  const CliResult json = run_cli({"verify", "sk", "--n", "5..8", "--no-timing"});
  const CliResult csv = run_cli({"verify", "sk", "--n", "5..8", "--no-timing", "--format", "csv"});
  const cli::Report rep = cli::parse_report(json.out);
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);
  for (const auto& item : rep.items) {
    ASSERT_TRUE(std::getline(lines, line));
    const auto& v = std::get<Verdict>(item.payload);
    std::vector<std::string> fields;
    std::string field;
    std::istringstream cells(line);
    for (int k = 0; k < 5 && std::getline(cells, field, ','); ++k) fields.push_back(field);
    ASSERT_EQ(fields.size(), 5U);
    ASSERT_TRUE(v.margin.has_value());
    EXPECT_EQ(std::strtod(fields[4].c_str(), nullptr), *v.margin) << line;
    EXPECT_EQ(cli::round12(*v.margin), *v.margin);
  }
}

TEST(Cli, SeedEnvironmentOverride) {
  {
    ScopedEnv env(cli::kSeedEnv, "5");
    const CliResult r = run_cli({"verify", "rotation", "--trials", "20"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(ordered_json::parse(r.out)["config"]["seed"].get<std::uint64_t>(), 5U);
    const CliResult explicit_seed = run_cli({"verify", "rotation", "--trials", "20", "--seed", "9"});
    EXPECT_EQ(ordered_json::parse(explicit_seed.out)["config"]["seed"].get<std::uint64_t>(), 9U);
  }
  {
    ScopedEnv env(cli::kSeedEnv, nullptr);
    const CliResult r = run_cli({"verify", "rotation", "--trials", "20"});
    EXPECT_EQ(ordered_json::parse(r.out)["config"]["seed"].get<std::uint64_t>(), cli::kDefaultSeed);
  }
  {
    ScopedEnv env(cli::kSeedEnv, "seven");
    EXPECT_EQ(run_cli({"verify", "rotation", "--trials", "20"}).code, 1);
  }
}

TEST(Cli, ParseRange) {
  EXPECT_EQ(cli::parse_range("7"), std::vector<int>{7});
  EXPECT_EQ(cli::parse_range("5..8"), (std::vector<int>{5, 6, 7, 8}));
  EXPECT_EQ(cli::parse_range("3,5,9..11"), (std::vector<int>{3, 5, 9, 10, 11}));
  EXPECT_ANY_THROW(cli::parse_range("x"));
  EXPECT_ANY_THROW(cli::parse_range("4..2"));
}
