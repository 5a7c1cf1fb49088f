#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "bookfree/search.hpp"
#include "bookfree/verify.hpp"

namespace bookfree::cli {

inline constexpr std::string_view kSchema = "bookfree.report/1";

/// One row of `bookfree rho`.
struct RhoRow {
  std::int64_t line = 0;
  std::string graph6;
  double rho = 0.0;
  double residual = 0.0;
  double error_bound = 0.0;
  std::int64_t iterations = 0;
  bool converged = false;
  std::optional<double> quintic_root;
  std::optional<double> quintic_difference;

  friend bool operator==(const RhoRow&, const RhoRow&) = default;
};

using Payload = std::variant<Verdict, ExtremalRecord, RhoRow>;

struct ReportItem {
  Payload payload;
  double wall_time = 0.0;
};

struct Report {
  std::string schema{kSchema};
  std::string tool_version;
  std::string command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::string timestamp;
  std::vector<ReportItem> items;

  std::int64_t count(Status s) const;
};

/// x rounded to 12 significant digits.
double round12(double x);

nlohmann::ordered_json to_json(const Report& report);
Report report_from_json(const nlohmann::ordered_json& j);

std::string dump_json(const Report& report);
Report parse_report(std::string_view text);

/// CSV with a header row; numbers at 12 significant digits.
std::string dump_csv(const Report& report);

/// Human-readable lines, one per item.
std::string dump_plain(const Report& report);

std::string utc_timestamp();

}  // namespace bookfree::cli
