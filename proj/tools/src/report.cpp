#include "bookfree_cli/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <sstream>
#include <stdexcept>

namespace bookfree::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string g12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round12(x);
}

template <class T>
Json optional_value(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_floating_point_v<T>) {
    return number(*v);
  } else {
    return *v;
  }
}

template <class T>
std::optional<T> read_optional(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

Status status_from_name(const std::string& s) {
  for (Status st : {Status::Pass, Status::Fail, Status::Inconclusive, Status::OutOfHypothesis}) {
    if (status_name(st) == s) return st;
  }
  throw std::runtime_error("unknown verdict status '" + s + "'");
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["type"] = "verdict";
  j["claim"] = v.claim;
  j["status"] = status_name(v.status);
  j["margin"] = optional_value(v.margin);
  if (v.witness) {
    Json data = Json::array();
    for (const auto& [name, value] : v.witness->data) data.push_back({{"name", name}, {"value", number(value)}});
    j["witness"] = {{"graph6", v.witness->graph6}, {"data", data}};
  } else {
    j["witness"] = nullptr;
  }
  j["notes"] = v.notes;
  j["semantics"] = v.semantics;
  return j;
}

Verdict verdict_from(const Json& j) {
  Verdict v;
  v.claim = j.at("claim").get<std::string>();
  v.status = status_from_name(j.at("status").get<std::string>());
  v.margin = read_optional<double>(j, "margin");
  if (!j.at("witness").is_null()) {
    Witness w;
    w.graph6 = j.at("witness").at("graph6").get<std::string>();
    for (const auto& d : j.at("witness").at("data")) {
      w.data.emplace_back(d.at("name").get<std::string>(), d.at("value").is_null() ? NAN : d.at("value").get<double>());
    }
    v.witness = std::move(w);
  }
  v.notes = j.at("notes").get<std::string>();
  v.semantics = j.at("semantics").get<std::string>();
  return v;
}

Json constraint_json(const Constraint& c) {
  Json j;
  j["order"] = c.order;
  j["non_bipartite"] = c.non_bipartite;
  j["connected"] = c.connected;
  j["book_bound"] = optional_value(c.book_bound);
  j["edge_count"] = optional_value(c.edge_count);
  j["max_edges"] = optional_value(c.max_edges);
  j["max_degree"] = optional_value(c.max_degree);
  return j;
}

Constraint constraint_from(const Json& j) {
  Constraint c;
  c.order = j.at("order").get<int>();
  c.non_bipartite = j.at("non_bipartite").get<bool>();
  c.connected = j.at("connected").get<bool>();
  c.book_bound = read_optional<int>(j, "book_bound");
  c.edge_count = read_optional<std::int64_t>(j, "edge_count");
  c.max_edges = read_optional<std::int64_t>(j, "max_edges");
  c.max_degree = read_optional<int>(j, "max_degree");
  return c;
}

Json record_json(const ExtremalRecord& r) {
  Json j;
  j["type"] = "record";
  j["mode"] = mode_name(r.mode);
  j["constraint"] = constraint_json(r.constraint);
  j["best_rho"] = number(r.best_rho);
  j["tie_tol"] = number(r.tie_tol);
  Json maxes = Json::array();
  for (std::size_t k = 0; k < r.maximizers.size(); ++k) {
    maxes.push_back({{"graph6", r.maximizers[k]}, {"rho", number(r.maximizer_rho.at(k))}});
  }
  j["maximizers"] = maxes;
  j["examined"] = r.examined;
  j["seed"] = optional_value(r.seed);
  j["reference_rho"] = optional_value(r.reference_rho);
  j["exceeded_reference"] = r.exceeded_reference;
  j["restarts"] = r.restarts;
  j["steps"] = r.steps;
  j["accepted_moves"] = r.accepted_moves;
  return j;
}

ExtremalRecord record_from(const Json& j) {
  ExtremalRecord r;
  const auto mode = j.at("mode").get<std::string>();
  if (mode == mode_name(SearchMode::Exhaustive)) {
    r.mode = SearchMode::Exhaustive;
  } else if (mode == mode_name(SearchMode::LocalSearch)) {
    r.mode = SearchMode::LocalSearch;
  } else {
    throw std::runtime_error("unknown search mode '" + mode + "'");
  }
  r.constraint = constraint_from(j.at("constraint"));
  r.best_rho = j.at("best_rho").get<double>();
  r.tie_tol = j.at("tie_tol").get<double>();
  for (const auto& m : j.at("maximizers")) {
    r.maximizers.push_back(m.at("graph6").get<std::string>());
    r.maximizer_rho.push_back(m.at("rho").get<double>());
  }
  r.examined = j.at("examined").get<std::int64_t>();
  r.seed = read_optional<std::uint64_t>(j, "seed");
  r.reference_rho = read_optional<double>(j, "reference_rho");
  r.exceeded_reference = j.at("exceeded_reference").get<bool>();
  r.restarts = j.at("restarts").get<std::int64_t>();
  r.steps = j.at("steps").get<std::int64_t>();
  r.accepted_moves = j.at("accepted_moves").get<std::int64_t>();
  return r;
}

Json rho_json(const RhoRow& row) {
  Json j;
  j["type"] = "rho";
  j["line"] = row.line;
  j["graph6"] = row.graph6;
  j["rho"] = number(row.rho);
  j["residual"] = number(row.residual);
  j["error_bound"] = number(row.error_bound);
  j["iterations"] = row.iterations;
  j["converged"] = row.converged;
  j["quintic_root"] = optional_value(row.quintic_root);
  j["quintic_difference"] = optional_value(row.quintic_difference);
  return j;
}

RhoRow rho_from(const Json& j) {
  RhoRow row;
  row.line = j.at("line").get<std::int64_t>();
  row.graph6 = j.at("graph6").get<std::string>();
  row.rho = j.at("rho").get<double>();
  row.residual = j.at("residual").get<double>();
  row.error_bound = j.at("error_bound").get<double>();
  row.iterations = j.at("iterations").get<std::int64_t>();
  row.converged = j.at("converged").get<bool>();
  row.quintic_root = read_optional<double>(j, "quintic_root");
  row.quintic_difference = read_optional<double>(j, "quintic_difference");
  return row;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string opt12(const std::optional<double>& v) { return v ? g12(*v) : ""; }

}  // namespace

double round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(g12(x).c_str(), nullptr);
}

std::int64_t Report::count(Status s) const {
  std::int64_t total = 0;
  for (const auto& item : items) {
    if (const auto* v = std::get_if<Verdict>(&item.payload); v && v->status == s) ++total;
  }
  return total;
}

nlohmann::ordered_json to_json(const Report& report) {
  Json j;
  j["schema"] = report.schema;
  j["tool_version"] = report.tool_version;
  j["command"] = report.command;
  j["config"] = report.config;
  j["timestamp"] = report.timestamp;
  Json items = Json::array();
  for (const auto& item : report.items) {
    Json payload = std::visit(
        [](const auto& p) -> Json {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, Verdict>) {
            return verdict_json(p);
          } else if constexpr (std::is_same_v<T, ExtremalRecord>) {
            return record_json(p);
          } else {
            return rho_json(p);
          }
        },
        item.payload);
    items.push_back({{"wall_time", number(item.wall_time)}, {"payload", payload}});
  }
  j["items"] = items;
  j["summary"] = {{"pass", report.count(Status::Pass)},
                  {"fail", report.count(Status::Fail)},
                  {"inconclusive", report.count(Status::Inconclusive)},
                  {"out_of_hypothesis", report.count(Status::OutOfHypothesis)}};
  return j;
}

Report report_from_json(const nlohmann::ordered_json& j) {
  Report r;
  r.schema = j.at("schema").get<std::string>();
  if (r.schema != kSchema) throw std::runtime_error("unsupported report schema '" + r.schema + "'");
  r.tool_version = j.at("tool_version").get<std::string>();
  r.command = j.at("command").get<std::string>();
  r.config = j.at("config");
  r.timestamp = j.at("timestamp").get<std::string>();
  for (const auto& item : j.at("items")) {
    const Json& p = item.at("payload");
    const auto type = p.at("type").get<std::string>();
    ReportItem out;
    out.wall_time = item.at("wall_time").get<double>();
    if (type == "verdict") {
      out.payload = verdict_from(p);
    } else if (type == "record") {
      out.payload = record_from(p);
    } else if (type == "rho") {
      out.payload = rho_from(p);
    } else {
      throw std::runtime_error("unknown report item type '" + type + "'");
    }
    r.items.push_back(std::move(out));
  }
  return r;
}

std::string dump_json(const Report& report) { return to_json(report).dump(2) + "\n"; }

Report parse_report(std::string_view text) { return report_from_json(Json::parse(text)); }

std::string dump_csv(const Report& report) {
  std::ostringstream os;
  os << "kind,id,status,value,margin,error,examined,graph6,notes,wall_time\n";
  for (const auto& item : report.items) {
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, Verdict>) {
            os << "verdict," << csv_field(p.claim) << ',' << status_name(p.status) << ",," << opt12(p.margin) << ",,,"
               << (p.witness ? p.witness->graph6 : "") << ',' << csv_field(p.notes);
          } else if constexpr (std::is_same_v<T, ExtremalRecord>) {
            std::string maxes;
            for (const auto& g6 : p.maximizers) maxes += (maxes.empty() ? "" : " ") + g6;
            os << "record," << mode_name(p.mode) << ",," << g12(p.best_rho) << ',' << opt12(p.reference_rho) << ",,"
               << p.examined << ',' << csv_field(maxes) << ',' << "maximizers=" << p.maximizers.size();
          } else {
            os << "rho," << p.line << ',' << (p.converged ? "converged" : "not-converged") << ',' << g12(p.rho) << ','
               << opt12(p.quintic_difference) << ',' << g12(p.error_bound) << ',' << p.iterations << ','
               << csv_field(p.graph6) << ',';
          }
        },
        item.payload);
    os << ',' << g12(item.wall_time) << '\n';
  }
  return os.str();
}

std::string dump_plain(const Report& report) {
  std::ostringstream os;
  for (const auto& item : report.items) {
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, Verdict>) {
            os << status_name(p.status) << ' ' << p.claim;
            if (p.margin) os << " margin=" << g12(*p.margin);
            if (p.witness) os << " witness=" << p.witness->graph6;
            if (!p.notes.empty()) os << "  " << p.notes;
          } else if constexpr (std::is_same_v<T, ExtremalRecord>) {
            os << mode_name(p.mode) << " best_rho=" << g12(p.best_rho) << " examined=" << p.examined
               << " maximizers=" << p.maximizers.size();
            if (p.reference_rho) os << " reference_rho=" << g12(*p.reference_rho);
            for (const auto& g6 : p.maximizers) os << "\n  " << g6;
          } else {
            char buf[160];
            std::snprintf(buf, sizeof buf, "line %lld  rho=%.9f  residual=%.3e  iterations=%lld",
                          static_cast<long long>(p.line), p.rho, p.residual, static_cast<long long>(p.iterations));
            os << buf;
            if (p.quintic_root) {
              std::snprintf(buf, sizeof buf, "  quintic_root=%.9f  difference=%.3e", *p.quintic_root,
                            p.quintic_difference.value_or(0.0));
              os << buf;
            }
            if (!p.converged) os << "  NOT-CONVERGED";
          }
        },
        item.payload);
    os << '\n';
  }
  return os.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace bookfree::cli
