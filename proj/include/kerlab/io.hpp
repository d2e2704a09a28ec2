#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kerlab/errors.hpp"
#include "kerlab/harness.hpp"
#include "kerlab/sites.hpp"
#include "kerlab/suite.hpp"
#include "kerlab/version.hpp"

namespace kerlab {

/// FNV-1a 64-bit hash, hex-encoded; used to fingerprint configurations
/// inside report metadata.
inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 0x100000001b3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace detail {

/// Fixed 17-significant-digit formatting: every double round-trips and
/// serialized files are byte-stable across platforms and runs.
inline std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

/// Serialize a site family to its interchange form: the lattice index
/// range, the coordinates at 17 significant digits, the separation
/// bounds, and the remaining distance to the 1/4 stability limit.
inline std::string write_sites_json(const SiteFamily& fam) {
  if (fam.x.size() < 2)
    throw WindowTooSmall("write_sites_json: need at least two sites");
  const Separation sep = separation_bounds(fam.x);
  std::ostringstream os;
  os << "{\n";
  os << "  \"index_lo\": " << fam.index.front() << ",\n";
  os << "  \"index_hi\": " << fam.index.back() << ",\n";
  os << "  \"points\": [";
  for (std::size_t i = 0; i < fam.x.size(); ++i) {
    if (i) os << ", ";
    os << detail::g17(fam.x[i]);
  }
  os << "],\n";
  os << "  \"q\": " << detail::g17(sep.q) << ",\n";
  os << "  \"Q\": " << detail::g17(sep.Q) << ",\n";
  os << "  \"kadec_margin\": " << detail::g17(fam.deviation()) << "\n";
  os << "}\n";
  return os.str();
}

/// Parse a site-family interchange file.  The points must be strictly
/// increasing (NotIncreasing otherwise) and the recorded separation
/// bounds and stability margin must agree with the points (ConfigError
/// otherwise).  Generation metadata (rule, amplitude, seed) is not part
/// of the interchange form; the loaded family carries geometry only.
inline SiteFamily read_sites_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid sites JSON: ") + e.what());
  }
  for (const char* key : {"index_lo", "index_hi", "points", "q", "Q", "kadec_margin"})
    if (!j.contains(key)) throw ConfigError(std::string("sites JSON missing key: ") + key);
  SiteFamily fam;
  long index_lo = 0, index_hi = 0;
  try {
    index_lo = j.at("index_lo").get<long>();
    index_hi = j.at("index_hi").get<long>();
    fam.x = j.at("points").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("sites JSON field has the wrong type: ") + e.what());
  }
  if (fam.x.size() < 2) throw ConfigError("sites JSON: need at least two points");
  if (index_hi - index_lo + 1 != static_cast<long>(fam.x.size()))
    throw ConfigError("sites JSON: index range does not match the point count");
  fam.n = static_cast<int>(fam.x.size());
  fam.index.resize(fam.x.size());
  for (std::size_t i = 0; i < fam.x.size(); ++i)
    fam.index[i] = index_lo + static_cast<long>(i);

  const Separation sep = separation_bounds(fam.x);  // throws NotIncreasing
  const double margin = fam.deviation();
  const auto close = [](double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({std::abs(a), std::abs(b), 1.0});
  };
  if (!close(sep.q, j.at("q").get<double>()) || !close(sep.Q, j.at("Q").get<double>()))
    throw ConfigError("sites JSON: recorded separation bounds disagree with the points");
  if (!close(margin, j.at("kadec_margin").get<double>()))
    throw ConfigError("sites JSON: recorded stability margin disagrees with the points");
  return fam;
}

/// CSV serialization of a convergence report.  The err_w2j column holds
/// the first configured derivative order (empty when none were requested)
/// and flags are joined with ';'.
inline std::string report_csv(const ConvergenceReport& rep) {
  std::ostringstream os;
  os << "h,n_sites,cond_est,err_l2,err_w2j,seminorm_ratio,site_residual,flags\n";
  const int j0 = rep.config.w2j_orders.empty() ? -1 : rep.config.w2j_orders.front();
  for (const auto& row : rep.rows) {
    os << detail::g17(row.h) << ',' << row.n_sites << ',' << detail::g17(row.cond_est)
       << ',' << detail::g17(row.err_l2) << ',';
    if (j0 >= 0) os << detail::g17(row.err_w2j.at(j0));
    os << ',' << detail::g17(row.seminorm_ratio) << ',' << detail::g17(row.site_residual)
       << ',';
    for (std::size_t i = 0; i < row.flags.size(); ++i) {
      if (i) os << ';';
      os << row.flags[i];
    }
    os << '\n';
  }
  return os.str();
}

namespace detail {

inline nlohmann::ordered_json sweep_config_json(const SweepConfig& c) {
  nlohmann::ordered_json j;
  j["route"] = to_string(c.route);
  j["function"] = c.function;
  j["k"] = c.k;
  j["w2j_orders"] = c.w2j_orders;
  j["rule"] = to_string(c.rule);
  j["amplitude"] = c.amplitude;
  j["seed"] = c.seed;
  j["h_list"] = c.h_list;
  j["T"] = c.T;
  j["P"] = c.P;
  j["lambda"] = c.lambda;
  j["points_per_unit"] = c.points_per_unit;
  j["wide_grid"] = c.wide_grid;
  j["leak_threshold"] = c.leak_threshold;
  j["trust_cond"] = c.trust_cond;
  j["flag_cond"] = c.flag_cond;
  j["max_sites"] = c.max_sites;
  return j;
}

inline nlohmann::ordered_json report_rows_json(const ConvergenceReport& rep) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : rep.rows) {
    nlohmann::ordered_json r;
    r["h"] = row.h;
    r["n_sites"] = row.n_sites;
    r["cond_est"] = row.cond_est;
    r["err_l2"] = row.err_l2;
    nlohmann::ordered_json w2j = nlohmann::ordered_json::object();
    for (const auto& [j, v] : row.err_w2j) w2j[std::to_string(j)] = v;
    r["err_w2j"] = w2j;
    r["seminorm_ratio"] = row.seminorm_ratio;
    r["site_residual"] = row.site_residual;
    r["leak"] = row.leak;
    r["flags"] = row.flags;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace detail

/// JSON serialization of a convergence report with reproducibility
/// metadata (seed, config hash, library version).
inline std::string report_json(const ConvergenceReport& rep,
                               const std::string& config_hash) {
  nlohmann::ordered_json j;
  j["metadata"] = {{"seed", rep.config.seed},
                   {"config_hash", config_hash},
                   {"version", version_string}};
  j["config"] = detail::sweep_config_json(rep.config);
  j["rows"] = detail::report_rows_json(rep);
  j["rate_l2"] = rep.rate_l2;
  nlohmann::ordered_json rates = nlohmann::ordered_json::object();
  for (const auto& [jj, v] : rep.rate_w2j) rates[std::to_string(jj)] = v;
  j["rate_w2j"] = rates;
  j["fit_rows"] = rep.fit_rows;
  nlohmann::ordered_json excluded = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < rep.rows.size(); ++i)
    if (rep.rows[i].flagged()) excluded.push_back(i);
  j["excluded_rows"] = excluded;
  j["target_seminorm"] = rep.target_seminorm;
  j["g_tail"] = rep.g_tail;
  return j.dump(2) + "\n";
}

/// JSON report for one seminorm / norm evaluation.
inline std::string norm_report_json(const std::string& id, int k, const std::string& route,
                                    double value, bool tolerance_met) {
  nlohmann::ordered_json j;
  j["id"] = id;
  j["k"] = k;
  j["route"] = route;
  j["value"] = value;
  j["tolerance_met"] = tolerance_met;
  return j.dump(2) + "\n";
}

/// JSON serialization of one battery result.
inline std::string battery_json(const BatteryResult& b) {
  nlohmann::ordered_json bj;
  bj["id"] = b.id;
  bj["title"] = b.title;
  bj["pass"] = b.pass;
  bj["detail"] = b.lines;
  nlohmann::ordered_json metrics = nlohmann::ordered_json::object();
  for (const auto& [k, v] : b.metrics) metrics[k] = v;
  bj["metrics"] = metrics;
  return bj.dump(2) + "\n";
}

/// One-line-per-battery summary of a suite run.
inline std::string suite_summary_csv(const SuiteReport& rep) {
  std::ostringstream os;
  os << "id,title,pass\n";
  for (const auto& b : rep.batteries)
    os << b.id << ',' << b.title << ',' << (b.pass ? "pass" : "fail") << '\n';
  return os.str();
}

/// JSON serialization of a full suite run.
inline std::string suite_report_json(const SuiteReport& rep, const SuiteConfig& cfg,
                                     const std::string& config_hash) {
  nlohmann::ordered_json j;
  j["metadata"] = {{"seed", cfg.seed},
                   {"config_hash", config_hash},
                   {"version", version_string}};
  j["all_pass"] = rep.all_pass;
  nlohmann::ordered_json bats = nlohmann::ordered_json::array();
  for (const auto& b : rep.batteries) {
    nlohmann::ordered_json bj;
    bj["id"] = b.id;
    bj["title"] = b.title;
    bj["pass"] = b.pass;
    bj["detail"] = b.lines;
    nlohmann::ordered_json metrics = nlohmann::ordered_json::object();
    for (const auto& [k, v] : b.metrics) metrics[k] = v;
    bj["metrics"] = metrics;
    bats.push_back(bj);
  }
  j["batteries"] = bats;
  return j.dump(2) + "\n";
}

namespace detail {

template <class T>
void read_key(const nlohmann::json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string("config key has the wrong type: ") + key);
  }
}

inline void reject_unknown(const nlohmann::json& j,
                           const std::vector<std::string>& known) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const auto& k : known)
      if (k == it.key()) ok = true;
    if (!ok) throw ConfigError("unknown config key: " + it.key());
  }
}

}  // namespace detail

/// Parse a sweep configuration from JSON text; unknown keys are
/// rejected so typos fail loudly.
inline SweepConfig sweep_config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid config JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  detail::reject_unknown(
      j, {"route", "function", "k", "w2j_orders", "rule", "amplitude", "seed", "h_list",
          "T", "P", "lambda", "points_per_unit", "wide_grid", "leak_threshold",
          "trust_cond", "flag_cond", "max_sites"});
  SweepConfig c;
  std::string route = to_string(c.route), rule = to_string(c.rule);
  detail::read_key(j, "route", route);
  detail::read_key(j, "function", c.function);
  detail::read_key(j, "k", c.k);
  detail::read_key(j, "w2j_orders", c.w2j_orders);
  detail::read_key(j, "rule", rule);
  detail::read_key(j, "amplitude", c.amplitude);
  detail::read_key(j, "seed", c.seed);
  detail::read_key(j, "h_list", c.h_list);
  detail::read_key(j, "T", c.T);
  detail::read_key(j, "P", c.P);
  detail::read_key(j, "lambda", c.lambda);
  detail::read_key(j, "points_per_unit", c.points_per_unit);
  detail::read_key(j, "wide_grid", c.wide_grid);
  detail::read_key(j, "leak_threshold", c.leak_threshold);
  detail::read_key(j, "trust_cond", c.trust_cond);
  detail::read_key(j, "flag_cond", c.flag_cond);
  detail::read_key(j, "max_sites", c.max_sites);
  c.route = route_from_string(route);
  c.rule = site_rule_from_string(rule);
  return c;
}

/// Parse a suite configuration from JSON text.
inline SuiteConfig suite_config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid config JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  detail::reject_unknown(j, {"seed", "amplitude", "T", "P", "lambda", "points_per_unit",
                             "wide_grid", "leak_threshold", "trust_cond", "flag_cond",
                             "batteries"});
  SuiteConfig c;
  detail::read_key(j, "seed", c.seed);
  detail::read_key(j, "amplitude", c.amplitude);
  detail::read_key(j, "T", c.T);
  detail::read_key(j, "P", c.P);
  detail::read_key(j, "lambda", c.lambda);
  detail::read_key(j, "points_per_unit", c.points_per_unit);
  detail::read_key(j, "wide_grid", c.wide_grid);
  detail::read_key(j, "leak_threshold", c.leak_threshold);
  detail::read_key(j, "trust_cond", c.trust_cond);
  detail::read_key(j, "flag_cond", c.flag_cond);
  c.batteries_given = j.contains("batteries");
  detail::read_key(j, "batteries", c.batteries);
  return c;
}

inline std::string load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void save_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write file: " + path);
  out << content;
}

}  // namespace kerlab
