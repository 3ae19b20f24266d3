#include "remezlab/json_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "remezlab/errors.hpp"

namespace remezlab {

namespace {

double require_number(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw ParseError(std::string("missing or non-numeric field: ") + key);
  return j.at(key).get<double>();
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

nlohmann::json poly_to_json(const TrigPoly& q) {
  nlohmann::json coeffs = nlohmann::json::array();
  const int n = q.degree();
  for (int k = -n; k <= n; ++k) {
    coeffs.push_back({{"k", k}, {"re", q.coeff(k).real()}, {"im", q.coeff(k).imag()}});
  }
  return {{"degree", n}, {"coeffs", coeffs}};
}

TrigPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("polynomial document must be a JSON object");
  if (!j.contains("degree") || !j.at("degree").is_number_integer())
    throw ParseError("polynomial needs an integer degree");
  const int n = j.at("degree").get<int>();
  if (n < 0) throw ParseError("degree must be nonnegative");
  if (!j.contains("coeffs") || !j.at("coeffs").is_array())
    throw ParseError("polynomial needs a coeffs array");
  const auto& arr = j.at("coeffs");
  if (arr.size() != static_cast<std::size_t>(2 * n + 1))
    throw ParseError("coeffs must hold exactly 2n+1 entries");
  TrigPoly q(n);
  int expect = -n;
  for (const auto& entry : arr) {
    if (!entry.is_object() || !entry.contains("k") || !entry.at("k").is_number_integer())
      throw ParseError("each coefficient needs an integer k");
    int k = entry.at("k").get<int>();
    if (k != expect) throw ParseError("coefficient indices must be exactly -n..n, strictly increasing");
    ++expect;
    q.set_coeff(k, Complex{require_number(entry, "re"), require_number(entry, "im")});
  }
  return q;
}

nlohmann::json circle_set_to_json(const CircleIntervalSet& s) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const Arc& a : s.arcs()) arcs.push_back({a.lo, a.hi});
  return {{"arcs", arcs}};
}

nlohmann::json line_set_to_json(const LineIntervalSet& s) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const Arc& a : s.parts()) arcs.push_back({a.lo, a.hi});
  return {{"host", {s.host_lo(), s.host_hi()}}, {"arcs", arcs}};
}

nlohmann::json witness_to_json(const ExtremalWitness& w) {
  nlohmann::json j{{"n", w.n},
                   {"s", w.s},
                   {"log_bound", w.log_bound},
                   {"log_sup", w.log_sup},
                   {"ratio", w.ratio},
                   {"log_domain", w.log_domain},
                   {"sublevel", circle_set_to_json(w.sublevel)},
                   {"sublevel_measure", w.sublevel_measure}};
  if (!w.log_domain) {
    j["bound"] = w.bound;
    j["attained_sup"] = w.attained_sup;
  }
  return j;
}

nlohmann::json report_to_json(const AuditReport& r) {
  nlohmann::json inputs = nlohmann::json::object();
  for (const auto& [key, value] : r.inputs) inputs[key] = value;
  if (r.has_seed) inputs["seed"] = r.seed;
  return {{"claim_id", r.claim_id}, {"inputs", inputs},           {"lhs", r.lhs},
          {"rhs", r.rhs},           {"holds_as_stated", r.holds_as_stated},
          {"margin", r.margin},     {"notes", r.notes}};
}

nlohmann::json reports_to_json(const std::vector<AuditReport>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) arr.push_back(report_to_json(r));
  return arr;
}

std::string reports_to_csv(const std::vector<AuditReport>& rows) {
  std::ostringstream os;
  os << "claim_id,inputs,lhs,rhs,holds_as_stated,margin,notes\n";
  for (const auto& r : rows) {
    std::ostringstream in;
    bool first = true;
    for (const auto& [key, value] : r.inputs) {
      if (!first) in << ';';
      in << key << '=' << format_double(value);
      first = false;
    }
    if (r.has_seed) {
      if (!first) in << ';';
      in << "seed=" << r.seed;
    }
    os << r.claim_id << ',' << in.str() << ',' << format_double(r.lhs) << ','
       << format_double(r.rhs) << ',' << (r.holds_as_stated ? "true" : "false") << ','
       << format_double(r.margin) << ',' << '"' << r.notes << '"' << '\n';
  }
  return os.str();
}

nlohmann::json search_config_to_json(const SearchConfig& cfg) {
  const char* parity = cfg.parity == Parity::Even ? "even" : cfg.parity == Parity::Odd ? "odd" : "any";
  return {{"n", cfg.n},
          {"s", cfg.s},
          {"parity", parity},
          {"real_coeffs", cfg.real_coeffs},
          {"restarts", cfg.restarts},
          {"budget", cfg.budget},
          {"seed", cfg.seed},
          {"kappa", cfg.kappa},
          {"kind", to_string(cfg.kind)},
          {"step_initial", cfg.schedule.initial},
          {"step_decay", cfg.schedule.decay},
          {"step_min", cfg.schedule.min}};
}

nlohmann::json search_result_to_json(const SearchResult& r, const SearchConfig& cfg) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& pt : r.trace) trace.push_back({pt.evals, pt.ratio});
  return {{"config", search_config_to_json(cfg)},
          {"best_ratio", r.best_ratio},
          {"best_restart", r.best_restart},
          {"violated", r.violated},
          {"best_poly", poly_to_json(r.best_poly)},
          {"best_sup", r.best_sup},
          {"best_deficiency", r.best_deficiency},
          {"s_adjusted", r.s_adjusted},
          {"log_bound_used", r.log_bound_used},
          {"seeds", {{"master", r.master_seed}, {"restarts", r.restart_seeds}}},
          {"trace", trace}};
}

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("sweep config must be a JSON object");
  SweepConfig cfg;
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("samples")) cfg.samples = j.at("samples").get<int>();
  if (j.contains("n_min")) cfg.n_min = j.at("n_min").get<int>();
  if (j.contains("n_max")) cfg.n_max = j.at("n_max").get<int>();
  if (j.contains("s_min")) cfg.s_min = j.at("s_min").get<double>();
  if (j.contains("s_max")) cfg.s_max = j.at("s_max").get<double>();
  if (j.contains("claims")) {
    if (!j.at("claims").is_array()) throw ParseError("claims must be an array of claim ids");
    for (const auto& c : j.at("claims")) cfg.claims.push_back(c.get<std::string>());
  }
  return cfg;
}

}  // namespace remezlab
