#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "remezlab/audit.hpp"
#include "remezlab/extremal.hpp"
#include "remezlab/intervals.hpp"
#include "remezlab/search.hpp"
#include "remezlab/trigpoly.hpp"

namespace remezlab {

// {"degree": n, "coeffs": [{"k": -n, "re": ., "im": .}, ...]} with exactly
// 2n+1 entries and k strictly increasing over -n..n.
nlohmann::json poly_to_json(const TrigPoly& q);

// Strict parse: rejects missing, duplicate, or out-of-range k. Throws
// ParseError.
TrigPoly poly_from_json(const nlohmann::json& j);

// {"arcs": [[lo, hi], ...]} in radians, canonical form.
nlohmann::json circle_set_to_json(const CircleIntervalSet& s);
nlohmann::json line_set_to_json(const LineIntervalSet& s);

nlohmann::json witness_to_json(const ExtremalWitness& w);
nlohmann::json report_to_json(const AuditReport& r);
nlohmann::json reports_to_json(const std::vector<AuditReport>& rows);

// Columns claim_id,inputs,lhs,rhs,holds_as_stated,margin,notes with inputs as
// a k=v list; shortest round-trip decimals, dot separator, locale-free.
std::string reports_to_csv(const std::vector<AuditReport>& rows);

nlohmann::json search_result_to_json(const SearchResult& r, const SearchConfig& cfg);
nlohmann::json search_config_to_json(const SearchConfig& cfg);

SweepConfig sweep_config_from_json(const nlohmann::json& j);  // throws ParseError

// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

}  // namespace remezlab
