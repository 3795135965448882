#pragma once

// Problem files and the JSON / text / DOT renderings used by the CLI and the
// Python module. Rationals always travel as exact "p/q" strings.

#include "gorbit/divisor.hpp"
#include "gorbit/family.hpp"
#include "gorbit/toric.hpp"

#include <json.hpp>

#include <string>

namespace gorbit {

using json = nlohmann::json;

struct Problem {
  GroupData group;
  Fan fan;
};

/// {"group": "1/r(a1,...,an)" |
///            {"cyclic": {"order": r, "weights": [...]}} |
///            {"abelian": {"orders": [...], "weight_matrix": [[...]]}},
///  "fan": {"rays": [["1/8", ...], ...], "cones": [[1, 2, 7], ...]}}
/// Cones reference rays by 1-based label. Throws InvalidInput.
Problem parse_problem(const json& doc);
Problem load_problem(const std::string& path);
json load_json(const std::string& path);

Rational rational_from_json(const json& value);
json to_json(const Rational& q);
json to_json(const RatVector& v);
json to_json(const IntVector& v);

json character_to_json(const GroupData& group, const Character& chi);
Character character_from_json(const GroupData& group, const json& value);

/// {"char": ..., "coeffs": {"E4": "7/4", ...}}
json divisor_to_json(const GroupData& group, const GWeilDivisor& d);
GWeilDivisor divisor_from_json(const Fan& fan, const GroupData& group, const json& value);
/// A bare {"E4": "7/4", ...} map.
std::map<std::size_t, Rational> coeffs_from_json(const Fan& fan, const json& value);

/// {"divisors": [...]}, one entry per character in character order.
json set_to_json(const GroupData& group, const ReductorSet& set);
/// Accepts the divisors in any order; requires exactly one per character.
ReductorSet set_from_json(const Fan& fan, const GroupData& group, const json& value);

/// Laurent monomial text, e.g. "x^2y/z", or "1" for the zero exponent.
std::string monomial(std::span<const Integer> exponent);

json fan_report_to_json(const Fan& fan, const FanReport& report);
json info_to_json(const Problem& problem);
json cartier_to_json(const Fan& fan, const GroupData& group, const GCartierDivisor& c);
json per_ray_to_json(const Fan& fan, const GroupData& group, const PerRayTable& table);
json piece_to_json(const Fan& fan, const GroupData& group, const ReductorPiece& piece);
json quiver_to_json(const Fan& fan, const GroupData& group, const QuiverRep& rep);
json reductor_report_to_json(const Fan& fan, const GroupData& group, const ReductorReport& report);
json bounds_report_to_json(const Fan& fan, const GroupData& group, const BoundsReport& report);

/// Rows = characters, columns = rays carrying a nonzero coefficient somewhere.
std::string set_table(const Fan& fan, const GroupData& group, const ReductorSet& set);
std::string per_ray_table(const Fan& fan, const GroupData& group, const PerRayTable& table);
std::string info_text(const Problem& problem);
std::string piece_text(const Fan& fan, const GroupData& group, const ReductorPiece& piece);
std::string quiver_dot(const Fan& fan, const GroupData& group, const QuiverRep& rep);

}  // namespace gorbit
