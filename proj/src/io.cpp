#include "gorbit/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <regex>
#include <set>
#include <sstream>

namespace gorbit {

namespace {

std::int64_t as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw InvalidInput(what + " must be an integer");
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> as_int_list(const json& v, const std::string& what) {
  if (!v.is_array()) throw InvalidInput(what + " must be an array");
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(as_int(x, what));
  return out;
}

std::size_t parse_ray_name(const Fan& fan, const std::string& name) {
  std::string digits = name;
  if (!digits.empty() && (digits[0] == 'E' || digits[0] == 'e')) digits = digits.substr(1);
  const Rational q = parse_rational(digits);
  if (!is_integer(q) || q < 1 || q > fan.rays().size()) throw InvalidInput("unknown ray '" + name + "'");
  return numerator(q).convert_to<std::size_t>() - 1;
}

std::string variable(std::size_t i, std::size_t n) {
  if (n <= 3) return std::string(1, "xyz"[i]);
  return "x" + std::to_string(i + 1);
}

std::string pad(const std::string& s, std::size_t width) {
  // Width is counted in code points so that the χ column lines up.
  std::size_t len = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++len;
  return len >= width ? s : std::string(width - len, ' ') + s;
}

std::size_t display_width(const std::string& s) {
  std::size_t len = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++len;
  return len;
}

std::string render_table(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> widths;
  for (const auto& row : cells) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], display_width(row[c]));
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "  " : "") << pad(row[c], widths[c]);
    os << '\n';
  }
  return os.str();
}

std::string join_rationals(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

}  // namespace

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

Rational rational_from_json(const json& value) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw InvalidInput("rationals must be integers or exact strings like \"5/8\"");
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const RatVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& z : v) {
    if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
      out.push_back(z.convert_to<std::int64_t>());
    else
      out.push_back(z.str());
  }
  return out;
}

Problem parse_problem(const json& doc) {
  if (!doc.is_object() || !doc.contains("group") || !doc.contains("fan"))
    throw InvalidInput("problem file needs \"group\" and \"fan\"");
  const json& g = doc["group"];
  std::optional<GroupData> group;
  if (g.is_string()) {
    // Shorthand "1/r(a1,...,an)".
    static const std::regex shorthand(R"(\s*1\s*/\s*(\d+)\s*\(([-\d,\s]+)\)\s*)");
    std::smatch match;
    const std::string text = g.get<std::string>();
    if (!std::regex_match(text, match, shorthand)) throw InvalidInput("cannot parse group '" + text + "'");
    std::int64_t order = 0;
    std::vector<std::int64_t> weights;
    try {
      order = std::stoll(match[1].str());
      std::stringstream ss(match[2].str());
      std::string part;
      while (std::getline(ss, part, ',')) weights.push_back(std::stoll(part));
    } catch (const std::logic_error&) {
      throw InvalidInput("cannot parse group '" + text + "'");
    }
    group = GroupData::cyclic(order, std::move(weights));
  } else if (g.contains("cyclic")) {
    const json& c = g["cyclic"];
    group = GroupData::cyclic(as_int(c.at("order"), "cyclic.order"), as_int_list(c.at("weights"), "cyclic.weights"));
  } else if (g.contains("abelian")) {
    const json& a = g["abelian"];
    std::vector<std::vector<std::int64_t>> w;
    if (!a.at("weight_matrix").is_array()) throw InvalidInput("abelian.weight_matrix must be an array");
    for (const auto& row : a["weight_matrix"]) w.push_back(as_int_list(row, "abelian.weight_matrix"));
    group = GroupData(as_int_list(a.at("orders"), "abelian.orders"), std::move(w));
  } else {
    throw InvalidInput("group must be \"1/r(a1,...,an)\", {\"cyclic\": ...} or {\"abelian\": ...}");
  }

  const json& f = doc["fan"];
  if (!f.contains("rays") || !f.contains("cones")) throw InvalidInput("fan needs \"rays\" and \"cones\"");
  std::vector<RatVector> rays;
  for (const auto& r : f["rays"]) {
    if (!r.is_array()) throw InvalidInput("each ray must be an array");
    RatVector v;
    for (const auto& q : r) v.push_back(rational_from_json(q));
    rays.push_back(std::move(v));
  }
  std::vector<Cone> cones;
  for (const auto& c : f["cones"]) {
    Cone cone;
    for (auto label : as_int_list(c, "cone")) {
      if (label < 1 || static_cast<std::size_t>(label) > rays.size())
        throw InvalidInput("cone references unknown ray " + std::to_string(label));
      cone.rays.push_back(static_cast<std::size_t>(label - 1));
    }
    cones.push_back(std::move(cone));
  }
  if (!rays.empty() && rays.front().size() != group->dimension())
    throw InvalidInput("ray dimension does not match the group");
  return Problem{*group, Fan(Lattice::from_group(*group), std::move(rays), std::move(cones))};
}

Problem load_problem(const std::string& path) {
  try {
    return parse_problem(load_json(path));
  } catch (const json::exception& e) {
    throw InvalidInput("malformed problem file '" + path + "': " + e.what());
  }
}

json character_to_json(const GroupData& group, const Character& chi) {
  if (group.is_cyclic()) return chi.residues()[0];
  return chi.residues();
}

Character character_from_json(const GroupData& group, const json& value) {
  if (value.is_string()) return group.parse_character(value.get<std::string>());
  if (value.is_number_integer()) return group.parse_character(std::to_string(value.get<std::int64_t>()));
  if (value.is_array()) {
    std::string s;
    for (const auto& x : value) s += (s.empty() ? "" : ",") + std::to_string(as_int(x, "character residue"));
    return group.parse_character(s);
  }
  throw InvalidInput("character must be an integer, residue array, or name");
}

json divisor_to_json(const GroupData& group, const GWeilDivisor& d) {
  json coeffs = json::object();
  for (const auto& [ray, q] : d.coeffs()) coeffs[Fan::ray_name(ray)] = to_string(q);
  return json{{"char", character_to_json(group, d.character())}, {"coeffs", coeffs}};
}

std::map<std::size_t, Rational> coeffs_from_json(const Fan& fan, const json& value) {
  if (!value.is_object()) throw InvalidInput("coefficients must be an object {\"E4\": \"7/4\", ...}");
  std::map<std::size_t, Rational> out;
  for (const auto& [name, q] : value.items()) {
    const Rational r = rational_from_json(q);
    if (r != 0) out[parse_ray_name(fan, name)] = r;
  }
  return out;
}

GWeilDivisor divisor_from_json(const Fan& fan, const GroupData& group, const json& value) {
  if (!value.is_object() || !value.contains("char")) throw InvalidInput("divisor needs \"char\"");
  const json coeffs = value.contains("coeffs") ? value["coeffs"] : json::object();
  return GWeilDivisor(character_from_json(group, value["char"]), coeffs_from_json(fan, coeffs));
}

json set_to_json(const GroupData& group, const ReductorSet& set) {
  json divisors = json::array();
  for (const auto& d : set.divisors()) divisors.push_back(divisor_to_json(group, d));
  return json{{"divisors", divisors}};
}

ReductorSet set_from_json(const Fan& fan, const GroupData& group, const json& value) {
  const json* list = &value;
  if (value.is_object() && value.contains("divisors")) list = &value["divisors"];
  if (!list->is_array()) throw InvalidInput("reductor set must be {\"divisors\": [...]}");
  std::vector<std::optional<GWeilDivisor>> slots(group.order());
  for (const auto& item : *list) {
    GWeilDivisor d = divisor_from_json(fan, group, item);
    auto& slot = slots[group.index(d.character())];
    if (slot) throw InvalidInput("two divisors for " + group.name(d.character()));
    slot = std::move(d);
  }
  std::vector<GWeilDivisor> divisors;
  for (std::size_t c = 0; c < slots.size(); ++c) {
    if (!slots[c]) throw InvalidInput("missing divisor for " + group.name(group.character(c)));
    divisors.push_back(std::move(*slots[c]));
  }
  return ReductorSet(std::move(divisors));
}

std::string monomial(std::span<const Integer> exponent) {
  const std::size_t n = exponent.size();
  const std::string sep = n <= 3 ? "" : "*";
  std::string num;
  std::string den;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& e = exponent[i];
    if (e == 0) continue;
    const Integer a = e < 0 ? Integer(-e) : e;
    std::string term = variable(i, n) + (a == 1 ? "" : "^" + a.str());
    std::string& side = e > 0 ? num : den;
    side += (side.empty() ? "" : sep) + term;
  }
  if (num.empty() && den.empty()) return "1";
  if (num.empty()) num = "1";
  return den.empty() ? num : num + "/" + den;
}

json fan_report_to_json(const Fan& fan, const FanReport& report) {
  json cones = json::array();
  for (const auto& c : report.cones) {
    json rays = json::array();
    for (auto i : fan.cone(c.cone).rays) rays.push_back(Fan::ray_name(i));
    cones.push_back({{"cone", c.cone + 1}, {"rays", rays}, {"det", to_string(c.det)}, {"basic", c.basic}});
  }
  auto names = [](const std::vector<std::size_t>& v) {
    json out = json::array();
    for (auto i : v) out.push_back(Fan::ray_name(i));
    return out;
  };
  json overlaps = json::array();
  for (const auto& o : report.overlaps) overlaps.push_back({o.first + 1, o.second + 1});
  return json{{"cones", cones},
              {"rays_outside_orthant", names(report.rays_outside_orthant)},
              {"rays_not_primitive", names(report.rays_not_primitive)},
              {"rays_without_cone", names(report.rays_without_cone)},
              {"overlapping_cones", overlaps},
              {"covered_volume", report.covered_volume ? json(to_string(*report.covered_volume)) : json(nullptr)},
              {"covers_orthant", report.covers()},
              {"warnings", report.warnings},
              {"ok", report.ok()}};
}

json info_to_json(const Problem& problem) {
  const auto& fan = problem.fan;
  const auto& lattice = fan.lattice();
  json basis = json::array();
  for (std::size_t r = 0; r < lattice.dimension(); ++r) basis.push_back(to_json(lattice.basis().row(r)));
  json junior = json::array();
  for (const auto& p : junior_simplex(lattice)) junior.push_back(to_json(p));
  const auto junior_points = junior_simplex(lattice);
  json rays = json::array();
  for (std::size_t i = 0; i < fan.rays().size(); ++i) {
    const bool is_junior = std::find(junior_points.begin(), junior_points.end(), fan.ray(i)) != junior_points.end();
    rays.push_back({{"name", Fan::ray_name(i)},
                    {"vector", to_json(fan.ray(i))},
                    {"discrepancy", to_string(discrepancy(fan.ray(i)))},
                    {"junior", is_junior}});
  }
  json ramification = json::array();
  for (std::size_t a = 0; a < lattice.dimension(); ++a) ramification.push_back(to_string(x_valuation_on_X(lattice, a)));
  return json{{"dimension", problem.group.dimension()},
              {"group_order", problem.group.order()},
              {"in_sl", problem.group.in_sl()},
              {"lattice_index", lattice.index().str()},
              {"lattice_basis", basis},
              {"junior_simplex", junior},
              {"junior_count", junior_points.size()},
              {"rays", rays},
              {"crepant", is_crepant(fan)},
              {"ramification", ramification},
              {"fan", fan_report_to_json(fan, validate_fan(fan))}};
}

std::string info_text(const Problem& problem) {
  const json info = info_to_json(problem);
  const auto& fan = problem.fan;
  std::ostringstream os;
  os << "dimension      " << problem.group.dimension() << '\n';
  os << "group order    " << problem.group.order() << (problem.group.in_sl() ? " (in SL)" : "") << '\n';
  os << "lattice index  " << fan.lattice().index() << '\n';
  os << "junior simplex (" << info["junior_count"].get<std::size_t>() << " points)\n";
  for (const auto& p : junior_simplex(fan.lattice())) os << "  " << join_rationals(p) << '\n';
  std::vector<std::vector<std::string>> cells{{"ray", "vector", "discrepancy", "junior"}};
  for (const auto& r : info["rays"]) {
    std::string v = "(";
    for (std::size_t k = 0; k < r["vector"].size(); ++k) v += (k ? ", " : "") + r["vector"][k].get<std::string>();
    cells.push_back({r["name"], v + ")", r["discrepancy"], r["junior"].get<bool>() ? "yes" : "no"});
  }
  os << render_table(cells);
  os << "crepant        " << (info["crepant"].get<bool>() ? "true" : "false") << '\n';
  os << "ramification   ";
  for (std::size_t a = 0; a < info["ramification"].size(); ++a)
    os << (a ? "  " : "") << "v(" << variable(a, problem.group.dimension()) << ")=" << info["ramification"][a].get<std::string>();
  os << '\n';
  const json& f = info["fan"];
  os << "fan            " << (f["ok"].get<bool>() ? "valid" : "INVALID") << " (covered volume "
     << (f["covered_volume"].is_null() ? std::string("n/a") : f["covered_volume"].get<std::string>()) << ")\n";
  for (const auto& c : f["cones"])
    if (!c["basic"].get<bool>()) os << "  cone " << c["cone"] << " is not basic (det " << c["det"].get<std::string>() << ")\n";
  for (const auto& o : f["overlapping_cones"]) os << "  cones " << o[0] << " and " << o[1] << " overlap\n";
  for (const auto& w : f["warnings"]) os << "  warning: " << w.get<std::string>() << '\n';
  return os.str();
}

json cartier_to_json(const Fan& fan, const GroupData& group, const GCartierDivisor& c) {
  json cones = json::array();
  for (std::size_t k = 0; k < c.per_cone.size(); ++k) {
    json rays = json::array();
    for (auto i : fan.cone(k).rays) rays.push_back(Fan::ray_name(i));
    cones.push_back(
        {{"cone", k + 1}, {"rays", rays}, {"exponent", to_json(c.per_cone[k])}, {"monomial", monomial(c.per_cone[k])}});
  }
  return json{{"char", character_to_json(group, c.character)}, {"cones", cones}};
}

json per_ray_to_json(const Fan& fan, const GroupData& group, const PerRayTable& table) {
  json chars = json::array();
  for (const auto& chi : group.characters()) chars.push_back(character_to_json(group, chi));
  json rows = json::array();
  for (const auto& r : table.rows) rows.push_back(to_json(r));
  return json{{"ray", Fan::ray_name(table.ray)},
              {"vector", to_json(fan.ray(table.ray))},
              {"chars", chars},
              {"count", table.rows.size()},
              {"rows", rows}};
}

std::string per_ray_table(const Fan& fan, const GroupData& group, const PerRayTable& table) {
  std::ostringstream os;
  os << Fan::ray_name(table.ray) << " = " << join_rationals(fan.ray(table.ray)) << ": " << table.rows.size()
     << " row" << (table.rows.size() == 1 ? "" : "s") << '\n';
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header;
  for (const auto& chi : group.characters()) header.push_back(group.name(chi));
  cells.push_back(header);
  for (const auto& r : table.rows) {
    std::vector<std::string> row;
    for (const auto& q : r) row.push_back(to_string(q));
    cells.push_back(row);
  }
  os << render_table(cells);
  return os.str();
}

std::string set_table(const Fan& /*fan*/, const GroupData& group, const ReductorSet& set) {
  std::set<std::size_t> used;
  for (const auto& d : set.divisors())
    for (const auto& [ray, q] : d.coeffs()) used.insert(ray);
  if (used.empty()) return "(all divisors zero)\n";
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (auto i : used) header.push_back(Fan::ray_name(i));
  cells.push_back(header);
  for (const auto& d : set.divisors()) {
    std::vector<std::string> row{"D_" + group.name(d.character())};
    for (auto i : used) row.push_back(to_string(d.coefficient(i)));
    cells.push_back(row);
  }
  return render_table(cells);
}

json piece_to_json(const Fan& fan, const GroupData& group, const ReductorPiece& piece) {
  json rays = json::array();
  for (auto i : fan.cone(piece.cone).rays) rays.push_back(Fan::ray_name(i));
  json exps = json::array();
  for (std::size_t c = 0; c < piece.exponents.size(); ++c) {
    exps.push_back({{"char", character_to_json(group, group.character(c))},
                    {"exponent", to_json(piece.exponents[c])},
                    {"monomial", monomial(piece.exponents[c])}});
  }
  json dual = json::array();
  for (const auto& v : dual_basis(fan, fan.cone(piece.cone))) dual.push_back(to_json(v));
  return json{{"cone", piece.cone + 1}, {"rays", rays}, {"dual_basis", dual}, {"exponents", exps}};
}

std::string piece_text(const Fan& fan, const GroupData& group, const ReductorPiece& piece) {
  std::ostringstream os;
  os << "cone " << piece.cone + 1 << " <";
  const auto& rays = fan.cone(piece.cone).rays;
  for (std::size_t k = 0; k < rays.size(); ++k) os << (k ? ", " : "") << Fan::ray_name(rays[k]);
  os << ">\n";
  std::vector<std::vector<std::string>> cells{{"char", "exponent", "monomial"}};
  for (std::size_t c = 0; c < piece.exponents.size(); ++c) {
    std::string e = "(";
    for (std::size_t x = 0; x < piece.exponents[c].size(); ++x) e += (x ? ", " : "") + piece.exponents[c][x].str();
    cells.push_back({group.name(group.character(c)), e + ")", monomial(piece.exponents[c])});
  }
  os << render_table(cells);
  return os.str();
}

json quiver_to_json(const Fan& fan, const GroupData& group, const QuiverRep& rep) {
  json vertices = json::array();
  for (std::size_t c = 0; c < rep.vertices; ++c) vertices.push_back(character_to_json(group, group.character(c)));
  json arrows = json::array();
  for (const auto& a : rep.arrows) {
    arrows.push_back({{"source", character_to_json(group, group.character(a.source))},
                      {"target", character_to_json(group, group.character(a.target))},
                      {"generator", variable(a.generator, group.dimension())},
                      {"label", to_json(a.label)},
                      {"monomial", monomial(a.label)},
                      {"local", to_json(a.local)}});
  }
  json rays = json::array();
  for (auto i : fan.cone(rep.cone).rays) rays.push_back(Fan::ray_name(i));
  return json{{"cone", rep.cone + 1}, {"rays", rays}, {"vertices", vertices}, {"arrows", arrows}, {"regular", rep.regular()}};
}

std::string quiver_dot(const Fan& fan, const GroupData& group, const QuiverRep& rep) {
  std::ostringstream os;
  os << "digraph cone" << rep.cone + 1 << " {\n";
  os << "  label=\"cone " << rep.cone + 1 << " <";
  const auto& rays = fan.cone(rep.cone).rays;
  for (std::size_t k = 0; k < rays.size(); ++k) os << (k ? "," : "") << Fan::ray_name(rays[k]);
  os << ">\";\n";
  for (std::size_t c = 0; c < rep.vertices; ++c)
    os << "  v" << c << " [label=\"" << group.name(group.character(c)) << "\"];\n";
  for (const auto& a : rep.arrows) {
    os << "  v" << a.source << " -> v" << a.target << " [label=\"" << variable(a.generator, group.dimension()) << ": "
       << monomial(a.label) << " " << join_rationals(a.local) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

json reductor_report_to_json(const Fan& /*fan*/, const GroupData& group, const ReductorReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"char", character_to_json(group, group.character(v.chi))},
                          {"generator", variable(v.generator, group.dimension())},
                          {"ray", Fan::ray_name(v.ray)},
                          {"value", to_string(v.value)}});
  }
  return json{{"passed", report.passed()}, {"shape_errors", report.shape_errors}, {"violations", violations}};
}

json bounds_report_to_json(const Fan& /*fan*/, const GroupData& group, const BoundsReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"char", character_to_json(group, group.character(v.chi))},
                          {"ray", Fan::ray_name(v.ray)},
                          {"bound", v.upper ? "upper" : "lower"},
                          {"value", to_string(v.value)},
                          {"limit", to_string(v.bound)}});
  }
  return json{{"passed", report.passed()}, {"normalized", report.normalized}, {"violations", violations}};
}

}  // namespace gorbit
