// gorbit: classify deformations of the generic orbit on a toric resolution.
//
// Exit status: 0 success, 1 invalid input (diagnostics as JSON on stderr),
// 2 a mathematical check failed.

#include "gorbit/divisor.hpp"
#include "gorbit/family.hpp"
#include "gorbit/io.hpp"
#include "gorbit/toric.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace gorbit;

constexpr int kInvalidInput = 1;
constexpr int kCheckFailed = 2;

struct CheckFailure : Error {
  using Error::Error;
};

std::size_t select_cone(const Fan& fan, const std::string& spec) {
  if (spec.find(',') == std::string::npos) {
    const Rational q = parse_rational(spec);
    if (!is_integer(q) || q < 1 || q > fan.cones().size()) throw InvalidInput("no cone numbered " + spec);
    return numerator(q).convert_to<std::size_t>() - 1;
  }
  std::vector<std::size_t> rays;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty() && (part[0] == 'E' || part[0] == 'e')) part = part.substr(1);
    const Rational q = parse_rational(part);
    if (!is_integer(q) || q < 1 || q > fan.rays().size()) throw InvalidInput("unknown ray in cone '" + spec + "'");
    rays.push_back(numerator(q).convert_to<std::size_t>() - 1);
  }
  const auto k = fan.find_cone(rays);
  if (!k) throw InvalidInput("no cone with rays " + spec);
  return *k;
}

ReductorSet read_set(const Problem& p, const std::string& path) {
  try {
    return set_from_json(p.fan, p.group, load_json(path));
  } catch (const json::exception& e) {
    throw InvalidInput("malformed reductor set '" + path + "': " + e.what());
  }
}

void emit_set(const Problem& p, const ReductorSet& set, bool as_json) {
  if (as_json)
    std::cout << set_to_json(p.group, set).dump(2) << '\n';
  else
    std::cout << set_table(p.fan, p.group, set);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformations of the generic orbit on toric resolutions of C^n/G"};
  app.require_subcommand(1);

  std::string input;
  bool as_json = false;
  app.add_option("-i,--input", input, "problem file (JSON)")->required();
  app.add_flag("--json", as_json, "emit JSON instead of text");

  auto* info = app.add_subcommand("info", "lattice, junior simplex, discrepancies, crepancy, ramification");
  auto* canonical = app.add_subcommand("canonical", "the canonical family");
  auto* maxshift = app.add_subcommand("maxshift", "the maximal shift family");

  auto* enumerate = app.add_subcommand("enumerate", "all normalized reductor sets");
  bool per_ray = false;
  bool count_only = false;
  std::optional<std::size_t> limit;
  enumerate->add_flag("--per-ray", per_ray, "print the per-ray solution tables");
  enumerate->add_flag("--count-only", count_only, "print only the number of sets");
  enumerate->add_option("--limit", limit, "stop after N sets");

  std::vector<std::string> set_files;
  auto* check = app.add_subcommand("check", "reductor condition and maximal shift bounds");
  check->add_option("--set", set_files, "reductor set JSON")->required()->expected(1);

  std::string cone_spec;
  auto* piece = app.add_subcommand("piece", "reductor piece on one cone");
  piece->add_option("--cone", cone_spec, "cone number (1-based) or ray labels like 4,5,6")->required();
  piece->add_option("--set", set_files, "reductor set JSON")->required()->expected(1);

  bool dot = false;
  auto* quiv = app.add_subcommand("quiver", "McKay quiver representation on one cone");
  quiv->add_option("--cone", cone_spec, "cone number (1-based) or ray labels like 4,5,6")->required();
  quiv->add_option("--set", set_files, "reductor set JSON")->required()->expected(1);
  quiv->add_flag("--dot", dot, "emit Graphviz DOT");

  std::string char_spec;
  std::string coeffs_file;
  auto* cartier = app.add_subcommand("cartier", "G-Weil to G-Cartier conversion");
  cartier->add_option("--char", char_spec, "character (k for cyclic groups, or a,b,...)")->required();
  cartier->add_option("--coeffs", coeffs_file, "coefficient JSON {\"E4\": \"7/4\", ...}")->required();

  auto* shift = app.add_subcommand("shift", "lambda-shift of a normalized set");
  shift->add_option("--lambda", char_spec, "character lambda")->required();
  shift->add_option("--set", set_files, "reductor set JSON")->required()->expected(1);

  auto* refl = app.add_subcommand("reflect", "reflection D'_chi = -D_{chi^-1}");
  refl->add_option("--set", set_files, "reductor set JSON")->required()->expected(1);

  auto* equiv = app.add_subcommand("equiv", "equivalence / isomorphism witness between two sets");
  equiv->add_option("--set", set_files, "reductor set JSON (give twice)")->required()->take_all();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
    return kInvalidInput;
  }

  try {
    const Problem p = load_problem(input);
    const auto& fan = p.fan;
    const auto& group = p.group;

    if (*info) {
      if (as_json)
        std::cout << info_to_json(p).dump(2) << '\n';
      else
        std::cout << info_text(p);
      return validate_fan(fan).ok() ? 0 : kCheckFailed;
    }
    if (*canonical) {
      emit_set(p, canonical_family(fan, group), as_json);
      return 0;
    }
    if (*maxshift) {
      emit_set(p, maximal_shift_family(fan, group), as_json);
      return 0;
    }
    if (*enumerate) {
      NormalizedEnumeration stream(fan, group);
      if (count_only) {
        if (as_json)
          std::cout << json{{"count", stream.count().str()}}.dump() << '\n';
        else
          std::cout << stream.count() << '\n';
        return 0;
      }
      if (per_ray) {
        if (as_json) {
          json tables = json::array();
          for (const auto& t : stream.tables()) tables.push_back(per_ray_to_json(fan, group, t));
          std::cout << json{{"tables", tables}, {"count", stream.count().str()}}.dump(2) << '\n';
        } else {
          for (const auto& t : stream.tables()) std::cout << per_ray_table(fan, group, t) << '\n';
          std::cout << "total normalized sets: " << stream.count() << '\n';
        }
        return 0;
      }
      std::size_t produced = 0;
      while (!limit || produced < *limit) {
        auto set = stream.next();
        if (!set) break;
        ++produced;
        // JSON mode streams one compact set per line.
        if (as_json) {
          std::cout << set_to_json(group, *set).dump() << '\n';
        } else {
          std::cout << "# set " << produced << '\n' << set_table(fan, group, *set) << '\n';
        }
      }
      return 0;
    }
    if (*check) {
      const ReductorSet set = read_set(p, set_files.front());
      const ReductorReport red = check_reductor(fan, group, set);
      json out{{"reductor", reductor_report_to_json(fan, group, red)}};
      bool passed = red.passed();
      if (red.passed()) {
        // Bounds apply to the normalized representative of the class.
        const BoundsReport bounds = bounds_check(fan, group, normalize(group, set));
        out["bounds"] = bounds_report_to_json(fan, group, bounds);
        out["normalized"] = set.normalized();
        passed = passed && bounds.passed();
      }
      out["passed"] = passed;
      if (as_json) {
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << "reductor condition: " << (red.passed() ? "pass" : "FAIL") << '\n';
        for (const auto& e : red.shape_errors) std::cout << "  " << e << '\n';
        for (const auto& v : out["reductor"]["violations"])
          std::cout << "  D_" << v["char"] << " + (" << v["generator"].get<std::string>() << ") - ... on "
                    << v["ray"].get<std::string>() << " = " << v["value"].get<std::string>() << '\n';
        if (out.contains("bounds")) {
          std::cout << "maximal shift bounds: " << (out["bounds"]["passed"].get<bool>() ? "pass" : "FAIL") << '\n';
          for (const auto& v : out["bounds"]["violations"])
            std::cout << "  " << v["bound"].get<std::string>() << " bound at char " << v["char"] << ", "
                      << v["ray"].get<std::string>() << ": " << v["value"].get<std::string>() << " vs "
                      << v["limit"].get<std::string>() << '\n';
        }
      }
      return passed ? 0 : kCheckFailed;
    }
    if (*piece) {
      const ReductorSet set = read_set(p, set_files.front());
      const auto pc = reductor_piece(fan, group, set, select_cone(fan, cone_spec));
      if (as_json)
        std::cout << piece_to_json(fan, group, pc).dump(2) << '\n';
      else
        std::cout << piece_text(fan, group, pc);
      return 0;
    }
    if (*quiv) {
      const ReductorSet set = read_set(p, set_files.front());
      const auto rep = quiver(fan, group, set, select_cone(fan, cone_spec));
      if (dot)
        std::cout << quiver_dot(fan, group, rep);
      else
        std::cout << quiver_to_json(fan, group, rep).dump(2) << '\n';
      return rep.regular() ? 0 : kCheckFailed;
    }
    if (*cartier) {
      json doc = load_json(coeffs_file);
      if (doc.is_object() && doc.contains("coeffs")) doc = doc["coeffs"];
      const GWeilDivisor d(group.parse_character(char_spec), coeffs_from_json(fan, doc));
      const auto c = weil_to_cartier(fan, group, d);
      const json out = cartier_to_json(fan, group, c);
      if (as_json) {
        std::cout << out.dump(2) << '\n';
      } else {
        for (const auto& cone : out["cones"]) {
          std::string rays;
          for (const auto& r : cone["rays"]) rays += (rays.empty() ? "" : ",") + r.get<std::string>();
          std::cout << "cone " << cone["cone"] << " <" << rays << ">  " << cone["monomial"].get<std::string>() << "  "
                    << cone["exponent"].dump() << '\n';
        }
      }
      return 0;
    }
    if (*shift || *refl) {
      const ReductorSet set = read_set(p, set_files.front());
      if (!check_reductor(fan, group, set).passed()) throw CheckFailure("input set fails the reductor condition");
      if (*shift && !set.normalized()) throw CheckFailure("lambda-shift needs a normalized set");
      emit_set(p, *shift ? lambda_shift(group, set, group.parse_character(char_spec)) : reflect(group, set), as_json);
      return 0;
    }
    if (*equiv) {
      if (set_files.size() != 2) throw InvalidInput("equiv needs exactly two --set files");
      const ReductorSet a = read_set(p, set_files[0]);
      const ReductorSet b = read_set(p, set_files[1]);
      const auto w = equivalence_witness(fan, group, a, b);
      json out{{"equivalent", w.has_value()}};
      if (w) {
        out["shift"] = divisor_to_json(group, w->shift);
        out["isomorphic"] = w->isomorphism.has_value();
        if (w->isomorphism) out["monomial"] = to_json(*w->isomorphism);
      }
      if (as_json) {
        std::cout << out.dump(2) << '\n';
      } else if (!w) {
        std::cout << "not equivalent: D'_chi - D_chi depends on chi\n";
      } else {
        std::cout << "equivalent, shift " << out["shift"]["coeffs"].dump() << '\n';
        std::cout << (w->isomorphism ? "isomorphic via x^" + to_json(*w->isomorphism).dump() : std::string("not isomorphic"))
                  << '\n';
      }
      return 0;
    }
  } catch (const InvalidInput& e) {
    std::cerr << json{{"error", "invalid_input"}, {"message", e.what()}}.dump() << '\n';
    return kInvalidInput;
  } catch (const json::exception& e) {
    std::cerr << json{{"error", "invalid_input"}, {"message", e.what()}}.dump() << '\n';
    return kInvalidInput;
  } catch (const Error& e) {
    std::cerr << json{{"error", "check_failed"}, {"message", e.what()}}.dump() << '\n';
    return kCheckFailed;
  }
  return 0;
}
