#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace gorbit;
using namespace gorbit::testing;

namespace {

const char* const kProblems[] = {"c8_125.json", "c2_11.json", "c3_12.json", "c3_111.json",
                                 "c4_12.json",  "z2xz2.json", "trivial3.json"};

RatVector column(const ReductorSet& set, std::size_t ray) {
  RatVector out;
  for (std::size_t c = 0; c < set.size(); ++c) out.push_back(set.coefficient(c, ray));
  return out;
}

std::vector<RatVector> exceptional_columns(const ReductorSet& set) {
  std::vector<RatVector> rows;
  for (std::size_t c = 0; c < set.size(); ++c) {
    RatVector row;
    for (std::size_t ray = 3; ray < 7; ++ray) row.push_back(set.coefficient(c, ray));
    rows.push_back(row);
  }
  return rows;
}

ReductorSet with_coefficient(const ReductorSet& set, std::size_t chi, std::size_t ray, const Rational& value) {
  auto divisors = set.divisors();
  divisors[chi].set(ray, value);
  return ReductorSet(divisors);
}

ReductorSet shifted_by(const GroupData& g, const ReductorSet& set, const GWeilDivisor& n) {
  std::vector<GWeilDivisor> out;
  for (const auto& d : set.divisors()) out.push_back(sum(g, d, n));
  return ReductorSet(out);
}

}  // namespace

TEST_CASE("canonical family of the running example") {
  const auto p = load("c8_125.json");
  const auto canon = canonical_family(p.fan, p.group);
  CHECK(exceptional_columns(canon) == reference_canonical());
  for (std::size_t ray = 0; ray < 3; ++ray) CHECK(column(canon, ray) == RatVector(8, Rational(0)));
  CHECK(canon.normalized());
  CHECK(check_reductor(p.fan, p.group, canon).passed());
}

TEST_CASE("maximal shift family of the running example") {
  const auto p = load("c8_125.json");
  const auto maxshift = maximal_shift_family(p.fan, p.group);
  CHECK(exceptional_columns(maxshift) == reference_maxshift());
  CHECK(maximal_shift_minima(p.group, p.fan.ray(4)) == eighths({0, 2, 4, 6, 8, 2, 4, 6}));
  CHECK(check_reductor(p.fan, p.group, maxshift).passed());
  CHECK(bounds_check(p.fan, p.group, maxshift).passed());
}

TEST_CASE("oracle: Dijkstra minima equal exhaustive minima") {
  for (const char* name : kProblems) {
    CAPTURE(name);
    const auto p = load(name);
    for (const auto& ray : p.fan.rays()) CHECK(maximal_shift_minima(p.group, ray) == brute_minima(p.group, ray));
  }
}

TEST_CASE("oracle: per-ray tables equal exhaustive search") {
  for (const char* name : kProblems) {
    CAPTURE(name);
    const auto p = load(name);
    for (std::size_t i = 0; i < p.fan.rays().size(); ++i) {
      CAPTURE(i);
      const auto table = enumerate_per_ray(p.fan, p.group, i);
      CHECK(std::is_sorted(table.rows.begin(), table.rows.end()));
      const std::set<RatVector> got(table.rows.begin(), table.rows.end());
      CHECK(got.size() == table.rows.size());
      CHECK(got == brute_per_ray(p.group, p.fan.ray(i)));
    }
  }
}

TEST_CASE("per-ray tables of the running example") {
  const auto p = load("c8_125.json");
  const auto reference = reference_per_ray();
  for (std::size_t ray : {3, 4, 5}) {
    const auto t = enumerate_per_ray(p.fan, p.group, ray);
    CHECK(std::set<RatVector>(t.rows.begin(), t.rows.end()) == reference.at(ray));
  }
  // E7 has one more solution than the reference table: the reflection of its
  // second row.
  const auto t7 = enumerate_per_ray(p.fan, p.group, 6);
  const std::set<RatVector> got(t7.rows.begin(), t7.rows.end());
  CHECK(got.size() == 8);
  CHECK(std::includes(got.begin(), got.end(), reference.at(6).begin(), reference.at(6).end()));
  std::set<RatVector> extra;
  std::set_difference(got.begin(), got.end(), reference.at(6).begin(), reference.at(6).end(),
                      std::inserter(extra, extra.begin()));
  CHECK(extra == std::set<RatVector>{eighths({0, -3, -6, -1, -4, 1, -2, -5})});
  // Closed under q_chi -> -q_{chi^-1}.
  for (const auto& row : got) {
    RatVector refl(8);
    for (std::size_t c = 0; c < 8; ++c) refl[c] = -row[(8 - c) % 8];
    CHECK(got.count(refl) == 1);
  }
}

TEST_CASE("normalized enumeration counts") {
  const auto p = load("c8_125.json");
  NormalizedEnumeration stream(p.fan, p.group);
  CHECK(stream.count() == 8 * 12 * 2 * 8);
  std::size_t produced = 0;
  while (stream.next()) ++produced;
  CHECK(produced == 1536);
  CHECK_FALSE(stream.next());
  stream.reset();
  CHECK(stream.next());
  CHECK(enumerate_normalized(p.fan, p.group, [](const ReductorSet&) { return true; }, 10) == 10);
  CHECK(collect_normalized(p.fan, p.group).size() == 1536);
}

TEST_CASE("oracle: small enumerations equal exhaustive search") {
  for (const char* name : {"c2_11.json", "c3_12.json", "c3_111.json", "c4_12.json", "z2xz2.json", "trivial3.json"}) {
    CAPTURE(name);
    const auto p = load(name);
    const auto sets = collect_normalized(p.fan, p.group);
    CHECK(sets.size() == brute_count_normalized(p.fan, p.group));
    CHECK(NormalizedEnumeration(p.fan, p.group).count() == sets.size());
  }
  CHECK(collect_normalized(load("c2_11.json").fan, load("c2_11.json").group).size() == 2);
  CHECK(collect_normalized(load("c3_111.json").fan, load("c3_111.json").group).size() == 3);
}

TEST_CASE("property: enumerated sets pass every check and are closed under shift and reflection") {
  for (const char* name : kProblems) {
    CAPTURE(name);
    const auto p = load(name);
    const auto& g = p.group;
    const auto maxshift = maximal_shift_family(p.fan, g);
    std::vector<ReductorSet> sets;
    enumerate_normalized(p.fan, g, [&](const ReductorSet& s) {
      sets.push_back(s);
      return true;
    });
    std::set<SetKey> keys;
    for (const auto& s : sets) keys.insert(key(s, p.fan.rays().size()));
    REQUIRE(keys.size() == sets.size());
    CHECK(keys.count(key(canonical_family(p.fan, g), p.fan.rays().size())) == 1);
    CHECK(keys.count(key(maxshift, p.fan.rays().size())) == 1);

    // Quiver regularity is the slowest check; sample large collections.
    const std::size_t stride = sets.size() > 200 ? 5 : 1;
    for (std::size_t n = 0; n < sets.size(); ++n) {
      const auto& s = sets[n];
      REQUIRE(s.normalized());
      REQUIRE(check_reductor(p.fan, g, s).passed());
      REQUIRE(bounds_check(p.fan, g, s, maxshift).passed());
      REQUIRE(normalize(g, s) == s);
      const auto r = reflect(g, s);
      REQUIRE(reflect(g, r) == s);
      REQUIRE(keys.count(key(r, p.fan.rays().size())) == 1);
      for (const auto& lambda : g.characters()) {
        const auto t = lambda_shift(g, s, lambda);
        REQUIRE(keys.count(key(t, p.fan.rays().size())) == 1);
      }
      if (n % stride == 0)
        for (std::size_t k = 0; k < p.fan.cones().size(); ++k) REQUIRE(quiver(p.fan, g, s, k).regular());
    }
  }
}

TEST_CASE("property: lambda shifts compose") {
  const auto p = load("c8_125.json");
  const auto& g = p.group;
  std::vector<ReductorSet> sample;
  enumerate_normalized(p.fan, g, [&](const ReductorSet& s) {
    sample.push_back(s);
    return true;
  }, 40);
  for (const auto& s : sample) {
    CHECK(lambda_shift(g, s, g.trivial_character()) == s);
    for (const auto& a : g.characters())
      for (const auto& b : g.characters())
        REQUIRE(lambda_shift(g, lambda_shift(g, s, a), b) == lambda_shift(g, s, g.multiply(a, b)));
  }
}

TEST_CASE("normalize subtracts the trivial character divisor") {
  const auto p = load("c8_125.json");
  const auto& g = p.group;
  const auto canon = canonical_family(p.fan, g);
  const auto moved = shifted_by(g, canon, GWeilDivisor(g.trivial_character(), {{4, r(2)}, {0, r(-1)}}));
  CHECK_FALSE(moved.normalized());
  CHECK(check_reductor(p.fan, g, moved).passed());
  CHECK_FALSE(bounds_check(p.fan, g, moved).passed());
  CHECK(normalize(g, moved) == canon);
}

TEST_CASE("reductor condition failures") {
  const auto p = load("c3_12.json");
  const auto& g = p.group;
  const auto canon = canonical_family(p.fan, g);
  REQUIRE(check_reductor(p.fan, g, canon).passed());

  SUBCASE("all-zero divisors break the congruences") {
    std::vector<GWeilDivisor> zero;
    for (const auto& chi : g.characters()) zero.emplace_back(chi);
    const auto report = check_reductor(p.fan, g, ReductorSet(zero));
    CHECK_FALSE(report.shape_errors.empty());
    CHECK_FALSE(report.passed());
  }
  SUBCASE("raising one coefficient breaks an inequality") {
    const auto bad = with_coefficient(canon, 1, 2, canon.coefficient(1, 2) + 1);
    const auto report = check_reductor(p.fan, g, bad);
    CHECK(report.shape_errors.empty());
    REQUIRE_FALSE(report.violations.empty());
    for (const auto& v : report.violations) CHECK(v.value < 0);
    CHECK_FALSE(quiver(p.fan, g, bad, 1).regular());
  }
  SUBCASE("missing divisors") {
    auto divisors = canon.divisors();
    divisors.pop_back();
    CHECK_FALSE(check_reductor(p.fan, g, ReductorSet(divisors)).passed());
  }
}

TEST_CASE("reductor pieces of the canonical family") {
  const auto p = load("c8_125.json");
  const auto canon = canonical_family(p.fan, p.group);
  const auto a = reductor_piece(p.fan, p.group, canon, *p.fan.find_cone({4, 5, 6}));
  CHECK(a.exponents == std::vector<IntVector>{iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 0}),
                                              iv({1, 0, -1}), iv({0, 0, 1}), iv({1, 1, -1}), iv({0, 1, 1})});
  const auto b = reductor_piece(p.fan, p.group, canon, *p.fan.find_cone({3, 4, 5}));
  CHECK(b.exponents == std::vector<IntVector>{iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 0}),
                                              iv({-1, 0, 1}), iv({0, 0, 1}), iv({-1, 1, 1}), iv({0, 1, 1})});
  for (std::size_t c = 0; c < 8; ++c) CHECK(p.group.weight(b.exponents[c]) == p.group.character(c));
}

TEST_CASE("quiver of the canonical family on <e4,e5,e6>") {
  const auto p = load("c8_125.json");
  const auto canon = canonical_family(p.fan, p.group);
  const auto rep = quiver(p.fan, p.group, canon, *p.fan.find_cone({3, 4, 5}));
  CHECK(rep.vertices == 8);
  CHECK(rep.arrows.size() == 24);
  CHECK(rep.regular());
  bool found = false;
  for (const auto& a : rep.arrows) {
    CHECK(a.target == p.group.step(a.source, a.generator));
    if (a.source == 3 && a.generator == 2) {
      found = true;
      CHECK(a.target == 0);
      CHECK(a.label == iv({1, 1, 1}));
      CHECK(a.local == RatVector{r(1), r(1), r(1)});
    }
  }
  CHECK(found);
  const auto surviving = rep.surviving_at_origin();
  CHECK_FALSE(surviving.empty());
  for (auto k : surviving) CHECK(rep.arrows[k].local == RatVector(3, Rational(0)));
}

TEST_CASE("equivalence witnesses") {
  const auto p = load("c8_125.json");
  const auto& g = p.group;
  const auto canon = canonical_family(p.fan, g);
  const auto maxshift = maximal_shift_family(p.fan, g);
  CHECK_FALSE(equivalence_witness(p.fan, g, canon, maxshift));

  const auto principal = principal_divisor(p.fan, g, iv({1, 1, 1}));
  const auto iso = equivalence_witness(p.fan, g, canon, shifted_by(g, canon, principal));
  REQUIRE(iso);
  CHECK(iso->shift == principal);
  CHECK(iso->isomorphism == iv({1, 1, 1}));

  const GWeilDivisor n(g.trivial_character(), {{4, r(1)}});
  const auto eq = equivalence_witness(p.fan, g, canon, shifted_by(g, canon, n));
  REQUIRE(eq);
  CHECK(eq->shift == n);
  CHECK_FALSE(eq->isomorphism);
}
