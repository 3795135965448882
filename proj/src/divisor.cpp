#include "gorbit/divisor.hpp"

namespace gorbit {

GWeilDivisor::GWeilDivisor(Character character, const std::map<std::size_t, Rational>& coeffs)
    : character_(std::move(character)) {
  for (const auto& [ray, q] : coeffs) set(ray, q);
}

Rational GWeilDivisor::coefficient(std::size_t ray) const {
  const auto it = coeffs_.find(ray);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void GWeilDivisor::set(std::size_t ray, const Rational& value) {
  if (value == 0)
    coeffs_.erase(ray);
  else
    coeffs_[ray] = value;
}

bool GWeilDivisor::effective() const {
  for (const auto& [ray, q] : coeffs_)
    if (q < 0) return false;
  return true;
}

std::map<std::size_t, Rational> add(const std::map<std::size_t, Rational>& a, const std::map<std::size_t, Rational>& b) {
  auto out = a;
  for (const auto& [ray, q] : b) {
    Rational& slot = out[ray];
    slot += q;
    if (slot == 0) out.erase(ray);
  }
  return out;
}

std::map<std::size_t, Rational> subtract(const std::map<std::size_t, Rational>& a,
                                         const std::map<std::size_t, Rational>& b) {
  auto out = a;
  for (const auto& [ray, q] : b) {
    Rational& slot = out[ray];
    slot -= q;
    if (slot == 0) out.erase(ray);
  }
  return out;
}

GWeilDivisor sum(const GroupData& group, const GWeilDivisor& a, const GWeilDivisor& b) {
  return GWeilDivisor(group.multiply(a.character(), b.character()), add(a.coeffs(), b.coeffs()));
}

GWeilDivisor difference(const GroupData& group, const GWeilDivisor& a, const GWeilDivisor& b) {
  return GWeilDivisor(group.multiply(a.character(), group.inverse(b.character())), subtract(a.coeffs(), b.coeffs()));
}

GWeilDivisor negate(const GroupData& group, const GWeilDivisor& d) {
  return GWeilDivisor(group.inverse(d.character()), subtract({}, d.coeffs()));
}

Rational frac_val(std::span<const Rational> ray, const GroupData& group, const Character& chi) {
  return frac(pairing(ray, group.representative_monomial(chi)));
}

GWeilDivisor principal_divisor(const Fan& fan, const GroupData& group, std::span<const Integer> m) {
  GWeilDivisor d(group.weight(m));
  for (std::size_t i = 0; i < fan.rays().size(); ++i) d.set(i, pairing(fan.ray(i), m));
  return d;
}

std::vector<std::size_t> congruence_failures(const Fan& fan, const GroupData& group, const GWeilDivisor& d) {
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < fan.rays().size(); ++i)
    if (frac(d.coefficient(i)) != frac_val(fan.ray(i), group, d.character())) bad.push_back(i);
  for (const auto& [ray, q] : d.coeffs())
    if (ray >= fan.rays().size()) bad.push_back(ray);
  return bad;
}

GCartierDivisor weil_to_cartier(const Fan& fan, const GroupData& group, const GWeilDivisor& d) {
  const auto bad = congruence_failures(fan, group, d);
  if (!bad.empty()) {
    throw CongruenceViolation("coefficient of " + Fan::ray_name(bad.front()) + " is not congruent to the " +
                              group.name(d.character()) + " fractional valuation");
  }
  GCartierDivisor out{d.character(), {}};
  for (const auto& cone : fan.cones()) {
    const auto dual = dual_basis(fan, cone);
    RatVector m(fan.dimension(), 0);
    for (std::size_t k = 0; k < cone.rays.size(); ++k) {
      const Rational q = d.coefficient(cone.rays[k]);
      if (q == 0) continue;
      for (std::size_t c = 0; c < m.size(); ++c) m[c] += q * Rational(dual[k][c]);
    }
    out.per_cone.push_back(to_integer(m));
  }
  return out;
}

GWeilDivisor cartier_to_weil(const Fan& fan, const GroupData& group, const GCartierDivisor& c) {
  if (c.per_cone.size() != fan.cones().size()) throw InvalidInput("Cartier data needs one exponent per cone");
  std::map<std::size_t, Rational> coeffs;
  std::vector<bool> seen(fan.rays().size(), false);
  for (std::size_t k = 0; k < fan.cones().size(); ++k) {
    const auto& m = c.per_cone[k];
    if (group.weight(m) != c.character) {
      throw CongruenceViolation("exponent on cone " + std::to_string(k + 1) + " does not have weight " +
                                group.name(c.character));
    }
    for (auto i : fan.cone(k).rays) {
      const Rational q = pairing(fan.ray(i), m);
      if (!seen[i]) {
        seen[i] = true;
        if (q != 0) coeffs[i] = q;
      } else if ((coeffs.count(i) ? coeffs[i] : Rational(0)) != q) {
        throw GluingViolation("cones disagree on the coefficient of " + Fan::ray_name(i));
      }
    }
  }
  return GWeilDivisor(c.character, coeffs);
}

std::optional<IntVector> linear_equivalence_witness(const Fan& fan, const GroupData& group, const GWeilDivisor& d1,
                                                    const GWeilDivisor& d2) {
  if (fan.cones().empty()) return std::nullopt;
  const auto diff = subtract(d2.coeffs(), d1.coeffs());
  const Cone& cone = fan.cone(0);
  std::vector<RatVector> rows;
  RatVector rhs;
  for (auto i : cone.rays) {
    rows.push_back(fan.ray(i));
    const auto it = diff.find(i);
    rhs.push_back(it == diff.end() ? Rational(0) : it->second);
  }
  RatMatrix inv;
  try {
    inv = invert(RatMatrix(rows));
  } catch (const SingularMatrix&) {
    return std::nullopt;
  }
  // Rays of one full-dimensional cone determine m uniquely.
  RatVector m(fan.dimension(), 0);
  for (std::size_t c = 0; c < m.size(); ++c)
    for (std::size_t k = 0; k < rhs.size(); ++k) m[c] += inv(c, k) * rhs[k];
  for (const auto& q : m)
    if (!is_integer(q)) return std::nullopt;
  IntVector witness = to_integer(m);
  const GWeilDivisor p = principal_divisor(fan, group, witness);
  if (p.coeffs() != diff) return std::nullopt;
  if (p.character() != group.multiply(d2.character(), group.inverse(d1.character()))) return std::nullopt;
  return witness;
}

}  // namespace gorbit
