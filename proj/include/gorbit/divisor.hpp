#pragma once

#include "gorbit/group.hpp"
#include "gorbit/toric.hpp"

#include <map>
#include <optional>
#include <vector>

namespace gorbit {

class CongruenceViolation : public Error {
 public:
  using Error::Error;
};

class GluingViolation : public Error {
 public:
  using Error::Error;
};

/// A chi-Weil divisor supported on the rays of a fan. Coefficients are keyed
/// by ray index; absent means zero and zeros are never stored.
class GWeilDivisor {
 public:
  GWeilDivisor() = default;
  explicit GWeilDivisor(Character character) : character_(std::move(character)) {}
  GWeilDivisor(Character character, const std::map<std::size_t, Rational>& coeffs);

  const Character& character() const { return character_; }
  const std::map<std::size_t, Rational>& coeffs() const { return coeffs_; }
  Rational coefficient(std::size_t ray) const;
  void set(std::size_t ray, const Rational& value);
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficientwise comparison D >= 0.
  bool effective() const;

  friend bool operator==(const GWeilDivisor&, const GWeilDivisor&) = default;

 private:
  Character character_;
  std::map<std::size_t, Rational> coeffs_;
};

/// Coefficientwise arithmetic; the character of the result is supplied by the caller.
std::map<std::size_t, Rational> add(const std::map<std::size_t, Rational>& a, const std::map<std::size_t, Rational>& b);
std::map<std::size_t, Rational> subtract(const std::map<std::size_t, Rational>& a,
                                         const std::map<std::size_t, Rational>& b);
GWeilDivisor sum(const GroupData& group, const GWeilDivisor& a, const GWeilDivisor& b);
GWeilDivisor difference(const GroupData& group, const GWeilDivisor& a, const GWeilDivisor& b);
GWeilDivisor negate(const GroupData& group, const GWeilDivisor& d);

/// Fractional part of the valuation along a ray of any weight-chi function.
Rational frac_val(std::span<const Rational> ray, const GroupData& group, const Character& chi);

/// sum_i e_i(m) E_i, with character weight(m).
GWeilDivisor principal_divisor(const Fan& fan, const GroupData& group, std::span<const Integer> m);

/// Rays whose coefficient is not congruent to frac_val mod Z.
std::vector<std::size_t> congruence_failures(const Fan& fan, const GroupData& group, const GWeilDivisor& d);

/// Local generators x^{m_sigma}, one per cone of the fan.
struct GCartierDivisor {
  Character character;
  std::vector<IntVector> per_cone;
};

/// m_sigma = sum_{e_i in sigma} q_i * dual(e_i). Throws CongruenceViolation
/// when the divisor is not a chi-Weil divisor.
GCartierDivisor weil_to_cartier(const Fan& fan, const GroupData& group, const GWeilDivisor& d);
/// Throws GluingViolation when two cones disagree on a shared ray, and
/// CongruenceViolation when some m_sigma has the wrong weight.
GWeilDivisor cartier_to_weil(const Fan& fan, const GroupData& group, const GCartierDivisor& c);

/// A Laurent exponent m with principal_divisor(m) = d2 - d1, if one exists.
std::optional<IntVector> linear_equivalence_witness(const Fan& fan, const GroupData& group, const GWeilDivisor& d1,
                                                    const GWeilDivisor& d2);

}  // namespace gorbit
