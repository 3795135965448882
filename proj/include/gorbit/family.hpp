#pragma once

// Families of G-constellations on a toric resolution, encoded as sets of
// G-Weil divisors {D_chi} (one per character) satisfying
//
//   D_chi + (x_j) - D_{chi * rho(x_j)} >= 0   for every chi and generator x_j.
//
// Checking the generators x_1..x_n suffices; arbitrary monomials follow by
// adding the inequalities along a path. Each inequality involves a single
// ray, so the sets factor as a product of independent per-ray solutions.

#include "gorbit/divisor.hpp"
#include "gorbit/group.hpp"
#include "gorbit/toric.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gorbit {

/// One chi-Weil divisor per character, stored in GroupData::characters() order.
class ReductorSet {
 public:
  ReductorSet() = default;
  explicit ReductorSet(std::vector<GWeilDivisor> divisors) : divisors_(std::move(divisors)) {}

  std::size_t size() const { return divisors_.size(); }
  const std::vector<GWeilDivisor>& divisors() const { return divisors_; }
  const GWeilDivisor& operator[](std::size_t chi_index) const { return divisors_.at(chi_index); }
  Rational coefficient(std::size_t chi_index, std::size_t ray) const { return divisors_.at(chi_index).coefficient(ray); }

  /// D_{chi_0} = 0.
  bool normalized() const { return !divisors_.empty() && divisors_.front().is_zero(); }

  /// Dense coefficient table indexed [chi][ray]; a total order key for sets of sets.
  std::vector<RatVector> table(std::size_t ray_count) const;

  friend bool operator==(const ReductorSet&, const ReductorSet&) = default;

 private:
  std::vector<GWeilDivisor> divisors_;
};

struct ReductorReport {
  struct Violation {
    std::size_t chi;
    std::size_t generator;
    std::size_t ray;
    /// q_{chi,i} + e_i(x_j) - q_{chi rho(x_j), i}; negative.
    Rational value;
  };

  std::vector<std::string> shape_errors;
  std::vector<Violation> violations;

  bool passed() const { return shape_errors.empty() && violations.empty(); }
};

/// Structural checks (one divisor per character, congruences) plus every
/// generator inequality on every ray.
ReductorReport check_reductor(const Fan& fan, const GroupData& group, const ReductorSet& set);

/// D_chi = sum_i frac_val(e_i, chi) E_i.
ReductorSet canonical_family(const Fan& fan, const GroupData& group);

/// Minimum of e(m) over m >= 0 of weight chi, for every chi, computed as
/// single-source shortest paths on the character group with the generator
/// x_j costing e(u_j).
RatVector maximal_shift_minima(const GroupData& group, std::span<const Rational> ray);

/// M_chi = sum_i (min over weight-chi m >= 0 of e_i(m)) E_i.
ReductorSet maximal_shift_family(const Fan& fan, const GroupData& group);

/// Every normalized per-ray assignment {q_chi} for one ray.
struct PerRayTable {
  std::size_t ray = 0;
  /// Each row is indexed by character; rows are sorted lexicographically.
  std::vector<RatVector> rows;
};

/// Exhaustive depth-first search over the congruence grid between the
/// reflected and the maximal shift bounds, with forward checking.
PerRayTable enumerate_per_ray(const Fan& fan, const GroupData& group, std::size_t ray);
PerRayTable enumerate_per_ray(const GroupData& group, std::span<const Rational> ray_vector, std::size_t ray,
                              std::span<const Rational> minima);

/// Streams the normalized reductor sets as the Cartesian product of the
/// per-ray tables (last ray varying fastest).
class NormalizedEnumeration {
 public:
  NormalizedEnumeration(const Fan& fan, const GroupData& group);

  const std::vector<PerRayTable>& tables() const { return tables_; }
  /// Product of the per-ray row counts.
  Integer count() const;

  /// Next set, or nullopt once exhausted.
  std::optional<ReductorSet> next();
  void reset();

  /// Assemble the set that takes row choice[i] from the table of ray i.
  ReductorSet assemble(std::span<const std::size_t> choice) const;

 private:
  GroupData group_;
  std::vector<PerRayTable> tables_;
  std::vector<std::size_t> cursor_;
  bool done_ = false;
};

/// Feeds sets to `sink` until exhausted, `limit` sets were produced, or sink
/// returns false. Returns the number of sets produced.
std::size_t enumerate_normalized(const Fan& fan, const GroupData& group,
                                 const std::function<bool(const ReductorSet&)>& sink,
                                 std::optional<std::size_t> limit = std::nullopt);

/// D'_chi = D_chi - D_{chi_0}.
ReductorSet normalize(const GroupData& group, const ReductorSet& set);

/// D'_{chi lambda} = D_chi - D_{lambda^{-1}}.
ReductorSet lambda_shift(const GroupData& group, const ReductorSet& set, const Character& lambda);

/// D'_chi = -D_{chi^{-1}}.
ReductorSet reflect(const GroupData& group, const ReductorSet& set);

struct BoundsReport {
  struct Violation {
    std::size_t chi;
    std::size_t ray;
    bool upper;
    Rational value;
    Rational bound;
  };
  std::vector<Violation> violations;
  bool normalized = true;

  bool passed() const { return normalized && violations.empty(); }
};

/// M_chi >= D_chi >= -M_{chi^{-1}} coefficientwise.
BoundsReport bounds_check(const Fan& fan, const GroupData& group, const ReductorSet& set);
BoundsReport bounds_check(const Fan& fan, const GroupData& group, const ReductorSet& set, const ReductorSet& maxshift);

/// Local generators x^{p_chi} of the family on the chart of one cone.
struct ReductorPiece {
  std::size_t cone = 0;
  /// Indexed by character.
  std::vector<IntVector> exponents;
};

/// p_chi = sum_{e_i in cone} q_{chi,i} dual(e_i). Throws CongruenceViolation
/// if some p_chi is not integral.
ReductorPiece reductor_piece(const Fan& fan, const GroupData& group, const ReductorSet& set, std::size_t cone);

/// Representation of the McKay quiver on one chart: the arrow for (chi, x_j)
/// carries x^{p_chi} x_j / x^{p_{chi rho(x_j)}}.
struct QuiverRep {
  struct Arrow {
    std::size_t source;
    std::size_t target;
    std::size_t generator;
    IntVector label;
    /// e_i(label) for the cone's rays, i.e. the exponent in local coordinates.
    RatVector local;
  };

  std::size_t cone = 0;
  std::size_t vertices = 0;
  std::vector<Arrow> arrows;

  /// All labels are regular functions on the chart.
  bool regular() const;
  /// Arrows whose label does not vanish at the torus-fixed point of the chart.
  std::vector<std::size_t> surviving_at_origin() const;
};

QuiverRep quiver(const Fan& fan, const GroupData& group, const ReductorSet& set, std::size_t cone);

struct Equivalence {
  /// The chi_0-divisor N with D'_chi - D_chi = N for every chi.
  GWeilDivisor shift;
  /// m with (x^m) = N when the families are isomorphic.
  std::optional<IntVector> isomorphism;
};

std::optional<Equivalence> equivalence_witness(const Fan& fan, const GroupData& group, const ReductorSet& first,
                                               const ReductorSet& second);

}  // namespace gorbit
