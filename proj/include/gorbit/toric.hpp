#pragma once

#include "gorbit/group.hpp"
#include "gorbit/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gorbit {

class NotBasic : public Error {
 public:
  using Error::Error;
};

/// The overlattice L of (Z^n)^dual generated by the group elements, in
/// standard coordinates. Every point of L is a coset representative in
/// [0,1)^n plus an integer vector.
class Lattice {
 public:
  /// L = (Z^n)^dual + sum_j Z * (1/d_j) W_j.
  static Lattice from_group(const GroupData& group);

  std::size_t dimension() const { return basis_.rows(); }
  /// Rows generate L.
  const RatMatrix& basis() const { return basis_; }
  /// [L : (Z^n)^dual].
  const Integer& index() const { return index_; }
  /// |det(basis)| = 1 / index.
  Rational covolume() const { return Rational(1, index_); }
  /// Distinct representatives of L / (Z^n)^dual inside [0,1)^n, sorted.
  const std::vector<RatVector>& cosets() const { return cosets_; }

  bool contains(std::span<const Rational> v) const;
  /// Coordinates of v in the lattice basis (integral iff v is in L).
  RatVector coordinates(std::span<const Rational> v) const;
  /// No smaller positive multiple of v lies in L.
  bool is_primitive(std::span<const Rational> v) const;

 private:
  RatMatrix basis_;
  RatMatrix inverse_;
  Integer index_ = 1;
  std::vector<RatVector> cosets_;
};

/// A maximal cone, as indices into Fan::rays().
struct Cone {
  std::vector<std::size_t> rays;
  friend bool operator==(const Cone&, const Cone&) = default;
};

/// A simplicial fan in L subdividing the positive orthant. Construction
/// checks structure (dimensions, indices, ray membership in L); the
/// geometric checks live in validate_fan. Ray i is reported as E_{i+1}.
class Fan {
 public:
  Fan(Lattice lattice, std::vector<RatVector> rays, std::vector<Cone> cones);

  const Lattice& lattice() const { return lattice_; }
  std::size_t dimension() const { return lattice_.dimension(); }
  const std::vector<RatVector>& rays() const { return rays_; }
  const RatVector& ray(std::size_t i) const { return rays_.at(i); }
  const std::vector<Cone>& cones() const { return cones_; }
  const Cone& cone(std::size_t k) const { return cones_.at(k); }

  /// Index of the cone whose ray set equals `ray_indices` (any order).
  std::optional<std::size_t> find_cone(std::vector<std::size_t> ray_indices) const;
  /// Indices of the cones containing ray i.
  std::vector<std::size_t> cones_containing(std::size_t ray_index) const;

  static std::string ray_name(std::size_t ray_index) { return "E" + std::to_string(ray_index + 1); }

 private:
  Lattice lattice_;
  std::vector<RatVector> rays_;
  std::vector<Cone> cones_;
};

/// e(m) for e in L and a Laurent exponent m.
Rational pairing(std::span<const Rational> e, std::span<const Integer> m);

/// Dual basis of a basic cone: entry j is the integer vector with
/// e_i(result[j]) = delta_ij for the cone's rays e_i, in cone order.
/// Throws NotBasic unless |det| equals the covolume of L.
std::vector<IntVector> dual_basis(const Fan& fan, const Cone& cone);
std::vector<IntVector> dual_basis(const Lattice& lattice, const std::vector<RatVector>& rays);

/// Points of L with nonnegative coordinates summing to 1, including the unit vectors.
std::vector<RatVector> junior_simplex(const Lattice& lattice);

/// Coordinate sum minus one.
Rational discrepancy(std::span<const Rational> e);

/// Smallest c > 0 with c * (unit vector on `axis`) in L; the valuation of
/// x_axis along the image in X of the hyperplane x_axis = 0.
Rational x_valuation_on_X(const Lattice& lattice, std::size_t axis);

/// Rays coincide (as a set) with the junior simplex.
bool is_crepant(const Fan& fan);

struct FanReport {
  struct ConeCheck {
    std::size_t cone;
    Rational det;
    bool basic;
  };
  struct Overlap {
    std::size_t first;
    std::size_t second;
  };

  std::vector<ConeCheck> cones;
  std::vector<std::size_t> rays_outside_orthant;
  std::vector<std::size_t> rays_not_primitive;
  std::vector<std::size_t> rays_without_cone;
  std::vector<Overlap> overlaps;
  /// Sum over cones of the normalized volume of their radial projection onto
  /// the standard simplex; the fan covers the orthant iff this is 1 (given no
  /// overlaps). Empty when some cone is degenerate.
  std::optional<Rational> covered_volume;
  std::vector<std::string> warnings;

  bool all_basic() const;
  bool covers() const { return covered_volume && *covered_volume == 1; }
  bool ok() const;
};

FanReport validate_fan(const Fan& fan);

/// Extreme rays of the intersection of two simplicial cones, computed
/// exactly by enumerating (n-1)-subsets of the facet inequalities.
std::vector<RatVector> intersection_rays(const std::vector<RatVector>& first, const std::vector<RatVector>& second);

}  // namespace gorbit
