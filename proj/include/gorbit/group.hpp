#pragma once

#include "gorbit/rational.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gorbit {

/// Element of the character group, stored as residues modulo the cyclic orders.
class Character {
 public:
  Character() = default;
  explicit Character(std::vector<std::int64_t> residues) : residues_(std::move(residues)) {}

  const std::vector<std::int64_t>& residues() const { return residues_; }

  friend auto operator<=>(const Character&, const Character&) = default;
  friend bool operator==(const Character&, const Character&) = default;

 private:
  std::vector<std::int64_t> residues_;
};

/// A finite abelian group acting diagonally on C^n, given as a product of
/// cyclic factors Z/d_j with weight matrix W (row j = weights of x_1..x_n
/// in factor j). The action must be faithful: the weights of the coordinate
/// monomials generate the whole character group.
class GroupData {
 public:
  GroupData(std::vector<std::int64_t> orders, std::vector<std::vector<std::int64_t>> weight_matrix);

  /// The shorthand 1/r(a_1, ..., a_n).
  static GroupData cyclic(std::int64_t order, std::vector<std::int64_t> weights);
  static GroupData trivial(std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  std::size_t order() const { return order_; }
  const std::vector<std::int64_t>& orders() const { return orders_; }
  const std::vector<std::vector<std::int64_t>>& weight_matrix() const { return weights_; }
  bool is_cyclic() const { return orders_.size() == 1; }
  /// True when every group element has determinant 1.
  bool in_sl() const;

  Character trivial_character() const;
  Character weight(std::span<const Integer> exponent) const;
  /// Weight of the coordinate monomial x_axis.
  const Character& generator_weight(std::size_t axis) const { return generator_weights_[axis]; }

  Character multiply(const Character& a, const Character& b) const;
  Character inverse(const Character& a) const;
  Character power(const Character& a, std::int64_t k) const;

  /// All |G| characters ordered by residue tuple.
  std::vector<Character> characters() const;
  /// Position of chi in characters().
  std::size_t index(const Character& chi) const;
  const Character& character(std::size_t index) const { return all_[index]; }

  /// Index of chi * weight(x_axis), precomputed.
  std::size_t step(std::size_t chi_index, std::size_t axis) const { return steps_[chi_index * dimension_ + axis]; }

  /// A monomial exponent m >= 0 of weight chi, of minimal total degree, found
  /// by breadth-first search over the Cayley graph of the generators.
  IntVector representative_monomial(const Character& chi) const;
  const IntVector& representative(std::size_t chi_index) const { return representatives_[chi_index]; }

  /// Group elements, as exponent tuples over the cyclic factors, in the same
  /// mixed-radix order used for characters.
  std::vector<std::vector<std::int64_t>> elements() const;

  /// "chi_k" for cyclic groups, "chi(a,b,...)" otherwise.
  std::string name(const Character& chi) const;
  /// Inverse of name(); also accepts a bare integer k for cyclic groups and
  /// a comma-separated residue list.
  Character parse_character(const std::string& text) const;
  void check(const Character& chi) const;

  friend bool operator==(const GroupData& a, const GroupData& b) {
    return a.orders_ == b.orders_ && a.weights_ == b.weights_;
  }

 private:
  std::vector<std::int64_t> orders_;
  std::vector<std::vector<std::int64_t>> weights_;
  std::size_t dimension_ = 0;
  std::size_t order_ = 1;
  std::vector<Character> all_;
  std::vector<Character> generator_weights_;
  std::vector<std::size_t> steps_;
  std::vector<IntVector> representatives_;
};

}  // namespace gorbit
