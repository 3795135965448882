#pragma once

// Exact integer and rational arithmetic plus the small amount of dense
// linear algebra the toric computations need.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gorbit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

Integer numerator(const Rational& q);
Integer denominator(const Rational& q);

/// Largest integer <= q.
Integer floor(const Rational& q);
/// Smallest integer >= q.
Integer ceil(const Rational& q);
/// q - floor(q), always in [0, 1).
Rational frac(const Rational& q);
bool is_integer(const Rational& q);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
/// Accepts "p", "-p", "p/q"; throws InvalidInput otherwise.
Rational parse_rational(std::string_view text);

Rational dot(std::span<const Rational> a, std::span<const Integer> b);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

RatVector to_rational(std::span<const Integer> v);
/// Throws Error if some entry is not an integer.
IntVector to_integer(std::span<const Rational> v);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Dense row-major matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  explicit RatMatrix(std::vector<RatVector> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector column(std::size_t c) const;
  RatMatrix transposed() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational det(const RatMatrix& m);
/// Throws SingularMatrix when det(m) == 0.
RatMatrix invert(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<RatVector> null_space(const RatMatrix& m);

/// Row-style Hermite normal form of an integer matrix; zero rows are dropped.
std::vector<IntVector> hermite_normal_form(std::vector<IntVector> rows);

}  // namespace gorbit
