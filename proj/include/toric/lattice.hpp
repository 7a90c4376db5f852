#pragma once

// Exact integer and rational linear algebra for small lattices.
//
// Everything here is arbitrary precision (GMP through boost::multiprecision).
// Matrices are tiny (ambient dimension <= 4 in practice), so the algorithms
// favour exactness and simplicity: fraction-free elimination for determinants
// and unimodular solves, rational row reduction for ranks and kernels, and
// brute-force circuit enumeration for cone questions.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// A point of Z^n. Immutable once built.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t dim);
  explicit LatticeVector(std::vector<Integer> coords);
  LatticeVector(std::initializer_list<long> coords);

  std::size_t dim() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Integer> coords() const { return coords_; }

  /// Set only by primitive_reduce(); certifies gcd 1 and nonzero.
  bool is_primitive() const { return primitive_; }
  bool is_zero() const;

  LatticeVector operator+(const LatticeVector& o) const;
  LatticeVector operator-(const LatticeVector& o) const;
  LatticeVector operator-() const;
  LatticeVector scaled(const Integer& k) const;

  /// Equality and ordering ignore the primitive flag. Ordering is lexicographic.
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const LatticeVector& a, const LatticeVector& b);

  std::string str() const;

 private:
  std::vector<Integer> coords_;
  bool primitive_ = false;

  friend LatticeVector primitive_reduce(const LatticeVector& v);
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

/// A point of Q^n; denominators are kept positive and reduced by GMP.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t dim);
  explicit RationalVector(std::vector<Rational> coords);
  explicit RationalVector(const LatticeVector& v);
  RationalVector(std::initializer_list<Rational> coords);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }
  bool is_zero() const;
  bool is_integral() const;

  RationalVector operator+(const RationalVector& o) const;
  RationalVector operator-(const RationalVector& o) const;
  RationalVector scaled(const Rational& k) const;

  friend bool operator==(const RationalVector& a, const RationalVector& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const RationalVector& a, const RationalVector& b);

  std::string str() const;

 private:
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const RationalVector& v);

/// Dense row-major integer matrix with fixed shape.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix from_rows(std::span<const LatticeVector> rows);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  LatticeVector row(std::size_t r) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

Integer dot(const LatticeVector& a, const LatticeVector& b);
Rational dot(const LatticeVector& a, const RationalVector& b);
Rational dot(const RationalVector& a, const RationalVector& b);

/// Divides by the gcd of the entries. Throws ZeroVector for the zero vector.
LatticeVector primitive_reduce(const LatticeVector& v);

/// Exact determinant by Bareiss fraction-free elimination. Throws NotSquare.
Integer det(const IntMatrix& m);

/// Unique integer x with M x = b for unimodular M, via fraction-free
/// Gauss-Jordan elimination. Throws NotSquare, DimensionMismatch, or
/// NotUnimodular when |det M| != 1.
LatticeVector solve_integer(const IntMatrix& m, const LatticeVector& b);

// Rational helpers used by the polyhedral modules. Vectors are passed as
// rows or columns as named; all inputs must share one dimension.

/// Rank of the span of the given vectors.
std::size_t rank(std::span<const RationalVector> vectors);
std::size_t rank(std::span<const LatticeVector> vectors);

/// Basis of {x : <r, x> = 0 for every row r}, in ambient dimension `dim`.
std::vector<RationalVector> kernel(std::span<const RationalVector> rows, std::size_t dim);

/// Coefficients c with sum_k c_k * columns[k] = target, when the columns are
/// linearly independent and target lies in their span; nullopt otherwise.
std::optional<RationalVector> coordinates_in_span(std::span<const LatticeVector> columns,
                                                  const RationalVector& target);

/// All minimal nonnegative dependencies among the columns: vectors c >= 0,
/// c != 0, sum c_k columns[k] = 0, with inclusion-minimal support. These are
/// the extreme rays of {c >= 0 : C c = 0}. Each is scaled to a primitive
/// integer vector. Exponential in the column count; meant for <= ~12 columns.
std::vector<LatticeVector> nonnegative_circuits(std::span<const LatticeVector> columns);

/// Whether target is a nonnegative combination of the generators (exact,
/// Caratheodory enumeration over independent subsets).
bool in_cone(std::span<const LatticeVector> generators, const RationalVector& target);

/// Scales a nonzero rational vector to the primitive integer vector on its ray.
LatticeVector primitive_on_ray(const RationalVector& v);

}  // namespace toric
