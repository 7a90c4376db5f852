#pragma once

// Torus-invariant divisors D = sum a_i D_i, their support functions, and the
// polytope of sections P_D.
//
// Sign conventions. The support function satisfies phi_D(v_i) = -a_i and is
// linear on each maximal cone sigma, where it equals <m_sigma, .>. "Convex"
// follows the min-of-linear-functions convention:
//
//     phi(t u + (1 - t) v) >= t phi(u) + (1 - t) phi(v),
//
// so a convex phi_D is min_sigma <m_sigma, .>. The growth majorant psi used by
// the numerics is the opposite, sup-convention support function of P_D; it
// lives in toric/lelong and never shares code paths with phi_D.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// Integer coefficients a_i, one per ray of the fan.
class TorusDivisor {
 public:
  TorusDivisor() = default;
  explicit TorusDivisor(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}
  TorusDivisor(std::initializer_list<long> coeffs);

  std::size_t size() const { return coeffs_.size(); }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const Integer> coeffs() const { return coeffs_; }

  TorusDivisor operator+(const TorusDivisor& o) const;
  TorusDivisor scaled(const Integer& k) const;

  friend bool operator==(const TorusDivisor&, const TorusDivisor&) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// phi_D together with its Cartier data m_sigma, one per maximal cone.
class SupportFunction {
 public:
  SupportFunction(Fan fan, TorusDivisor divisor, std::vector<LatticeVector> cartier);

  const Fan& fan() const { return fan_; }
  const TorusDivisor& divisor() const { return divisor_; }
  std::span<const LatticeVector> cartier() const { return cartier_; }
  const LatticeVector& cartier(std::size_t cone) const { return cartier_[cone]; }

 private:
  Fan fan_;
  TorusDivisor divisor_;
  std::vector<LatticeVector> cartier_;
};

/// Solves <m_sigma, v_i> = -a_i on every maximal cone. The fan must be smooth
/// (NotUnimodular otherwise); DimensionMismatch if the coefficient count is wrong.
SupportFunction cartier_data(const Fan& fan, const TorusDivisor& divisor);

/// phi_D(u). Throws OutsideSupport if no maximal cone contains u.
Rational support_value(const SupportFunction& phi, const RationalVector& u);

/// Local criterion: <m_sigma, v_i> >= -a_i for every sigma and every ray
/// v_i outside sigma.
bool is_convex(const SupportFunction& phi);
/// As is_convex with strict inequality.
bool is_strictly_convex(const SupportFunction& phi);

bool is_basepoint_free(const SupportFunction& phi);
bool is_ample(const SupportFunction& phi);
/// Equal to is_ample on smooth complete fans. The independent certificate
/// (vertex-chart semigroup generation) is very_ample_certified() in
/// toric/sections.hpp.
bool is_very_ample(const SupportFunction& phi);

/// P_D = {m : <m, v_i> >= -a_i} with its vertex data.
class SectionPolytope {
 public:
  /// H-representation only; normals and offsets are aligned (<m, normal_i> >= -offset_i).
  SectionPolytope(std::vector<LatticeVector> normals, std::vector<Integer> offsets);

  std::size_t ambient_dim() const { return dim_; }
  std::span<const LatticeVector> normals() const { return normals_; }
  std::span<const Integer> offsets() const { return offsets_; }

  /// Whether m lies in d * P.
  bool contains(const LatticeVector& m, const Integer& d = 1) const;
  bool contains(const RationalVector& m, const Integer& d = 1) const;

  /// Vertices known from the Cartier data (basepoint-free divisors only).
  bool has_vertices() const { return vertices_.has_value(); }
  /// Throws VerticesUnavailable when the divisor is not basepoint-free.
  std::span<const LatticeVector> vertices() const;
  /// Affine dimension of the vertex set; -1 when vertices are unavailable
  /// or the polytope is empty.
  int dim() const { return affine_dim_; }

  /// Vertices recomputed from the H-representation alone (may be rational for
  /// non-basepoint-free divisors). Sorted, deduplicated.
  std::span<const RationalVector> hrep_vertices() const { return hrep_vertices_; }
  bool bounded() const { return bounded_; }
  bool empty() const { return bounded_ && hrep_vertices_.empty(); }

 private:
  friend SectionPolytope polytope(const SupportFunction& phi);

  std::size_t dim_ = 0;
  std::vector<LatticeVector> normals_;
  std::vector<Integer> offsets_;
  std::optional<std::vector<LatticeVector>> vertices_;
  int affine_dim_ = -1;
  std::vector<RationalVector> hrep_vertices_;
  bool bounded_ = false;
};

/// Builds P_D. For basepoint-free D the vertices are the distinct Cartier
/// data; otherwise only the H-representation is meaningful and vertices()
/// throws VerticesUnavailable.
SectionPolytope polytope(const SupportFunction& phi);

/// Affine rank of a point set (-1 for the empty set).
int affine_dimension(std::span<const LatticeVector> points);

}  // namespace toric
