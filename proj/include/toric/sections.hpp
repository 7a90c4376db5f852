#pragma once

// Monomial bases of Gamma(X, O(dD)), the lifted cone C_phi, and the graded
// section ring R_D viewed as the semigroup ring of the dual cone.
//
// Orientation of the lifted cone. The generators are stored as
//
//     (0, ..., 0, 1)   and   (v_i, a_i)   for every ray v_i,
//
// i.e. C_phi = {(x, t) : t >= -phi_D(x)} for convex phi_D. With this
// orientation (m, d) lies in the dual cone exactly when d >= 0 and
// <m, v_i> >= -d a_i for all i, so the degree-d slice of the dual semigroup is
// d P_D ∩ M. graded_slice() re-checks that bijection on every call.

#include <cstddef>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "toric/divisor.hpp"

namespace toric {

struct GradedMonomial {
  unsigned degree = 0;
  LatticeVector exponent;

  friend bool operator==(const GradedMonomial&, const GradedMonomial&) = default;
  friend bool operator<(const GradedMonomial& a, const GradedMonomial& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.exponent < b.exponent;
  }
};

/// All m in Z^n with <m, v_i> >= -d a_i, in lexicographic order.
/// Throws Unbounded if the polytope is unbounded.
std::vector<LatticeVector> lattice_points(const SectionPolytope& p, unsigned d);

/// (d, |d P ∩ M|) for d = 0..d_max.
std::vector<std::pair<unsigned, std::size_t>> section_count_table(const SectionPolytope& p,
                                                                  unsigned d_max);

/// Read-shared cache of lattice_points() keyed by degree, for one polytope.
class LatticePointCache {
 public:
  explicit LatticePointCache(SectionPolytope p) : polytope_(std::move(p)) {}

  const SectionPolytope& polytope() const { return polytope_; }
  /// The returned reference stays valid for the cache's lifetime.
  const std::vector<LatticeVector>& points(unsigned d) const;

 private:
  SectionPolytope polytope_;
  mutable std::shared_mutex mutex_;
  mutable std::map<unsigned, std::vector<LatticeVector>> by_degree_;
};

class LiftedCone {
 public:
  explicit LiftedCone(SupportFunction source);

  const SupportFunction& source() const { return source_; }
  std::size_t ambient_dim() const { return source_.fan().dim() + 1; }
  /// generators()[0] is (0, ..., 0, 1); generators()[1 + i] is (v_i, a_i).
  std::span<const LatticeVector> generators() const { return generators_; }
  /// Generators that are nonnegative combinations of the others.
  bool redundant(std::size_t k) const { return redundant_[k]; }
  /// False when the cone contains a line.
  bool strongly_convex() const { return strongly_convex_; }

  /// Facet normals (primitive, pointing into the cone): the generators of the
  /// dual cone. Sorted.
  std::span<const LatticeVector> dual_generators() const { return dual_generators_; }

 private:
  SupportFunction source_;
  std::vector<LatticeVector> generators_;
  std::vector<bool> redundant_;
  bool strongly_convex_ = false;
  std::vector<LatticeVector> dual_generators_;
};

LiftedCone lifted_cone(const SupportFunction& phi);

/// True iff the cone is pointed, every (v_i, a_i) is an extreme ray, (0, 1)
/// is not, and every facet's generator set is linearly independent (so every
/// proper face is simplicial). A cone containing a line returns false: its
/// minimal face is the lineality space, which is not simplicial.
bool proper_faces_simplicial(const LiftedCone& cone);

/// Degree-d lattice points of the dual cone, enumerated from the dual
/// generators alone, then checked against lattice_points(P_D, d). Throws
/// ConventionMismatch if they differ, Unbounded if the slice is unbounded.
std::vector<GradedMonomial> graded_slice(const LiftedCone& cone, unsigned d);

/// Minimal generators among graded monomials of degree 1..d_max: those not
/// expressible as a sum of two monomials of positive degree. Evidence only;
/// says nothing about degrees above d_max.
std::vector<GradedMonomial> semigroup_generators_up_to(const LiftedCone& cone, unsigned d_max);

/// {m - m_sigma : m ∈ P ∩ M} for the maximal cone sigma, after checking that
/// the dual basis of sigma lies in the semigroup they generate. Throws
/// GenerationFailure naming the first dual-basis vector that is missed.
std::vector<LatticeVector> vertex_chart_generators(const SectionPolytope& p, const Fan& fan,
                                                   const Cone& sigma);

/// Runs vertex_chart_generators on every maximal cone; false on any failure
/// or when phi is not basepoint-free.
bool very_ample_certified(const SupportFunction& phi);

}  // namespace toric
