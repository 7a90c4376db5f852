#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// A simplicial cone, stored as indices into its fan's ray list.
struct Cone {
  std::vector<std::size_t> generators;

  std::size_t dim() const { return generators.size(); }
  bool has(std::size_t ray) const;
};

/// A pure, simplicial fan in R^n given by primitive rays and maximal cones.
///
/// Construction validates: rays nonzero (they are reduced to primitive
/// generators), every maximal cone has exactly n linearly independent rays,
/// every ray is used, and every pair of maximal cones meets in their common
/// face. Violations throw FanInvalid naming the offending cone(s).
class Fan {
 public:
  Fan(std::vector<LatticeVector> rays, std::vector<Cone> maximal_cones);

  std::size_t dim() const { return dim_; }
  std::span<const LatticeVector> rays() const { return rays_; }
  const LatticeVector& ray(std::size_t i) const { return rays_[i]; }
  std::span<const Cone> maximal_cones() const { return cones_; }
  const Cone& maximal_cone(std::size_t i) const { return cones_[i]; }

  std::vector<LatticeVector> generators(const Cone& c) const;

  /// Matrix whose rows are the generators of c, in the cone's order.
  IntMatrix generator_matrix(const Cone& c) const;

 private:
  std::size_t dim_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<Cone> cones_;
};

/// Nonnegative-combination test against an explicit simplicial generator list.
bool cone_contains(std::span<const LatticeVector> generators, const RationalVector& u);
bool cone_contains(const Fan& fan, const Cone& c, const RationalVector& u);

bool is_smooth(const Fan& fan);

/// Facet-pairing criterion: every (n-1)-face of a maximal cone lies in
/// exactly two maximal cones.
bool is_complete(const Fan& fan);

struct FacetPair {
  std::size_t first;                  // maximal cone index
  std::optional<std::size_t> second;  // absent for an unmatched facet
  std::vector<std::size_t> facet;     // sorted ray indices
};

/// Each (n-1)-dimensional face listed once with the maximal cones containing it.
std::vector<FacetPair> facet_pairs(const Fan& fan);

/// Index of the first maximal cone containing u, if any.
std::optional<std::size_t> locate(const Fan& fan, const RationalVector& u);

}  // namespace toric
