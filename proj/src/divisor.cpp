#include "toric/divisor.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace toric {

namespace {

// Calls f(indices) for every k-subset of {0..n-1}, in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Checks the outside-ray inequality on every cone; strict selects > over >=.
bool outside_rays_satisfy(const SupportFunction& phi, bool strict) {
  const Fan& fan = phi.fan();
  for (std::size_t c = 0; c < fan.maximal_cones().size(); ++c) {
    const Cone& cone = fan.maximal_cone(c);
    for (std::size_t i = 0; i < fan.rays().size(); ++i) {
      if (cone.has(i)) continue;
      const Integer lhs = dot(phi.cartier(c), fan.ray(i));
      const Integer rhs = -phi.divisor()[i];
      if (strict ? !(lhs > rhs) : !(lhs >= rhs)) return false;
    }
  }
  return true;
}

}  // namespace

TorusDivisor::TorusDivisor(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
}

TorusDivisor TorusDivisor::operator+(const TorusDivisor& o) const {
  if (o.size() != size()) throw DimensionMismatch("TorusDivisor +: size mismatch");
  std::vector<Integer> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = coeffs_[i] + o.coeffs_[i];
  return TorusDivisor(std::move(out));
}

TorusDivisor TorusDivisor::scaled(const Integer& k) const {
  std::vector<Integer> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = coeffs_[i] * k;
  return TorusDivisor(std::move(out));
}

SupportFunction::SupportFunction(Fan fan, TorusDivisor divisor, std::vector<LatticeVector> cartier)
    : fan_(std::move(fan)), divisor_(std::move(divisor)), cartier_(std::move(cartier)) {
  if (divisor_.size() != fan_.rays().size())
    throw DimensionMismatch("divisor has " + std::to_string(divisor_.size()) +
                            " coefficients for " + std::to_string(fan_.rays().size()) + " rays");
  if (cartier_.size() != fan_.maximal_cones().size())
    throw DimensionMismatch("Cartier data count does not match maximal cones");
  for (std::size_t c = 0; c < cartier_.size(); ++c)
    for (auto i : fan_.maximal_cone(c).generators)
      if (dot(cartier_[c], fan_.ray(i)) != -divisor_[i])
        throw DimensionMismatch("Cartier datum of cone " + std::to_string(c) +
                                " does not realize the divisor");
}

SupportFunction cartier_data(const Fan& fan, const TorusDivisor& divisor) {
  if (divisor.size() != fan.rays().size())
    throw DimensionMismatch("divisor has " + std::to_string(divisor.size()) +
                            " coefficients for " + std::to_string(fan.rays().size()) + " rays");
  std::vector<LatticeVector> cartier;
  for (const auto& cone : fan.maximal_cones()) {
    std::vector<Integer> rhs;
    for (auto i : cone.generators) rhs.push_back(-divisor[i]);
    cartier.push_back(solve_integer(fan.generator_matrix(cone), LatticeVector(std::move(rhs))));
  }
  return SupportFunction(fan, divisor, std::move(cartier));
}

Rational support_value(const SupportFunction& phi, const RationalVector& u) {
  const auto c = locate(phi.fan(), u);
  if (!c) throw OutsideSupport("support_value: " + u.str() + " lies in no maximal cone");
  return dot(phi.cartier(*c), u);
}

bool is_convex(const SupportFunction& phi) { return outside_rays_satisfy(phi, false); }

bool is_strictly_convex(const SupportFunction& phi) { return outside_rays_satisfy(phi, true); }

bool is_basepoint_free(const SupportFunction& phi) { return is_convex(phi); }

bool is_ample(const SupportFunction& phi) { return is_strictly_convex(phi); }

bool is_very_ample(const SupportFunction& phi) { return is_ample(phi); }

int affine_dimension(std::span<const LatticeVector> points) {
  if (points.empty()) return -1;
  std::vector<LatticeVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return static_cast<int>(rank(std::span<const LatticeVector>(diffs)));
}

SectionPolytope::SectionPolytope(std::vector<LatticeVector> normals, std::vector<Integer> offsets)
    : normals_(std::move(normals)), offsets_(std::move(offsets)) {
  if (normals_.empty()) throw DimensionMismatch("SectionPolytope: no inequalities");
  if (normals_.size() != offsets_.size())
    throw DimensionMismatch("SectionPolytope: normals/offsets size mismatch");
  dim_ = normals_.front().dim();
  for (const auto& v : normals_)
    if (v.dim() != dim_) throw DimensionMismatch("SectionPolytope: mixed normal dimensions");

  // Bounded iff the recession cone {r : <r, v_i> >= 0} is {0}. With full-rank
  // normals that cone is pointed, so it is nonzero iff it has an extreme ray,
  // which lies on n-1 independent tight constraints.
  std::vector<RationalVector> rows(normals_.begin(), normals_.end());
  bounded_ = rank(std::span<const RationalVector>(rows)) == dim_;
  if (bounded_) {
    for_each_subset(normals_.size(), dim_ - 1, [&](std::span<const std::size_t> idx) {
      if (!bounded_) return;
      std::vector<RationalVector> tight;
      for (auto i : idx) tight.push_back(rows[i]);
      const auto ker = kernel(tight, dim_);
      if (ker.size() != 1) return;
      for (const auto& r : {ker.front(), ker.front().scaled(-1)}) {
        const bool recedes = std::all_of(rows.begin(), rows.end(),
                                         [&](const RationalVector& v) { return dot(v, r) >= 0; });
        if (recedes) bounded_ = false;
      }
    });
  }

  // Vertex enumeration from the H-representation: solve every n-subset of
  // tight constraints and keep the feasible solutions.
  std::set<RationalVector> found;
  for_each_subset(normals_.size(), dim_, [&](std::span<const std::size_t> idx) {
    std::vector<LatticeVector> cols;  // columns of the tight-constraint matrix
    IntMatrix n_sub(dim_, dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) n_sub(r, c) = normals_[idx[r]][c];
    if (det(n_sub) == 0) return;
    for (std::size_t c = 0; c < dim_; ++c) {
      std::vector<Integer> col(dim_);
      for (std::size_t r = 0; r < dim_; ++r) col[r] = n_sub(r, c);
      cols.emplace_back(std::move(col));
    }
    std::vector<Rational> rhs(dim_);
    for (std::size_t r = 0; r < dim_; ++r) rhs[r] = -offsets_[idx[r]];
    const auto x = coordinates_in_span(cols, RationalVector(std::move(rhs)));
    if (x && contains(*x)) found.insert(*x);
  });
  hrep_vertices_.assign(found.begin(), found.end());
}

bool SectionPolytope::contains(const LatticeVector& m, const Integer& d) const {
  if (m.dim() != dim_) throw DimensionMismatch("SectionPolytope::contains");
  for (std::size_t i = 0; i < normals_.size(); ++i)
    if (dot(m, normals_[i]) < -d * offsets_[i]) return false;
  return true;
}

bool SectionPolytope::contains(const RationalVector& m, const Integer& d) const {
  if (m.dim() != dim_) throw DimensionMismatch("SectionPolytope::contains");
  for (std::size_t i = 0; i < normals_.size(); ++i)
    if (dot(normals_[i], m) < Rational(-d * offsets_[i])) return false;
  return true;
}

std::span<const LatticeVector> SectionPolytope::vertices() const {
  if (!vertices_) throw VerticesUnavailable("divisor is not basepoint-free; P_D has no Cartier vertices");
  return *vertices_;
}

SectionPolytope polytope(const SupportFunction& phi) {
  std::vector<LatticeVector> normals(phi.fan().rays().begin(), phi.fan().rays().end());
  std::vector<Integer> offsets(phi.divisor().coeffs().begin(), phi.divisor().coeffs().end());
  SectionPolytope p(std::move(normals), std::move(offsets));
  if (is_convex(phi)) {
    std::set<LatticeVector> distinct(phi.cartier().begin(), phi.cartier().end());
    std::vector<LatticeVector> verts(distinct.begin(), distinct.end());
    p.affine_dim_ = affine_dimension(verts);
    p.vertices_ = std::move(verts);
  }
  return p;
}

}  // namespace toric
