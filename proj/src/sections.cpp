#include "toric/sections.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace toric {

namespace {

Integer floor_of(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);
  Integer r = n / d;  // truncates toward zero
  if (n % d != 0 && n < 0) r -= 1;
  return r;
}

Integer ceil_of(const Rational& q) { return -floor_of(-q); }

// Visits every integer point of the box [lo, hi] in lexicographic order.
void for_each_box_point(const std::vector<Integer>& lo, const std::vector<Integer>& hi,
                        const std::function<void(const LatticeVector&)>& f) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;
  std::vector<Integer> cur = lo;
  while (true) {
    f(LatticeVector(cur));
    std::size_t i = n;
    while (true) {
      if (i == 0) return;
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < n; ++j) cur[j] = lo[j];
        break;
      }
    }
  }
}

// Bounding box of a nonempty set of rational points.
std::pair<std::vector<Integer>, std::vector<Integer>> bounding_box(
    std::span<const RationalVector> pts) {
  const std::size_t n = pts.front().dim();
  std::vector<Integer> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn = pts.front()[i], mx = pts.front()[i];
    for (const auto& p : pts) {
      mn = std::min(mn, p[i]);
      mx = std::max(mx, p[i]);
    }
    lo[i] = ceil_of(mn);
    hi[i] = floor_of(mx);
  }
  return {lo, hi};
}

LatticeVector lift(const LatticeVector& m, unsigned d) {
  std::vector<Integer> c(m.coords().begin(), m.coords().end());
  c.emplace_back(d);
  return LatticeVector(std::move(c));
}

}  // namespace

std::vector<LatticeVector> lattice_points(const SectionPolytope& p, unsigned d) {
  if (!p.bounded()) throw Unbounded("lattice_points: polytope has a recession direction");
  if (d == 0) return {LatticeVector(p.ambient_dim())};
  if (p.empty()) return {};
  std::vector<RationalVector> scaled;
  for (const auto& v : p.hrep_vertices()) scaled.push_back(v.scaled(d));
  const auto [lo, hi] = bounding_box(scaled);
  std::vector<LatticeVector> out;
  const Integer dd = d;
  for_each_box_point(lo, hi, [&](const LatticeVector& m) {
    if (p.contains(m, dd)) out.push_back(m);
  });
  return out;
}

std::vector<std::pair<unsigned, std::size_t>> section_count_table(const SectionPolytope& p,
                                                                  unsigned d_max) {
  std::vector<std::pair<unsigned, std::size_t>> out;
  for (unsigned d = 0; d <= d_max; ++d) out.emplace_back(d, lattice_points(p, d).size());
  return out;
}

const std::vector<LatticeVector>& LatticePointCache::points(unsigned d) const {
  {
    std::shared_lock lock(mutex_);
    auto it = by_degree_.find(d);
    if (it != by_degree_.end()) return it->second;
  }
  auto pts = lattice_points(polytope_, d);
  std::unique_lock lock(mutex_);
  return by_degree_.try_emplace(d, std::move(pts)).first->second;
}

// ------------------------------------------------------------------ LiftedCone

LiftedCone::LiftedCone(SupportFunction source) : source_(std::move(source)) {
  const Fan& fan = source_.fan();
  const std::size_t n = fan.dim();
  LatticeVector up(n + 1);
  {
    std::vector<Integer> c(n + 1);
    c[n] = 1;
    up = LatticeVector(std::move(c));
  }
  generators_.push_back(primitive_reduce(up));
  for (std::size_t i = 0; i < fan.rays().size(); ++i) {
    std::vector<Integer> c(fan.ray(i).coords().begin(), fan.ray(i).coords().end());
    c.push_back(source_.divisor()[i]);
    generators_.push_back(primitive_reduce(LatticeVector(std::move(c))));
  }

  for (std::size_t k = 0; k < generators_.size(); ++k) {
    std::vector<LatticeVector> others;
    for (std::size_t j = 0; j < generators_.size(); ++j)
      if (j != k) others.push_back(generators_[j]);
    redundant_.push_back(in_cone(others, RationalVector(generators_[k])));
  }
  strongly_convex_ = nonnegative_circuits(generators_).empty();

  // Facets: hyperplanes spanned by n generators with every generator on one side.
  const std::size_t dim = n + 1;
  std::set<LatticeVector> normals;
  const std::size_t g = generators_.size();
  std::vector<std::size_t> idx(n);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t depth) {
    if (depth == n) {
      std::vector<RationalVector> rows;
      for (auto i : idx) rows.emplace_back(generators_[i]);
      const auto ker = kernel(rows, dim);
      if (ker.size() != 1) return;
      auto normal = primitive_on_ray(ker.front());
      bool pos = false, neg = false;
      for (const auto& gen : generators_) {
        const Integer s = dot(normal, gen);
        pos = pos || s > 0;
        neg = neg || s < 0;
      }
      if (pos && neg) return;
      if (neg) normal = -normal;
      normals.insert(normal);
      return;
    }
    for (std::size_t i = start; i < g; ++i) {
      idx[depth] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
  dual_generators_.assign(normals.begin(), normals.end());
}

LiftedCone lifted_cone(const SupportFunction& phi) { return LiftedCone(phi); }

bool proper_faces_simplicial(const LiftedCone& cone) {
  if (!cone.strongly_convex()) return false;
  const auto gens = cone.generators();
  if (!cone.redundant(0)) return false;
  for (std::size_t k = 1; k < gens.size(); ++k)
    if (cone.redundant(k)) return false;
  for (const auto& f : cone.dual_generators()) {
    std::vector<LatticeVector> on_facet;
    for (const auto& g : gens)
      if (dot(f, g) == 0) on_facet.push_back(g);
    if (rank(std::span<const LatticeVector>(on_facet)) != on_facet.size()) return false;
  }
  return true;
}

namespace {

void check_against_polytope(const LiftedCone& cone, unsigned d, const std::vector<GradedMonomial>& out) {
  const auto expected = lattice_points(polytope(cone.source()), d);
  bool same = expected.size() == out.size();
  for (std::size_t i = 0; same && i < out.size(); ++i) same = out[i].exponent == expected[i];
  if (!same) {
    throw ConventionMismatch("graded_slice: degree " + std::to_string(d) + " slice has " +
                             std::to_string(out.size()) + " monomials but d*P_D has " +
                             std::to_string(expected.size()) + " lattice points");
  }
}

}  // namespace

std::vector<GradedMonomial> graded_slice(const LiftedCone& cone, unsigned d) {
  const std::size_t n = cone.ambient_dim() - 1;
  const auto duals = cone.dual_generators();
  std::vector<GradedMonomial> out;
  if (duals.empty()) {
    // C_phi is all of R^(n+1): the dual semigroup is {0}.
    if (d == 0) out.push_back({0, LatticeVector(n)});
    check_against_polytope(cone, d, out);
    return out;
  }
  std::vector<RationalVector> corners;
  for (const auto& u : duals) {
    const Integer& t = u[n];
    if (t == 0) throw Unbounded("graded_slice: dual cone has a degree-0 ray " + u.str());
    std::vector<Rational> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = Rational(u[i] * d) / Rational(t);
    corners.emplace_back(std::move(m));
  }
  const auto [lo, hi] = bounding_box(corners);
  for_each_box_point(lo, hi, [&](const LatticeVector& m) {
    const auto lifted = lift(m, d);
    for (const auto& g : cone.generators())
      if (dot(lifted, g) < 0) return;
    out.push_back({d, m});
  });

  check_against_polytope(cone, d, out);
  return out;
}

std::vector<GradedMonomial> semigroup_generators_up_to(const LiftedCone& cone, unsigned d_max) {
  std::vector<std::set<LatticeVector>> slice(d_max + 1);
  for (unsigned d = 1; d <= d_max; ++d)
    for (auto& mono : graded_slice(cone, d)) slice[d].insert(mono.exponent);

  std::vector<GradedMonomial> gens;
  for (unsigned d = 1; d <= d_max; ++d) {
    for (const auto& x : slice[d]) {
      bool reducible = false;
      for (unsigned e = 1; e <= d / 2 && !reducible; ++e) {
        for (const auto& y : slice[e]) {
          if (slice[d - e].count(x - y)) {
            reducible = true;
            break;
          }
        }
      }
      if (!reducible) gens.push_back({d, x});
    }
  }
  return gens;
}

std::vector<LatticeVector> vertex_chart_generators(const SectionPolytope& p, const Fan& fan,
                                                   const Cone& sigma) {
  if (p.normals().size() != fan.rays().size())
    throw DimensionMismatch("vertex_chart_generators: polytope and fan disagree on rays");
  for (std::size_t i = 0; i < fan.rays().size(); ++i)
    if (!(p.normals()[i] == fan.ray(i)))
      throw DimensionMismatch("vertex_chart_generators: polytope normals are not the fan rays");

  const IntMatrix g = fan.generator_matrix(sigma);
  std::vector<Integer> rhs;
  for (auto i : sigma.generators) rhs.push_back(-p.offsets()[i]);
  const LatticeVector m_sigma = solve_integer(g, LatticeVector(std::move(rhs)));

  std::vector<LatticeVector> shifted;
  for (const auto& m : lattice_points(p, 1)) shifted.push_back(m - m_sigma);

  const auto gens = fan.generators(sigma);
  auto in_dual = [&](const LatticeVector& w) {
    return std::all_of(gens.begin(), gens.end(), [&](const LatticeVector& v) { return dot(w, v) >= 0; });
  };
  std::vector<LatticeVector> steps;
  for (const auto& w : shifted)
    if (!w.is_zero() && in_dual(w)) steps.push_back(w);

  // Representability in the monoid generated by `steps`; each step strictly
  // lowers <t, sum of generators>, so the recursion terminates.
  std::map<LatticeVector, bool> memo;
  std::function<bool(const LatticeVector&)> representable = [&](const LatticeVector& t) -> bool {
    if (t.is_zero()) return true;
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& w : steps) {
      const auto rest = t - w;
      if (in_dual(rest) && representable(rest)) {
        ok = true;
        break;
      }
    }
    memo[t] = ok;
    return ok;
  };

  const std::size_t n = fan.dim();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Integer> e(n);
    e[j] = 1;
    const auto u = solve_integer(g, LatticeVector(std::move(e)));
    if (!representable(u)) {
      throw GenerationFailure("vertex_chart_generators: dual basis vector " + u.str() +
                              " of the cone at vertex " + m_sigma.str() +
                              " is not generated by P ∩ M - m_sigma");
    }
  }
  return shifted;
}

bool very_ample_certified(const SupportFunction& phi) {
  if (!is_basepoint_free(phi)) return false;
  const auto p = polytope(phi);
  try {
    for (const auto& c : phi.fan().maximal_cones()) vertex_chart_generators(p, phi.fan(), c);
  } catch (const GenerationFailure&) {
    return false;
  }
  return true;
}

}  // namespace toric
