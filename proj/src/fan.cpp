#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace toric {

namespace {

std::string cone_name(const Cone& c) {
  std::string s = "cone{";
  for (std::size_t i = 0; i < c.generators.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c.generators[i]);
  }
  return s + "}";
}

// sigma and tau meet in a common face iff every extreme ray of
// {(a, b) >= 0 : G a = H b} maps into the cone on the shared generators.
bool meet_in_common_face(const Fan& fan, const Cone& sigma, const Cone& tau) {
  std::vector<LatticeVector> cols;
  for (auto i : sigma.generators) cols.push_back(fan.ray(i));
  for (auto j : tau.generators) cols.push_back(-fan.ray(j));
  const std::size_t k = sigma.dim();
  for (const auto& circuit : nonnegative_circuits(cols)) {
    for (std::size_t a = 0; a < k; ++a) {
      if (circuit[a] != 0 && !tau.has(sigma.generators[a])) return false;
    }
  }
  return true;
}

}  // namespace

bool Cone::has(std::size_t ray) const {
  return std::find(generators.begin(), generators.end(), ray) != generators.end();
}

Fan::Fan(std::vector<LatticeVector> rays, std::vector<Cone> maximal_cones)
    : cones_(std::move(maximal_cones)) {
  if (rays.empty()) throw FanInvalid("fan has no rays");
  dim_ = rays.front().dim();
  if (dim_ == 0) throw FanInvalid("ambient dimension must be positive");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].dim() != dim_) throw FanInvalid("ray " + std::to_string(i) + " has wrong dimension");
    if (rays[i].is_zero()) throw FanInvalid("ray " + std::to_string(i) + " is zero");
    rays_.push_back(primitive_reduce(rays[i]));
  }
  for (std::size_t i = 0; i < rays_.size(); ++i)
    for (std::size_t j = i + 1; j < rays_.size(); ++j)
      if (rays_[i] == rays_[j])
        throw FanInvalid("rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

  if (cones_.empty()) throw FanInvalid("fan has no maximal cones");
  std::vector<bool> used(rays_.size(), false);
  for (const auto& c : cones_) {
    if (c.dim() != dim_) {
      throw FanInvalid(cone_name(c) + " has " + std::to_string(c.dim()) +
                       " generators; only pure simplicial fans of full dimension are supported");
    }
    for (auto g : c.generators) {
      if (g >= rays_.size()) throw FanInvalid(cone_name(c) + " references missing ray");
      used[g] = true;
    }
    auto sorted = c.generators;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw FanInvalid(cone_name(c) + " repeats a ray");
    if (det(generator_matrix(c)) == 0) throw FanInvalid(cone_name(c) + " is not simplicial");
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) throw FanInvalid("ray " + std::to_string(i) + " lies in no maximal cone");

  for (std::size_t a = 0; a < cones_.size(); ++a) {
    for (std::size_t b = a + 1; b < cones_.size(); ++b) {
      if (!meet_in_common_face(*this, cones_[a], cones_[b])) {
        throw FanInvalid(cone_name(cones_[a]) + " and " + cone_name(cones_[b]) +
                         " overlap beyond a common face");
      }
    }
  }
}

std::vector<LatticeVector> Fan::generators(const Cone& c) const {
  std::vector<LatticeVector> g;
  g.reserve(c.dim());
  for (auto i : c.generators) g.push_back(rays_[i]);
  return g;
}

IntMatrix Fan::generator_matrix(const Cone& c) const {
  const auto g = generators(c);
  return IntMatrix::from_rows(std::span<const LatticeVector>(g));
}

bool cone_contains(std::span<const LatticeVector> generators, const RationalVector& u) {
  for (const auto& g : generators)
    if (g.dim() != u.dim())
      throw DimensionMismatch("cone_contains: point dimension " + std::to_string(u.dim()) +
                              ", generator dimension " + std::to_string(g.dim()));
  if (generators.empty()) return u.is_zero();
  const auto coef = coordinates_in_span(generators, u);
  if (!coef) return false;
  return std::all_of(coef->coords().begin(), coef->coords().end(),
                     [](const Rational& c) { return c >= 0; });
}

bool cone_contains(const Fan& fan, const Cone& c, const RationalVector& u) {
  const auto g = fan.generators(c);
  return cone_contains(std::span<const LatticeVector>(g), u);
}

bool is_smooth(const Fan& fan) {
  for (const auto& c : fan.maximal_cones()) {
    if (abs(det(fan.generator_matrix(c))) != 1) return false;
  }
  return true;
}

std::vector<FacetPair> facet_pairs(const Fan& fan) {
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> owners;
  for (std::size_t ci = 0; ci < fan.maximal_cones().size(); ++ci) {
    auto gens = fan.maximal_cone(ci).generators;
    std::sort(gens.begin(), gens.end());
    for (std::size_t drop = 0; drop < gens.size(); ++drop) {
      std::vector<std::size_t> facet;
      for (std::size_t k = 0; k < gens.size(); ++k)
        if (k != drop) facet.push_back(gens[k]);
      owners[facet].push_back(ci);
    }
  }
  std::vector<FacetPair> out;
  for (auto& [facet, cones] : owners) {
    // A valid fan never has a facet in three maximal cones; report extras as
    // separate pairs so nothing is hidden.
    for (std::size_t k = 0; k < cones.size(); k += 2) {
      FacetPair p{cones[k], std::nullopt, facet};
      if (k + 1 < cones.size()) p.second = cones[k + 1];
      out.push_back(std::move(p));
    }
  }
  return out;
}

bool is_complete(const Fan& fan) {
  std::map<std::vector<std::size_t>, int> count;
  for (const auto& p : facet_pairs(fan)) count[p.facet] += p.second ? 2 : 1;
  return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 2; });
}

std::optional<std::size_t> locate(const Fan& fan, const RationalVector& u) {
  for (std::size_t i = 0; i < fan.maximal_cones().size(); ++i)
    if (cone_contains(fan, fan.maximal_cone(i), u)) return i;
  return std::nullopt;
}

}  // namespace toric
