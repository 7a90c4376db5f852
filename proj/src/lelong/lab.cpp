#include "toric/lelong/lab.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <memory>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "toric/errors.hpp"
#include "toric/sections.hpp"

namespace toric::lelong {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<double> run_sample(Exec e, const WeightGrid& g, const WeightFn& fn) {
  return e == Exec::serial ? serial::sample(g, fn) : omp::sample(g, fn);
}

std::vector<double> run_scales(Exec e, std::span<const PolySection> c, const WeightGrid& g,
                               std::span<const double> log_h) {
  return e == Exec::serial ? serial::constraint_log_scales(c, g, log_h)
                           : omp::constraint_log_scales(c, g, log_h);
}

std::vector<double> run_envelope(Exec e, std::span<const PolySection> c,
                                 std::span<const double> s, const WeightGrid& g) {
  return e == Exec::serial ? serial::envelope_max(c, s, g) : omp::envelope_max(c, s, g);
}

RunningMaxTable run_running_max(Exec e, std::span<const std::optional<PolySection>> seq,
                                const WeightGrid& g) {
  return e == Exec::serial ? serial::running_max(seq, g) : omp::running_max(seq, g);
}

std::vector<double> run_max_filter(Exec e, const WeightGrid& g, std::span<const double> v) {
  return e == Exec::serial ? serial::max_filter(g, v) : omp::max_filter(g, v);
}

// sup over a subset, -inf for an empty or all -inf subset.
double sup_over(std::span<const double> values, const std::vector<std::size_t>& idx) {
  double best = kNegInf;
  for (auto i : idx) best = std::max(best, values[i]);
  return best;
}

std::uint64_t degree_seed(std::uint64_t seed, unsigned d) {
  // splitmix64 finalizer over (seed, d).
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(d) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

using Terms = std::vector<std::pair<LatticeVector, std::complex<double>>>;

std::vector<double> to_doubles(const LatticeVector& m) {
  std::vector<double> out;
  for (const auto& c : m.coords()) out.push_back(c.convert_to<double>());
  return out;
}

// Conjugate-character direction at p: c_m proportional to conj(z^m), scaled so
// the largest coefficient has modulus 1.
Terms adapted_terms(const std::vector<LatticeVector>& pts, const std::vector<std::vector<double>>& exps,
                    const GridPoint& p) {
  std::vector<double> logmod(pts.size());
  double top = kNegInf;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    double a = 0.0;
    for (std::size_t k = 0; k < p.x.size(); ++k) a += exps[j][k] * p.x[k];
    logmod[j] = a;
    top = std::max(top, a);
  }
  Terms t;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    double phase = 0.0;
    for (std::size_t k = 0; k < p.theta.size(); ++k) phase += exps[j][k] * p.theta[k];
    const double mag = std::exp(logmod[j] - top);
    if (mag == 0.0) continue;
    t.emplace_back(pts[j], std::polar(mag, -phase));
  }
  return t;
}

}  // namespace

// ---------------------------------------------------------------- growth check

GrowthResult growth_check(const WeightFn& u, const SectionPolytope& p, const WeightGrid& grid,
                          const GrowthOptions& options) {
  if (options.levels < 2) throw std::invalid_argument("growth_check: at least two radii needed");
  auto pw = std::make_shared<const PolytopeWeights>(p);
  const WeightFn diff = [&u, pw](const GridPoint& g) {
    const double v = u(g);
    return v == kNegInf ? kNegInf : v - pw->psi(g.x);
  };
  const auto values = run_sample(options.exec, grid, diff);

  GrowthResult r;
  const double radius = grid.spec().radius;
  for (std::size_t l = options.levels; l-- > 0;) {
    const double rad = radius / std::pow(2.0, static_cast<double>(l));
    r.schedule.emplace_back(rad, sup_over(values, grid.within_radius(rad)));
  }
  const double outer = r.schedule.back().second;
  const double inner = r.schedule[r.schedule.size() - 2].second;
  r.c_estimate = outer;
  const double step = outer == inner ? 0.0 : outer - inner;
  if (std::abs(step) < options.stable_tolerance) {
    r.bounded = true;
  } else if (step > options.growth_threshold) {
    r.bounded = false;
  } else {
    throw InconclusiveGrowth("growth_check: sup changed by " + std::to_string(step) +
                             " over the last radius doubling");
  }
  return r;
}

// -------------------------------------------------------- envelope reconstruction

EnvelopeResult envelope_reconstruct(const WeightFn& log_h, const SectionPolytope& p,
                                    const WeightGrid& grid, const EnvelopeOptions& options) {
  if (options.d_max == 0) throw std::invalid_argument("envelope_reconstruct: d_max must be >= 1");
  const WeightGrid fine = grid.refined();
  const auto log_h_fine = run_sample(options.exec, fine, log_h);
  for (double v : log_h_fine)
    if (!std::isfinite(v))
      throw EmptyFamily("envelope_reconstruct: log H is not finite on the constraint grid");

  std::vector<PolySection> candidates;
  std::vector<std::size_t> per_degree;
  for (unsigned d = 1; d <= options.d_max; ++d) {
    const auto pts = lattice_points(p, d);
    std::vector<std::vector<double>> exps;
    for (const auto& m : pts) exps.push_back(to_doubles(m));
    const std::size_t before = candidates.size();

    for (const auto& m : pts) candidates.emplace_back(p, d, Terms{{m, {1.0, 0.0}}});
    if (options.adapted_directions && !pts.empty())
      for (std::size_t i = 0; i < grid.size(); ++i)
        candidates.emplace_back(p, d, adapted_terms(pts, exps, grid.point(i)));

    std::mt19937_64 rng(degree_seed(options.seed, d));
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (std::size_t b = 0; b < options.coeff_budget && !pts.empty(); ++b) {
      Terms t;
      double norm2 = 0.0;
      for (const auto& m : pts) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        norm2 += re * re + im * im;
        t.emplace_back(m, std::complex<double>(re, im));
      }
      if (norm2 == 0.0) continue;
      const double inv = 1.0 / std::sqrt(norm2);
      for (auto& [m, c] : t) c *= inv;
      candidates.emplace_back(p, d, std::move(t));
    }
    per_degree.push_back(candidates.size() - before);
  }

  auto scales = run_scales(options.exec, candidates, fine, log_h_fine);
  bool any = false;
  for (double s : scales) any = any || std::isfinite(s);
  if (!any) throw EmptyFamily("envelope_reconstruct: no candidate section meets the constraint");

  EnvelopeResult r{grid, 0.0, std::move(per_degree)};
  auto target = run_sample(options.exec, grid, log_h);
  auto env = run_envelope(options.exec, candidates, scales, grid);
  double dev = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(target[i])) continue;
    const double e = std::abs(env[i] - target[i]);
    dev = std::max(dev, std::isnan(e) ? std::numeric_limits<double>::infinity() : e);
  }
  r.max_log_deviation = dev;
  r.grid.set_column("log_target", std::move(target));
  r.grid.set_column("log_envelope", std::move(env));
  return r;
}

// ----------------------------------------------------------------- limsup

namespace {

std::vector<std::optional<PolySection>> checked_prefix(
    std::span<const std::optional<PolySection>> sequence, std::size_t j_max) {
  if (j_max == 0) throw InvalidSection("J_max must be positive");
  std::vector<std::optional<PolySection>> out(j_max);
  for (std::size_t j = 1; j <= j_max && j <= sequence.size(); ++j) {
    const auto& q = sequence[j - 1];
    if (q && q->degree() > j)
      throw InvalidSection("Q_" + std::to_string(j) + " has degree " +
                           std::to_string(q->degree()) + " > " + std::to_string(j));
    out[j - 1] = q;
  }
  return out;
}

}  // namespace

LimsupResult limsup_weight(std::span<const std::optional<PolySection>> sequence, std::size_t j_max,
                           const WeightGrid& grid, Exec exec) {
  const auto seq = checked_prefix(sequence, j_max);
  LimsupResult r{run_running_max(exec, seq, grid), grid};
  const auto& last = r.table.by_j.back();
  r.grid.set_column("log_limsup", last);
  r.grid.set_column("log_limsup_regularized", run_max_filter(exec, grid, last));
  return r;
}

std::vector<ChernRow> chern_convergence(const WeightFn& log_h,
                                        std::span<const std::optional<PolySection>> sequence,
                                        std::size_t j_max, const WeightGrid& grid, Exec exec) {
  const auto seq = checked_prefix(sequence, j_max);
  const auto table = run_running_max(exec, seq, grid);
  const auto target = run_sample(exec, grid, log_h);

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (!table.hit_zero[i] && std::isfinite(target[i])) kept.push_back(i);
  const std::size_t excluded = grid.size() - kept.size();

  std::vector<ChernRow> rows;
  for (std::size_t j = 1; j <= j_max; ++j) {
    const auto& run = table.by_j[j - 1];
    double sup = 0.0;
    double sum = 0.0;
    for (auto i : kept) {
      double e = std::abs(run[i] - target[i]);
      if (std::isnan(e)) e = std::numeric_limits<double>::infinity();
      sup = std::max(sup, e);
      sum += e;
    }
    const double mean = kept.empty() ? 0.0 : sum / static_cast<double>(kept.size());
    rows.push_back({j, sup, mean, excluded});
  }
  return rows;
}

// ---------------------------------------------------------------- sequences

std::vector<std::optional<PolySection>> vertex_monomial_sequence(const SectionPolytope& p,
                                                                 std::size_t j_max, double factor) {
  const auto verts = p.vertices();
  if (verts.empty()) throw EmptyFamily("vertex_monomial_sequence: P has no vertices");
  std::vector<std::optional<PolySection>> out;
  for (std::size_t j = 1; j <= j_max; ++j) {
    const PolySection base(p, 1, Terms{{verts[(j - 1) % verts.size()], {factor, 0.0}}});
    out.emplace_back(base.pow(static_cast<unsigned>(j)));
  }
  return out;
}

std::vector<PolySection> direction_net(const SectionPolytope& p, std::size_t k, std::uint64_t seed) {
  const auto pts = lattice_points(p, 1);
  if (pts.empty() || k == 0) throw EmptyFamily("direction_net: no degree-1 sections");
  std::vector<PolySection> net;
  if (pts.size() == 2) {
    for (std::size_t i = 0; i < k; ++i) {
      const double t = (static_cast<double>(i) + 0.5) * std::numbers::pi / (2.0 * static_cast<double>(k));
      net.emplace_back(p, 1, Terms{{pts[0], {std::cos(t), 0.0}}, {pts[1], {std::sin(t), 0.0}}});
    }
    return net;
  }
  std::mt19937_64 rng(degree_seed(seed, 1));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (net.size() < k) {
    Terms t;
    double norm2 = 0.0;
    for (const auto& m : pts) {
      const double c = unit(rng);
      norm2 += c * c;
      t.emplace_back(m, std::complex<double>(c, 0.0));
    }
    if (norm2 == 0.0) continue;
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& [m, c] : t) c *= inv;
    net.emplace_back(p, 1, std::move(t));
  }
  return net;
}

std::vector<std::optional<PolySection>> net_power_sequence(std::span<const PolySection> net,
                                                           std::size_t j_max) {
  if (net.empty()) throw EmptyFamily("net_power_sequence: empty net");
  std::vector<std::optional<PolySection>> out;
  for (std::size_t j = 1; j <= j_max; ++j)
    out.emplace_back(net[(j - 1) % net.size()].pow(static_cast<unsigned>(j)));
  return out;
}

// ---------------------------------------------------------------- weights

WeightFn psi_weight(const SectionPolytope& p) {
  auto pw = std::make_shared<const PolytopeWeights>(p);
  if (!p.has_vertices()) throw VerticesUnavailable("psi needs the vertices of a basepoint-free P_D");
  return [pw](const GridPoint& g) { return pw->psi(g.x); };
}

WeightFn lambda_weight(const SectionPolytope& p) {
  auto pw = std::make_shared<const PolytopeWeights>(p);
  return [pw](const GridPoint& g) { return pw->lambda(g.x); };
}

WeightFn section_weight(PolySection q) {
  return [q = std::move(q)](const GridPoint& g) { return section_log_weight(q, g); };
}

WeightFn log_polynomial_weight(LaurentPolynomial poly, double scale) {
  if (!(scale > 0)) throw std::invalid_argument("log_polynomial_weight: scale must be positive");
  return [poly = std::move(poly), scale](const GridPoint& g) {
    const double v = poly.log_abs(g);
    return v == kNegInf ? kNegInf : scale * v;
  };
}

WeightFn scaled_weight(WeightFn w, double t) {
  if (!(t > 0)) throw std::invalid_argument("scaled_weight: factor must be positive");
  const double lt = std::log(t);
  return [w = std::move(w), lt](const GridPoint& g) { return lt + w(g); };
}

}  // namespace toric::lelong
