#pragma once

// Weight-level experiments: growth condition, sup-envelope reconstruction,
// limsup recovery, and the convergence of (1/j) log|Q_j| to log H.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "toric/divisor.hpp"
#include "toric/lelong/grid.hpp"
#include "toric/lelong/kernels.hpp"
#include "toric/lelong/weights.hpp"

namespace toric::lelong {

// ---------------------------------------------------------------- growth check

struct GrowthOptions {
  /// |sup(R) - sup(R/2)| below this certifies boundedness.
  double stable_tolerance = 1e-6;
  /// sup(R) - sup(R/2) above this certifies unbounded growth.
  double growth_threshold = 0.1;
  /// Number of nested radii: radius, radius/2, ... (at least 2).
  std::size_t levels = 4;
  Exec exec = Exec::parallel;
};

struct GrowthResult {
  bool bounded = false;
  double c_estimate = 0.0;                           // sup of u - psi over the full grid
  std::vector<std::pair<double, double>> schedule;   // (radius, sup u - psi), increasing radius
};

/// Tests u <= psi + O(1) on nested radial sub-grids. Throws InconclusiveGrowth
/// when the last doubling neither stabilizes nor grows past the threshold.
GrowthResult growth_check(const WeightFn& u, const SectionPolytope& p, const WeightGrid& grid,
                          const GrowthOptions& options = {});

// -------------------------------------------------------- envelope reconstruction

struct EnvelopeOptions {
  unsigned d_max = 1;
  /// Random normalized coefficient vectors per degree.
  std::size_t coeff_budget = 0;
  std::uint64_t seed = 0;
  /// Include the conjugate-character (Cauchy-Schwarz) direction at every
  /// evaluation point.
  bool adapted_directions = true;
  Exec exec = Exec::parallel;
};

struct EnvelopeResult {
  WeightGrid grid;  // columns: log_target, log_envelope
  double max_log_deviation = 0.0;
  std::vector<std::size_t> candidates_per_degree;  // index d - 1
};

/// Pointwise sup of |Q|^(1/d) over the searched sections Q of O(dD), d <=
/// d_max, each rescaled so that |Q|^(1/d) <= H on the refined constraint grid.
/// The search covers unit monomials, adapted directions and random vectors,
/// so the result is a lower bound for the true envelope.
EnvelopeResult envelope_reconstruct(const WeightFn& log_h, const SectionPolytope& p,
                                    const WeightGrid& grid, const EnvelopeOptions& options);

// ----------------------------------------------------------------- limsup

struct LimsupResult {
  RunningMaxTable table;
  WeightGrid grid;  // columns: log_limsup (J = J_max), log_limsup_regularized
};

/// sequence[j - 1] is Q_j (absent entries are skipped); requires deg Q_j <= j.
LimsupResult limsup_weight(std::span<const std::optional<PolySection>> sequence, std::size_t j_max,
                           const WeightGrid& grid, Exec exec = Exec::parallel);

struct ChernRow {
  std::size_t j = 0;
  double sup_deviation = 0.0;
  double l1_deviation = 0.0;  // mean absolute deviation
  std::size_t excluded = 0;
};

/// Deviation of max_{j <= J} (1/j) log|Q_j| from log H for J = 1..J_max,
/// excluding grid points where some Q_j vanishes exactly.
std::vector<ChernRow> chern_convergence(const WeightFn& log_h,
                                        std::span<const std::optional<PolySection>> sequence,
                                        std::size_t j_max, const WeightGrid& grid,
                                        Exec exec = Exec::parallel);

// ---------------------------------------------------------------- sequences

/// Q_j = (factor * chi^{m_k})^j with m_k cycling through the vertices of P.
std::vector<std::optional<PolySection>> vertex_monomial_sequence(const SectionPolytope& p,
                                                                 std::size_t j_max,
                                                                 double factor = 1.0);

/// K unit-norm degree-1 sections with real nonnegative coefficients. For two
/// lattice points the directions are (cos t, sin t) at t = (k + 1/2) pi / (2K);
/// otherwise they are seeded random draws.
std::vector<PolySection> direction_net(const SectionPolytope& p, std::size_t k, std::uint64_t seed);

/// Q_j = net[(j - 1) mod K]^j.
std::vector<std::optional<PolySection>> net_power_sequence(std::span<const PolySection> net,
                                                           std::size_t j_max);

// ---------------------------------------------------------------- weights

WeightFn psi_weight(const SectionPolytope& p);
WeightFn lambda_weight(const SectionPolytope& p);
/// (1/deg Q) log|Q|.
WeightFn section_weight(PolySection q);
/// scale * log|P| for an arbitrary Laurent polynomial.
WeightFn log_polynomial_weight(LaurentPolynomial poly, double scale);
/// log(t) + w: the weight of t * H.
WeightFn scaled_weight(WeightFn w, double t);

}  // namespace toric::lelong
