#pragma once

// Grid kernels. Each kernel exists twice with identical signatures: a plain
// loop in namespace serial (the reference) and an OpenMP version in namespace
// omp. Every per-point or per-candidate value is computed independently and
// in a fixed order, so both produce bit-identical output for any thread count.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "toric/lelong/grid.hpp"
#include "toric/lelong/weights.hpp"

namespace toric::lelong {

enum class Exec { serial, parallel };

/// Running maxima of (1/j) log |Q_j| over j = 1..J for every grid point.
struct RunningMaxTable {
  std::size_t points = 0;
  std::vector<std::vector<double>> by_j;  // by_j[J - 1][i]
  std::vector<bool> hit_zero;             // some Q_j vanishes exactly at i
};

// sample: fn at every grid point.
// sample_section: log|Q| at every grid point.
// constraint_log_scales: per candidate k, the min over the grid of
//   deg_k * log_h - log|Q_k|, skipping exact zeros of Q_k. Scaling Q_k by
//   exp of that value makes |Q_k|^(1/deg_k) <= H hold on the grid.
// envelope_max: per point, max over k of (log_scale_k + log|Q_k|) / deg_k.
// running_max: (1/j) log|Q_j| accumulated over j; missing entries are skipped.
// max_filter: max over each point's one-cell neighbourhood, the grid
//   surrogate for upper semicontinuous regularization.

namespace serial {
std::vector<double> sample(const WeightGrid& grid, const WeightFn& fn);
std::vector<double> sample_section(const WeightGrid& grid, const PolySection& q);
std::vector<double> constraint_log_scales(std::span<const PolySection> candidates,
                                          const WeightGrid& grid, std::span<const double> log_h);
std::vector<double> envelope_max(std::span<const PolySection> candidates,
                                 std::span<const double> log_scales, const WeightGrid& grid);
RunningMaxTable running_max(std::span<const std::optional<PolySection>> sequence,
                            const WeightGrid& grid);
std::vector<double> max_filter(const WeightGrid& grid, std::span<const double> values);
}  // namespace serial

namespace omp {
std::vector<double> sample(const WeightGrid& grid, const WeightFn& fn);
std::vector<double> sample_section(const WeightGrid& grid, const PolySection& q);
std::vector<double> constraint_log_scales(std::span<const PolySection> candidates,
                                          const WeightGrid& grid, std::span<const double> log_h);
std::vector<double> envelope_max(std::span<const PolySection> candidates,
                                 std::span<const double> log_scales, const WeightGrid& grid);
RunningMaxTable running_max(std::span<const std::optional<PolySection>> sequence,
                            const WeightGrid& grid);
std::vector<double> max_filter(const WeightGrid& grid, std::span<const double> values);
}  // namespace omp

}  // namespace toric::lelong
