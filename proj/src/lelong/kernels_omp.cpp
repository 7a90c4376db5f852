#include <omp.h>

#include "kernel_detail.hpp"
#include "toric/lelong/kernels.hpp"

namespace toric::lelong::omp {

namespace {
// OpenMP wants a signed loop index.
inline long as_long(std::size_t n) { return static_cast<long>(n); }
}  // namespace

std::vector<double> sample(const WeightGrid& grid, const WeightFn& fn) {
  std::vector<double> out(grid.size());
  const long n = as_long(grid.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = fn(grid.point(static_cast<std::size_t>(i)));
  return out;
}

std::vector<double> sample_section(const WeightGrid& grid, const PolySection& q) {
  std::vector<double> out(grid.size());
  const long n = as_long(grid.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = q.log_abs(grid.point(static_cast<std::size_t>(i)));
  return out;
}

std::vector<double> constraint_log_scales(std::span<const PolySection> candidates,
                                          const WeightGrid& grid, std::span<const double> log_h) {
  std::vector<double> out(candidates.size());
  const long n = as_long(candidates.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long k = 0; k < n; ++k)
    out[k] = detail::candidate_log_scale(candidates[static_cast<std::size_t>(k)], grid, log_h);
  return out;
}

std::vector<double> envelope_max(std::span<const PolySection> candidates,
                                 std::span<const double> log_scales, const WeightGrid& grid) {
  std::vector<double> out(grid.size());
  const long n = as_long(grid.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i)
    out[i] = detail::envelope_at(candidates, log_scales, grid.point(static_cast<std::size_t>(i)));
  return out;
}

RunningMaxTable running_max(std::span<const std::optional<PolySection>> sequence,
                            const WeightGrid& grid) {
  RunningMaxTable t;
  t.points = grid.size();
  t.by_j.assign(sequence.size(), std::vector<double>(grid.size()));
  // std::vector<bool> packs bits; collect per-point flags in bytes first.
  std::vector<unsigned char> zeros(grid.size(), 0);
  const long n = as_long(grid.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    bool zero = false;
    const auto idx = static_cast<std::size_t>(i);
    detail::running_max_at(sequence, grid.point(idx), idx, t.by_j, zero);
    zeros[idx] = zero ? 1 : 0;
  }
  t.hit_zero.assign(zeros.begin(), zeros.end());
  return t;
}

std::vector<double> max_filter(const WeightGrid& grid, std::span<const double> values) {
  std::vector<double> out(grid.size());
  const long n = as_long(grid.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i)
    out[i] = detail::max_over_neighbours(grid, values, static_cast<std::size_t>(i));
  return out;
}

}  // namespace toric::lelong::omp
