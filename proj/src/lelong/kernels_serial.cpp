#include "kernel_detail.hpp"
#include "toric/lelong/kernels.hpp"

namespace toric::lelong::serial {

std::vector<double> sample(const WeightGrid& grid, const WeightFn& fn) {
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = fn(grid.point(i));
  return out;
}

std::vector<double> sample_section(const WeightGrid& grid, const PolySection& q) {
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = q.log_abs(grid.point(i));
  return out;
}

std::vector<double> constraint_log_scales(std::span<const PolySection> candidates,
                                          const WeightGrid& grid, std::span<const double> log_h) {
  std::vector<double> out(candidates.size());
  for (std::size_t k = 0; k < candidates.size(); ++k)
    out[k] = detail::candidate_log_scale(candidates[k], grid, log_h);
  return out;
}

std::vector<double> envelope_max(std::span<const PolySection> candidates,
                                 std::span<const double> log_scales, const WeightGrid& grid) {
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    out[i] = detail::envelope_at(candidates, log_scales, grid.point(i));
  return out;
}

RunningMaxTable running_max(std::span<const std::optional<PolySection>> sequence,
                            const WeightGrid& grid) {
  RunningMaxTable t;
  t.points = grid.size();
  t.by_j.assign(sequence.size(), std::vector<double>(grid.size()));
  t.hit_zero.assign(grid.size(), false);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    bool zero = false;
    detail::running_max_at(sequence, grid.point(i), i, t.by_j, zero);
    t.hit_zero[i] = zero;
  }
  return t;
}

std::vector<double> max_filter(const WeightGrid& grid, std::span<const double> values) {
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = detail::max_over_neighbours(grid, values, i);
  return out;
}

}  // namespace toric::lelong::serial
