#pragma once

// Per-element bodies shared by the serial and OpenMP kernels. Only the loop
// around them differs between the two implementations.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "toric/lelong/grid.hpp"
#include "toric/lelong/weights.hpp"

namespace toric::lelong::detail {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

inline double candidate_log_scale(const PolySection& q, const WeightGrid& grid,
                                  std::span<const double> log_h) {
  const auto d = static_cast<double>(q.degree());
  double best = kPosInf;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double lq = q.log_abs(grid.point(i));
    if (lq == kNegInf) continue;
    best = std::min(best, d * log_h[i] - lq);
  }
  return best;
}

inline double envelope_at(std::span<const PolySection> candidates,
                          std::span<const double> log_scales, const GridPoint& p) {
  double best = kNegInf;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (!std::isfinite(log_scales[k])) continue;
    const double lq = candidates[k].log_abs(p);
    if (lq == kNegInf) continue;
    best = std::max(best, (log_scales[k] + lq) / static_cast<double>(candidates[k].degree()));
  }
  return best;
}

// Fills column i of the running-max table.
inline void running_max_at(std::span<const std::optional<PolySection>> sequence,
                           const GridPoint& p, std::size_t i,
                           std::vector<std::vector<double>>& by_j, bool& hit_zero) {
  double run = kNegInf;
  bool zero = false;
  for (std::size_t j = 1; j <= sequence.size(); ++j) {
    const auto& q = sequence[j - 1];
    if (q) {
      const double lq = q->log_abs(p);
      if (lq == kNegInf) {
        zero = true;
      } else {
        run = std::max(run, lq / static_cast<double>(j));
      }
    }
    by_j[j - 1][i] = run;
  }
  hit_zero = zero;
}

inline double max_over_neighbours(const WeightGrid& grid, std::span<const double> values,
                                  std::size_t i) {
  double best = kNegInf;
  for (auto j : grid.neighbours(i)) best = std::max(best, values[j]);
  return best;
}

}  // namespace toric::lelong::detail
