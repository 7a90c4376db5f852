#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace toric::lelong {

/// Tensor grid on the torus (C*)^n in polar coordinates.
///
/// Log-moduli run over cells + 1 equally spaced nodes on [-radius, radius]
/// (so x = 0 is a node whenever cells is even); phases run over
/// 2 pi k / phases, k = 0..phases-1. phases = 1 is the positive real slice.
struct GridSpec {
  std::size_t dim = 1;
  double radius = 8.0;
  std::size_t cells = 64;
  std::size_t phases = 16;
};

/// One sample: log-moduli x and arguments theta, each of length dim.
struct GridPoint {
  std::span<const double> x;
  std::span<const double> theta;
};

struct TorusPoint;
struct LogPoint;

class WeightGrid {
 public:
  explicit WeightGrid(GridSpec spec);

  const GridSpec& spec() const { return spec_; }
  std::size_t dim() const { return spec_.dim; }
  std::size_t size() const { return size_; }

  GridPoint point(std::size_t i) const {
    return {std::span<const double>(x_).subspan(i * spec_.dim, spec_.dim),
            std::span<const double>(theta_).subspan(i * spec_.dim, spec_.dim)};
  }
  LogPoint log_point(std::size_t i) const;
  TorusPoint torus_point(std::size_t i) const;

  /// Twice as many cells per log axis and twice as many phases (a single
  /// phase stays single). Contains every node of this grid exactly.
  WeightGrid refined() const;

  /// Indices within one cell in every log and phase axis (phases wrap),
  /// including i itself.
  std::vector<std::size_t> neighbours(std::size_t i) const;

  /// Indices whose log-moduli all satisfy |x_k| <= r.
  std::vector<std::size_t> within_radius(double r) const;

  /// Named per-point value columns, kept aligned with the samples.
  void set_column(const std::string& name, std::vector<double> values);
  const std::vector<double>& column(const std::string& name) const;
  bool has_column(const std::string& name) const;
  std::span<const std::pair<std::string, std::vector<double>>> columns() const { return columns_; }

 private:
  GridSpec spec_;
  std::size_t size_ = 0;
  std::vector<double> x_;
  std::vector<double> theta_;
  std::vector<std::pair<std::string, std::vector<double>>> columns_;
};

}  // namespace toric::lelong
