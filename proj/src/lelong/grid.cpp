#include "toric/lelong/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "toric/errors.hpp"
#include "toric/lelong/weights.hpp"

namespace toric::lelong {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

WeightGrid::WeightGrid(GridSpec spec) : spec_(spec) {
  if (spec_.dim == 0 || spec_.cells == 0 || spec_.phases == 0 || !(spec_.radius > 0))
    throw DimensionMismatch("WeightGrid: dim, cells and phases must be positive, radius > 0");
  const std::size_t n = spec_.dim;
  const std::size_t nodes = spec_.cells + 1;
  const std::size_t log_count = ipow(nodes, n);
  const std::size_t phase_count = ipow(spec_.phases, n);
  size_ = log_count * phase_count;
  x_.resize(size_ * n);
  theta_.resize(size_ * n);

  const auto cells = static_cast<double>(spec_.cells);
  const auto phases = static_cast<double>(spec_.phases);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t li = 0; li < log_count; ++li) {
    for (std::size_t pi = 0; pi < phase_count; ++pi) {
      const std::size_t i = li * phase_count + pi;
      std::size_t lrest = li;
      std::size_t prest = pi;
      for (std::size_t k = n; k-- > 0;) {
        const auto a = static_cast<double>(lrest % nodes);
        const auto b = static_cast<double>(prest % spec_.phases);
        lrest /= nodes;
        prest /= spec_.phases;
        x_[i * n + k] = spec_.radius * (2.0 * a - cells) / cells;
        theta_[i * n + k] = two_pi * b / phases;
      }
    }
  }
}

LogPoint WeightGrid::log_point(std::size_t i) const {
  const auto p = point(i);
  return LogPoint{std::vector<double>(p.x.begin(), p.x.end())};
}

TorusPoint WeightGrid::torus_point(std::size_t i) const {
  const auto p = point(i);
  TorusPoint t;
  for (std::size_t k = 0; k < spec_.dim; ++k) t.z.push_back(std::polar(std::exp(p.x[k]), p.theta[k]));
  return t;
}

WeightGrid WeightGrid::refined() const {
  GridSpec s = spec_;
  s.cells *= 2;
  if (s.phases > 1) s.phases *= 2;
  return WeightGrid(s);
}

std::vector<std::size_t> WeightGrid::neighbours(std::size_t i) const {
  const std::size_t n = spec_.dim;
  const std::size_t nodes = spec_.cells + 1;
  const std::size_t phase_count = ipow(spec_.phases, n);
  std::size_t li = i / phase_count;
  std::size_t pi = i % phase_count;
  std::vector<long> a(n), b(n);
  for (std::size_t k = n; k-- > 0;) {
    a[k] = static_cast<long>(li % nodes);
    b[k] = static_cast<long>(pi % spec_.phases);
    li /= nodes;
    pi /= spec_.phases;
  }
  const bool wrap = spec_.phases > 2;
  std::vector<std::size_t> out;
  // Offsets in {-1, 0, 1}^(2n), enumerated as a base-3 counter.
  const std::size_t combos = ipow(3, 2 * n);
  for (std::size_t c = 0; c < combos; ++c) {
    std::size_t rest = c;
    bool ok = true;
    std::size_t lidx = 0, pidx = 0;
    for (std::size_t k = 0; k < n && ok; ++k) {
      const long da = static_cast<long>(rest % 3) - 1;
      rest /= 3;
      const long db = static_cast<long>(rest % 3) - 1;
      rest /= 3;
      const long na = a[k] + da;
      if (na < 0 || na >= static_cast<long>(nodes)) ok = false;
      long nb = b[k] + db;
      const long ph = static_cast<long>(spec_.phases);
      if (wrap) {
        nb = (nb + ph) % ph;
      } else if (nb < 0 || nb >= ph || (db != 0 && ph == 1)) {
        ok = false;
      }
      lidx = lidx * nodes + static_cast<std::size_t>(na);
      pidx = pidx * spec_.phases + static_cast<std::size_t>(nb);
    }
    if (!ok) continue;
    const std::size_t j = lidx * phase_count + pidx;
    bool dup = false;
    for (auto v : out) dup = dup || v == j;
    if (!dup) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> WeightGrid::within_radius(double r) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size_; ++i) {
    const auto p = point(i);
    bool inside = true;
    for (double v : p.x) inside = inside && std::abs(v) <= r * (1.0 + 1e-12);
    if (inside) out.push_back(i);
  }
  return out;
}

void WeightGrid::set_column(const std::string& name, std::vector<double> values) {
  if (values.size() != size_)
    throw DimensionMismatch("WeightGrid column '" + name + "' has " + std::to_string(values.size()) +
                            " values for " + std::to_string(size_) + " points");
  for (auto& [key, col] : columns_) {
    if (key == name) {
      col = std::move(values);
      return;
    }
  }
  columns_.emplace_back(name, std::move(values));
}

const std::vector<double>& WeightGrid::column(const std::string& name) const {
  for (const auto& [key, col] : columns_)
    if (key == name) return col;
  throw std::out_of_range("WeightGrid has no column '" + name + "'");
}

bool WeightGrid::has_column(const std::string& name) const {
  for (const auto& [key, col] : columns_)
    if (key == name) return true;
  return false;
}

}  // namespace toric::lelong
