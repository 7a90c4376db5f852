#include "toric/lelong/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "toric/sections.hpp"

namespace toric::lelong {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double to_double(const Integer& v) { return v.convert_to<double>(); }

void append_coords(std::vector<double>& out, const LatticeVector& v) {
  for (const auto& c : v.coords()) out.push_back(to_double(c));
}

}  // namespace

LogPoint log_point(const TorusPoint& z) {
  LogPoint x;
  for (const auto& c : z.z) x.x.push_back(std::log(std::abs(c)));
  return x;
}

// ------------------------------------------------------------- PolytopeWeights

PolytopeWeights::PolytopeWeights(const SectionPolytope& p)
    : dim_(p.ambient_dim()), has_vertices_(p.has_vertices()) {
  if (has_vertices_)
    for (const auto& v : p.vertices()) append_coords(vertices_, v);
  for (const auto& m : lattice_points(p, 1)) append_coords(points_, m);
}

double PolytopeWeights::psi(std::span<const double> x) const {
  if (!has_vertices_) throw VerticesUnavailable("psi needs the vertices of a basepoint-free P_D");
  double best = kNegInf;
  for (std::size_t v = 0; v < vertices_.size(); v += dim_) {
    double s = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) s += vertices_[v + k] * x[k];
    best = std::max(best, s);
  }
  return best;
}

double PolytopeWeights::lambda(std::span<const double> x) const {
  const std::size_t r = lattice_count();
  if (r == 0) return kNegInf;
  std::vector<double> dots(r);
  double top = kNegInf;
  for (std::size_t j = 0; j < r; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) s += points_[j * dim_ + k] * x[k];
    dots[j] = s;
    top = std::max(top, s);
  }
  double sum = 0.0;
  for (double s : dots) sum += std::exp(2.0 * (s - top));
  return top + 0.5 * std::log(sum);
}

double psi_eval(const SectionPolytope& p, const LogPoint& x) { return PolytopeWeights(p).psi(x.x); }

double lambda_eval(const SectionPolytope& p, const LogPoint& x) {
  return PolytopeWeights(p).lambda(x.x);
}

// ----------------------------------------------------------- LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(
    std::size_t dim, std::vector<std::pair<LatticeVector, std::complex<double>>> terms)
    : dim_(dim), terms_(std::move(terms)) {
  for (const auto& [m, c] : terms_) {
    if (m.dim() != dim_) throw DimensionMismatch("LaurentPolynomial: exponent dimension");
    append_coords(exps_, m);
    coeffs_.push_back(c);
    log_abs_coeffs_.push_back(std::log(std::abs(c)));
  }
}

bool LaurentPolynomial::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const std::complex<double>& c) { return c == std::complex<double>(0.0); });
}

template <class Rotation>
double LaurentPolynomial::shifted_log_abs(std::span<const double> x, Rotation rotation) const {
  const std::size_t t = coeffs_.size();
  double top = kNegInf;
  for (std::size_t j = 0; j < t; ++j) {
    if (coeffs_[j] == std::complex<double>(0.0)) continue;
    double a = log_abs_coeffs_[j];
    for (std::size_t k = 0; k < dim_; ++k) a += exps_[j * dim_ + k] * x[k];
    top = std::max(top, a);
  }
  if (top == kNegInf) return kNegInf;
  std::complex<double> sum(0.0, 0.0);
  for (std::size_t j = 0; j < t; ++j) {
    if (coeffs_[j] == std::complex<double>(0.0)) continue;
    double a = -top;
    for (std::size_t k = 0; k < dim_; ++k) a += exps_[j * dim_ + k] * x[k];
    // Keep the coefficient as a complex factor: exact cancellations such as
    // z^2 - 1 at z = 1 then produce an exact zero.
    sum += coeffs_[j] * std::exp(a) * rotation(j);
  }
  const double m = std::abs(sum);
  if (m == 0.0) return kNegInf;
  return top + std::log(m);
}

double LaurentPolynomial::log_abs(const GridPoint& p) const {
  return shifted_log_abs(p.x, [&](std::size_t j) {
    double phase = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) phase += exps_[j * dim_ + k] * p.theta[k];
    return phase == 0.0 ? std::complex<double>(1.0, 0.0) : std::polar(1.0, phase);
  });
}

double LaurentPolynomial::log_abs(const TorusPoint& z) const {
  if (z.z.size() != dim_) throw DimensionMismatch("LaurentPolynomial::log_abs: point dimension");
  std::vector<double> x;
  std::vector<std::complex<double>> unit;
  for (const auto& c : z.z) {
    x.push_back(std::log(std::abs(c)));
    unit.push_back(c / std::abs(c));
  }
  return shifted_log_abs(x, [&](std::size_t j) {
    std::complex<double> r(1.0, 0.0);
    for (std::size_t k = 0; k < dim_; ++k) r *= std::pow(unit[k], static_cast<int>(exps_[j * dim_ + k]));
    return r;
  });
}

std::complex<double> LaurentPolynomial::value(const TorusPoint& z) const {
  if (z.z.size() != dim_) throw DimensionMismatch("LaurentPolynomial::value: point dimension");
  std::complex<double> sum(0.0, 0.0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    std::complex<double> term = coeffs_[j];
    for (std::size_t k = 0; k < dim_; ++k) {
      const auto e = static_cast<int>(exps_[j * dim_ + k]);
      term *= std::pow(z.z[k], e);
    }
    sum += term;
  }
  return sum;
}

// ------------------------------------------------------------------ PolySection

PolySection::PolySection(const SectionPolytope& p, unsigned degree,
                         std::vector<std::pair<LatticeVector, std::complex<double>>> terms)
    : base_(p.ambient_dim(), std::move(terms)), base_degree_(degree) {
  if (base_.is_zero()) throw InvalidSection("PolySection: all coefficients are zero");
  const Integer d = degree;
  for (const auto& [m, c] : base_.terms()) {
    if (!p.contains(m, d))
      throw InvalidSection("PolySection: exponent " + m.str() + " is not in " +
                           std::to_string(degree) + "P");
  }
}

PolySection::PolySection(LaurentPolynomial base, unsigned base_degree, unsigned power,
                         std::complex<double> prefactor)
    : base_(std::move(base)), base_degree_(base_degree), power_(power), prefactor_(prefactor) {}

PolySection PolySection::pow(unsigned k) const {
  if (k == 0) throw InvalidSection("PolySection::pow: exponent must be positive");
  return PolySection(base_, base_degree_, power_ * k, std::pow(prefactor_, static_cast<int>(k)));
}

PolySection PolySection::scaled(std::complex<double> c) const {
  if (c == std::complex<double>(0.0)) throw InvalidSection("PolySection::scaled: zero factor");
  return PolySection(base_, base_degree_, power_, prefactor_ * c);
}

double PolySection::log_abs(const GridPoint& p) const {
  const double b = base_.log_abs(p);
  if (b == kNegInf) return kNegInf;
  return std::log(std::abs(prefactor_)) + static_cast<double>(power_) * b;
}

double PolySection::log_abs(const TorusPoint& z) const {
  const double b = base_.log_abs(z);
  if (b == kNegInf) return kNegInf;
  return std::log(std::abs(prefactor_)) + static_cast<double>(power_) * b;
}

std::complex<double> section_eval(const PolySection& q, const TorusPoint& z) {
  return q.prefactor() * std::pow(q.base().value(z), static_cast<int>(q.power()));
}

double section_log_weight(const PolySection& q, const GridPoint& p) {
  return q.log_abs(p) / static_cast<double>(q.degree());
}

double section_log_weight(const PolySection& q, const TorusPoint& z) {
  return q.log_abs(z) / static_cast<double>(q.degree());
}

}  // namespace toric::lelong
