#pragma once

// Weights on the torus: the growth majorant psi, the Fubini-Study weight
// lambda, and sections of multiples of L as Laurent polynomials.
//
// All weights are handled at log level: a "weight" is log H, never H.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "toric/divisor.hpp"
#include "toric/lelong/grid.hpp"

namespace toric::lelong {

/// Point of (C*)^n; every coordinate nonzero.
struct TorusPoint {
  std::vector<std::complex<double>> z;
};

/// Componentwise log-modulus of a TorusPoint.
struct LogPoint {
  std::vector<double> x;
};

LogPoint log_point(const TorusPoint& z);

using WeightFn = std::function<double(const GridPoint&)>;

/// Floating-point view of P_D for fast psi/lambda evaluation. psi needs the
/// Cartier vertices; lambda needs the degree-1 lattice points.
class PolytopeWeights {
 public:
  explicit PolytopeWeights(const SectionPolytope& p);

  std::size_t dim() const { return dim_; }
  std::size_t lattice_count() const { return points_.size() / dim_; }

  /// max over vertices of <m, x>. Throws VerticesUnavailable.
  double psi(std::span<const double> x) const;
  /// (1/2) log sum_{m ∈ P ∩ M} exp(2 <m, x>), max-shifted.
  double lambda(std::span<const double> x) const;

 private:
  std::size_t dim_;
  bool has_vertices_;
  std::vector<double> vertices_;  // row-major, dim_ per vertex
  std::vector<double> points_;
};

double psi_eval(const SectionPolytope& p, const LogPoint& x);
double lambda_eval(const SectionPolytope& p, const LogPoint& x);

/// Finite sum of c_m z^m with integer (possibly negative) exponents.
class LaurentPolynomial {
 public:
  LaurentPolynomial(std::size_t dim, std::vector<std::pair<LatticeVector, std::complex<double>>> terms);

  std::size_t dim() const { return dim_; }
  std::size_t term_count() const { return coeffs_.size(); }
  std::span<const std::pair<LatticeVector, std::complex<double>>> terms() const { return terms_; }
  bool is_zero() const;

  /// log |P| at the polar point (x, theta), evaluated with a max shift so that
  /// large moduli never overflow. Exact zeros give -infinity.
  double log_abs(const GridPoint& p) const;
  /// Same, with phases taken from z / |z| directly, so that points such as
  /// z = -1 keep exact unit factors.
  double log_abs(const TorusPoint& z) const;
  std::complex<double> value(const TorusPoint& z) const;

 private:
  template <class Rotation>
  double shifted_log_abs(std::span<const double> x, Rotation rotation) const;

  std::size_t dim_;
  std::vector<std::pair<LatticeVector, std::complex<double>>> terms_;
  std::vector<double> exps_;  // term-major, dim_ per term
  std::vector<std::complex<double>> coeffs_;
  std::vector<double> log_abs_coeffs_;
};

/// A section of O(dD): prefactor * base^power, where base has degree
/// base_degree and every exponent of base lies in base_degree * P ∩ M.
/// Powers stay symbolic so that high degrees evaluate stably.
class PolySection {
 public:
  /// Validates every exponent against degree * P and rejects the zero section.
  PolySection(const SectionPolytope& p, unsigned degree,
              std::vector<std::pair<LatticeVector, std::complex<double>>> terms);

  unsigned degree() const { return base_degree_ * power_; }
  unsigned base_degree() const { return base_degree_; }
  unsigned power() const { return power_; }
  const LaurentPolynomial& base() const { return base_; }
  std::complex<double> prefactor() const { return prefactor_; }

  /// base^(power * k); closed under the product of sections.
  PolySection pow(unsigned k) const;
  PolySection scaled(std::complex<double> c) const;

  /// log |Q| (not divided by the degree).
  double log_abs(const GridPoint& p) const;
  double log_abs(const TorusPoint& z) const;

 private:
  PolySection(LaurentPolynomial base, unsigned base_degree, unsigned power,
              std::complex<double> prefactor);

  LaurentPolynomial base_;
  unsigned base_degree_;
  unsigned power_ = 1;
  std::complex<double> prefactor_{1.0, 0.0};
};

/// Direct complex evaluation Q(z).
std::complex<double> section_eval(const PolySection& q, const TorusPoint& z);
/// (1/deg Q) log |Q(z)|; -infinity at zeros of Q.
double section_log_weight(const PolySection& q, const TorusPoint& z);
double section_log_weight(const PolySection& q, const GridPoint& p);

}  // namespace toric::lelong
