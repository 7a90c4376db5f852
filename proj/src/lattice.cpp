#include "toric/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <utility>

namespace toric {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw DimensionMismatch(std::string(where) + ": dimension " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

template <typename T>
std::string join(std::span<const T> xs) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  os << ')';
  return os.str();
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

// ---------------------------------------------------------------- LatticeVector

LatticeVector::LatticeVector(std::size_t dim) : coords_(dim) {}

LatticeVector::LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}

LatticeVector::LatticeVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
  require_same_dim(dim(), o.dim(), "LatticeVector +");
  std::vector<Integer> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = coords_[i] + o.coords_[i];
  return LatticeVector(std::move(out));
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
  require_same_dim(dim(), o.dim(), "LatticeVector -");
  std::vector<Integer> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = coords_[i] - o.coords_[i];
  return LatticeVector(std::move(out));
}

LatticeVector LatticeVector::operator-() const {
  std::vector<Integer> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = -coords_[i];
  LatticeVector v(std::move(out));
  v.primitive_ = primitive_;
  return v;
}

LatticeVector LatticeVector::scaled(const Integer& k) const {
  std::vector<Integer> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = coords_[i] * k;
  return LatticeVector(std::move(out));
}

bool operator<(const LatticeVector& a, const LatticeVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

std::string LatticeVector::str() const { return join<Integer>(coords_); }

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << v.str(); }

// --------------------------------------------------------------- RationalVector

RationalVector::RationalVector(std::size_t dim) : coords_(dim) {}

RationalVector::RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

RationalVector::RationalVector(const LatticeVector& v) {
  coords_.reserve(v.dim());
  for (const auto& c : v.coords()) coords_.emplace_back(c);
}

RationalVector::RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}

bool RationalVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool RationalVector::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& c) { return denominator(c) == 1; });
}

RationalVector RationalVector::operator+(const RationalVector& o) const {
  require_same_dim(dim(), o.dim(), "RationalVector +");
  std::vector<Rational> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = coords_[i] + o.coords_[i];
  return RationalVector(std::move(out));
}

RationalVector RationalVector::operator-(const RationalVector& o) const {
  require_same_dim(dim(), o.dim(), "RationalVector -");
  std::vector<Rational> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = coords_[i] - o.coords_[i];
  return RationalVector(std::move(out));
}

RationalVector RationalVector::scaled(const Rational& k) const {
  std::vector<Rational> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = coords_[i] * k;
  return RationalVector(std::move(out));
}

bool operator<(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

std::string RationalVector::str() const { return join<Rational>(coords_); }

std::ostream& operator<<(std::ostream& os, const RationalVector& v) { return os << v.str(); }

// -------------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::from_rows(std::span<const LatticeVector> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().dim();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_dim(rows[r].dim(), cols, "IntMatrix::from_rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<LatticeVector> vs;
  for (const auto& r : rows) vs.emplace_back(r);
  return from_rows(std::span<const LatticeVector>(vs));
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  require_same_dim(cols_, o.rows_, "IntMatrix *");
  IntMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += (*this)(i, k) * o(k, j);
  return out;
}

LatticeVector IntMatrix::row(std::size_t r) const {
  return LatticeVector(std::vector<Integer>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

// ------------------------------------------------------------------ operations

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  require_same_dim(a.dim(), b.dim(), "dot");
  Integer s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const LatticeVector& a, const RationalVector& b) {
  require_same_dim(a.dim(), b.dim(), "dot");
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  require_same_dim(a.dim(), b.dim(), "dot");
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

LatticeVector primitive_reduce(const LatticeVector& v) {
  if (v.is_zero()) throw ZeroVector("primitive_reduce: zero vector " + v.str());
  Integer g = 0;
  for (const auto& c : v.coords()) g = gcd(g, Integer(abs(c)));
  std::vector<Integer> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = v[i] / g;
  LatticeVector r(std::move(out));
  r.primitive_ = true;
  return r;
}

Integer det(const IntMatrix& m) {
  if (!m.is_square()) {
    throw NotSquare("det: " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

LatticeVector solve_integer(const IntMatrix& m, const LatticeVector& b) {
  if (!m.is_square()) {
    throw NotSquare("solve_integer: " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const std::size_t n = m.rows();
  require_same_dim(n, b.dim(), "solve_integer");
  // Augmented [M | b]. Fraction-free Gauss-Jordan keeps every entry a minor of
  // the (row-permuted) matrix; at the end the diagonal holds D = +-det M and
  // the last column holds D x.
  IntMatrix a(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n) = b[i];
  }
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw NotUnimodular("solve_integer: singular matrix");
    if (p != k)
      for (std::size_t j = 0; j <= n; ++j) std::swap(a(k, j), a(p, j));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j <= n; ++j) {
        if (j == k) continue;
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  const Integer d = prev;
  if (abs(d) != 1) {
    throw NotUnimodular("solve_integer: |det| = " + Integer(abs(d)).str() + " != 1");
  }
  std::vector<Integer> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a(i, n) * d;  // d = +-1
  return LatticeVector(std::move(x));
}

std::size_t rank(std::span<const RationalVector> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t cols = vectors.front().dim();
  std::vector<std::vector<Rational>> a;
  for (const auto& v : vectors) {
    require_same_dim(v.dim(), cols, "rank");
    a.emplace_back(v.coords().begin(), v.coords().end());
  }
  return rref(a, cols).size();
}

std::size_t rank(std::span<const LatticeVector> vectors) {
  std::vector<RationalVector> rs(vectors.begin(), vectors.end());
  return rank(std::span<const RationalVector>(rs));
}

std::vector<RationalVector> kernel(std::span<const RationalVector> rows, std::size_t dim) {
  std::vector<std::vector<Rational>> a;
  for (const auto& r : rows) {
    require_same_dim(r.dim(), dim, "kernel");
    a.emplace_back(r.coords().begin(), r.coords().end());
  }
  const auto pivots = rref(a, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(dim);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.emplace_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> coordinates_in_span(std::span<const LatticeVector> columns,
                                                  const RationalVector& target) {
  const std::size_t k = columns.size();
  const std::size_t n = target.dim();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(k + 1));
  for (std::size_t c = 0; c < k; ++c) {
    require_same_dim(columns[c].dim(), n, "coordinates_in_span");
    for (std::size_t r = 0; r < n; ++r) a[r][c] = columns[c][r];
  }
  for (std::size_t r = 0; r < n; ++r) a[r][k] = target[r];
  const auto pivots = rref(a, k + 1);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;  // inconsistent
  if (pivots.size() != k) return std::nullopt;                      // dependent columns
  std::vector<Rational> x(k);
  for (std::size_t r = 0; r < k; ++r) x[pivots[r]] = a[r][k];
  return RationalVector(std::move(x));
}

LatticeVector primitive_on_ray(const RationalVector& v) {
  Integer l = 1;
  for (const auto& c : v.coords()) l = lcm(l, Integer(denominator(c)));
  std::vector<Integer> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = numerator(Rational(v[i] * l));
  return primitive_reduce(LatticeVector(std::move(out)));
}

std::vector<LatticeVector> nonnegative_circuits(std::span<const LatticeVector> columns) {
  const std::size_t k = columns.size();
  if (k == 0) return {};
  const std::size_t n = columns.front().dim();
  if (k >= 63) throw DimensionMismatch("nonnegative_circuits: too many columns");
  const std::size_t max_size = std::min(k, rank(columns) + 1);
  std::vector<LatticeVector> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size > max_size) continue;
    std::vector<std::size_t> idx;
    for (std::size_t c = 0; c < k; ++c)
      if (mask >> c & 1U) idx.push_back(c);
    // Rows of the n x |idx| submatrix.
    std::vector<RationalVector> rows;
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<Rational> row(size);
      for (std::size_t j = 0; j < size; ++j) row[j] = columns[idx[j]][r];
      rows.emplace_back(std::move(row));
    }
    const auto ker = kernel(rows, size);
    if (ker.size() != 1) continue;
    const auto& v = ker.front();
    bool all_pos = true;
    bool all_neg = true;
    for (const auto& c : v.coords()) {
      all_pos = all_pos && c > 0;
      all_neg = all_neg && c < 0;
    }
    if (!all_pos && !all_neg) continue;
    const auto prim = primitive_on_ray(all_pos ? v : v.scaled(-1));
    std::vector<Integer> full(k);
    for (std::size_t j = 0; j < size; ++j) full[idx[j]] = prim[j];
    out.emplace_back(std::move(full));
  }
  return out;
}

bool in_cone(std::span<const LatticeVector> generators, const RationalVector& target) {
  if (target.is_zero()) return true;
  const std::size_t k = generators.size();
  if (k == 0) return false;
  if (k >= 63) throw DimensionMismatch("in_cone: too many generators");
  const std::size_t n = target.dim();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > n) continue;
    std::vector<LatticeVector> sub;
    for (std::size_t c = 0; c < k; ++c)
      if (mask >> c & 1U) sub.push_back(generators[c]);
    const auto coef = coordinates_in_span(sub, target);
    if (!coef) continue;
    if (std::all_of(coef->coords().begin(), coef->coords().end(),
                    [](const Rational& c) { return c >= 0; })) {
      return true;
    }
  }
  return false;
}

}  // namespace toric
