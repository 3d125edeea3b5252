// Copyright 2026 The diracent Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "diracent/errors.hpp"

namespace diracent {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

//===----------------------------------------------------------------------===//
// ComplexVector
//===----------------------------------------------------------------------===//

/// Dense column vector of complex amplitudes.
class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t dim) : data_(dim, Complex{}) {}
  ComplexVector(std::initializer_list<Complex> values) : data_(values) {}
  explicit ComplexVector(std::vector<Complex> values)
      : data_(std::move(values)) {}

  static ComplexVector basis(std::size_t dim, std::size_t index) {
    ComplexVector v(dim);
    v[index] = 1.0;
    return v;
  }

  std::size_t dim() const noexcept { return data_.size(); }
  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }
  std::span<const Complex> entries() const noexcept { return data_; }

  double squared_norm() const noexcept {
    double acc = 0.0;
    for (const auto& z : data_) acc += std::norm(z);
    return acc;
  }
  double norm() const noexcept { return std::sqrt(squared_norm()); }

  ComplexVector normalized() const {
    const double n = norm();
    if (n < 1e-300) throw DegenerateStateError("cannot normalize a zero vector");
    return *this * Complex{1.0 / n};
  }

  ComplexVector& operator+=(const ComplexVector& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  ComplexVector& operator-=(const ComplexVector& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  ComplexVector& operator*=(Complex s) noexcept {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend ComplexVector operator+(ComplexVector a, const ComplexVector& b) {
    return a += b;
  }
  friend ComplexVector operator-(ComplexVector a, const ComplexVector& b) {
    return a -= b;
  }
  friend ComplexVector operator*(ComplexVector a, Complex s) { return a *= s; }
  friend ComplexVector operator*(Complex s, ComplexVector a) { return a *= s; }

 private:
  void require_same_dim(const ComplexVector& o) const {
    if (o.dim() != dim())
      throw DimensionError("vector dimension mismatch: " +
                           std::to_string(dim()) + " vs " +
                           std::to_string(o.dim()));
  }

  std::vector<Complex> data_;
};

/// <a|b>, antilinear in the first argument.
inline Complex inner(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("inner product dimension mismatch");
  Complex acc{};
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

//===----------------------------------------------------------------------===//
// ComplexMatrix
//===----------------------------------------------------------------------===//

/// Dense row-major complex matrix. Sizes in this library never exceed 16x16.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex{}) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
  }
  /// Row-wise literal, e.g. {{0, 1}, {1, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0) throw DimensionError("matrix dimensions must be positive");
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
  static ComplexMatrix column(const ComplexVector& v) {
    ComplexMatrix m(v.dim(), 1);
    for (std::size_t i = 0; i < v.dim(); ++i) m(i, 0) = v[i];
    return m;
  }
  /// |a><b|
  static ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b) {
    ComplexMatrix m(a.dim(), b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) m(i, j) = a[i] * std::conj(b[j]);
    return m;
  }
  static ComplexMatrix projector(const ComplexVector& v) { return outer(v, v); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
  }
  ComplexMatrix transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
  }

  Complex trace() const {
    require_square("trace");
    Complex acc{};
    for (std::size_t i = 0; i < rows_; ++i) acc += (*this)(i, i);
    return acc;
  }

  double frobenius_norm() const noexcept {
    double acc = 0.0;
    for (const auto& z : data_) acc += std::norm(z);
    return std::sqrt(acc);
  }

  double max_abs() const noexcept {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
  }

  /// max |H_ij - conj(H_ji)|
  double hermiticity_defect() const {
    require_square("hermiticity check");
    double d = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r; c < cols_; ++c)
        d = std::max(d, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return d;
  }
  bool is_hermitian(double tol = 1e-10) const { return hermiticity_defect() <= tol; }

  ComplexVector apply(const ComplexVector& v) const {
    if (v.dim() != cols_) throw DimensionError("matrix-vector dimension mismatch");
    ComplexVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      Complex acc{};
      for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
      out[r] = acc;
    }
    return out;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  ComplexMatrix& operator*=(Complex s) noexcept {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionError("matrix product dimension mismatch: " +
                           std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                           " * " + std::to_string(b.rows_) + "x" +
                           std::to_string(b.cols_));
    ComplexMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

 private:
  void require_square(const char* what) const {
    if (!is_square())
      throw DimensionError(std::string(what) + " requires a square matrix");
  }
  void require_same_shape(const ComplexMatrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_)
      throw DimensionError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Frobenius distance ||a - b||_F.
inline double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).frobenius_norm();
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

inline ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b + b * a;
}

//===----------------------------------------------------------------------===//
// Pauli matrices
//===----------------------------------------------------------------------===//

namespace pauli {
inline ComplexMatrix identity() { return ComplexMatrix::identity(2); }
inline ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
inline ComplexMatrix y() { return {{0.0, -kI}, {kI, 0.0}}; }
inline ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

/// n.sigma for a real 3-vector n.
inline ComplexMatrix dot(double nx, double ny, double nz) {
  return {{nz, Complex{nx, -ny}}, {Complex{nx, ny}, -nz}};
}
}  // namespace pauli

//===----------------------------------------------------------------------===//
// Kronecker product
//===----------------------------------------------------------------------===//

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex s = a(ar, ac);
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          m(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
    }
  return m;
}

inline ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector v(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) v[i * b.dim() + j] = a[i] * b[j];
  return v;
}

/// Left fold: kron(kron(m0, m1), m2) ...
template <typename... Rest>
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   const Rest&... rest) {
  return kron(kron(a, b), rest...);
}

//===----------------------------------------------------------------------===//
// Subsystem bookkeeping
//===----------------------------------------------------------------------===//

/// Qubit tags of a two-bispinor system: intrinsic parity and spin of A and B.
enum class Subsystem { ParityA, SpinA, ParityB, SpinB };

inline const char* tag_name(Subsystem s) {
  switch (s) {
    case Subsystem::ParityA: return "PA";
    case Subsystem::SpinA: return "SA";
    case Subsystem::ParityB: return "PB";
    case Subsystem::SpinB: return "SB";
  }
  return "?";
}

inline constexpr Subsystem kAllSubsystems[] = {Subsystem::ParityA, Subsystem::SpinA,
                                               Subsystem::ParityB, Subsystem::SpinB};

/// Ordered tensor factors. The first factor is the most significant digit of
/// the basis index.
class SubsystemLayout {
 public:
  struct Factor {
    Subsystem tag;
    std::size_t dim;
  };

  explicit SubsystemLayout(std::vector<Factor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw DimensionError("layout needs at least one factor");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i].dim == 0) throw DimensionError("factor dimension must be positive");
      for (std::size_t j = 0; j < i; ++j)
        if (factors_[j].tag == factors_[i].tag)
          throw DimensionError(std::string("duplicate subsystem tag ") +
                               tag_name(factors_[i].tag));
    }
  }

  /// (P)A (S)A (P)B (S)B; index = 8 pA + 4 sA + 2 pB + sB.
  static SubsystemLayout two_bispinors() {
    return SubsystemLayout({{Subsystem::ParityA, 2},
                            {Subsystem::SpinA, 2},
                            {Subsystem::ParityB, 2},
                            {Subsystem::SpinB, 2}});
  }
  static SubsystemLayout single_bispinor() {
    return SubsystemLayout({{Subsystem::ParityA, 2}, {Subsystem::SpinA, 2}});
  }
  static SubsystemLayout spin_pair() {
    return SubsystemLayout({{Subsystem::SpinA, 2}, {Subsystem::SpinB, 2}});
  }

  const std::vector<Factor>& factors() const noexcept { return factors_; }

  std::size_t total_dim() const noexcept {
    std::size_t d = 1;
    for (const auto& f : factors_) d *= f.dim;
    return d;
  }

  bool contains(Subsystem tag) const noexcept {
    return std::any_of(factors_.begin(), factors_.end(),
                       [tag](const Factor& f) { return f.tag == tag; });
  }

  std::size_t position(Subsystem tag) const {
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (factors_[i].tag == tag) return i;
    throw DimensionError(std::string("subsystem ") + tag_name(tag) + " not in layout");
  }

 private:
  std::vector<Factor> factors_;
};

namespace detail {

inline void require_layout_match(const ComplexMatrix& rho, const SubsystemLayout& layout) {
  if (!rho.is_square() || rho.rows() != layout.total_dim())
    throw DimensionError("matrix of size " + std::to_string(rho.rows()) + "x" +
                         std::to_string(rho.cols()) + " does not match layout dimension " +
                         std::to_string(layout.total_dim()));
}

// Mixed-radix digits of a basis index, most significant factor first.
inline std::vector<std::size_t> digits(std::size_t index, const SubsystemLayout& layout) {
  const auto& f = layout.factors();
  std::vector<std::size_t> d(f.size());
  for (std::size_t k = f.size(); k-- > 0;) {
    d[k] = index % f[k].dim;
    index /= f[k].dim;
  }
  return d;
}

}  // namespace detail

/// Reduced matrix on the kept subsystems, in layout order.
inline ComplexMatrix partial_trace(const ComplexMatrix& rho, const SubsystemLayout& layout,
                                   std::span<const Subsystem> keep) {
  detail::require_layout_match(rho, layout);
  if (keep.empty()) throw DimensionError("partial_trace: keep set is empty");
  const auto& factors = layout.factors();
  std::vector<bool> kept(factors.size(), false);
  for (Subsystem t : keep) kept[layout.position(t)] = true;

  std::size_t out_dim = 1;
  for (std::size_t k = 0; k < factors.size(); ++k)
    if (kept[k]) out_dim *= factors[k].dim;

  const std::size_t n = rho.rows();
  std::vector<std::size_t> kept_index(n), traced_index(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = detail::digits(i, layout);
    std::size_t ki = 0, ti = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (kept[k])
        ki = ki * factors[k].dim + d[k];
      else
        ti = ti * factors[k].dim + d[k];
    }
    kept_index[i] = ki;
    traced_index[i] = ti;
  }

  ComplexMatrix out(out_dim, out_dim);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (traced_index[r] == traced_index[c]) out(kept_index[r], kept_index[c]) += rho(r, c);
  return out;
}

inline ComplexMatrix partial_trace(const ComplexMatrix& rho, const SubsystemLayout& layout,
                                   std::initializer_list<Subsystem> keep) {
  return partial_trace(rho, layout, std::span<const Subsystem>(keep.begin(), keep.size()));
}

/// Transpose of the target factor's indices only.
inline ComplexMatrix partial_transpose(const ComplexMatrix& rho, const SubsystemLayout& layout,
                                       Subsystem target) {
  detail::require_layout_match(rho, layout);
  const std::size_t pos = layout.position(target);
  const auto& factors = layout.factors();
  std::size_t stride = 1;
  for (std::size_t k = pos + 1; k < factors.size(); ++k) stride *= factors[k].dim;
  const std::size_t dim = factors[pos].dim;

  const std::size_t n = rho.rows();
  ComplexMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t rd = (r / stride) % dim;
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t cd = (c / stride) % dim;
      // swap the target digit between row and column index
      const std::size_t r2 = r - rd * stride + cd * stride;
      const std::size_t c2 = c - cd * stride + rd * stride;
      out(r2, c2) = rho(r, c);
    }
  }
  return out;
}

//===----------------------------------------------------------------------===//
// Hermitian eigenvalues
//===----------------------------------------------------------------------===//

inline constexpr double kHermitianTolerance = 1e-10;

/// Eigenvalues of a Hermitian matrix, descending.
///
/// Cyclic complex Jacobi: each (p, q) rotation first removes the phase of
/// h_pq and then applies a real Givens rotation. Sweeps stop once the largest
/// off-diagonal modulus falls below 1e-12 (relative to the matrix scale).
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  if (!h.is_square()) throw DimensionError("hermitian_eigenvalues requires a square matrix");
  const double defect = h.hermiticity_defect();
  if (defect > kHermitianTolerance)
    throw NotHermitianError("matrix is not Hermitian (defect " + std::to_string(defect) + ")");

  const std::size_t n = h.rows();
  ComplexMatrix a = (h + h.adjoint()) * Complex{0.5};
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  const double scale = std::max(1.0, a.max_abs());
  constexpr double kOffDiagonalThreshold = 1e-12;
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= kOffDiagonalThreshold * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag <= 1e-300) continue;
        const Complex phase = a(p, q) / mag;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // U restricted to (p, q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
        const Complex u_pp = c, u_pq = s;
        const Complex u_qp = -s * std::conj(phase), u_qq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {  // A <- A U
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * u_pp + akq * u_qp;
          a(k, q) = akp * u_pq + akq * u_qq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- U^dagger A
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
          a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i).real();
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

}  // namespace diracent
