// Copyright 2026 The diracent Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Eigen-backed oracles and seeded random generators for the unit tests.

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <vector>

#include "diracent/tensor.hpp"

namespace diracent::testing {

using EMat = Eigen::MatrixXcd;
using EVec = Eigen::VectorXcd;

inline EMat to_eigen(const ComplexMatrix& m) {
  EMat e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
  return e;
}

inline EVec to_eigen(const ComplexVector& v) {
  EVec e(v.dim());
  for (std::size_t k = 0; k < v.dim(); ++k) e(k) = v[k];
  return e;
}

inline ComplexMatrix from_eigen(const EMat& e) {
  ComplexMatrix m(e.rows(), e.cols());
  for (Eigen::Index r = 0; r < e.rows(); ++r)
    for (Eigen::Index c = 0; c < e.cols(); ++c) m(r, c) = e(r, c);
  return m;
}

inline EMat eigen_kron(const EMat& a, const EMat& b) {
  EMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Partial trace of a 16x16 four-qubit matrix keeping qubit `keep` (0..3,
/// most significant first), written as an explicit index sum.
inline EMat brute_single_qubit(const EMat& rho, int keep) {
  EMat out = EMat::Zero(2, 2);
  const int shift = 3 - keep;
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j)
      if ((i & ~(1 << shift)) == (j & ~(1 << shift))) out((i >> shift) & 1, (j >> shift) & 1) += rho(i, j);
  return out;
}

/// Keeps two qubits k1 < k2 of a four-qubit matrix.
inline EMat brute_two_qubit(const EMat& rho, int k1, int k2) {
  EMat out = EMat::Zero(4, 4);
  const int s1 = 3 - k1, s2 = 3 - k2;
  const int mask = (1 << s1) | (1 << s2);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j)
      if ((i & ~mask) == (j & ~mask)) {
        const int a = 2 * ((i >> s1) & 1) + ((i >> s2) & 1);
        const int b = 2 * ((j >> s1) & 1) + ((j >> s2) & 1);
        out(a, b) += rho(i, j);
      }
  return out;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  ComplexVector state(std::size_t dim) {
    ComplexVector v(dim);
    for (std::size_t k = 0; k < dim; ++k) v[k] = {normal(), normal()};
    return v.normalized();
  }

  ComplexMatrix hermitian(std::size_t dim) {
    ComplexMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = {normal(), normal()};
    return (m + m.adjoint()) * Complex{0.5};
  }

  /// Random mixed density matrix: normalized A A^dagger.
  ComplexMatrix density(std::size_t dim) {
    ComplexMatrix a(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) a(r, c) = {normal(), normal()};
    ComplexMatrix rho = a * a.adjoint();
    return rho * Complex{1.0 / rho.trace().real()};
  }

  /// Haar-ish 2x2 unitary from a QR of a Gaussian matrix.
  ComplexMatrix unitary2() {
    EMat g(2, 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) g(r, c) = {normal(), normal()};
    Eigen::HouseholderQR<EMat> qr(g);
    return from_eigen(qr.householderQ() * EMat::Identity(2, 2));
  }

  std::array<double, 3> unit_vector() {
    std::array<double, 3> v{normal(), normal(), normal()};
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    return {v[0] / n, v[1] / n, v[2] / n};
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace diracent::testing
