// Copyright 2026 The blockcoh Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace blockcoh {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Rng = std::mt19937_64;

namespace tol {
/// Default relative zero threshold for entries and blocks.
inline constexpr double kZero = 1e-10;
/// Hermiticity, positivity and unit-trace checks on states and effects.
inline constexpr double kHermitian = 1e-9;
inline constexpr double kPsd = 1e-9;
inline constexpr double kTrace = 1e-9;
/// Completeness of Kraus sets and POVMs.
inline constexpr double kCptp = 1e-9;
/// Selective branches with smaller probability are dropped.
inline constexpr double kProbability = 1e-12;
}  // namespace tol

inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Scale-relative zero rule: |value| <= tol * (1 + scale), where scale is the
/// largest entry magnitude of the matrix that contains the value.
inline bool negligible(double magnitude, double scale, double tolerance) {
  return magnitude <= tolerance * (1.0 + scale);
}

inline void require_square(const ComplexMatrix& m, Eigen::Index dim, const char* what) {
  if (m.rows() != dim || m.cols() != dim)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(dim) + "x" +
                                std::to_string(dim) + " matrix, got " + std::to_string(m.rows()) +
                                "x" + std::to_string(m.cols()));
}

inline double hermiticity_deviation(const ComplexMatrix& m) { return max_abs(m - m.adjoint()); }

inline double identity_deviation(const ComplexMatrix& m) {
  return max_abs(m - ComplexMatrix::Identity(m.rows(), m.cols()));
}

/// Eigenvalues (ascending) of the Hermitian part of m.
inline RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

/// Applies f to the spectrum of a Hermitian matrix.
template <typename F>
ComplexMatrix hermitian_function(const ComplexMatrix& m, F&& f) {
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  RealVector mapped = es.eigenvalues().unaryExpr(std::forward<F>(f));
  return es.eigenvectors() * mapped.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

/// Principal square root of a positive semidefinite matrix. Eigenvalues in
/// [-psd_tol, 0) are clamped to zero; anything more negative is an error.
inline ComplexMatrix psd_sqrt(const ComplexMatrix& m, double psd_tol = tol::kPsd) {
  if (m.size() && hermitian_eigenvalues(m).minCoeff() < -psd_tol)
    throw std::domain_error("matrix is not positive semidefinite");
  return hermitian_function(m, [](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; });
}

/// Inverse square root of a positive definite matrix.
inline ComplexMatrix inverse_sqrt(const ComplexMatrix& m) {
  RealVector ev = hermitian_eigenvalues(m);
  if (ev.size() && ev.minCoeff() <= 1e-14 * std::max(1.0, ev.maxCoeff()))
    throw std::domain_error("matrix is singular; no inverse square root");
  return hermitian_function(m, [](double x) { return 1.0 / std::sqrt(x); });
}

inline ComplexMatrix basis_outer(Eigen::Index dim, Eigen::Index row, Eigen::Index col) {
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  m(row, col) = 1.0;
  return m;
}

/// Square complex Gaussian (Ginibre) matrix with unit-variance real and
/// imaginary parts.
inline ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> n01;
  ComplexMatrix g(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) {
      double re = n01(rng);
      double im = n01(rng);
      g(r, c) = Complex(re, im);
    }
  return g;
}

/// Haar-distributed unitary: QR of a Ginibre matrix with R's diagonal phases
/// absorbed into Q.
inline ComplexMatrix haar_unitary(Eigen::Index dim, Rng& rng) {
  ComplexMatrix z = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < dim; ++i) {
    double a = std::abs(r(i, i));
    if (a > 0) q.col(i) *= r(i, i) / a;
  }
  return q;
}

/// Hilbert-Schmidt random density matrix G G^dagger / Tr(G G^dagger).
inline ComplexMatrix random_hs_state(Eigen::Index dim, Rng& rng) {
  ComplexMatrix g = ginibre(dim, dim, rng);
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace blockcoh
