// SPDX-License-Identifier: Apache-2.0
//
// Wootters concurrence for two-qubit density matrices, plus the closed-form
// concurrences in the relativistic limit used as independent oracles.
#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>

#include "qedent/states.hpp"

namespace qedent {

/// Imaginary residues and negative eigenvalues smaller than this are
/// clamped away silently; they are surfaced in the diagnostics.
inline constexpr double kEigenClampTol = 1e-9;
/// Residues at or above this abort with a numerical_error.
inline constexpr double kEigenErrorTol = 1e-6;
/// Eigenvalues of rho*rho~ below this are treated as exact zeros.  For unit
/// trace input the eigenvalues lie in [0,1] and the solver noise on the
/// semisimple zero eigenspace is O(eps) in absolute terms; without the
/// truncation its square roots pollute the concurrence at the 1e-8 level.
inline constexpr double kEigenRankEps = 1e-13;

inline const Eigen::Matrix4cd& sigma_y_pair() {
  static const Eigen::Matrix4cd yy = [] {
    Eigen::Matrix2cd sy;
    sy << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l)
            m(i << 1 | k, j << 1 | l) = sy(i, j) * sy(k, l);
    return m;
  }();
  return yy;
}

/// Spin-flipped matrix (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y),
/// conjugation taken in the computational basis.
inline Eigen::Matrix4cd spin_flip(const Eigen::MatrixXcd& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw std::domain_error("spin_flip: expected a 4x4 (two-qubit) matrix");
  }
  const Eigen::Matrix4cd& yy = sigma_y_pair();
  return yy * rho.conjugate() * yy;
}

struct ConcurrenceResult {
  double value = 0.0;
  std::array<double, 4> lambdas{};  // descending
  double max_imag_discarded = 0.0;
  double min_eigenvalue = 0.0;  // most negative raw eigenvalue seen
};

/// Wootters formula: C = max(0, l1 - l2 - l3 - l4) with l_i the descending
/// square roots of the eigenvalues of rho * spin_flip(rho).
inline ConcurrenceResult concurrence(const Eigen::MatrixXcd& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw std::domain_error("concurrence: expected a 4x4 (two-qubit) matrix");
  }
  const Eigen::Matrix4cd prod = rho * spin_flip(rho);
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(prod, false);
  const Eigen::Vector4cd ev = es.eigenvalues();

  ConcurrenceResult res;
  std::array<double, 4> vals{};
  for (int i = 0; i < 4; ++i) {
    const double im = std::abs(ev[i].imag());
    if (im >= kEigenErrorTol) {
      throw numerical_error("concurrence: eigenvalue imaginary residue " +
                            std::to_string(im) + " exceeds 1e-6");
    }
    res.max_imag_discarded = std::max(res.max_imag_discarded, im);
    double re = ev[i].real();
    res.min_eigenvalue = std::min(res.min_eigenvalue, re);
    if (re < -kEigenErrorTol) {
      throw numerical_error("concurrence: eigenvalue " + std::to_string(re) +
                            " below -1e-6");
    }
    vals[i] = std::max(re, 0.0);
  }
  const double top = std::max({vals[0], vals[1], vals[2], vals[3], 1.0});
  for (double& v : vals) {
    if (v < kEigenRankEps * top) v = 0.0;
  }
  for (int i = 0; i < 4; ++i) res.lambdas[i] = std::sqrt(vals[i]);
  std::sort(res.lambdas.begin(), res.lambdas.end(), std::greater<>());
  res.value = std::max(
      0.0, res.lambdas[0] - res.lambdas[1] - res.lambdas[2] - res.lambdas[3]);
  return res;
}

inline ConcurrenceResult concurrence(const DensityMatrix& rho) {
  return concurrence(rho.mat);
}

/// Concurrence of a pure two-qubit state (a,b,c,d): 2|ad - bc|.
inline double concurrence_pure(const MultiQubitState& st) {
  if (st.qubits != 2) {
    throw std::domain_error("concurrence_pure: expected a two-qubit state");
  }
  const Eigen::VectorXcd& a = st.amps;
  const double n2 = a.squaredNorm();
  return 2.0 * std::abs(a[0] * a[3] - a[1] * a[2]) / n2;
}

/// Hermitian-route oracle: the l_i equal the eigenvalues of the PSD matrix
/// (sqrt(rho) rho~ sqrt(rho))^(1/2).  Slower; used to adjudicate numerical
/// disputes with the general solver.
inline ConcurrenceResult concurrence_hermitian(const Eigen::MatrixXcd& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw std::domain_error("concurrence_hermitian: expected 4x4");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho);
  Eigen::Vector4d d = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::Matrix4cd sqrt_rho =
      es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
  const Eigen::Matrix4cd h = sqrt_rho * spin_flip(rho) * sqrt_rho;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es2(h, Eigen::EigenvaluesOnly);
  Eigen::Vector4d ev = es2.eigenvalues().cwiseMax(0.0);
  const double top = std::max(ev.maxCoeff(), 1.0);
  ConcurrenceResult res;
  for (int i = 0; i < 4; ++i) {
    res.lambdas[i] = ev[i] < kEigenRankEps * top ? 0.0 : std::sqrt(ev[i]);
  }
  std::sort(res.lambdas.begin(), res.lambdas.end(), std::greater<>());
  res.value = std::max(
      0.0, res.lambdas[0] - res.lambdas[1] - res.lambdas[2] - res.lambdas[3]);
  return res;
}

// ---------------------------------------------------------------------------
// Relativistic-limit concurrences.  All three share one denominator,
// 1 - (1 - sin^2(theta)/8) sin^2(theta) sin^2(eta), whose minimum over
// [0,pi] x [0,2pi] is exactly 1/8.  Valid for eta in [0, pi/2].

inline double limit_denominator(double eta, double theta) {
  const double st2 = std::sin(theta) * std::sin(theta);
  const double se2 = std::sin(eta) * std::sin(eta);
  return 1.0 - (1.0 - st2 / 8.0) * st2 * se2;
}

inline double limit_c_ab(double eta, double theta) {
  const double s = std::sin(0.5 * theta);
  const double c = std::cos(0.5 * theta);
  const double se = std::sin(eta);
  return 2.0 * se * se * std::pow(s, 4) * std::pow(c, 4) /
         limit_denominator(eta, theta);
}

inline double limit_c_ac(double eta, double theta) {
  const double s = std::sin(0.5 * theta);
  return std::sin(2.0 * eta) * std::pow(s, 4) / limit_denominator(eta, theta);
}

inline double limit_c_bc(double eta, double theta) {
  const double c = std::cos(0.5 * theta);
  return std::sin(2.0 * eta) * std::pow(c, 4) / limit_denominator(eta, theta);
}

/// Identical to limit_c_ab: the reference-state limit coincides with the
/// AB-channel limit.
inline double limit_c_ref(double eta, double theta) {
  return limit_c_ab(eta, theta);
}

}  // namespace qedent
