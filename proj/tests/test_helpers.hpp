// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <random>

#include "qedent/states.hpp"

namespace qedent::testing {

inline Eigen::VectorXcd random_pure_state(std::mt19937& rng, int dim) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd psi(dim);
  for (int i = 0; i < dim; ++i) psi[i] = cplx(g(rng), g(rng));
  return psi / psi.norm();
}

/// Random full-rank density matrix G G^dagger / tr.
inline Eigen::MatrixXcd random_density(std::mt19937& rng, int dim) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = cplx(g(rng), g(rng));
  Eigen::MatrixXcd rho = m * m.adjoint();
  return rho / rho.trace().real();
}

/// Haar-ish random single-qubit unitary from three angles.
inline Eigen::Matrix2cd random_unitary(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  const double a = u(rng), b = u(rng), c = u(rng);
  const double t = 0.5 * u(rng);
  Eigen::Matrix2cd m;
  m << std::polar(std::cos(t), a), std::polar(std::sin(t), b),
      -std::polar(std::sin(t), c), std::polar(std::cos(t), c + b - a);
  return m;
}

inline DensityMatrix wrap_density(const Eigen::MatrixXcd& mat, int qubits) {
  DensityMatrix rho;
  rho.mat = mat;
  rho.labels = default_labels(qubits);
  return rho;
}

}  // namespace qedent::testing
