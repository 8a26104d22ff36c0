// SPDX-License-Identifier: Apache-2.0
//
// Gamma matrices in the Weyl representation, on-shell four-momenta and the
// explicit helicity spinor columns, in natural units with the fermion mass
// set to 1 (so omega = sqrt(1 + mu^2) and |p| = mu).
#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>

#include "qedent/common.hpp"

namespace qedent {

using Vector4c = Eigen::Vector4cd;
using RowVector4c = Eigen::RowVector4cd;
using Matrix4c = Eigen::Matrix4cd;

/// On-shell four-momentum parametrized by (mu, theta, phi) with
/// p = mu * (sin th cos ph, sin th sin ph, cos th) and omega = sqrt(1+mu^2).
struct FourMomentum {
  double mu = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  double omega = 1.0;
  Eigen::Vector3d p = Eigen::Vector3d::Zero();

  Eigen::Vector4d components() const {
    return {omega, p.x(), p.y(), p.z()};
  }
};

inline FourMomentum make_momentum(double mu, double theta, double phi) {
  if (!(mu > 0.0)) {
    throw std::domain_error("make_momentum: mu must be positive");
  }
  FourMomentum k;
  k.mu = mu;
  k.theta = theta;
  k.phi = phi;
  k.omega = std::sqrt(1.0 + mu * mu);
  k.p = mu * Eigen::Vector3d(std::sin(theta) * std::cos(phi),
                             std::sin(theta) * std::sin(phi),
                             std::cos(theta));
  return k;
}

/// Same energy, spatial momentum reversed.
inline FourMomentum reversed(const FourMomentum& k) {
  FourMomentum r = k;
  r.p = -k.p;
  return r;
}

/// gamma^0..gamma^3 and gamma^5, Weyl representation, metric (+,-,-,-).
struct GammaSet {
  std::array<Matrix4c, 4> g;
  Matrix4c g5;

  /// Feynman slash: gamma^mu k_mu with lowered spatial components.
  Matrix4c slash(const FourMomentum& k) const {
    return k.omega * g[0] - k.p.x() * g[1] - k.p.y() * g[2] - k.p.z() * g[3];
  }
};

inline const GammaSet& gamma_set() {
  static const GammaSet gs = [] {
    const cplx i(0.0, 1.0);
    GammaSet s;
    s.g[0] << 0, 0, 1, 0,
              0, 0, 0, 1,
              1, 0, 0, 0,
              0, 1, 0, 0;
    s.g[1] << 0, 0, 0, 1,
              0, 0, 1, 0,
              0, -1, 0, 0,
              -1, 0, 0, 0;
    s.g[2] << 0, 0, 0, -i,
              0, 0, i, 0,
              0, i, 0, 0,
              -i, 0, 0, 0;
    s.g[3] << 0, 0, 1, 0,
              0, 0, 0, -1,
              -1, 0, 0, 0,
              0, 1, 0, 0;
    s.g5 << -1, 0, 0, 0,
            0, -1, 0, 0,
            0, 0, 1, 0,
            0, 0, 0, 1;
    return s;
  }();
  return gs;
}

enum class Flavor { particle, antiparticle };

/// Which explicit column set to use: the direction of the reference momentum
/// or the one opposite to it.  The opposite-direction columns are a fixed
/// convention of their own (they are *not* a phase-free relabeling of the
/// along columns at mirrored angles).
enum class Direction { along, opposite };

struct DiracSpinor {
  Vector4c c;
  Flavor flavor = Flavor::particle;
  Helicity helicity = Helicity::R;
  FourMomentum momentum;  // the actual momentum the spinor belongs to
};

namespace detail {

inline DiracSpinor build_spinor(Flavor f, Helicity h, const FourMomentum& k,
                                Direction dir) {
  // sqrt(omega - mu) computed through 1/sqrt(omega + mu); on shell
  // (omega - mu)(omega + mu) = 1, which avoids cancellation at large mu.
  const double b = std::sqrt(k.omega + k.mu);
  const double a = 1.0 / b;
  const double ch = std::cos(0.5 * k.theta);
  const double sh = std::sin(0.5 * k.theta);
  const cplx e = std::polar(1.0, k.phi);

  DiracSpinor s;
  s.flavor = f;
  s.helicity = h;
  s.momentum = dir == Direction::along ? k : reversed(k);

  const bool along = dir == Direction::along;
  if (f == Flavor::particle) {
    if (h == Helicity::R) {
      s.c = along ? Vector4c(a * ch, a * e * sh, b * ch, b * e * sh)
                  : Vector4c(-a * sh, a * e * ch, -b * sh, b * e * ch);
    } else {
      s.c = along ? Vector4c(-b * sh, b * e * ch, -a * sh, a * e * ch)
                  : Vector4c(b * ch, b * e * sh, a * ch, a * e * sh);
    }
  } else {
    if (h == Helicity::R) {
      s.c = along ? Vector4c(-b * sh, b * e * ch, a * sh, -a * e * ch)
                  : Vector4c(b * ch, b * e * sh, -a * ch, -a * e * sh);
    } else {
      s.c = along ? Vector4c(a * ch, a * e * sh, -b * ch, -b * e * sh)
                  : Vector4c(-a * sh, a * e * ch, b * sh, -b * e * ch);
    }
  }
  return s;
}

}  // namespace detail

/// Particle spinor u(h, k) for k's own direction.
inline DiracSpinor spinor_u(Helicity h, const FourMomentum& k,
                            Direction dir = Direction::along) {
  return detail::build_spinor(Flavor::particle, h, k, dir);
}

/// Antiparticle spinor v(h, k).
inline DiracSpinor spinor_v(Helicity h, const FourMomentum& k,
                            Direction dir = Direction::along) {
  return detail::build_spinor(Flavor::antiparticle, h, k, dir);
}

/// Dirac adjoint: conjugate transpose right-multiplied by gamma^0.
inline RowVector4c dirac_adjoint(const DiracSpinor& s) {
  return s.c.adjoint() * gamma_set().g[0];
}

/// Residual of the momentum-space Dirac equation, relative to the spinor
/// norm: ||(slash(p) -+ 1) s|| / ||s||.
inline double dirac_residual(const DiracSpinor& s) {
  const double m = s.flavor == Flavor::particle ? 1.0 : -1.0;
  const Matrix4c op =
      gamma_set().slash(s.momentum) - m * Matrix4c::Identity();
  return (op * s.c).norm() / s.c.norm();
}

}  // namespace qedent
