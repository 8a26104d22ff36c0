// SPDX-License-Identifier: Apache-2.0
//
// Spectator-channel machinery: the reduced density matrix of particle C
// before and after the scattering, with the interference term integrated
// over the outgoing solid angle.  The box-regularization constants collapse
// into a single dimensionless coupling weight w; the normalized result is
// independent of it, which is exactly what the module demonstrates.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "qedent/amplitudes.hpp"

namespace qedent {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on (-1, 1), ascending
  std::vector<double> weights;
};

/// Nodes and weights by Newton iteration on the Legendre recurrence.
inline GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::domain_error("gauss_legendre: n must be positive");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

/// Quadrature prescription for the solid-angle integrals.  Gauss-Legendre in
/// tau = ln(1 - cos theta) -- the |M|^2 integrands concentrate in a boundary
/// layer of width ~theta_min^2 next to the pole cutoff, which a rule in
/// cos theta itself cannot resolve at these node counts -- and a uniform
/// periodic rule in phi.
struct AngularQuadrature {
  int n_theta = 64;
  int n_phi = 64;
  double theta_min = 1e-3;  // cutoff around the t-channel pole
};

/// Interference term sum_rs M(a,R;rs) conj(M(a,L;rs)) at one outgoing
/// direction; the up/down spectator labels map to B helicities R/L.
inline cplx cross_term(Helicity a, double mu, double theta, double phi) {
  const HelicityAmplitudeTable t = BhabhaEvaluator(mu).table(theta, phi);
  cplx acc = 0.0;
  for (int r = 0; r < 2; ++r) {
    for (int s = 0; s < 2; ++s) {
      const auto hr = static_cast<Helicity>(r);
      const auto hs = static_cast<Helicity>(s);
      acc += t(a, Helicity::R, hr, hs) * std::conj(t(a, Helicity::L, hr, hs));
    }
  }
  return acc;
}

/// Raw solid-angle integrals entering rho_C^f: the two squared-amplitude
/// sums (B initially R / L) and the interference cross term.
struct SpectatorIntegrals {
  double i_up = 0.0;
  double i_down = 0.0;
  cplx cross = 0.0;
};

inline SpectatorIntegrals integrate_spectator(double mu, Helicity a,
                                              const AngularQuadrature& quad) {
  if (quad.n_theta < 1 || quad.n_phi < 1) {
    throw std::domain_error("integrate_spectator: empty quadrature");
  }
  const BhabhaEvaluator eval(mu);
  const GaussLegendreRule rule = gauss_legendre(quad.n_theta);
  const double tau_lo = std::log(1.0 - std::cos(quad.theta_min));
  const double tau_hi = std::log(2.0);
  const double dphi = kTwoPi / quad.n_phi;

  SpectatorIntegrals out;
  for (int i = 0; i < quad.n_theta; ++i) {
    const double tau =
        tau_lo + 0.5 * (rule.nodes[i] + 1.0) * (tau_hi - tau_lo);
    const double one_minus_x = std::exp(tau);
    const double x = 1.0 - one_minus_x;
    const double theta = std::acos(std::min(1.0, std::max(-1.0, x)));
    // dx = -(1-x) dtau; the sin(theta) of the solid angle is absorbed in dx
    const double wt = rule.weights[i] * 0.5 * (tau_hi - tau_lo) * one_minus_x;
    for (int j = 0; j < quad.n_phi; ++j) {
      const double phi = j * dphi;
      const HelicityAmplitudeTable t = eval.table(theta, phi);
      double su = 0.0, sd = 0.0;
      cplx cr = 0.0;
      for (int r = 0; r < 2; ++r) {
        for (int s = 0; s < 2; ++s) {
          const auto hr = static_cast<Helicity>(r);
          const auto hs = static_cast<Helicity>(s);
          const cplx up = t(a, Helicity::R, hr, hs);
          const cplx dn = t(a, Helicity::L, hr, hs);
          su += std::norm(up);
          sd += std::norm(dn);
          cr += up * std::conj(dn);
        }
      }
      out.i_up += wt * dphi * su;
      out.i_down += wt * dphi * sd;
      out.cross += wt * dphi * cr;
    }
  }
  return out;
}

/// Lambda(eta) = cos^2 eta * I_up + sin^2 eta * I_down, the weighted
/// squared-amplitude integral entering the normalization.
inline double lambda_norm(double eta, double mu, Helicity a = Helicity::R,
                          const AngularQuadrature& quad = {}) {
  const SpectatorIntegrals s = integrate_spectator(mu, a, quad);
  const double c = std::cos(eta), sn = std::sin(eta);
  return c * c * s.i_up + sn * sn * s.i_down;
}

/// 2x2 reduced density matrix of the spectator spin.
struct SpectatorDensity {
  Eigen::Matrix2cd rho;
  double eta = 0.0;
  double max_offdiag = 0.0;       // |rho_01| after normalization
  double branch_imbalance = 0.0;  // 2|I_up - I_down| / (I_up + I_down)
  double quad_rel_change = 0.0;   // relative change when doubling the nodes
};

inline SpectatorDensity rho_c_initial(double eta) {
  SpectatorDensity d;
  d.eta = eta;
  const double c = std::cos(eta), s = std::sin(eta);
  d.rho << c * c, 0.0, 0.0, s * s;
  return d;
}

/// Reduced spectator matrix after the scattering.  Diagonal interaction
/// terms share the same Lambda(eta) structure as the normalization, so the
/// normalized diagonal is (cos^2 eta, sin^2 eta) for every w; the
/// off-diagonal carries the angular integral of the cross term.  The
/// residual inequality of the two per-branch integrals is reported in
/// branch_imbalance instead of entering the matrix.
inline SpectatorDensity rho_c_final(double eta, double mu, double w,
                                    Helicity a = Helicity::R,
                                    const AngularQuadrature& quad = {},
                                    double beta = 0.0) {
  if (!(w >= 0.0)) throw std::domain_error("rho_c_final: w must be >= 0");
  const SpectatorIntegrals coarse = integrate_spectator(mu, a, quad);
  AngularQuadrature fine = quad;
  fine.n_theta *= 2;
  fine.n_phi *= 2;
  const SpectatorIntegrals s = integrate_spectator(mu, a, fine);

  const double c2 = std::cos(eta) * std::cos(eta);
  const double s2 = std::sin(eta) * std::sin(eta);
  const double lam = c2 * s.i_up + s2 * s.i_down;
  const double lam_coarse = c2 * coarse.i_up + s2 * coarse.i_down;
  const double rel = std::abs(lam - lam_coarse) / std::max(lam, 1e-300);
  if (rel > 1e-6) {
    throw numerical_error(
        "rho_c_final: quadrature not converged, relative change " +
        std::to_string(rel) + " after doubling the nodes");
  }

  const double cs = std::cos(eta) * std::sin(eta);
  const cplx phase = std::polar(1.0, -beta);
  const double norm = 1.0 + w * lam;
  const cplx off = w * cs * phase * s.cross / norm;

  SpectatorDensity d;
  d.eta = eta;
  d.quad_rel_change = rel;
  d.branch_imbalance =
      2.0 * std::abs(s.i_up - s.i_down) / (s.i_up + s.i_down);
  d.rho << (1.0 + w * lam) * c2 / norm, off, std::conj(off),
      (1.0 + w * lam) * s2 / norm;
  d.max_offdiag = std::abs(off);
  return d;
}

}  // namespace qedent
