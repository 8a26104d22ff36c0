// SPDX-License-Identifier: Apache-2.0
//
// Polarized tree-level Bhabha amplitudes, evaluated two independent ways:
// by explicit spinor contraction of the s- and t-channel diagrams and by
// closed-form expressions in (mu, theta).  The two routes are mutual
// oracles; e^2 is set to 1 throughout.
#pragma once

#include <array>
#include <cmath>

#include "qedent/dirac.hpp"

namespace qedent {

/// Angular distance below which evaluation near the t-channel pole
/// (theta -> 0 or 2pi) is refused instead of returning huge values.
inline constexpr double kPoleGuard = 1e-6;

enum class AmplitudeSource { closed, spinor };

inline void require_off_pole(double theta) {
  if (theta < 0.0 || theta > kTwoPi) {
    throw std::domain_error("scattering angle must lie in (0, 2pi)");
  }
  if (theta < kPoleGuard || kTwoPi - theta < kPoleGuard) {
    throw pole_error("t-channel pole: theta within 1e-6 rad of 0 or 2pi");
  }
}

/// CM kinematics: incoming along +-z, outgoing at (theta, phi) and its
/// antipode.  s = (p1+p2)^2, t = (p3-p1)^2, in units of m^2.
struct ChannelKinematics {
  FourMomentum p1, p2, p3, p4;
  double s = 0.0;
  double t = 0.0;
};

inline ChannelKinematics make_channel_kinematics(double mu, double theta,
                                                 double phi = 0.0) {
  require_off_pole(theta);
  ChannelKinematics k;
  k.p1 = make_momentum(mu, 0.0, 0.0);
  k.p2 = reversed(k.p1);
  k.p3 = make_momentum(mu, theta, phi);
  k.p4 = reversed(k.p3);
  k.s = 4.0 * (1.0 + mu * mu);
  const double sh = std::sin(0.5 * theta);
  k.t = -4.0 * mu * mu * sh * sh;
  return k;
}

/// Closed forms of the sixteen polarized amplitudes.  Real by construction;
/// defined at phi = 0.
inline double amplitude_closed(Helicity a, Helicity b, Helicity r, Helicity s,
                               double mu, double theta) {
  if (!(mu > 0.0)) {
    throw std::domain_error("amplitude_closed: mu must be positive");
  }
  require_off_pole(theta);
  const double m2 = mu * mu;
  const double x = std::cos(theta);
  const double sh = std::sin(0.5 * theta);
  const double ch = std::cos(0.5 * theta);
  const double csc2 = 1.0 / (sh * sh);
  const double cot = ch / sh;
  const double helicity_flip = (1.0 + m2 * x) * cot / (m2 * std::sqrt(1.0 + m2));

  if (a == b) {  // RR or LL incoming
    if (r == a && s == b) {
      return (2.0 + 11.0 * m2 + 8.0 * m2 * m2 + 2.0 * x +
              m2 * std::cos(2.0 * theta)) *
             csc2 / (4.0 * m2 * (1.0 + m2));
    }
    if (r != a && s != b) {
      return (1.0 + m2 * (1.0 + x)) / (m2 * (1.0 + m2));
    }
    // one final helicity flipped: sign differs between RR and LL rows
    return -sign_of(a) * helicity_flip;
  }
  // RL or LR incoming
  if (r == s) {
    return sign_of(r) * helicity_flip;
  }
  if (r == a && s == b) {
    return (1.0 + m2 * (1.0 + x)) * cot * cot / m2;
  }
  return 1.0 - x - 1.0 / m2;
}

/// All sixteen amplitudes at one kinematic point.
struct HelicityAmplitudeTable {
  std::array<cplx, 16> m{};
  double mu = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  AmplitudeSource source = AmplitudeSource::spinor;

  static constexpr int idx(Helicity a, Helicity b, Helicity r, Helicity s) {
    return index_of(a) << 3 | index_of(b) << 2 | index_of(r) << 1 |
           index_of(s);
  }
  cplx operator()(Helicity a, Helicity b, Helicity r, Helicity s) const {
    return m[idx(a, b, r, s)];
  }
  cplx& entry(Helicity a, Helicity b, Helicity r, Helicity s) {
    return m[idx(a, b, r, s)];
  }
  double max_abs() const {
    double v = 0.0;
    for (const cplx& e : m) v = std::max(v, std::abs(e));
    return v;
  }
};

/// Evaluates spinor-contraction amplitudes at fixed mu; the incoming-side
/// currents are computed once.  Cheap to copy around sweep workers.
class BhabhaEvaluator {
 public:
  explicit BhabhaEvaluator(double mu) : mu_(mu) {
    if (!(mu > 0.0)) {
      throw std::domain_error("BhabhaEvaluator: mu must be positive");
    }
    const FourMomentum p1 = make_momentum(mu, 0.0, 0.0);
    s_mandel_ = 4.0 * (1.0 + mu * mu);
    const auto& gs = gamma_set();
    for (int h = 0; h < 2; ++h) {
      u1_[h] = spinor_u(static_cast<Helicity>(h), p1).c;
      const DiracSpinor v2 = spinor_v(static_cast<Helicity>(h), p1,
                                      Direction::opposite);
      v2bar_[h] = dirac_adjoint(v2);
    }
    for (int b = 0; b < 2; ++b) {
      for (int a = 0; a < 2; ++a) {
        for (int m = 0; m < 4; ++m) {
          in_current_[b][a][m] = v2bar_[b] * gs.g[m] * u1_[a];
        }
      }
    }
  }

  double mu() const { return mu_; }

  /// Full sixteen-entry table at (theta, phi).
  HelicityAmplitudeTable table(double theta, double phi) const {
    require_off_pole(theta);
    const auto& gs = gamma_set();
    const FourMomentum p3 = make_momentum(mu_, theta, phi);
    const double sh = std::sin(0.5 * theta);
    const double t_mandel = -4.0 * mu_ * mu_ * sh * sh;

    Vector4c v4[2];
    RowVector4c u3bar[2];
    for (int h = 0; h < 2; ++h) {
      v4[h] = spinor_v(static_cast<Helicity>(h), p3, Direction::opposite).c;
      u3bar[h] = dirac_adjoint(spinor_u(static_cast<Helicity>(h), p3));
    }

    cplx out_current[2][2][4];   // ubar(r) gamma^m v(s)
    cplx t_pos[2][2][4];         // vbar(b) gamma^m v(s)
    cplx t_ele[2][2][4];         // ubar(r) gamma^m u(a)
    for (int m = 0; m < 4; ++m) {
      const Matrix4c& g = gs.g[m];
      for (int i = 0; i < 2; ++i) {
        const Vector4c gv4 = g * v4[i];
        const Vector4c gu1 = g * u1_[i];
        for (int j = 0; j < 2; ++j) {
          out_current[j][i][m] = u3bar[j] * gv4;
          t_pos[j][i][m] = v2bar_[j] * gv4;
          t_ele[j][i][m] = u3bar[j] * gu1;
        }
      }
    }

    HelicityAmplitudeTable tab;
    tab.mu = mu_;
    tab.theta = theta;
    tab.phi = phi;
    tab.source = AmplitudeSource::spinor;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        for (int r = 0; r < 2; ++r) {
          for (int s = 0; s < 2; ++s) {
            const cplx s_term = contract(in_current_[b][a], out_current[r][s]);
            const cplx t_term = contract(t_pos[b][s], t_ele[r][a]);
            tab.m[HelicityAmplitudeTable::idx(
                static_cast<Helicity>(a), static_cast<Helicity>(b),
                static_cast<Helicity>(r), static_cast<Helicity>(s))] =
                s_term / s_mandel_ - t_term / t_mandel;
          }
        }
      }
    }
    return tab;
  }

 private:
  static cplx contract(const cplx (&x)[4], const cplx (&y)[4]) {
    return x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
  }

  double mu_;
  double s_mandel_;
  Vector4c u1_[2];
  RowVector4c v2bar_[2];
  cplx in_current_[2][2][4];
};

/// Single spinor-contraction amplitude.
inline cplx amplitude_spinor(Helicity a, Helicity b, Helicity r, Helicity s,
                             double mu, double theta, double phi = 0.0) {
  return BhabhaEvaluator(mu).table(theta, phi)(a, b, r, s);
}

inline HelicityAmplitudeTable amplitude_table(double mu, double theta,
                                              double phi,
                                              AmplitudeSource source) {
  if (source == AmplitudeSource::spinor) {
    return BhabhaEvaluator(mu).table(theta, phi);
  }
  if (phi != 0.0) {
    throw std::domain_error("closed-form table is defined only at phi = 0");
  }
  HelicityAmplitudeTable tab;
  tab.mu = mu;
  tab.theta = theta;
  tab.phi = 0.0;
  tab.source = AmplitudeSource::closed;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int r = 0; r < 2; ++r) {
        for (int s = 0; s < 2; ++s) {
          tab.m[HelicityAmplitudeTable::idx(
              static_cast<Helicity>(a), static_cast<Helicity>(b),
              static_cast<Helicity>(r), static_cast<Helicity>(s))] =
              amplitude_closed(static_cast<Helicity>(a),
                               static_cast<Helicity>(b),
                               static_cast<Helicity>(r),
                               static_cast<Helicity>(s), mu, theta);
        }
      }
    }
  }
  return tab;
}

}  // namespace qedent
