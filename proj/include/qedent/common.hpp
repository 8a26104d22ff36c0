// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qedent {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Helicity labels: R is the +1 eigenvalue of the helicity operator, L is -1.
/// In the computational basis R maps to |0> and L to |1>.
enum class Helicity : int { R = 0, L = 1 };

constexpr Helicity flip(Helicity h) noexcept {
  return h == Helicity::R ? Helicity::L : Helicity::R;
}

constexpr int index_of(Helicity h) noexcept { return static_cast<int>(h); }

constexpr double sign_of(Helicity h) noexcept {
  return h == Helicity::R ? +1.0 : -1.0;
}

/// Scattering angle hit the t-channel pole (theta at 0 or 2pi).
struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// A state came out with zero norm and cannot be normalized.
struct degenerate_state_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerical quality fell below a hard threshold (eigenvalue residues,
/// quadrature non-convergence).
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qedent
