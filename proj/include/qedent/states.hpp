// SPDX-License-Identifier: Apache-2.0
//
// Two- and three-qubit spin states before and after the scattering, their
// density matrices and partial traces.  Basis ordering is A (x) B (x) C with
// R -> 0 and L -> 1; the basis index carries A in the most significant bit.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cassert>
#include <vector>

#include "qedent/amplitudes.hpp"

namespace qedent {

enum class Subsystem : int { A = 0, B = 1, C = 2 };

struct ScatteringConfig {
  double mu = 1.0;
  double theta = kPi;
  double eta = 0.0;
  double beta = 0.0;

  void validate() const {
    if (!(mu > 0.0)) throw std::domain_error("config: mu must be positive");
    if (!(theta > 0.0 && theta < kTwoPi)) {
      throw std::domain_error("config: theta must lie in (0, 2pi)");
    }
    if (!(eta >= 0.0 && eta <= kPi)) {
      throw std::domain_error("config: eta must lie in [0, pi]");
    }
    if (!(beta >= 0.0 && beta < kTwoPi)) {
      throw std::domain_error("config: beta must lie in [0, 2pi)");
    }
  }
};

struct MultiQubitState {
  Eigen::VectorXcd amps;
  int qubits = 0;
  bool normalized = false;

  double norm() const { return amps.norm(); }
};

namespace detail {

/// Normalize in place; `scale` is the magnitude of the inputs the state was
/// built from, so an all-cancelled state is recognized as degenerate rather
/// than renormalized into noise.
inline void normalize_state(MultiQubitState& st, double scale) {
  const double n = st.amps.norm();
  if (!(n > 1e-12 * std::max(scale, 1e-300))) {
    throw degenerate_state_error("state has zero norm at this kinematic point");
  }
  st.amps /= n;
  st.normalized = true;
}

}  // namespace detail

/// |R>_A (x) (cos eta |R>_B + e^{i beta} sin eta |L>_B).
inline MultiQubitState reference_initial(double eta, double beta = 0.0) {
  MultiQubitState st;
  st.qubits = 2;
  st.amps = Eigen::VectorXcd::Zero(4);
  st.amps[0] = std::cos(eta);
  st.amps[1] = std::polar(1.0, beta) * std::sin(eta);
  st.normalized = true;
  return st;
}

/// Post-selected final state at fixed theta, normalized:
/// sum_rs [cos eta M(a0,a0;rs) + e^{i beta} sin eta M(a0,~a0;rs)] |r s>.
/// `incoming` = L gives the construction with all incoming helicities
/// flipped (the mirror configuration).
inline MultiQubitState reference_final(const ScatteringConfig& cfg,
                                       const HelicityAmplitudeTable& table,
                                       Helicity incoming = Helicity::R) {
  cfg.validate();
  const cplx wc = std::cos(cfg.eta);
  const cplx ws = std::polar(1.0, cfg.beta) * std::sin(cfg.eta);
  MultiQubitState st;
  st.qubits = 2;
  st.amps = Eigen::VectorXcd::Zero(4);
  for (int r = 0; r < 2; ++r) {
    for (int s = 0; s < 2; ++s) {
      const auto hr = static_cast<Helicity>(r);
      const auto hs = static_cast<Helicity>(s);
      st.amps[r << 1 | s] = wc * table(incoming, incoming, hr, hs) +
                            ws * table(incoming, flip(incoming), hr, hs);
    }
  }
  detail::normalize_state(st, table.max_abs());
  return st;
}

/// |R>_A (x) (cos eta |RR>_BC + e^{i beta} sin eta |LL>_BC).
inline MultiQubitState tripartite_initial(double eta, double beta = 0.0) {
  MultiQubitState st;
  st.qubits = 3;
  st.amps = Eigen::VectorXcd::Zero(8);
  st.amps[0b000] = std::cos(eta);
  st.amps[0b011] = std::polar(1.0, beta) * std::sin(eta);
  st.normalized = true;
  return st;
}

/// sum_rs [cos eta M(a0,a0;rs)|r s>_AB |R>_C
///         + e^{i beta} sin eta M(a0,~a0;rs)|r s>_AB |L>_C], normalized.
inline MultiQubitState tripartite_final(const ScatteringConfig& cfg,
                                        const HelicityAmplitudeTable& table,
                                        Helicity incoming = Helicity::R) {
  cfg.validate();
  const cplx wc = std::cos(cfg.eta);
  const cplx ws = std::polar(1.0, cfg.beta) * std::sin(cfg.eta);
  const int spectator_up = index_of(incoming);
  MultiQubitState st;
  st.qubits = 3;
  st.amps = Eigen::VectorXcd::Zero(8);
  for (int r = 0; r < 2; ++r) {
    for (int s = 0; s < 2; ++s) {
      const auto hr = static_cast<Helicity>(r);
      const auto hs = static_cast<Helicity>(s);
      st.amps[r << 2 | s << 1 | spectator_up] +=
          wc * table(incoming, incoming, hr, hs);
      st.amps[r << 2 | s << 1 | (1 - spectator_up)] +=
          ws * table(incoming, flip(incoming), hr, hs);
    }
  }
  detail::normalize_state(st, table.max_abs());
  return st;
}

struct DensityMatrix {
  Eigen::MatrixXcd mat;
  std::vector<Subsystem> labels;

  int dim() const { return static_cast<int>(mat.rows()); }

#ifndef NDEBUG
  /// Debug harness: every constructed density matrix must be Hermitian,
  /// unit trace and PSD within tight tolerances.
  void check_invariants() const {
    assert((mat - mat.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    assert(std::abs(mat.trace().real() - 1.0) < 1e-12 &&
           std::abs(mat.trace().imag()) < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat,
                                                       Eigen::EigenvaluesOnly);
    assert(es.eigenvalues().minCoeff() > -1e-10);
  }
#else
  void check_invariants() const {}
#endif
};

inline std::vector<Subsystem> default_labels(int qubits) {
  if (qubits == 2) return {Subsystem::A, Subsystem::B};
  return {Subsystem::A, Subsystem::B, Subsystem::C};
}

/// Rank-1 projector |psi><psi| of a normalized pure state.
inline DensityMatrix to_density(const MultiQubitState& st,
                                std::vector<Subsystem> labels = {}) {
  const double n = st.norm();
  if (!(n > 1e-150)) {
    throw degenerate_state_error("to_density: zero state");
  }
  DensityMatrix rho;
  rho.labels = labels.empty() ? default_labels(st.qubits) : std::move(labels);
  const Eigen::VectorXcd psi = st.amps / n;
  rho.mat = psi * psi.adjoint();
  rho.check_invariants();
  return rho;
}

/// Trace out every subsystem not listed in `keep`.  The kept labels stay in
/// their original order.
inline DensityMatrix partial_trace(const DensityMatrix& rho,
                                   const std::vector<Subsystem>& keep) {
  const int n = static_cast<int>(rho.labels.size());
  std::vector<int> keep_pos;
  for (Subsystem k : keep) {
    auto it = std::find(rho.labels.begin(), rho.labels.end(), k);
    if (it == rho.labels.end()) {
      throw std::domain_error("partial_trace: keep labels must be a subset");
    }
    keep_pos.push_back(static_cast<int>(it - rho.labels.begin()));
  }
  std::vector<int> traced_pos;
  for (int q = 0; q < n; ++q) {
    if (std::find(keep_pos.begin(), keep_pos.end(), q) == keep_pos.end()) {
      traced_pos.push_back(q);
    }
  }

  const int nk = static_cast<int>(keep_pos.size());
  const int nt = n - nk;
  const int dk = 1 << nk;
  const int dt = 1 << nt;

  // bit q of a full index sits at position (n - 1 - q) from the LSB
  const auto scatter = [n](const std::vector<int>& pos, int bits) {
    int out = 0;
    for (size_t j = 0; j < pos.size(); ++j) {
      const int bit = (bits >> (pos.size() - 1 - j)) & 1;
      out |= bit << (n - 1 - pos[j]);
    }
    return out;
  };

  DensityMatrix out;
  out.labels = keep;
  out.mat = Eigen::MatrixXcd::Zero(dk, dk);
  for (int i = 0; i < dk; ++i) {
    for (int j = 0; j < dk; ++j) {
      const int bi = scatter(keep_pos, i);
      const int bj = scatter(keep_pos, j);
      cplx acc = 0.0;
      for (int t = 0; t < dt; ++t) {
        const int bt = scatter(traced_pos, t);
        acc += rho.mat(bi | bt, bj | bt);
      }
      out.mat(i, j) = acc;
    }
  }
  out.check_invariants();
  return out;
}

}  // namespace qedent
