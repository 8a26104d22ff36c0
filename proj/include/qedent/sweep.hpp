// SPDX-License-Identifier: Apache-2.0
//
// Parameter sweeps over (theta, mu, eta, beta), CSV emission, and the
// built-in verification reports behind the CLI check commands.
#pragma once

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <future>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qedent/concurrence.hpp"
#include "qedent/spectator.hpp"
#include "qedent/states.hpp"

namespace qedent {

struct SweepRecord {
  double theta = 0.0;
  double mu = 0.0;
  double eta = 0.0;
  double beta = 0.0;
  double c_ab = 0.0;
  double c_ac = 0.0;
  double c_bc = 0.0;
  double c_ref = 0.0;
  double diff = 0.0;  // c_ref - c_ab, fixed at evaluation time
  std::string note;   // non-empty on sentinel rows; not serialized
};

struct SweepPlan {
  int theta_points = 720;
  double theta_min = 0.0;   // open endpoints; grid offset by half a step
  double theta_max = kTwoPi;
  std::vector<double> mu;
  std::vector<double> eta;
  double beta = 0.0;
  std::string out;

  void validate() const {
    if (theta_points < 2) {
      throw std::invalid_argument("plan: theta_points must be >= 2");
    }
    if (!(theta_min >= 0.0 && theta_max <= kTwoPi && theta_min < theta_max)) {
      throw std::invalid_argument("plan: theta range must lie within [0, 2pi]");
    }
    if (mu.empty() || eta.empty()) {
      throw std::invalid_argument("plan: mu and eta lists must be nonempty");
    }
    for (double m : mu) {
      if (!(m > 0.0)) throw std::invalid_argument("plan: mu must be positive");
    }
    for (double e : eta) {
      if (!(e >= 0.0 && e <= kPi)) {
        throw std::invalid_argument("plan: eta must lie in [0, pi]");
      }
    }
    if (!(beta >= 0.0 && beta < kTwoPi)) {
      throw std::invalid_argument("plan: beta must lie in [0, 2pi)");
    }
  }

  /// Uniform grid on (theta_min, theta_max), endpoints excluded by a
  /// half-step offset.
  std::vector<double> theta_grid() const {
    std::vector<double> g(theta_points);
    const double step = (theta_max - theta_min) / theta_points;
    for (int k = 0; k < theta_points; ++k) {
      g[k] = theta_min + (k + 0.5) * step;
    }
    return g;
  }
};

// --------------------------------------------------------------------------
// Plan files: flat key=value lines, '#' starts a comment.

inline std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    const double v = std::stod(item, &pos);
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) {
      throw std::invalid_argument("plan: bad number '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("plan: empty list");
  return out;
}

inline SweepPlan parse_plan(std::istream& in) {
  SweepPlan plan;
  std::string line;
  while (std::getline(in, line)) {
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto ltrim = line.find_first_not_of(" \t\r");
    if (ltrim == std::string::npos) continue;
    const auto rtrim = line.find_last_not_of(" \t\r");
    line = line.substr(ltrim, rtrim - ltrim + 1);
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("plan: expected key=value, got '" + line + "'");
    }
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "theta_points") {
      plan.theta_points = std::stoi(value);
    } else if (key == "theta_min") {
      plan.theta_min = std::stod(value);
    } else if (key == "theta_max") {
      plan.theta_max = std::stod(value);
    } else if (key == "mu") {
      plan.mu = parse_double_list(value);
    } else if (key == "eta") {
      plan.eta = parse_double_list(value);
    } else if (key == "beta") {
      plan.beta = std::stod(value);
    } else if (key == "out") {
      plan.out = value;
    } else {
      throw std::invalid_argument("plan: unknown key '" + key + "'");
    }
  }
  plan.validate();
  return plan;
}

inline SweepPlan load_plan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("plan: cannot open '" + path + "'");
  return parse_plan(in);
}

// --------------------------------------------------------------------------
// Point evaluation and the sweep driver.

/// One full pipeline evaluation: spinor-source amplitude table, reference
/// and tripartite final states, reductions, four concurrences.
inline SweepRecord evaluate_point(const BhabhaEvaluator& eval, double theta,
                                  double eta, double beta) {
  SweepRecord rec;
  rec.theta = theta;
  rec.mu = eval.mu();
  rec.eta = eta;
  rec.beta = beta;

  const HelicityAmplitudeTable table = eval.table(theta, 0.0);
  const ScatteringConfig cfg{eval.mu(), theta, eta, beta};

  const MultiQubitState tri = tripartite_final(cfg, table);
  const DensityMatrix rho = to_density(tri);
  rec.c_ab = concurrence(partial_trace(rho, {Subsystem::A, Subsystem::B})).value;
  rec.c_ac = concurrence(partial_trace(rho, {Subsystem::A, Subsystem::C})).value;
  rec.c_bc = concurrence(partial_trace(rho, {Subsystem::B, Subsystem::C})).value;

  const MultiQubitState ref = reference_final(cfg, table);
  rec.c_ref = concurrence(to_density(ref)).value;
  rec.diff = rec.c_ref - rec.c_ab;
  return rec;
}

inline SweepRecord evaluate_point(double mu, double theta, double eta,
                                  double beta = 0.0) {
  return evaluate_point(BhabhaEvaluator(mu), theta, eta, beta);
}

namespace detail {

/// Worker count for sweep evaluation; QEDENT_THREADS=1 forces serial runs.
inline int max_workers() {
  if (const char* env = std::getenv("QEDENT_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<int>(std::min<unsigned>(hw, 8));
}

inline void run_indexed(int n, const std::function<void(int)>& body) {
  const int workers = max_workers();
  if (workers <= 1 || n < 4 * workers) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::future<void>> futures;
  futures.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w] {
      for (int i = w; i < n; i += workers) body(i);
    }));
  }
  for (auto& f : futures) f.get();
}

}  // namespace detail

/// Records in deterministic theta-major order (theta, then mu, then eta).
/// Per-point numerical failures become sentinel rows (NaN concurrences and
/// a note) instead of aborting the sweep.
inline std::vector<SweepRecord> run_sweep(const SweepPlan& plan) {
  plan.validate();
  const std::vector<double> thetas = plan.theta_grid();
  const int n_mu = static_cast<int>(plan.mu.size());
  const int n_eta = static_cast<int>(plan.eta.size());
  const int total = static_cast<int>(thetas.size()) * n_mu * n_eta;

  std::vector<BhabhaEvaluator> evals;
  evals.reserve(plan.mu.size());
  for (double m : plan.mu) evals.emplace_back(m);

  std::vector<SweepRecord> records(total);
  detail::run_indexed(total, [&](int i) {
    const int it = i / (n_mu * n_eta);
    const int im = (i / n_eta) % n_mu;
    const int ie = i % n_eta;
    try {
      records[i] =
          evaluate_point(evals[im], thetas[it], plan.eta[ie], plan.beta);
    } catch (const std::exception& ex) {
      SweepRecord bad;
      bad.theta = thetas[it];
      bad.mu = plan.mu[im];
      bad.eta = plan.eta[ie];
      bad.beta = plan.beta;
      const double nan = std::numeric_limits<double>::quiet_NaN();
      bad.c_ab = bad.c_ac = bad.c_bc = bad.c_ref = bad.diff = nan;
      bad.note = ex.what();
      records[i] = bad;
    }
  });
  return records;
}

// --------------------------------------------------------------------------
// CSV: header `theta,mu,eta,beta,C_AB,C_AC,C_BC,C_REF,diff`, 17 significant
// digits, LF line endings.  Round-trips bit-exactly.

inline constexpr const char* kCsvHeader = "theta,mu,eta,beta,C_AB,C_AC,C_BC,C_REF,diff";

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_csv(const std::vector<SweepRecord>& records,
                      std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const SweepRecord& r : records) {
    out << format_double(r.theta) << ',' << format_double(r.mu) << ','
        << format_double(r.eta) << ',' << format_double(r.beta) << ','
        << format_double(r.c_ab) << ',' << format_double(r.c_ac) << ','
        << format_double(r.c_bc) << ',' << format_double(r.c_ref) << ','
        << format_double(r.diff) << '\n';
  }
}

inline std::vector<SweepRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) ||
      line.substr(0, std::strlen(kCsvHeader)) != kCsvHeader) {
    throw std::invalid_argument("csv: missing header");
  }
  std::vector<SweepRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    double vals[9];
    for (int i = 0; i < 9; ++i) {
      if (!std::getline(ss, cell, ',')) {
        throw std::invalid_argument("csv: short row '" + line + "'");
      }
      vals[i] = std::strtod(cell.c_str(), nullptr);
    }
    SweepRecord r;
    r.theta = vals[0];
    r.mu = vals[1];
    r.eta = vals[2];
    r.beta = vals[3];
    r.c_ab = vals[4];
    r.c_ac = vals[5];
    r.c_bc = vals[6];
    r.c_ref = vals[7];
    r.diff = vals[8];
    records.push_back(r);
  }
  return records;
}

// --------------------------------------------------------------------------
// Check reports.

/// Pipeline concurrences at large mu against the closed-form limits over a
/// (theta, eta) grid with eta in [0, pi/2].
struct LimitsReport {
  double mu_large = 0.0;
  double tol = 0.0;
  double max_dev_ab = 0.0;
  double max_dev_ac = 0.0;
  double max_dev_bc = 0.0;
  double max_dev_ref = 0.0;
  bool pass = false;

  double max_dev() const {
    return std::max({max_dev_ab, max_dev_ac, max_dev_bc, max_dev_ref});
  }
};

inline LimitsReport check_limits(double mu_large, double tol,
                                 int n_theta = 180, int n_eta = 9) {
  if (!(mu_large >= 50.0)) {
    throw std::domain_error("check_limits: mu_large must be >= 50");
  }
  LimitsReport rep;
  rep.mu_large = mu_large;
  rep.tol = tol;
  const BhabhaEvaluator eval(mu_large);
  std::vector<double> devs(n_theta * 4, 0.0);
  detail::run_indexed(n_theta, [&](int it) {
    const double theta = (it + 0.5) * kTwoPi / n_theta;
    double d[4] = {0, 0, 0, 0};
    for (int ie = 0; ie < n_eta; ++ie) {
      const double eta = ie * (kPi / 2.0) / (n_eta - 1);
      const SweepRecord r = evaluate_point(eval, theta, eta, 0.0);
      d[0] = std::max(d[0], std::abs(r.c_ab - limit_c_ab(eta, theta)));
      d[1] = std::max(d[1], std::abs(r.c_ac - limit_c_ac(eta, theta)));
      d[2] = std::max(d[2], std::abs(r.c_bc - limit_c_bc(eta, theta)));
      d[3] = std::max(d[3], std::abs(r.c_ref - limit_c_ref(eta, theta)));
    }
    for (int k = 0; k < 4; ++k) devs[it * 4 + k] = d[k];
  });
  for (int it = 0; it < n_theta; ++it) {
    rep.max_dev_ab = std::max(rep.max_dev_ab, devs[it * 4 + 0]);
    rep.max_dev_ac = std::max(rep.max_dev_ac, devs[it * 4 + 1]);
    rep.max_dev_bc = std::max(rep.max_dev_bc, devs[it * 4 + 2]);
    rep.max_dev_ref = std::max(rep.max_dev_ref, devs[it * 4 + 3]);
  }
  rep.pass = rep.max_dev() <= tol;
  return rep;
}

/// Reference-state concurrence with all incoming helicities flipped against
/// the theta -> 2pi - theta reflection of the standard construction.
struct MirrorReport {
  double mu = 0.0;
  double eta = 0.0;
  double max_reflection_dev = 0.0;
  double max_coincide_dev = 0.0;  // |flipped - standard| pointwise
  bool pass = false;
};

inline MirrorReport check_mirror(double mu, double eta, int n_theta = 720,
                                 double tol = 1e-9) {
  MirrorReport rep;
  rep.mu = mu;
  rep.eta = eta;
  const BhabhaEvaluator eval(mu);
  std::vector<double> c_std(n_theta), c_flip(n_theta);
  detail::run_indexed(n_theta, [&](int k) {
    const double theta = (k + 0.5) * kTwoPi / n_theta;
    const HelicityAmplitudeTable table = eval.table(theta, 0.0);
    const ScatteringConfig cfg{mu, theta, eta, 0.0};
    c_std[k] = concurrence(to_density(reference_final(cfg, table))).value;
    c_flip[k] =
        concurrence(to_density(reference_final(cfg, table, Helicity::L)))
            .value;
  });
  for (int k = 0; k < n_theta; ++k) {
    rep.max_reflection_dev = std::max(
        rep.max_reflection_dev, std::abs(c_flip[k] - c_std[n_theta - 1 - k]));
    rep.max_coincide_dev =
        std::max(rep.max_coincide_dev, std::abs(c_flip[k] - c_std[k]));
  }
  rep.pass = rep.max_reflection_dev <= tol;
  return rep;
}

/// Spectator no-signaling: off-diagonals of the normalized rho_C^f and the
/// deviation of its diagonal from (cos^2 eta, sin^2 eta), swept over eta,
/// coupling weights and two pole cutoffs.
struct SpectatorReport {
  struct Row {
    double mu = 0.0;
    double eta = 0.0;
    double w = 0.0;
    double theta_min = 0.0;
    double max_offdiag = 0.0;
    double max_diag_dev = 0.0;
    double branch_imbalance = 0.0;
  };
  std::vector<Row> rows;
  double max_offdiag = 0.0;
  double max_diag_dev = 0.0;
  double max_cutoff_variation = 0.0;  // across the two cutoffs
  bool pass = false;
};

inline SpectatorReport check_spectator(
    const std::vector<double>& mu_list,
    const std::vector<double>& eta_list = {kPi / 8.0, kPi / 4.0,
                                           3.0 * kPi / 8.0},
    const std::vector<double>& w_list = {0.0, 1.0, 100.0},
    const std::vector<double>& cutoffs = {1e-3, 1e-4}, double tol = 1e-8) {
  SpectatorReport rep;
  for (double mu : mu_list) {
    for (double eta : eta_list) {
      for (double w : w_list) {
        std::vector<double> offdiags;
        for (double cut : cutoffs) {
          AngularQuadrature quad;
          quad.theta_min = cut;
          const SpectatorDensity d =
              rho_c_final(eta, mu, w, Helicity::R, quad);
          const double c2 = std::cos(eta) * std::cos(eta);
          const double s2 = std::sin(eta) * std::sin(eta);
          const double diag_dev =
              std::max(std::abs(d.rho(0, 0).real() - c2),
                       std::abs(d.rho(1, 1).real() - s2));
          rep.rows.push_back({mu, eta, w, cut, d.max_offdiag, diag_dev,
                              d.branch_imbalance});
          rep.max_offdiag = std::max(rep.max_offdiag, d.max_offdiag);
          rep.max_diag_dev = std::max(rep.max_diag_dev, diag_dev);
          offdiags.push_back(d.max_offdiag);
        }
        for (size_t i = 1; i < offdiags.size(); ++i) {
          rep.max_cutoff_variation = std::max(
              rep.max_cutoff_variation, std::abs(offdiags[i] - offdiags[0]));
        }
      }
    }
  }
  rep.pass = rep.max_offdiag < tol && rep.max_diag_dev < tol &&
             rep.max_cutoff_variation < tol;
  return rep;
}

}  // namespace qedent
