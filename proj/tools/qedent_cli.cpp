// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: parameter sweeps to CSV and the built-in
// verification commands.  Exit codes: 0 success, 1 a check command found
// violations, 2 usage or validation error.
#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "qedent/sweep.hpp"

namespace {

int write_records(const std::vector<qedent::SweepRecord>& records,
                  const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << path << "'\n";
    return 2;
  }
  qedent::write_csv(records, out);
  int sentinels = 0;
  for (const auto& r : records) {
    if (!r.note.empty()) {
      ++sentinels;
      std::cerr << "note: sentinel row at theta=" << r.theta << " mu=" << r.mu
                << " eta=" << r.eta << ": " << r.note << "\n";
    }
  }
  std::cout << records.size() << " records -> " << path;
  if (sentinels > 0) std::cout << " (" << sentinels << " sentinel rows)";
  std::cout << "\n";
  return 0;
}

int run_plan(qedent::SweepPlan plan, const std::string& out_override) {
  if (!out_override.empty()) plan.out = out_override;
  if (plan.out.empty()) plan.out = "sweep.csv";
  plan.validate();
  return write_records(qedent::run_sweep(plan), plan.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree-level Bhabha helicity amplitudes and entanglement "
               "distribution across the AB/AC/BC bipartitions"};
  app.require_subcommand(1);

  // --- sweep ---------------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "run a (theta, mu, eta) sweep");
  int theta_points = 720;
  std::vector<double> mu_list, eta_list;
  double beta = 0.0;
  std::string out_path, plan_path;
  sweep->add_option("--theta-points", theta_points, "theta grid size");
  sweep->add_option("--mu", mu_list, "mu values")->delimiter(',');
  sweep->add_option("--eta", eta_list, "eta values")->delimiter(',');
  sweep->add_option("--beta", beta, "relative phase beta");
  sweep->add_option("--out", out_path, "output CSV path");
  sweep->add_option("--plan", plan_path, "plan file (key=value lines)");

  // --- check-limits ----------------------------------------------------------
  auto* limits = app.add_subcommand(
      "check-limits", "pipeline vs closed-form relativistic limits");
  double mu_large = 1000.0, tol = 1e-3;
  limits->add_option("--mu-large", mu_large, "large mu value (>= 50)");
  limits->add_option("--tol", tol, "max-abs tolerance");

  // --- check-mirror ----------------------------------------------------------
  auto* mirror = app.add_subcommand(
      "check-mirror", "flipped-helicity construction vs theta reflection");
  double m_mu = 2.0, m_eta = qedent::kPi / 8.0;
  int m_points = 720;
  mirror->add_option("--mu", m_mu, "mu value");
  mirror->add_option("--eta", m_eta, "eta value");
  mirror->add_option("--theta-points", m_points, "theta grid size");

  // --- check-spectator -------------------------------------------------------
  auto* spect = app.add_subcommand(
      "check-spectator", "spectator reduced density matrix preservation");
  std::vector<double> s_mu = {0.5298833894399929, 1.0, 5.0, 100.0};
  spect->add_option("--mu", s_mu, "mu values")->delimiter(',');

  // --- figure ----------------------------------------------------------------
  auto* figure = app.add_subcommand("figure", "run a shipped figure plan");
  int fig_id = 0;
  std::string plans_dir = "plans", fig_out;
  figure->add_option("id", fig_id, "figure id (2-11)")->required();
  figure->add_option("--plans-dir", plans_dir, "directory with plan files");
  figure->add_option("--out", fig_out, "output CSV path override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*sweep) {
      qedent::SweepPlan plan;
      if (!plan_path.empty()) {
        plan = qedent::load_plan(plan_path);
      } else {
        plan.mu = mu_list;
        plan.eta = eta_list;
      }
      if (sweep->count("--theta-points")) plan.theta_points = theta_points;
      if (sweep->count("--beta")) plan.beta = beta;
      return run_plan(plan, out_path);
    }

    if (*limits) {
      const qedent::LimitsReport rep = qedent::check_limits(mu_large, tol);
      std::printf("check-limits mu=%g tol=%g\n", rep.mu_large, rep.tol);
      std::printf("  max |C_AB  - limit| = %.3e\n", rep.max_dev_ab);
      std::printf("  max |C_AC  - limit| = %.3e\n", rep.max_dev_ac);
      std::printf("  max |C_BC  - limit| = %.3e\n", rep.max_dev_bc);
      std::printf("  max |C_REF - limit| = %.3e\n", rep.max_dev_ref);
      std::printf("%s\n", rep.pass ? "PASS" : "FAIL");
      return rep.pass ? 0 : 1;
    }

    if (*mirror) {
      const qedent::MirrorReport rep = qedent::check_mirror(m_mu, m_eta, m_points);
      std::printf("check-mirror mu=%g eta=%g\n", rep.mu, rep.eta);
      std::printf("  max |C_flip(theta) - C(2pi-theta)| = %.3e\n",
                  rep.max_reflection_dev);
      std::printf("  max |C_flip(theta) - C(theta)|     = %.3e\n",
                  rep.max_coincide_dev);
      std::printf("%s\n", rep.pass ? "PASS" : "FAIL");
      return rep.pass ? 0 : 1;
    }

    if (*spect) {
      const qedent::SpectatorReport rep = qedent::check_spectator(s_mu);
      std::printf("check-spectator\n");
      for (const auto& row : rep.rows) {
        std::printf(
            "  mu=%-8g eta=%-8.5f w=%-5g cutoff=%-6g off-diag=%.3e "
            "diag-dev=%.3e branch-imbalance=%.3e\n",
            row.mu, row.eta, row.w, row.theta_min, row.max_offdiag,
            row.max_diag_dev, row.branch_imbalance);
      }
      std::printf("  max off-diag %.3e, max diag dev %.3e, cutoff variation %.3e\n",
                  rep.max_offdiag, rep.max_diag_dev, rep.max_cutoff_variation);
      std::printf("%s\n", rep.pass ? "PASS" : "FAIL");
      return rep.pass ? 0 : 1;
    }

    if (*figure) {
      const auto path = std::filesystem::path(plans_dir) /
                        ("fig" + std::to_string(fig_id) + ".plan");
      if (!std::filesystem::exists(path)) {
        std::cerr << "error: no plan file " << path << "\n";
        return 2;
      }
      qedent::SweepPlan plan = qedent::load_plan(path.string());
      if (plan.out.empty()) plan.out = "fig" + std::to_string(fig_id) + ".csv";
      return run_plan(plan, fig_out);
    }
  } catch (const std::logic_error& e) {
    // invalid_argument / domain_error / out_of_range: bad usage or inputs
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
