#include "islr/tuning.hpp"

#include <charconv>
#include <tuple>

#include "islr/errors.hpp"
#include "islr/metrics.hpp"

namespace islr {

std::pair<double, double> lambdas_from_sigma(const TuningRule& rule) {
  return {rule.beta0 * rule.sigma, rule.beta1 * rule.sigma};
}

std::pair<double, double> penalties_from_c(double c, double lambda0, double lambda1) {
  if (lambda0 == 0.0 || lambda1 == 0.0)
    throw DegenerateLambda("penalties_from_c: both lambdas must be positive");
  if (!(c > 0.0 && c < 1.0)) throw BadParams("penalties_from_c: c must lie in (0,1)");
  const double a0 = c / lambda0;
  // The boundary value (1 - a0*lambda0)/lambda1 would sit exactly on the edge
  // of the admissible region; back off so the strict inequality holds.
  const double a1 = (1.0 - a0 * lambda0) * (1.0 - 1e-6) / lambda1;
  return {a0, a1};
}

void derive_penalties(SolverConfig& cfg, double c) {
  if (c == 0.0 || (cfg.lambda0 == 0.0 && cfg.lambda1 == 0.0)) {
    cfg.penalty0.a = 0.0;
    cfg.penalty1.a = 0.0;
  } else if (cfg.lambda0 > 0.0 && cfg.lambda1 > 0.0) {
    std::tie(cfg.penalty0.a, cfg.penalty1.a) = penalties_from_c(c, cfg.lambda0, cfg.lambda1);
  } else if (cfg.lambda0 == 0.0) {
    // Degenerate axis: its a is forced to 0 and the whole budget a1*lambda1
    // goes to the surviving penalty, margin-adjusted as usual.
    cfg.penalty0.a = 0.0;
    cfg.penalty1.a = (1.0 - 1e-6) / cfg.lambda1;
  } else {
    cfg.penalty1.a = 0.0;
    cfg.penalty0.a = c / cfg.lambda0;
  }
}

SolverConfig make_tuned_config(double beta0, double beta1, double c, double sigma,
                               const SolverConfig& defaults) {
  SolverConfig cfg = defaults;
  TuningRule rule;
  rule.beta0 = beta0;
  rule.beta1 = beta1;
  rule.c = c;
  rule.sigma = sigma;
  std::tie(cfg.lambda0, cfg.lambda1) = lambdas_from_sigma(rule);
  derive_penalties(cfg, c);
  return cfg;
}

GridReport grid_search(const Mat& Y, const Mat& X_ref, const std::vector<double>& beta0_list,
                       const std::vector<double>& beta1_list, double c, double sigma,
                       const SolverConfig& defaults) {
  if (beta0_list.empty() || beta1_list.empty())
    throw BadParams("grid_search: beta lists must be nonempty");
  if (Y.rows() != X_ref.rows() || Y.cols() != X_ref.cols())
    throw BadParams("grid_search: X_ref shape must match Y");

  GridReport report;
  report.rows.reserve(beta0_list.size() * beta1_list.size());
  double best_rse = 0.0;
  for (double b0 : beta0_list) {
    for (double b1 : beta1_list) {
      const SolverConfig cfg = make_tuned_config(b0, b1, c, sigma, defaults);
      const SolveResult res = solve(Y, cfg);
      GridReport::Row row{b0, b1, cfg.lambda0, cfg.lambda1, rse(res.X, X_ref)};
      const bool first = report.rows.empty();
      // Strict improvement wins; equal scores keep the smaller (beta0, beta1).
      const auto& cur = first ? row : report.rows[report.best_index];
      if (first || row.rse < best_rse ||
          (row.rse == best_rse &&
           std::tie(row.beta0, row.beta1) < std::tie(cur.beta0, cur.beta1))) {
        best_rse = row.rse;
        report.best_index = report.rows.size();
      }
      report.rows.push_back(row);
    }
  }
  return report;
}

namespace {

// Shortest decimal form that round-trips back to the same double.
void append_double(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

}  // namespace

std::string GridReport::to_csv() const {
  std::string out = "beta0,beta1,lambda0,lambda1,rse\n";
  for (const auto& r : rows) {
    append_double(out, r.beta0);
    out += ',';
    append_double(out, r.beta1);
    out += ',';
    append_double(out, r.lambda0);
    out += ',';
    append_double(out, r.lambda1);
    out += ',';
    append_double(out, r.rse);
    out += '\n';
  }
  return out;
}

}  // namespace islr
