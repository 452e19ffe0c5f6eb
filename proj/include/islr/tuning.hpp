#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "islr/solver.hpp"

namespace islr {

struct TuningRule {
  double beta0 = 1.0;
  double beta1 = 1.0;
  double c = 0.5;  // in (0,1) when penalties are to be derived
  double sigma = 0.0;
};

// lambda_i = beta_i * sigma.
std::pair<double, double> lambdas_from_sigma(const TuningRule& rule);

// a0 = c/lambda0; a1 = (1 - a0*lambda0)/lambda1 backed off by a relative
// margin of 1e-6 so the triangle inequality stays strict. Throws
// DegenerateLambda when either lambda is zero (set the matching a to 0
// yourself in that case).
std::pair<double, double> penalties_from_c(double c, double lambda0, double lambda1);

struct GridReport {
  struct Row {
    double beta0, beta1, lambda0, lambda1, rse;
  };
  std::vector<Row> rows;       // beta0-major iteration order
  std::size_t best_index = 0;  // argmin rse; ties keep the lexicographically smaller pair

  // Header line `beta0,beta1,lambda0,lambda1,rse`, then one row per cell.
  std::string to_csv() const;
};

// Scores solve() for every (beta0, beta1) against X_ref by RSE. c > 0
// derives (a0, a1) via penalties_from_c; c = 0 runs the convex baseline.
// A zero lambda on either axis forces the matching a to 0.
GridReport grid_search(const Mat& Y, const Mat& X_ref, const std::vector<double>& beta0_list,
                       const std::vector<double>& beta1_list, double c, double sigma,
                       const SolverConfig& defaults);

// Fills cfg's penalty a-values from c, given the lambdas already set on cfg.
// c = 0 zeroes both (convex baseline); a zero lambda forces its a to 0 and
// hands the whole budget to the other axis.
void derive_penalties(SolverConfig& cfg, double c);

// Config assembly shared by grid_search and the CLI: lambdas from
// (beta, sigma), penalties from c on top of `defaults` (mu/eps/max_iter and
// penalty kinds are taken from there).
SolverConfig make_tuned_config(double beta0, double beta1, double c, double sigma,
                               const SolverConfig& defaults);

}  // namespace islr
