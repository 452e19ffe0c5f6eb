#pragma once

#include <optional>
#include <string>
#include <vector>

#include "islr/linalg.hpp"
#include "islr/penalty.hpp"

namespace islr {

struct SolverConfig {
  double lambda0 = 0.0;  // singular-value weight
  double lambda1 = 0.0;  // entrywise weight
  PenaltyParams penalty0;
  PenaltyParams penalty1;
  double mu = 1.5;
  double eps = 1e-5;
  int max_iter = 500;
};

struct ValidationOutcome {
  bool accepted = false;
  // a0*lambda0 + a1*lambda1; admissible iff in [0,1).
  double triangle_value = 0.0;
  double triangle_margin = 0.0;  // 1 - triangle_value
  double mu_margin = 0.0;        // mu - 1
  std::string message;
};

ValidationOutcome validate_config(const SolverConfig& cfg);

// 0.5*||Y-X||_F^2 + lambda0*sum phi(sigma_i(X)) + lambda1*sum phi(X_ij).
double objective(const Mat& X, const Mat& Y, const SolverConfig& cfg);
double objective(const CMat& X, const CMat& Y, const SolverConfig& cfg);

struct AdmmState {
  Mat X, Z, D;
};

// One sweep of the splitting iteration, exactly in this order:
//   X <- prox((Y + mu*(Z+D)) / (1+mu), lambda1/(1+mu))
//   Z <- sv_shrink(X - D, lambda0/mu)
//   D <- D - (X - Z)
void admm_step(AdmmState& state, const Mat& Y, const SolverConfig& cfg);

struct SolveResult {
  Mat X;
  std::vector<double> objective_history;  // one entry per iteration
  int iterations = 0;
  bool converged = false;
};

struct CSolveResult {
  CMat X;
  std::vector<double> objective_history;
  int iterations = 0;
  bool converged = false;
};

// Iterates from Z = D = 0 (or the given init) until
// |F_k - F_{k-1}| < eps*|F_k| or max_iter. lambda0 = lambda1 = 0 returns Y
// directly in zero iterations.
struct SolveInit {
  Mat Z, D;
};

SolveResult solve(const Mat& Y, const SolverConfig& cfg,
                  const std::optional<SolveInit>& init = std::nullopt);

// Complex variant used by the spectrogram pipeline: entrywise prox acts on
// moduli with phase preserved, the SVD is complex.
CSolveResult solve(const CMat& Y, const SolverConfig& cfg);

// Convex baseline: solve() with a0 = a1 = 0.
SolveResult solve_slr(const Mat& Y, double lambda0, double lambda1, double mu = 1.5,
                      double eps = 1e-5, int max_iter = 500);

}  // namespace islr
