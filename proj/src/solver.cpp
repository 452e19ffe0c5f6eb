#include "islr/solver.hpp"

#include <cmath>
#include <sstream>

#include "islr/errors.hpp"

namespace islr {

ValidationOutcome validate_config(const SolverConfig& cfg) {
  ValidationOutcome out;
  out.triangle_value = cfg.penalty0.a * cfg.lambda0 + cfg.penalty1.a * cfg.lambda1;
  out.triangle_margin = 1.0 - out.triangle_value;
  out.mu_margin = cfg.mu - 1.0;

  std::ostringstream msg;
  bool ok = true;
  if (cfg.lambda0 < 0.0 || cfg.lambda1 < 0.0 || cfg.penalty0.a < 0.0 || cfg.penalty1.a < 0.0) {
    ok = false;
    msg << "weights and penalty parameters must be nonnegative; ";
  }
  if (cfg.eps <= 0.0) {
    ok = false;
    msg << "eps must be positive (got " << cfg.eps << "); ";
  }
  if (cfg.max_iter <= 0) {
    ok = false;
    msg << "max_iter must be positive (got " << cfg.max_iter << "); ";
  }
  if (!(out.triangle_value < 1.0)) {
    ok = false;
    msg << "a0*lambda0 + a1*lambda1 = " << out.triangle_value
        << " leaves the strictly convex region (must be < 1); ";
  }
  if (!(cfg.mu > 1.0)) {
    ok = false;
    msg << "mu = " << cfg.mu << " must exceed 1; ";
  }
  out.accepted = ok;
  out.message = ok ? "accepted" : msg.str();
  return out;
}

double objective(const Mat& X, const Mat& Y, const SolverConfig& cfg) {
  if (X.rows() != Y.rows() || X.cols() != Y.cols())
    throw BadParams("objective: shape mismatch");
  double f = 0.5 * (Y - X).squaredNorm();
  if (cfg.lambda0 != 0.0) {
    const Vec s = singular_values(X);
    for (Eigen::Index i = 0; i < s.size(); ++i) f += cfg.lambda0 * phi(s[i], cfg.penalty0);
  }
  if (cfg.lambda1 != 0.0) {
    for (Eigen::Index j = 0; j < X.cols(); ++j)
      for (Eigen::Index i = 0; i < X.rows(); ++i)
        f += cfg.lambda1 * phi(X(i, j), cfg.penalty1);
  }
  return f;
}

double objective(const CMat& X, const CMat& Y, const SolverConfig& cfg) {
  if (X.rows() != Y.rows() || X.cols() != Y.cols())
    throw BadParams("objective: shape mismatch");
  double f = 0.5 * (Y - X).squaredNorm();
  if (cfg.lambda0 != 0.0) {
    const Vec s = singular_values(X);
    for (Eigen::Index i = 0; i < s.size(); ++i) f += cfg.lambda0 * phi(s[i], cfg.penalty0);
  }
  if (cfg.lambda1 != 0.0) {
    for (Eigen::Index j = 0; j < X.cols(); ++j)
      for (Eigen::Index i = 0; i < X.rows(); ++i)
        f += cfg.lambda1 * phi(std::abs(X(i, j)), cfg.penalty1);
  }
  return f;
}

void admm_step(AdmmState& state, const Mat& Y, const SolverConfig& cfg) {
  const double mu = cfg.mu;
  state.X = prox_matrix(Mat((Y + mu * (state.Z + state.D)) / (1.0 + mu)),
                        cfg.lambda1 / (1.0 + mu), cfg.penalty1);
  state.Z = sv_shrink(Mat(state.X - state.D), cfg.lambda0 / mu, cfg.penalty0);
  state.D = state.D - (state.X - state.Z);
}

namespace {

void step_complex(CMat& X, CMat& Z, CMat& D, const CMat& Y, const SolverConfig& cfg) {
  const double mu = cfg.mu;
  X = prox_matrix(CMat((Y + mu * (Z + D)) / (1.0 + mu)), cfg.lambda1 / (1.0 + mu), cfg.penalty1);
  Z = sv_shrink(CMat(X - D), cfg.lambda0 / mu, cfg.penalty0);
  D = D - (X - Z);
}

}  // namespace

SolveResult solve(const Mat& Y, const SolverConfig& cfg, const std::optional<SolveInit>& init) {
  const ValidationOutcome v = validate_config(cfg);
  if (!v.accepted) throw ConfigRejected(v.message);

  SolveResult res;
  if (cfg.lambda0 == 0.0 && cfg.lambda1 == 0.0) {
    // Unregularized problem: the data term alone is minimized by Y itself.
    res.X = Y;
    res.converged = true;
    return res;
  }

  AdmmState st;
  if (init) {
    if (init->Z.rows() != Y.rows() || init->Z.cols() != Y.cols() || init->D.rows() != Y.rows() ||
        init->D.cols() != Y.cols())
      throw BadParams("solve: init shapes must match Y");
    st.Z = init->Z;
    st.D = init->D;
  } else {
    st.Z = Mat::Zero(Y.rows(), Y.cols());
    st.D = Mat::Zero(Y.rows(), Y.cols());
  }

  double prev_f = 0.0;
  for (int k = 0; k < cfg.max_iter; ++k) {
    admm_step(st, Y, cfg);
    const double f = objective(st.X, Y, cfg);
    if (!std::isfinite(f)) throw NonFinite("solve: objective became non-finite");
    res.objective_history.push_back(f);
    ++res.iterations;
    if (k > 0 && std::abs(f - prev_f) < cfg.eps * std::abs(f)) {
      res.converged = true;
      break;
    }
    prev_f = f;
  }
  res.X = st.X;
  return res;
}

CSolveResult solve(const CMat& Y, const SolverConfig& cfg) {
  const ValidationOutcome v = validate_config(cfg);
  if (!v.accepted) throw ConfigRejected(v.message);

  CSolveResult res;
  if (cfg.lambda0 == 0.0 && cfg.lambda1 == 0.0) {
    res.X = Y;
    res.converged = true;
    return res;
  }

  CMat X, Z = CMat::Zero(Y.rows(), Y.cols()), D = CMat::Zero(Y.rows(), Y.cols());
  double prev_f = 0.0;
  for (int k = 0; k < cfg.max_iter; ++k) {
    step_complex(X, Z, D, Y, cfg);
    const double f = objective(X, Y, cfg);
    if (!std::isfinite(f)) throw NonFinite("solve: objective became non-finite");
    res.objective_history.push_back(f);
    ++res.iterations;
    if (k > 0 && std::abs(f - prev_f) < cfg.eps * std::abs(f)) {
      res.converged = true;
      break;
    }
    prev_f = f;
  }
  res.X = X;
  return res;
}

SolveResult solve_slr(const Mat& Y, double lambda0, double lambda1, double mu, double eps,
                      int max_iter) {
  SolverConfig cfg;
  cfg.lambda0 = lambda0;
  cfg.lambda1 = lambda1;
  cfg.penalty0 = PenaltyParams{PenaltyKind::arctangent, 0.0};
  cfg.penalty1 = PenaltyParams{PenaltyKind::arctangent, 0.0};
  cfg.mu = mu;
  cfg.eps = eps;
  cfg.max_iter = max_iter;
  return solve(Y, cfg);
}

}  // namespace islr
