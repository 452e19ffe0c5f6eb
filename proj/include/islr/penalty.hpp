#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace islr {

enum class PenaltyKind { rational, arctangent, logarithmic };

PenaltyKind penalty_kind_from_string(const std::string& name);  // rat|atan|log
std::string to_string(PenaltyKind kind);

// One penalty family member phi(.; a). a = 0 degenerates to |x| for every
// kind, and all code paths treat that case exactly (no limits taken at
// runtime).
struct PenaltyParams {
  PenaltyKind kind = PenaltyKind::arctangent;
  double a = 0.0;
};

double phi(double x, const PenaltyParams& p);
// Derivatives of phi on x > 0 (phi is even; callers pass magnitudes).
double phi_prime(double x, const PenaltyParams& p);
double phi_second(double x, const PenaltyParams& p);

// s(x) = phi(x) - |x|, the smooth concave remainder.
double s_part(double x, const PenaltyParams& p);

// Unique minimizer of 0.5*(y-x)^2 + lambda*phi(x; a). Requires a*lambda < 1.
double prox_scalar(double y, double lambda, const PenaltyParams& p);

Eigen::MatrixXd prox_matrix(const Eigen::MatrixXd& Y, double lambda, const PenaltyParams& p);
Eigen::MatrixXcd prox_matrix(const Eigen::MatrixXcd& Y, double lambda, const PenaltyParams& p);

// Magnitude shrinkage with phase preserved; 0 maps to 0.
std::complex<double> prox_complex(std::complex<double> y, double lambda, const PenaltyParams& p);

struct ConformanceCheck {
  std::string name;
  bool pass = false;
  double worst = 0.0;  // largest deviation observed
  double tol = 0.0;
};

struct ConformanceReport {
  std::vector<ConformanceCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Finite-difference screening of the penalty axioms: symmetry, phi' > 0,
// phi'' <= 0 on the grid, phi'(0+) = 1, and inf phi'' = -a near 0+.
ConformanceReport check_assumption1(const PenaltyParams& p, const std::vector<double>& grid);

namespace detail {
// Reference root finder for the prox stationarity equation: plain bisection
// on (0, |y|], kept as the oracle the production path is tested against.
double prox_bisect_reference(double y, double lambda, const PenaltyParams& p);
}  // namespace detail

}  // namespace islr
