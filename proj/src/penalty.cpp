#include "islr/penalty.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "islr/errors.hpp"

namespace islr {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;
constexpr double kRootTol = 1e-12;  // absolute tolerance on the prox root

}  // namespace

PenaltyKind penalty_kind_from_string(const std::string& name) {
  std::string s;
  s.reserve(name.size());
  for (char ch : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (s == "rat" || s == "rational") return PenaltyKind::rational;
  if (s == "atan" || s == "arctangent") return PenaltyKind::arctangent;
  if (s == "log" || s == "logarithmic") return PenaltyKind::logarithmic;
  throw BadParams("unknown penalty kind: " + name);
}

std::string to_string(PenaltyKind kind) {
  switch (kind) {
    case PenaltyKind::rational: return "rat";
    case PenaltyKind::arctangent: return "atan";
    case PenaltyKind::logarithmic: return "log";
  }
  return "?";
}

double phi(double x, const PenaltyParams& p) {
  const double ax = std::abs(x);
  if (p.a == 0.0) return ax;
  switch (p.kind) {
    case PenaltyKind::rational:
      return ax / (1.0 + p.a * ax / 2.0);
    case PenaltyKind::logarithmic:
      return std::log1p(p.a * ax) / p.a;
    case PenaltyKind::arctangent:
      // atan((1+2a|x|)/sqrt3) - pi/6 folded into a single atan; the direct
      // difference cancels catastrophically when a|x| << 1 and misses 0 at 0.
      return (2.0 / (p.a * kSqrt3)) *
             std::atan(kSqrt3 * p.a * ax / (2.0 + p.a * ax));
  }
  return ax;
}

double phi_prime(double x, const PenaltyParams& p) {
  if (p.a == 0.0) return 1.0;
  switch (p.kind) {
    case PenaltyKind::rational: {
      const double d = 1.0 + p.a * x / 2.0;
      return 1.0 / (d * d);
    }
    case PenaltyKind::logarithmic:
      return 1.0 / (1.0 + p.a * x);
    case PenaltyKind::arctangent: {
      const double t = 1.0 + 2.0 * p.a * x;
      return 4.0 / (3.0 + t * t);
    }
  }
  return 1.0;
}

double phi_second(double x, const PenaltyParams& p) {
  if (p.a == 0.0) return 0.0;
  switch (p.kind) {
    case PenaltyKind::rational: {
      const double d = 1.0 + p.a * x / 2.0;
      return -p.a / (d * d * d);
    }
    case PenaltyKind::logarithmic: {
      const double d = 1.0 + p.a * x;
      return -p.a / (d * d);
    }
    case PenaltyKind::arctangent: {
      const double t = 1.0 + 2.0 * p.a * x;
      const double d = 3.0 + t * t;
      return -16.0 * p.a * t / (d * d);
    }
  }
  return 0.0;
}

double s_part(double x, const PenaltyParams& p) { return phi(x, p) - std::abs(x); }

namespace {

// Stationarity residual for the positive branch: g(x) = x - |y| + lambda*phi'(x).
// g is strictly increasing (g' = 1 + lambda*phi'' >= 1 - a*lambda > 0) and
// g(0+) < 0 < g(|y|) whenever |y| > lambda.
inline double prox_g(double x, double ay, double lambda, const PenaltyParams& p) {
  return x - ay + lambda * phi_prime(x, p);
}

// Newton steps clamped to the running sign bracket, bisecting whenever a
// step would leave it. Exits once either the bracket is below kRootTol or
// the residual certifies |x - root| <= kRootTol through the slope bound
// g' >= 1 - a*lambda.
double prox_root(double ay, double lambda, const PenaltyParams& p) {
  const double min_slope = 1.0 - p.a * lambda;
  double lo = 0.0, hi = ay;
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double g = prox_g(x, ay, lambda, p);
    if (std::abs(g) <= kRootTol * min_slope) return x;
    if (g < 0.0)
      lo = x;
    else
      hi = x;
    if (hi - lo <= kRootTol) return 0.5 * (lo + hi);
    const double gp = 1.0 + lambda * phi_second(x, p);
    double next = x - g / gp;
    if (next <= lo || next >= hi) next = 0.5 * (lo + hi);
    x = next;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double prox_scalar(double y, double lambda, const PenaltyParams& p) {
  if (lambda == 0.0) return y;
  if (p.a * lambda >= 1.0)
    throw InvalidPenalty("a*lambda = " + std::to_string(p.a * lambda) +
                         " >= 1: scalar subproblem not strictly convex");
  const double ay = std::abs(y);
  if (ay <= lambda) return 0.0;
  if (p.a == 0.0) return y < 0.0 ? lambda - ay : ay - lambda;  // soft threshold
  const double x = prox_root(ay, lambda, p);
  return y < 0.0 ? -x : x;
}

namespace detail {

double prox_bisect_reference(double y, double lambda, const PenaltyParams& p) {
  if (lambda == 0.0) return y;
  if (p.a * lambda >= 1.0) throw InvalidPenalty("a*lambda >= 1");
  const double ay = std::abs(y);
  if (ay <= lambda) return 0.0;
  if (p.a == 0.0) return y < 0.0 ? lambda - ay : ay - lambda;
  double lo = 0.0, hi = ay;
  while (hi - lo > kRootTol) {
    const double mid = 0.5 * (lo + hi);
    if (prox_g(mid, ay, lambda, p) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double x = 0.5 * (lo + hi);
  return y < 0.0 ? -x : x;
}

}  // namespace detail

Eigen::MatrixXd prox_matrix(const Eigen::MatrixXd& Y, double lambda, const PenaltyParams& p) {
  if (lambda != 0.0 && p.a * lambda >= 1.0) throw InvalidPenalty("a*lambda >= 1");
  Eigen::MatrixXd out(Y.rows(), Y.cols());
  const double* src = Y.data();
  double* dst = out.data();
  const Eigen::Index size = Y.size();
  for (Eigen::Index i = 0; i < size; ++i) dst[i] = prox_scalar(src[i], lambda, p);
  return out;
}

Eigen::MatrixXcd prox_matrix(const Eigen::MatrixXcd& Y, double lambda, const PenaltyParams& p) {
  if (lambda != 0.0 && p.a * lambda >= 1.0) throw InvalidPenalty("a*lambda >= 1");
  Eigen::MatrixXcd out(Y.rows(), Y.cols());
  const std::complex<double>* src = Y.data();
  std::complex<double>* dst = out.data();
  const Eigen::Index size = Y.size();
  for (Eigen::Index i = 0; i < size; ++i) dst[i] = prox_complex(src[i], lambda, p);
  return out;
}

std::complex<double> prox_complex(std::complex<double> y, double lambda, const PenaltyParams& p) {
  const double ay = std::abs(y);
  if (ay == 0.0) return {0.0, 0.0};
  const double shrunk = prox_scalar(ay, lambda, p);
  return y * (shrunk / ay);
}

namespace {

// Central difference on phi; phi is cheap so step sizes favor truncation
// error over roundoff.
double fd_first(double x, double h, const PenaltyParams& p) {
  return (phi(x + h, p) - phi(x - h, p)) / (2.0 * h);
}

double fd_second(double x, double h, const PenaltyParams& p) {
  return (phi(x + h, p) - 2.0 * phi(x, p) + phi(x - h, p)) / (h * h);
}

}  // namespace

ConformanceReport check_assumption1(const PenaltyParams& p, const std::vector<double>& grid) {
  if (grid.empty()) throw BadParams("conformance grid is empty");
  for (double x : grid)
    if (!(x > 0.0)) throw BadParams("conformance grid values must be positive");
  ConformanceReport report;

  ConformanceCheck sym{"symmetry", true, 0.0, 1e-15};
  for (double x : grid) sym.worst = std::max(sym.worst, std::abs(phi(x, p) - phi(-x, p)));
  sym.pass = sym.worst <= sym.tol;
  report.checks.push_back(sym);

  ConformanceCheck incr{"phi_prime_positive", true, 0.0, 0.0};
  double min_slope = std::numeric_limits<double>::infinity();
  for (double x : grid) {
    const double h = 1e-6 * std::max(1.0, x);
    min_slope = std::min(min_slope, fd_first(x, std::min(h, x / 2), p));
  }
  incr.worst = min_slope;  // smallest finite-difference slope seen
  incr.pass = min_slope > 0.0;
  report.checks.push_back(incr);

  ConformanceCheck conc{"phi_second_nonpositive", true, 0.0, 1e-3};
  double max_curv = -std::numeric_limits<double>::infinity();
  for (double x : grid) {
    const double h = std::min(1e-5 * std::max(1.0, x), x / 2);
    max_curv = std::max(max_curv, fd_second(x, h, p));
  }
  conc.worst = max_curv;
  conc.pass = max_curv <= conc.tol;
  report.checks.push_back(conc);

  // 0+ limits probed at x0 = 1e-5: close enough that the true values differ
  // from the limits by O(a^2 x0) while finite differences stay accurate.
  const double x0 = 1e-5, h0 = 1e-6;
  ConformanceCheck slope0{"phi_prime_at_zero", true, 0.0, 1e-3};
  slope0.worst = std::abs(fd_first(x0, h0, p) - 1.0);
  slope0.pass = slope0.worst <= slope0.tol;
  report.checks.push_back(slope0);

  ConformanceCheck curv0{"inf_phi_second", true, 0.0, 1e-3};
  curv0.worst = std::abs(fd_second(x0, h0, p) + p.a);
  curv0.pass = curv0.worst <= curv0.tol;
  report.checks.push_back(curv0);

  return report;
}

}  // namespace islr
