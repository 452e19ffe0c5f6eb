#include "islr/linalg.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "islr/errors.hpp"

namespace islr {

namespace {

// dgesdd/zgesdd destroy their input, so work on copies. Everything here is
// column-major to match both Eigen's default layout and LAPACK's.

void flip_signs(Mat& U, Mat& V) {
  for (Eigen::Index j = 0; j < U.cols(); ++j) {
    for (Eigen::Index i = 0; i < U.rows(); ++i) {
      const double u = U(i, j);
      if (u != 0.0) {
        if (u < 0.0) {
          U.col(j) = -U.col(j);
          V.col(j) = -V.col(j);
        }
        break;
      }
    }
  }
}

void flip_phases(CMat& U, CMat& V) {
  for (Eigen::Index j = 0; j < U.cols(); ++j) {
    for (Eigen::Index i = 0; i < U.rows(); ++i) {
      const std::complex<double> u = U(i, j);
      if (u != std::complex<double>(0.0, 0.0)) {
        const std::complex<double> rot = std::conj(u) / std::abs(u);
        U.col(j) *= rot;
        V.col(j) *= rot;
        break;
      }
    }
  }
}

}  // namespace

SvdFactors svd(const Mat& X) {
  const lapack_int m = static_cast<lapack_int>(X.rows());
  const lapack_int n = static_cast<lapack_int>(X.cols());
  const lapack_int k = std::min(m, n);
  Mat A = X;
  SvdFactors f;
  f.U.resize(m, k);
  f.sigma.resize(k);
  Mat Vt(k, n);
  const lapack_int info =
      LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'S', m, n, A.data(), m, f.sigma.data(), f.U.data(), m,
                     Vt.data(), k);
  if (info != 0)
    throw DecompositionFailure("dgesdd failed with info=" + std::to_string(info));
  f.V = Vt.transpose();
  flip_signs(f.U, f.V);
  return f;
}

CSvdFactors svd(const CMat& X) {
  const lapack_int m = static_cast<lapack_int>(X.rows());
  const lapack_int n = static_cast<lapack_int>(X.cols());
  const lapack_int k = std::min(m, n);
  CMat A = X;
  CSvdFactors f;
  f.U.resize(m, k);
  f.sigma.resize(k);
  CMat Vh(k, n);
  const lapack_int info = LAPACKE_zgesdd(
      LAPACK_COL_MAJOR, 'S', m, n, reinterpret_cast<lapack_complex_double*>(A.data()), m,
      f.sigma.data(), reinterpret_cast<lapack_complex_double*>(f.U.data()), m,
      reinterpret_cast<lapack_complex_double*>(Vh.data()), k);
  if (info != 0)
    throw DecompositionFailure("zgesdd failed with info=" + std::to_string(info));
  f.V = Vh.adjoint();
  flip_phases(f.U, f.V);
  return f;
}

Vec singular_values(const Mat& X) {
  const lapack_int m = static_cast<lapack_int>(X.rows());
  const lapack_int n = static_cast<lapack_int>(X.cols());
  Mat A = X;
  Vec s(std::min(m, n));
  const lapack_int info =
      LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'N', m, n, A.data(), m, s.data(), nullptr, m, nullptr, 1);
  if (info != 0)
    throw DecompositionFailure("dgesdd failed with info=" + std::to_string(info));
  return s;
}

Vec singular_values(const CMat& X) {
  const lapack_int m = static_cast<lapack_int>(X.rows());
  const lapack_int n = static_cast<lapack_int>(X.cols());
  CMat A = X;
  Vec s(std::min(m, n));
  const lapack_int info = LAPACKE_zgesdd(
      LAPACK_COL_MAJOR, 'N', m, n, reinterpret_cast<lapack_complex_double*>(A.data()), m,
      s.data(), nullptr, 1, nullptr, 1);
  if (info != 0)
    throw DecompositionFailure("zgesdd failed with info=" + std::to_string(info));
  return s;
}

double norm(const Mat& X, NormKind kind) {
  switch (kind) {
    case NormKind::frobenius: return X.norm();
    case NormKind::entrywise_l1: return X.cwiseAbs().sum();
    case NormKind::nuclear: return singular_values(X).sum();
  }
  return 0.0;
}

Mat sv_shrink(const Mat& X, double lambda, const PenaltyParams& p) {
  if (lambda == 0.0) return X;
  SvdFactors f = svd(X);
  Vec shrunk(f.sigma.size());
  for (Eigen::Index i = 0; i < f.sigma.size(); ++i)
    shrunk[i] = prox_scalar(f.sigma[i], lambda, p);
  // Columns past the last surviving singular value contribute nothing.
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < shrunk.size(); ++i)
    if (shrunk[i] > 0.0) r = i + 1;
  if (r == 0) return Mat::Zero(X.rows(), X.cols());
  return f.U.leftCols(r) * shrunk.head(r).asDiagonal() * f.V.leftCols(r).transpose();
}

CMat sv_shrink(const CMat& X, double lambda, const PenaltyParams& p) {
  if (lambda == 0.0) return X;
  CSvdFactors f = svd(X);
  Vec shrunk(f.sigma.size());
  for (Eigen::Index i = 0; i < f.sigma.size(); ++i)
    shrunk[i] = prox_scalar(f.sigma[i], lambda, p);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < shrunk.size(); ++i)
    if (shrunk[i] > 0.0) r = i + 1;
  if (r == 0) return CMat::Zero(X.rows(), X.cols());
  return f.U.leftCols(r) * shrunk.head(r).asDiagonal() * f.V.leftCols(r).adjoint();
}

}  // namespace islr
