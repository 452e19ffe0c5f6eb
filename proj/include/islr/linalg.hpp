#pragma once

#include <Eigen/Dense>

#include "islr/penalty.hpp"

namespace islr {

using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;

enum class NormKind { frobenius, entrywise_l1, nuclear };

double norm(const Mat& X, NormKind kind);

// Thin SVD, X = U * diag(sigma) * V^T with k = min(m,n) columns.
// Deterministic sign convention: the first nonzero entry of every column of
// U is nonnegative.
struct SvdFactors {
  Mat U;
  Vec sigma;  // nonincreasing, nonnegative
  Mat V;
};

// Complex thin SVD, X = U * diag(sigma) * V^H; each U column is rotated so
// its first nonzero entry is real nonnegative.
struct CSvdFactors {
  CMat U;
  Vec sigma;
  CMat V;
};

SvdFactors svd(const Mat& X);
CSvdFactors svd(const CMat& X);

// Singular values only (cheaper than the full factorization).
Vec singular_values(const Mat& X);
Vec singular_values(const CMat& X);

// U * diag(prox(sigma_i)) * V^T(H). lambda = 0 returns X unchanged.
Mat sv_shrink(const Mat& X, double lambda, const PenaltyParams& p);
CMat sv_shrink(const CMat& X, double lambda, const PenaltyParams& p);

}  // namespace islr
