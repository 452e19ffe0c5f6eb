#pragma once

#include "islr/linalg.hpp"

namespace islr {

// ||X_est - X_org||_F / ||X_org||_F. Throws ZeroReference on a zero X_org.
double rse(const Mat& X_est, const Mat& X_org);

// 20*log10(||ref|| / ||ref - est||); +infinity when est == ref exactly.
double snr_db(const Vec& reference, const Vec& estimate);
double snr_db(const Mat& reference, const Mat& estimate);

}  // namespace islr
