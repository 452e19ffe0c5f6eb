#include "islr/metrics.hpp"

#include <cmath>
#include <limits>

#include "islr/errors.hpp"

namespace islr {

double rse(const Mat& X_est, const Mat& X_org) {
  if (X_est.rows() != X_org.rows() || X_est.cols() != X_org.cols())
    throw BadParams("rse: shape mismatch");
  const double ref = X_org.norm();
  if (ref == 0.0) throw ZeroReference("rse: reference matrix has zero norm");
  return (X_est - X_org).norm() / ref;
}

namespace {

double snr_from_norms(double ref, double err) {
  if (ref == 0.0) throw ZeroReference("snr_db: reference has zero norm");
  if (err == 0.0) return std::numeric_limits<double>::infinity();
  return 20.0 * std::log10(ref / err);
}

}  // namespace

double snr_db(const Vec& reference, const Vec& estimate) {
  if (reference.size() != estimate.size()) throw BadParams("snr_db: length mismatch");
  return snr_from_norms(reference.norm(), (reference - estimate).norm());
}

double snr_db(const Mat& reference, const Mat& estimate) {
  if (reference.rows() != estimate.rows() || reference.cols() != estimate.cols())
    throw BadParams("snr_db: shape mismatch");
  return snr_from_norms(reference.norm(), (reference - estimate).norm());
}

}  // namespace islr
