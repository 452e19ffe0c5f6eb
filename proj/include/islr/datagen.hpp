#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "islr/tuning.hpp"

namespace islr {

struct SyntheticSpec {
  int m = 50;
  int n = 50;
  int k = 10;
  double zero_fraction = 0.4;  // fraction of entries forced to 0
  double sigma = 0.2;
  std::uint64_t seed = 0;
};

// M = A*B with A (m x k), B (k x n) i.i.d. standard normal.
Mat gen_low_rank(int m, int n, int k, std::uint64_t seed);

// Exactly round(zero_fraction*m*n) entries, sampled without replacement,
// set to zero.
Mat sparsify(const Mat& M, double zero_fraction, std::uint64_t seed);

Mat add_awgn(const Mat& M, double sigma, std::uint64_t seed);

// Additive Uniform(0, sigma) on round(fraction*m*n) entries sampled without
// replacement.
Mat corrupt_uniform(const Mat& M, double fraction, double sigma, std::uint64_t seed);

enum class SweepKind { rank, sparsity };

struct SweepReport {
  struct Row {
    double sweep_value;
    std::string method;  // "islr" or "slr"
    double mean_rse;
    double std_rse;
    int trials;
  };
  std::vector<Row> rows;
  std::string to_csv() const;  // sweep_value,method,mean_rse,std_rse,trials
};

// For each sweep value: `trials` instances of generate -> sparsify ->
// add_awgn, denoised by both methods with a per-trial grid search over
// (beta0, beta1); reports mean and sample std of the per-trial best RSE.
// Sweep values are ranks for SweepKind::rank and sparsity levels (fraction
// of entries kept nonzero) for SweepKind::sparsity. Trial t uses sub-seed
// base.seed XOR t; generation stages split that further.
SweepReport run_sweep(SweepKind kind, const SyntheticSpec& base,
                      const std::vector<double>& sweep_values, int trials,
                      const std::vector<double>& beta_grid, double c,
                      const SolverConfig& defaults);

}  // namespace islr
