#include "islr/datagen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "islr/errors.hpp"
#include "islr/rng.hpp"

namespace islr {

Mat gen_low_rank(int m, int n, int k, std::uint64_t seed) {
  if (m < 1 || n < 1) throw BadParams("gen_low_rank: dimensions must be positive");
  if (k < 1 || k > std::min(m, n))
    throw BadRank("gen_low_rank: rank must lie in [1, min(m,n)]");
  Rng rng(seed);
  Mat A(m, k), B(k, n);
  for (Eigen::Index j = 0; j < A.cols(); ++j)
    for (Eigen::Index i = 0; i < A.rows(); ++i) A(i, j) = rng.normal();
  for (Eigen::Index j = 0; j < B.cols(); ++j)
    for (Eigen::Index i = 0; i < B.rows(); ++i) B(i, j) = rng.normal();
  return A * B;
}

Mat sparsify(const Mat& M, double zero_fraction, std::uint64_t seed) {
  if (zero_fraction < 0.0 || zero_fraction > 1.0)
    throw BadParams("sparsify: zero_fraction must lie in [0,1]");
  const std::size_t total = static_cast<std::size_t>(M.size());
  const std::size_t count =
      static_cast<std::size_t>(std::llround(zero_fraction * static_cast<double>(total)));
  Mat out = M;
  if (count == 0) return out;
  Rng rng(seed);
  for (std::size_t idx : rng.sample_without_replacement(total, count))
    out.data()[idx] = 0.0;
  return out;
}

Mat add_awgn(const Mat& M, double sigma, std::uint64_t seed) {
  if (sigma < 0.0) throw BadParams("add_awgn: sigma must be nonnegative");
  if (sigma == 0.0) return M;
  Rng rng(seed);
  Mat out = M;
  for (Eigen::Index j = 0; j < out.cols(); ++j)
    for (Eigen::Index i = 0; i < out.rows(); ++i) out(i, j) += sigma * rng.normal();
  return out;
}

Mat corrupt_uniform(const Mat& M, double fraction, double sigma, std::uint64_t seed) {
  if (fraction < 0.0 || fraction > 1.0)
    throw BadParams("corrupt_uniform: fraction must lie in [0,1]");
  if (sigma < 0.0) throw BadParams("corrupt_uniform: sigma must be nonnegative");
  const std::size_t total = static_cast<std::size_t>(M.size());
  const std::size_t count =
      static_cast<std::size_t>(std::llround(fraction * static_cast<double>(total)));
  Mat out = M;
  if (count == 0) return out;
  Rng rng(seed);
  for (std::size_t idx : rng.sample_without_replacement(total, count))
    out.data()[idx] += rng.uniform(0.0, sigma);
  return out;
}

namespace {

struct Accumulator {
  double sum = 0.0, sumsq = 0.0;
  int n = 0;
  void add(double x) {
    sum += x;
    sumsq += x * x;
    ++n;
  }
  double mean() const { return sum / n; }
  double sample_std() const {
    if (n < 2) return 0.0;
    const double m = mean();
    const double var = (sumsq - static_cast<double>(n) * m * m) / (n - 1);
    return var > 0.0 ? std::sqrt(var) : 0.0;
  }
};

}  // namespace

SweepReport run_sweep(SweepKind kind, const SyntheticSpec& base,
                      const std::vector<double>& sweep_values, int trials,
                      const std::vector<double>& beta_grid, double c,
                      const SolverConfig& defaults) {
  if (sweep_values.empty()) throw BadParams("run_sweep: sweep_values must be nonempty");
  if (trials < 1) throw BadParams("run_sweep: trials must be at least 1");
  if (beta_grid.empty()) throw BadParams("run_sweep: beta_grid must be nonempty");

  SweepReport report;
  for (double v : sweep_values) {
    int k = base.k;
    double zero_fraction = base.zero_fraction;
    if (kind == SweepKind::rank) {
      k = static_cast<int>(std::llround(v));
    } else {
      if (v < 0.0 || v > 1.0)
        throw BadParams("run_sweep: sparsity levels must lie in [0,1]");
      zero_fraction = 1.0 - v;
    }

    Accumulator islr_acc, slr_acc;
    for (int t = 0; t < trials; ++t) {
      std::uint64_t state = base.seed ^ static_cast<std::uint64_t>(t);
      const std::uint64_t gen_seed = splitmix64(state);
      const std::uint64_t sparsify_seed = splitmix64(state);
      const std::uint64_t noise_seed = splitmix64(state);

      const Mat M = gen_low_rank(base.m, base.n, k, gen_seed);
      const Mat M_org = sparsify(M, zero_fraction, sparsify_seed);
      const Mat Y = add_awgn(M_org, base.sigma, noise_seed);

      const GridReport islr_grid =
          grid_search(Y, M_org, beta_grid, beta_grid, c, base.sigma, defaults);
      const GridReport slr_grid =
          grid_search(Y, M_org, beta_grid, beta_grid, 0.0, base.sigma, defaults);
      islr_acc.add(islr_grid.rows[islr_grid.best_index].rse);
      slr_acc.add(slr_grid.rows[slr_grid.best_index].rse);
    }

    report.rows.push_back({v, "islr", islr_acc.mean(), islr_acc.sample_std(), trials});
    report.rows.push_back({v, "slr", slr_acc.mean(), slr_acc.sample_std(), trials});
  }
  return report;
}

std::string SweepReport::to_csv() const {
  std::string out = "sweep_value,method,mean_rse,std_rse,trials\n";
  char buf[32];
  const auto put = [&](double v) {
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, res.ptr);
  };
  for (const auto& r : rows) {
    put(r.sweep_value);
    out += ',';
    out += r.method;
    out += ',';
    put(r.mean_rse);
    out += ',';
    put(r.std_rse);
    out += ',';
    out += std::to_string(r.trials);
    out += '\n';
  }
  return out;
}

}  // namespace islr
