#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "islr/audio.hpp"
#include "islr/datagen.hpp"
#include "islr/errors.hpp"
#include "islr/io.hpp"
#include "islr/metrics.hpp"
#include "islr/solver.hpp"
#include "islr/tuning.hpp"

namespace {

using islr::Mat;
using islr::SolverConfig;

struct DenoiseOpts {
  std::string input, output, history;
  double lambda0 = 0.0, lambda1 = 0.0;
  double c = 0.0, a0 = 0.0, a1 = 0.0;
  std::string penalty = "atan";
  double mu = 1.5, eps = 1e-5;
  int max_iter = 500;
  bool slr = false;
  bool c_given = false;
};

int run_denoise(const DenoiseOpts& o) {
  const Mat Y = islr::read_matrix_csv(o.input);
  SolverConfig cfg;
  cfg.lambda0 = o.lambda0;
  cfg.lambda1 = o.lambda1;
  cfg.penalty0.kind = cfg.penalty1.kind = islr::penalty_kind_from_string(o.penalty);
  cfg.mu = o.mu;
  cfg.eps = o.eps;
  cfg.max_iter = o.max_iter;

  islr::SolveResult res;
  if (o.slr) {
    res = islr::solve_slr(Y, o.lambda0, o.lambda1, o.mu, o.eps, o.max_iter);
  } else {
    if (o.c_given) {
      islr::derive_penalties(cfg, o.c);
    } else {
      cfg.penalty0.a = o.a0;
      cfg.penalty1.a = o.a1;
    }
    res = islr::solve(Y, cfg);
  }

  islr::write_matrix_csv(res.X, o.output);
  if (!o.history.empty()) {
    std::ofstream h(o.history, std::ios::binary);
    if (!h) throw islr::IoFailure("cannot open " + o.history + " for writing");
    h << "iter,objective\n";
    char buf[64];
    for (std::size_t i = 0; i < res.objective_history.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", i + 1, res.objective_history[i]);
      h << buf;
    }
  }
  const double f = res.objective_history.empty() ? islr::objective(res.X, Y, cfg)
                                                 : res.objective_history.back();
  std::printf("iterations=%d converged=%s objective=%.17g\n", res.iterations,
              res.converged ? "true" : "false", f);
  return 0;
}

struct BenchOpts {
  std::string sweep, out;
  int m = 50, n = 50, k = 10, trials = 15;
  double sigma = 0.2, c = 0.5;
  std::uint64_t seed = 0;
  std::vector<double> values;
  std::vector<double> betas{0.25, 0.5, 1.0, 2.0, 4.0};
  std::string penalty = "atan";
};

int run_bench(const BenchOpts& o) {
  islr::SyntheticSpec base;
  base.m = o.m;
  base.n = o.n;
  base.k = o.k;
  base.sigma = o.sigma;
  base.seed = o.seed;

  std::vector<double> values = o.values;
  if (values.empty()) {
    if (o.sweep == "rank") {
      for (int k = 1; k <= std::min(o.m, o.n); k += 5) values.push_back(k);
    } else {
      for (int i = 1; i <= 9; ++i) values.push_back(0.1 * i);
    }
  }

  SolverConfig defaults;
  defaults.penalty0.kind = defaults.penalty1.kind = islr::penalty_kind_from_string(o.penalty);
  const islr::SweepKind kind =
      o.sweep == "rank" ? islr::SweepKind::rank : islr::SweepKind::sparsity;
  const islr::SweepReport report =
      islr::run_sweep(kind, base, values, o.trials, o.betas, o.c, defaults);

  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw islr::IoFailure("cannot open " + o.out + " for writing");
  f << report.to_csv();
  std::printf("wrote %s\n", o.out.c_str());
  return 0;
}

struct AudioOpts {
  std::string input, output;
  double sigma = 0.0, beta0 = 1.0, beta1 = 1.0, c = 0.5;
  std::string mode = "complex", penalty = "atan";
  double mu = 1.5, eps = 1e-5;
  int max_iter = 500;
};

int run_audio(const AudioOpts& o) {
  const islr::WavData wav = islr::read_wav(o.input);
  SolverConfig defaults;
  defaults.penalty0.kind = defaults.penalty1.kind = islr::penalty_kind_from_string(o.penalty);
  defaults.mu = o.mu;
  defaults.eps = o.eps;
  defaults.max_iter = o.max_iter;
  const SolverConfig cfg = islr::make_tuned_config(o.beta0, o.beta1, o.c, o.sigma, defaults);
  const islr::DenoiseMode mode = o.mode == "magnitude" ? islr::DenoiseMode::magnitude
                                                       : islr::DenoiseMode::complex_spectrogram;
  const std::vector<double> clean = islr::denoise_speech(wav.samples, cfg, mode);
  islr::write_wav(clean, wav.sample_rate, o.output);
  std::printf("wrote %s\n", o.output.c_str());
  return 0;
}

struct GraphOpts {
  std::string edges, output, noisy_output;
  double sigma = 0.3, fraction = 0.1, beta0 = 1.0, beta1 = 1.0, c = 0.5;
  std::uint64_t seed = 0;
  std::string penalty = "atan";
};

int run_graph(const GraphOpts& o) {
  const islr::GraphData g = islr::read_edge_list(o.edges);
  for (const std::string& w : g.edges.warnings)
    std::fprintf(stderr, "warning: %s\n", w.c_str());

  const Mat& A = g.adjacency;
  const Mat Y = o.fraction > 0.0 ? islr::corrupt_uniform(A, o.fraction, o.sigma, o.seed) : A;
  if (!o.noisy_output.empty()) islr::write_matrix_csv(Y, o.noisy_output);

  SolverConfig defaults;
  defaults.penalty0.kind = defaults.penalty1.kind = islr::penalty_kind_from_string(o.penalty);
  const SolverConfig cfg = islr::make_tuned_config(o.beta0, o.beta1, o.c, o.sigma, defaults);
  const islr::SolveResult res = islr::solve(Y, cfg);
  islr::write_matrix_csv(res.X, o.output);

  std::printf("nodes=%zu edges=%zu\n", g.edges.node_names.size(), g.edges.edges.size());
  std::printf("rse_noisy=%.17g\n", islr::rse(Y, A));
  std::printf("rse_denoised=%.17g\n", islr::rse(res.X, A));
  return 0;
}

struct ProxOpts {
  std::string penalty = "atan";
  double a = 0.0, lambda = 0.0;
  std::vector<double> values;
};

int run_prox(const ProxOpts& o) {
  islr::PenaltyParams p{islr::penalty_kind_from_string(o.penalty), o.a};
  for (double v : o.values) std::printf("%.17g\n", islr::prox_scalar(v, o.lambda, p));
  return 0;
}

struct ValidateOpts {
  double lambda0 = 0.0, lambda1 = 0.0, a0 = 0.0, a1 = 0.0, mu = 1.5;
};

int run_validate(const ValidateOpts& o) {
  SolverConfig cfg;
  cfg.lambda0 = o.lambda0;
  cfg.lambda1 = o.lambda1;
  cfg.penalty0.a = o.a0;
  cfg.penalty1.a = o.a1;
  cfg.mu = o.mu;
  const islr::ValidationOutcome v = islr::validate_config(cfg);
  const bool region_ok = v.triangle_value < 1.0 && o.a0 >= 0.0 && o.a1 >= 0.0 &&
                         o.lambda0 >= 0.0 && o.lambda1 >= 0.0;
  std::printf("strict-convexity region: a0*lambda0 + a1*lambda1 = %.17g (required < 1): %s\n",
              v.triangle_value, region_ok ? "PASS" : "FAIL");
  std::printf("multiplier: mu = %.17g (required > 1): %s\n", cfg.mu,
              v.mu_margin > 0.0 ? "PASS" : "FAIL");
  std::printf("margins: region %.17g, mu %.17g\n", v.triangle_margin, v.mu_margin);
  if (!v.accepted) {
    std::fprintf(stderr, "rejected: %s\n", v.message.c_str());
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse low-rank matrix denoising"};
  app.require_subcommand(1);

  DenoiseOpts dn;
  CLI::App* denoise = app.add_subcommand("denoise", "denoise a matrix read from CSV");
  denoise->add_option("--input", dn.input, "input matrix CSV")->required();
  denoise->add_option("--output", dn.output, "output matrix CSV")->required();
  denoise->add_option("--lambda0", dn.lambda0, "singular-value weight");
  denoise->add_option("--lambda1", dn.lambda1, "entrywise weight");
  auto* opt_c = denoise->add_option("--c", dn.c, "penalty budget split in (0,1); derives a0,a1");
  auto* opt_a0 = denoise->add_option("--a0", dn.a0, "singular-value penalty parameter");
  auto* opt_a1 = denoise->add_option("--a1", dn.a1, "entrywise penalty parameter");
  denoise->add_option("--penalty", dn.penalty, "rat|atan|log (default atan)");
  denoise->add_option("--mu", dn.mu, "augmented Lagrangian scalar (> 1)");
  denoise->add_option("--eps", dn.eps, "relative stopping tolerance");
  denoise->add_option("--max-iter", dn.max_iter, "iteration cap");
  denoise->add_option("--history", dn.history, "write per-iteration objective CSV here");
  auto* opt_slr = denoise->add_flag("--slr", dn.slr, "convex baseline (a0 = a1 = 0)");
  opt_c->excludes(opt_a0);
  opt_c->excludes(opt_a1);
  opt_slr->excludes(opt_c);
  opt_slr->excludes(opt_a0);
  opt_slr->excludes(opt_a1);

  BenchOpts bn;
  CLI::App* bench = app.add_subcommand("bench", "synthetic rank/sparsity sweep with grid search");
  bench->add_option("--sweep", bn.sweep, "rank|sparsity")
      ->required()
      ->check(CLI::IsMember({"rank", "sparsity"}));
  bench->add_option("--m", bn.m, "rows");
  bench->add_option("--n", bn.n, "columns");
  bench->add_option("--k", bn.k, "base rank (sparsity sweep)");
  bench->add_option("--sigma", bn.sigma, "noise std");
  bench->add_option("--trials", bn.trials, "trials per sweep point");
  bench->add_option("--seed", bn.seed, "master seed");
  bench->add_option("--out", bn.out, "report CSV path")->required();
  bench->add_option("--values", bn.values, "sweep points (comma separated)")->delimiter(',');
  bench->add_option("--betas", bn.betas, "grid per beta axis (comma separated)")->delimiter(',');
  bench->add_option("--c", bn.c, "penalty budget split for the non-convex method");
  bench->add_option("--penalty", bn.penalty, "rat|atan|log");

  AudioOpts au;
  CLI::App* audio = app.add_subcommand("audio", "denoise a mono PCM16 WAV via its spectrogram");
  audio->add_option("--input", au.input, "input WAV")->required();
  audio->add_option("--output", au.output, "output WAV")->required();
  audio->add_option("--sigma", au.sigma, "noise std used for lambda = beta*sigma")->required();
  audio->add_option("--beta0", au.beta0, "singular-value weight multiplier");
  audio->add_option("--beta1", au.beta1, "entrywise weight multiplier");
  audio->add_option("--c", au.c, "penalty budget split");
  audio->add_option("--mode", au.mode, "complex|magnitude")
      ->check(CLI::IsMember({"complex", "magnitude"}));
  audio->add_option("--penalty", au.penalty, "rat|atan|log");
  audio->add_option("--mu", au.mu, "augmented Lagrangian scalar");
  audio->add_option("--eps", au.eps, "relative stopping tolerance");
  audio->add_option("--max-iter", au.max_iter, "iteration cap");

  GraphOpts gr;
  CLI::App* graph = app.add_subcommand("graph", "denoise a weighted adjacency matrix");
  graph->add_option("--edges", gr.edges, "tab-separated edge list")->required();
  graph->add_option("--output", gr.output, "denoised adjacency CSV")->required();
  graph->add_option("--sigma", gr.sigma, "uniform corruption magnitude / tuning sigma");
  graph->add_option("--fraction", gr.fraction, "fraction of entries to corrupt (0 = none)");
  graph->add_option("--seed", gr.seed, "corruption seed");
  graph->add_option("--beta0", gr.beta0, "singular-value weight multiplier");
  graph->add_option("--beta1", gr.beta1, "entrywise weight multiplier");
  graph->add_option("--c", gr.c, "penalty budget split");
  graph->add_option("--penalty", gr.penalty, "rat|atan|log");
  graph->add_option("--noisy-output", gr.noisy_output, "also write the corrupted matrix here");

  ProxOpts px;
  CLI::App* prox = app.add_subcommand("prox", "print the scalar shrinkage of each value");
  prox->add_option("--penalty", px.penalty, "rat|atan|log");
  prox->add_option("--a", px.a, "penalty parameter");
  prox->add_option("--lambda", px.lambda, "threshold weight");
  prox->add_option("--values", px.values, "inputs (comma separated)")->required()->delimiter(',');

  ValidateOpts va;
  CLI::App* validate = app.add_subcommand("validate", "check a configuration's admissibility");
  validate->add_option("--lambda0", va.lambda0, "singular-value weight");
  validate->add_option("--lambda1", va.lambda1, "entrywise weight");
  validate->add_option("--a0", va.a0, "singular-value penalty parameter");
  validate->add_option("--a1", va.a1, "entrywise penalty parameter");
  validate->add_option("--mu", va.mu, "augmented Lagrangian scalar");

  try {
    app.parse(argc, argv);
    dn.c_given = opt_c->count() > 0;
    if (app.got_subcommand(denoise)) return run_denoise(dn);
    if (app.got_subcommand(bench)) return run_bench(bn);
    if (app.got_subcommand(audio)) return run_audio(au);
    if (app.got_subcommand(graph)) return run_graph(gr);
    if (app.got_subcommand(prox)) return run_prox(px);
    if (app.got_subcommand(validate)) return run_validate(va);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const islr::ConfigRejected& e) {
    std::fprintf(stderr, "config rejected: %s\n", e.what());
    return 2;
  } catch (const islr::InvalidPenalty& e) {
    std::fprintf(stderr, "config rejected: %s\n", e.what());
    return 2;
  } catch (const islr::DegenerateLambda& e) {
    std::fprintf(stderr, "config rejected: %s\n", e.what());
    return 2;
  } catch (const islr::BadParams& e) {
    std::fprintf(stderr, "config rejected: %s\n", e.what());
    return 2;
  } catch (const islr::BadRank& e) {
    std::fprintf(stderr, "config rejected: %s\n", e.what());
    return 2;
  } catch (const islr::IoFailure& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 3;
  } catch (const islr::ParseError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 3;
  } catch (const islr::RaggedRows& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 3;
  } catch (const islr::UnsupportedFormat& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numeric failure: %s\n", e.what());
    return 4;
  }
}
