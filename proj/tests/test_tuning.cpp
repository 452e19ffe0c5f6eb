#include <doctest.h>

#include <cmath>
#include <sstream>

#include "islr/errors.hpp"
#include "islr/rng.hpp"
#include "islr/solver.hpp"
#include "islr/tuning.hpp"

using islr::Mat;
using islr::PenaltyKind;
using islr::SolverConfig;
using islr::TuningRule;

TEST_CASE("lambdas scale linearly with the noise level") {
  TuningRule r;
  r.beta0 = 1.0;
  r.beta1 = 2.0;
  r.sigma = 0.03;
  auto [l0, l1] = islr::lambdas_from_sigma(r);
  CHECK(l0 == doctest::Approx(0.03).epsilon(1e-15));
  CHECK(l1 == doctest::Approx(0.06).epsilon(1e-15));

  r.sigma = 0.0;
  auto [z0, z1] = islr::lambdas_from_sigma(r);
  CHECK(z0 == 0.0);
  CHECK(z1 == 0.0);

  r.beta0 = 10.0;
  r.beta1 = 5.0;
  r.sigma = 0.2;
  auto [t0, t1] = islr::lambdas_from_sigma(r);
  CHECK(t0 == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(t1 == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("penalty split from the curvature budget") {
  auto [a0, a1] = islr::penalties_from_c(0.5, 1.0, 1.0);
  CHECK(a0 == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(a1 == doctest::Approx(0.5 * (1.0 - 1e-6)).epsilon(1e-12));

  // c near zero pushes the whole budget to the entrywise axis
  auto [b0, b1] = islr::penalties_from_c(1e-12, 2.0, 0.5);
  CHECK(b0 == doctest::Approx(5e-13).epsilon(1e-6));
  CHECK(b1 == doctest::Approx((1.0 - 1e-12) * (1.0 - 1e-6) / 0.5).epsilon(1e-9));

  CHECK_THROWS_AS(islr::penalties_from_c(0.5, 0.0, 1.0), islr::DegenerateLambda);
  CHECK_THROWS_AS(islr::penalties_from_c(0.5, 1.0, 0.0), islr::DegenerateLambda);
  CHECK_THROWS_AS(islr::penalties_from_c(0.0, 1.0, 1.0), islr::BadParams);
  CHECK_THROWS_AS(islr::penalties_from_c(1.0, 1.0, 1.0), islr::BadParams);

  // the derived pair always lands strictly inside the admissible triangle
  islr::Rng rng(11);
  for (int t = 0; t < 1000; ++t) {
    const double c = rng.uniform(1e-6, 1.0 - 1e-6);
    const double l0 = rng.uniform(1e-3, 10.0);
    const double l1 = rng.uniform(1e-3, 10.0);
    auto [x0, x1] = islr::penalties_from_c(c, l0, l1);
    CHECK(x0 * l0 + x1 * l1 < 1.0);
    SolverConfig cfg;
    cfg.lambda0 = l0;
    cfg.lambda1 = l1;
    cfg.penalty0 = {PenaltyKind::rational, x0};
    cfg.penalty1 = {PenaltyKind::rational, x1};
    CHECK(islr::validate_config(cfg).accepted);
  }
}

TEST_CASE("derive_penalties handles the degenerate axes") {
  SolverConfig cfg;
  cfg.penalty0 = {PenaltyKind::arctangent, 9.0};
  cfg.penalty1 = {PenaltyKind::arctangent, 9.0};

  cfg.lambda0 = 1.0;
  cfg.lambda1 = 2.0;
  islr::derive_penalties(cfg, 0.0);
  CHECK(cfg.penalty0.a == 0.0);
  CHECK(cfg.penalty1.a == 0.0);

  islr::derive_penalties(cfg, 0.5);
  CHECK(cfg.penalty0.a == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(cfg.penalty1.a ==
        doctest::Approx((1.0 - 0.5) * (1.0 - 1e-6) / 2.0).epsilon(1e-12));

  cfg.lambda0 = 0.0;
  cfg.lambda1 = 2.0;
  islr::derive_penalties(cfg, 0.5);
  CHECK(cfg.penalty0.a == 0.0);
  CHECK(cfg.penalty1.a == doctest::Approx((1.0 - 1e-6) / 2.0).epsilon(1e-12));

  cfg.lambda0 = 1.5;
  cfg.lambda1 = 0.0;
  islr::derive_penalties(cfg, 0.5);
  CHECK(cfg.penalty0.a == doctest::Approx(0.5 / 1.5).epsilon(1e-12));
  CHECK(cfg.penalty1.a == 0.0);

  cfg.lambda0 = 0.0;
  cfg.lambda1 = 0.0;
  islr::derive_penalties(cfg, 0.7);
  CHECK(cfg.penalty0.a == 0.0);
  CHECK(cfg.penalty1.a == 0.0);

  // every branch passes validation
  for (double c : {0.0, 0.3, 0.9}) {
    for (double l0 : {0.0, 0.8}) {
      for (double l1 : {0.0, 1.3}) {
        SolverConfig probe;
        probe.lambda0 = l0;
        probe.lambda1 = l1;
        islr::derive_penalties(probe, c);
        CHECK(islr::validate_config(probe).accepted);
      }
    }
  }
}

TEST_CASE("tuned config assembly keeps the defaults") {
  SolverConfig defaults;
  defaults.penalty0 = {PenaltyKind::logarithmic, 0.0};
  defaults.penalty1 = {PenaltyKind::logarithmic, 0.0};
  defaults.mu = 1.9;
  defaults.eps = 1e-7;
  defaults.max_iter = 123;
  const SolverConfig cfg = islr::make_tuned_config(10.0, 5.0, 0.5, 0.2, defaults);
  CHECK(cfg.lambda0 == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(cfg.lambda1 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cfg.penalty0.a == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(cfg.penalty0.kind == PenaltyKind::logarithmic);
  CHECK(cfg.mu == 1.9);
  CHECK(cfg.eps == 1e-7);
  CHECK(cfg.max_iter == 123);
  CHECK(islr::validate_config(cfg).accepted);
}

TEST_CASE("grid search scores every cell and picks the argmin") {
  islr::Rng rng(21);
  Mat L(12, 2), R(2, 9);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 12; ++i) L(i, j) = rng.normal();
  for (int j = 0; j < 9; ++j)
    for (int i = 0; i < 2; ++i) R(i, j) = rng.normal();
  const Mat X_ref = L * R;
  Mat Y = X_ref;
  for (int j = 0; j < 9; ++j)
    for (int i = 0; i < 12; ++i) Y(i, j) += 0.2 * rng.normal();

  SolverConfig defaults;
  defaults.penalty0 = {PenaltyKind::rational, 0.0};
  defaults.penalty1 = {PenaltyKind::rational, 0.0};

  // single cell
  const islr::GridReport one = islr::grid_search(Y, X_ref, {2.0}, {0.5}, 0.5, 0.2, defaults);
  REQUIRE(one.rows.size() == 1);
  CHECK(one.best_index == 0);
  CHECK(one.rows[0].beta0 == 2.0);
  CHECK(one.rows[0].lambda0 == doctest::Approx(0.4).epsilon(1e-15));

  // zero-beta cell reproduces Y exactly when scored against itself
  const islr::GridReport zero =
      islr::grid_search(Y, Y, {0.0, 1.0}, {0.0, 1.0}, 0.5, 0.2, defaults);
  REQUIRE(zero.rows.size() == 4);
  CHECK(zero.rows[zero.best_index].beta0 == 0.0);
  CHECK(zero.rows[zero.best_index].beta1 == 0.0);
  CHECK(zero.rows[zero.best_index].rse == 0.0);

  // full table: beta0-major ordering, finite scores, deterministic repeat
  const std::vector<double> betas{0.25, 1.0, 4.0};
  const islr::GridReport rep = islr::grid_search(Y, X_ref, betas, betas, 0.5, 0.2, defaults);
  REQUIRE(rep.rows.size() == 9);
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(rep.rows[i].beta0 == betas[i / 3]);
    CHECK(rep.rows[i].beta1 == betas[i % 3]);
    CHECK(std::isfinite(rep.rows[i].rse));
    CHECK(rep.rows[i].rse >= rep.rows[rep.best_index].rse);
  }
  const islr::GridReport rep2 = islr::grid_search(Y, X_ref, betas, betas, 0.5, 0.2, defaults);
  CHECK(rep2.best_index == rep.best_index);
  for (std::size_t i = 0; i < 9; ++i) CHECK(rep2.rows[i].rse == rep.rows[i].rse);

  CHECK_THROWS_AS(islr::grid_search(Y, X_ref, {}, betas, 0.5, 0.2, defaults), islr::BadParams);
  CHECK_THROWS_AS(islr::grid_search(Y, Mat::Zero(2, 2), betas, betas, 0.5, 0.2, defaults),
                  islr::BadParams);
}

TEST_CASE("grid report renders as csv") {
  islr::GridReport rep;
  rep.rows.push_back({0.25, 0.5, 0.05, 0.1, 0.125});
  rep.rows.push_back({1.0, 2.0, 0.2, 0.4, 0.5});
  const std::string csv = rep.to_csv();
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "beta0,beta1,lambda0,lambda1,rse");
  std::getline(in, line);
  CHECK(line == "0.25,0.5,0.05,0.1,0.125");
  std::getline(in, line);
  CHECK(line == "1,2,0.2,0.4,0.5");
  CHECK(!std::getline(in, line));
}
