#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "deplm/diagnostics.hpp"
#include "deplm/errors.hpp"
#include "deplm/rng.hpp"
#include "deplm/simulation.hpp"
#include "test_support.hpp"

using deplm::DesignMatrix;
using deplm::design_diagnostics;
using deplm::rho_stability;

TEST_CASE("linear column at n=3 trips the domination warning") {
  Eigen::MatrixXd x(3, 1);
  x << 1.0, 2.0, 3.0;
  const auto diag = design_diagnostics(DesignMatrix(x), 1);
  CHECK(diag.d_values[0] == doctest::Approx(std::sqrt(14.0)));
  CHECK(diag.lindeberg_ratios[0] == doctest::Approx(3.0 / std::sqrt(14.0)));
  CHECK(diag.lindeberg_ratios[0] > 0.5);
  CHECK(diag.lindeberg_warning);
}

TEST_CASE("constant column ratio is 1/sqrt(n)") {
  const auto diag = design_diagnostics(DesignMatrix(Eigen::MatrixXd::Ones(100, 1)), 2);
  CHECK(diag.lindeberg_ratios[0] == doctest::Approx(0.1));
  CHECK_FALSE(diag.lindeberg_warning);
  CHECK(diag.r0_min_eigenvalue == doctest::Approx(1.0));
}

TEST_CASE("orthogonal columns give unit minimum eigenvalue") {
  Eigen::MatrixXd x(4, 2);
  x << 1, 1, 1, -1, 1, 1, 1, -1;
  const auto diag = design_diagnostics(DesignMatrix(x), 1);
  CHECK(diag.r0_min_eigenvalue == doctest::Approx(1.0));
  CHECK_FALSE(diag.r0_warning);
  CHECK(diag.rho_hat.size() == 2);
  CHECK(diag.rho_hat[0].matrix(0, 0) == 1.0);
}

TEST_CASE("nearly collinear columns trip the R(0) warning") {
  Eigen::MatrixXd x(50, 2);
  x.col(0) = test_support::random_vector(50, 17);
  x.col(1) = x.col(0) * (1.0 + 1e-13);
  const auto diag = design_diagnostics(DesignMatrix(x), 0);
  CHECK(diag.r0_warning);
}

TEST_CASE("rho_hat entries respect the Cauchy-Schwarz bound") {
  Eigen::MatrixXd x = test_support::random_matrix(120, 3, 55);
  const auto diag = design_diagnostics(DesignMatrix(x), 10);
  for (const auto& moment : diag.rho_hat) {
    CHECK(moment.matrix.cwiseAbs().maxCoeff() <= 1.0);
  }
  for (Eigen::Index j = 0; j < 3; ++j) CHECK(diag.rho_hat[0].matrix(j, j) == 1.0);
}

TEST_CASE("model 1 design at n=1000 raises no warnings") {
  deplm::RngStream rng(5, 0, deplm::RngStream::Tag::design);
  const DesignMatrix design =
      deplm::simulate_design(deplm::ModelSpec::model1(0.0, 1000), rng);
  const auto diag = design_diagnostics(design, 10);
  CHECK_FALSE(diag.lindeberg_warning);
  CHECK_FALSE(diag.r0_warning);
}

TEST_CASE("rho stability on a constant column converges like (m-1)/m") {
  const DesignMatrix ones(Eigen::MatrixXd::Ones(40, 1));
  const auto probe = rho_stability(ones, 0, 0, 1, 4);
  REQUIRE(probe.values.size() == 4);
  for (std::size_t s = 0; s < probe.values.size(); ++s) {
    const double m = static_cast<double>(probe.prefix_sizes[s]);
    CHECK(probe.values[s] == doctest::Approx((m - 1.0) / m).epsilon(1e-12));
  }
  CHECK(probe.prefix_sizes.back() == 40);
}

TEST_CASE("rho stability on the alternating column sits near -1") {
  Eigen::MatrixXd x(32, 1);
  for (Eigen::Index i = 0; i < 32; ++i) x(i, 0) = (i % 2 == 0) ? 1.0 : -1.0;
  const auto probe = rho_stability(DesignMatrix(x), 0, 0, 1, 8);
  for (std::size_t s = 0; s < probe.values.size(); ++s) {
    const double m = static_cast<double>(probe.prefix_sizes[s]);
    CHECK(probe.values[s] == doctest::Approx(-(m - 1.0) / m).epsilon(1e-12));
  }
}

TEST_CASE("rho stability at lag zero is exactly one") {
  Eigen::MatrixXd x = test_support::random_matrix(50, 2, 99);
  const auto probe = rho_stability(DesignMatrix(x), 1, 1, 0, 5);
  for (double v : probe.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("diagnostics error paths") {
  const DesignMatrix ones(Eigen::MatrixXd::Ones(10, 1));
  CHECK_THROWS_AS(design_diagnostics(ones, 10), deplm::LagOutOfRange);
  CHECK_THROWS_AS(design_diagnostics(DesignMatrix(Eigen::MatrixXd::Zero(5, 1)), 1),
                  deplm::ZeroColumn);
  CHECK_THROWS_AS(rho_stability(ones, 0, 0, 10, 4), deplm::LagOutOfRange);
  CHECK_THROWS_AS(rho_stability(ones, 1, 0, 1, 4), std::out_of_range);
  CHECK_THROWS_AS(rho_stability(ones, 0, 0, 1, 1), std::invalid_argument);
}
