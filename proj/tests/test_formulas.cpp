#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "andrekit/cfrac.hpp"
#include "andrekit/formulas.hpp"

using namespace andrekit;

TEST_CASE("algebraic parameters") {
  AlgebraicParams ap = algebraic_params(0.3, 0.2);
  CHECK(ap.discriminant == Catch::Approx(0.65));
  CHECK(std::fabs(ap.v_residual()) < 1e-12);
  CHECK(std::fabs(ap.u_residual()) < 1e-12);
  CHECK_THROWS_AS(algebraic_params(0.3, 0.4), DomainError);  // t > (1+q)/4
  CHECK_THROWS_AS(algebraic_params(0.3, 0.0), DomainError);
  CHECK_THROWS_AS(algebraic_params(1.0, 0.2), DomainError);
}

TEST_CASE("triple sum on worked points") {
  CHECK(dn_1q_triple_sum(1, 0.3, 0.2) == Catch::Approx(1.0).margin(1e-8));
  CHECK(dn_1q_triple_sum(3, 0.3, 0.2) == Catch::Approx(1.2).margin(1e-8));
  CHECK(dn_1q_triple_sum(4, 0.3, 0.2) == Catch::Approx(1.66).margin(1e-8));
  CHECK_THROWS_AS(dn_1q_triple_sum(0, 0.3, 0.2), std::invalid_argument);
}

TEST_CASE("triple sum matches the exact series on the grid") {
  const double grid_q[] = {-0.5, 0.1, 0.3, 0.6};
  const double grid_t[] = {0.05, 0.1, 0.2};
  auto series = dn_series(5);
  for (double q : grid_q) {
    for (double t : grid_t) {
      if ((1 + q) * (1 + q) - 4 * t * (1 + q) < 0) continue;
      for (int n = 1; n <= 6; ++n) {
        double exact = series[n - 1].eval_float(
            {{Var::p, 1.0}, {Var::q, q}, {Var::t, t}});
        INFO("n=" << n << " q=" << q << " t=" << t);
        CHECK(dn_1q_triple_sum(n, q, t) ==
              Catch::Approx(exact).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("the split reading disagrees") {
  // The two parenthesizations of the display are not equivalent; only the
  // bracketed difference matches the exact value.
  double exact = 1.66;
  double split = dn_1q_triple_sum(4, 0.3, 0.2, SumReading::SplitDifference);
  CHECK(std::fabs(split - exact) > 1e-3);
}

TEST_CASE("small-t limit tends to one") {
  for (double q : {0.1, 0.3}) {
    double v = dn_1q_triple_sum(4, q, 1e-6);
    CHECK(v == Catch::Approx(1.0).margin(1e-3));
  }
}
