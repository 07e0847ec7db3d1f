#include <catch2/catch_amalgamated.hpp>

#include "andrekit/pqnum.hpp"

using namespace andrekit;

namespace {
long long binom_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

MultiPoly swap_pq(const MultiPoly& a) {
  return a.substitute({{Var::p, var_q()}, {Var::q, var_p()}});
}
}  // namespace

TEST_CASE("pq integers") {
  CHECK(pq_int(0) == MultiPoly(0));
  CHECK(pq_int(1) == MultiPoly(1));
  CHECK(pq_int(2) == var_p() + var_q());
  CHECK(pq_int(3) == var_p().pow(2) + var_p() * var_q() + var_q().pow(2));
  CHECK_THROWS_AS(pq_int(-1), std::invalid_argument);
}

TEST_CASE("pq integers specialize to n at p=q=1") {
  const std::map<Var, MultiPoly> ones = {{Var::p, MultiPoly(1)},
                                         {Var::q, MultiPoly(1)}};
  for (int n = 0; n <= 30; ++n)
    CHECK(pq_int(n).substitute(ones) == MultiPoly(n));
}

TEST_CASE("pq binomials") {
  CHECK(pq_binomial(2, 2) == MultiPoly(1));
  CHECK(pq_binomial(3, 2) == pq_int(3));
  for (int n = 0; n <= 8; ++n) CHECK(pq_binomial(n, 0) == MultiPoly(1));
  CHECK_THROWS_AS(pq_binomial(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(pq_binomial(2, -1), std::invalid_argument);
}

TEST_CASE("pq binomial properties") {
  const std::map<Var, MultiPoly> ones = {{Var::p, MultiPoly(1)},
                                         {Var::q, MultiPoly(1)}};
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      MultiPoly b = pq_binomial(n, k);
      CHECK(b.substitute(ones) == MultiPoly(binom_ll(n, k)));
      CHECK(b == pq_binomial(n, n - k));
      CHECK(b == swap_pq(b));
    }
  }
}
