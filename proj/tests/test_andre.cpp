#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "andrekit/andre.hpp"

using namespace andrekit;

namespace {
std::set<std::string> to_strings(const std::vector<Permutation>& v) {
  std::set<std::string> out;
  for (const auto& s : v) out.insert(s.str());
  return out;
}

const std::map<Var, MultiPoly> kOnes = {{Var::p, MultiPoly(1)},
                                        {Var::q, MultiPoly(1)}};
}  // namespace

TEST_CASE("recognizer on worked examples") {
  CHECK_FALSE(is_andre(Permutation::parse("43512")));
  CHECK(is_andre(Permutation::parse("31245")));
  CHECK(is_andre(Permutation::parse("3124")));
  CHECK_FALSE(is_andre(Permutation::parse("2134")));
  CHECK(is_andre(Permutation::identity(5)));
  CHECK(to_strings(enumerate_D(4, 0)) == std::set<std::string>{"1234"});
  std::set<std::string> d4;
  for (int k = 0; k <= 1; ++k)
    for (const auto& s : enumerate_D(4, k)) d4.insert(s.str());
  CHECK(d4 == std::set<std::string>{"1234", "1423", "3124", "3412", "4123"});
}

TEST_CASE("recognizers agree") {
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& s) {
      CHECK(is_andre(s) == is_andre_xfact(s));
    });
  }
}

TEST_CASE("enumerations") {
  CHECK(to_strings(enumerate_D(5, 2)) ==
        std::set<std::string>{"31524", "41523", "51423", "53412"});
  CHECK(enumerate_G(4, 1).size() == 8);
  CHECK(to_strings(enumerate_G(3, 1)) == std::set<std::string>{"213", "312"});
  long long e7 = 0;
  for (int k = 0; k <= 3; ++k) e7 += enumerate_D(7, k).size();
  CHECK(e7 == 272);
}

TEST_CASE("gamma and d polynomials") {
  CHECK(d_poly(5, 2) == var_p().pow(2) + var_p() * var_q() + var_q().pow(2) +
                            MultiPoly(1));
  CHECK(gamma_poly(4, 1).substitute(kOnes) == MultiPoly(8));
  CHECK(d_poly(4, 1).substitute(kOnes) == MultiPoly(4));
  for (int n = 1; n <= 6; ++n) CHECK(gamma_poly(n, 0) == MultiPoly(1));
  CHECK(gamma_poly(3, 1) == var_p() + var_q());
  CHECK(d_poly(3, 1) == MultiPoly(1));
}

TEST_CASE("descent generating polynomials") {
  CHECK(eulerian_poly(1) == MultiPoly(1));
  const std::map<Var, MultiPoly> all_ones = {{Var::p, MultiPoly(1)},
                                             {Var::q, MultiPoly(1)},
                                             {Var::t, MultiPoly(1)}};
  mpz_class f = 1;
  for (int n = 1; n <= 6; ++n) {
    f *= n;
    CHECK(eulerian_poly(n).substitute(all_ones) == MultiPoly(f));
  }
}

TEST_CASE("gamma expansion") {
  MultiPoly a4t = MultiPoly(1) + MultiPoly(11) * var_t() +
                  MultiPoly(11) * var_t().pow(2) + var_t().pow(3);
  GammaExpansion ge = gamma_expand(a4t, 4);
  REQUIRE(ge.gammas.size() == 2);
  CHECK(ge.gammas[0] == MultiPoly(1));
  CHECK(ge.gammas[1] == MultiPoly(8));

  GammaExpansion full = gamma_expand(eulerian_poly(4), 4);
  CHECK(full.gammas[0] == gamma_poly(4, 0));
  CHECK(full.gammas[1] == gamma_poly(4, 1));

  for (int n = 2; n <= 6; ++n) {
    MultiPoly h = (MultiPoly(1) + var_t()).pow(n - 1);
    GammaExpansion g = gamma_expand(h, n);
    CHECK(g.gammas[0] == MultiPoly(1));
    for (size_t k = 1; k < g.gammas.size(); ++k)
      CHECK(g.gammas[k] == MultiPoly(0));
  }
  CHECK_THROWS_AS(gamma_expand(MultiPoly(1) + MultiPoly(2) * var_t(), 3),
                  NotGammaExpressible);
  CHECK_THROWS_AS(gamma_expand(var_t().pow(4), 4), NotGammaExpressible);
}

TEST_CASE("gamma expansion reconstructs random palindromic inputs") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> expo(0, 2);
  const MultiPoly one_plus_t = MultiPoly(1) + var_t();
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 6;
    std::vector<MultiPoly> gammas;
    MultiPoly h;
    for (int k = 0; 2 * k <= n - 1; ++k) {
      Exponents e{};
      e[static_cast<int>(Var::p)] = expo(rng);
      e[static_cast<int>(Var::q)] = expo(rng);
      MultiPoly g = MultiPoly::monomial(coeff(rng), e);
      gammas.push_back(g);
      h += g * var_t().pow(k) * one_plus_t.pow(n - 1 - 2 * k);
    }
    GammaExpansion ge = gamma_expand(h, n);
    REQUIRE(ge.gammas.size() == gammas.size());
    for (size_t k = 0; k < gammas.size(); ++k) CHECK(ge.gammas[k] == gammas[k]);
  }
}

TEST_CASE("recurrence table") {
  auto table = d_recurrence_table(10);
  CHECK(table[7][3] == 34);
  CHECK(table[5][1] == 11);
  CHECK(table[7] == std::vector<long long>{1, 57, 180, 34});
  // Row sums against enumeration.
  for (int n = 1; n <= 7; ++n) {
    long long rec = 0, enumd = 0;
    for (long long v : table[n]) rec += v;
    for (int k = 0; 2 * k <= n - 1; ++k) enumd += enumerate_D(n, k).size();
    CHECK(rec == enumd);
  }
  // Recurrence equals enumeration cell by cell.
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; 2 * k <= n - 1; ++k)
      CHECK(table[n][k] ==
            static_cast<long long>(enumerate_D(n, k).size()));
}

TEST_CASE("verification reports") {
  for (int n = 1; n <= 6; ++n) {
    VerifyReport r1 = verify_main1(n);
    INFO(r1.detail);
    CHECK(r1.ok);
  }
  for (int n = 1; n <= 7; ++n) {
    VerifyReport r2 = verify_main2(n);
    INFO(r2.detail);
    CHECK(r2.ok);
  }
  for (int n = 1; n <= 7; ++n) {
    VerifyReport rc = verify_corollary_q(n);
    INFO(rc.detail);
    CHECK(rc.ok);
  }
  for (int n = 1; n <= 7; ++n) {
    VerifyReport re = verify_en_q(n);
    INFO(re.detail);
    CHECK(re.ok);
  }
  // E_4(q) = 4 + q, with res values 0,0,1,0,0 over the five permutations.
  MultiPoly e4;
  int ones = 0;
  for (int k = 0; k <= 1; ++k) {
    for (const auto& s : enumerate_D(4, k)) {
      Exponents e{};
      e[static_cast<int>(Var::q)] = res(s);
      e4 += MultiPoly::monomial(1, e);
      if (res(s) == 1) ++ones;
    }
  }
  CHECK(e4 == MultiPoly(4) + var_q());
  CHECK(ones == 1);
}

TEST_CASE("les dominates des on Andre permutations") {
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& s) {
      if (is_andre(s)) CHECK(les(s) >= des(s));
    });
  }
}
