#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "andrekit/multipoly.hpp"

using namespace andrekit;

namespace {

MultiPoly d4() {
  // 1 + (p+q+2) t
  return MultiPoly(1) + (var_p() + var_q() + MultiPoly(2)) * var_t();
}

MultiPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> expo(0, 2);
  std::uniform_int_distribution<int> nterms(0, 5);
  MultiPoly out;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Exponents e{};
    e[static_cast<int>(Var::p)] = expo(rng);
    e[static_cast<int>(Var::q)] = expo(rng);
    e[static_cast<int>(Var::t)] = expo(rng);
    int c = coeff(rng);
    if (c != 0) out += MultiPoly::monomial(c, e);
  }
  return out;
}

bool canonical(const MultiPoly& a) {
  for (const auto& [e, c] : a.terms())
    if (c == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("addition identities") {
  MultiPoly pq = var_p() + var_q();
  CHECK(pq + MultiPoly(0) == pq);
  CHECK(pq + (var_p() - var_q()) == MultiPoly(2) * var_p());
  CHECK(d4() == MultiPoly(1) + var_p() * var_t() + var_q() * var_t() +
                    MultiPoly(2) * var_t());
}

TEST_CASE("multiplication and powers") {
  CHECK((var_p() + var_q()) * (var_p() - var_q()) ==
        var_p().pow(2) - var_q().pow(2));
  MultiPoly one_plus_t = MultiPoly(1) + var_t();
  CHECK(one_plus_t.pow(2) ==
        MultiPoly(1) + MultiPoly(2) * var_t() + var_t().pow(2));
  CHECK(one_plus_t.pow(0) == MultiPoly(1));
  CHECK((var_p() + var_q()).pow(2) ==
        var_p().pow(2) + MultiPoly(2) * var_p() * var_q() + var_q().pow(2));
}

TEST_CASE("substitute") {
  CHECK(d4().substitute({{Var::p, MultiPoly(1)}, {Var::q, MultiPoly(-1)}}) ==
        MultiPoly(1) + MultiPoly(2) * var_t());
  CHECK(d4().substitute({{Var::p, MultiPoly(1)}, {Var::t, MultiPoly(1)}}) ==
        MultiPoly(4) + var_q());
  // Unbound variables stay put.
  MultiPoly xt = var_x() * var_t();
  CHECK(xt.substitute({{Var::t, MultiPoly(2)}}) == MultiPoly(2) * var_x());
}

TEST_CASE("coeff_of") {
  CHECK(d4().coeff_of(Var::t, 1) == var_p() + var_q() + MultiPoly(2));
  CHECK(d4().coeff_of(Var::t, 0) == MultiPoly(1));
  CHECK(MultiPoly(1).coeff_of(Var::t, 3) == MultiPoly(0));
  MultiPoly d5_t2 = var_p().pow(2) + var_p() * var_q() + var_q().pow(2) +
                    MultiPoly(1);
  MultiPoly d5 = MultiPoly(1) +
                 ((var_p() + var_q()).pow(2) +
                  MultiPoly(2) * (var_p() + var_q()) + MultiPoly(3)) *
                     var_t() +
                 d5_t2 * var_t().pow(2);
  CHECK(d5.coeff_of(Var::t, 2) == d5_t2);
}

TEST_CASE("exact division") {
  CHECK(exact_div(var_p().pow(2) - var_q().pow(2), var_p() + var_q()) ==
        var_p() - var_q());
  CHECK_THROWS_AS(exact_div(var_p().pow(2) + var_q().pow(2),
                            var_p() + var_q()),
                  NotDivisible);
  CHECK_THROWS_AS(exact_div(var_p(), MultiPoly(0)), std::invalid_argument);
  CHECK(exact_div(MultiPoly(0), var_p() + var_q()) == MultiPoly(0));
}

TEST_CASE("exact division round trip on random inputs") {
  std::mt19937 rng(12345);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    MultiPoly a = random_poly(rng);
    MultiPoly b = random_poly(rng);
    if (b.is_zero()) continue;
    CHECK(exact_div(a * b, b) == a);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937 rng(777);
  for (int i = 0; i < 100; ++i) {
    MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == MultiPoly(0));
    CHECK(canonical(a + b));
    CHECK(canonical(a * b));
    CHECK(canonical(a.substitute({{Var::t, b}})));
  }
}

TEST_CASE("eval_float") {
  MultiPoly one_plus_t = MultiPoly(1) + var_t();
  CHECK(one_plus_t.eval_float({{Var::t, 0.2}}) == Catch::Approx(1.2));
  CHECK(d4().eval_float({{Var::p, 1.0}, {Var::q, 0.3}, {Var::t, 0.2}}) ==
        Catch::Approx(1.66));
  CHECK(MultiPoly(1).eval_float({}) == Catch::Approx(1.0));
  CHECK_THROWS_AS(var_p().eval_float({{Var::q, 1.0}}), std::invalid_argument);
}

TEST_CASE("serialization") {
  MultiPoly sym = var_p().pow(2) + var_p() * var_q() + var_q().pow(2) +
                  MultiPoly(1);
  CHECK(sym.str() == "p^2 + p*q + q^2 + 1");
  CHECK(d4().str_grouped(Var::t) == "1 + (p+q+2)*t");
  CHECK(MultiPoly(0).str() == "0");
  CHECK((var_p() - var_q()).str() == "p - q");
  CHECK((MultiPoly(1) + MultiPoly(3) * var_t() + MultiPoly(2) * var_t().pow(2))
            .str_grouped(Var::t) == "1 + 3*t + 2*t^2");
  CHECK((MultiPoly(1) - var_t()).str_grouped(Var::t) == "1 - t");
}

TEST_CASE("degree and predicates") {
  CHECK(d4().degree_in(Var::t) == 1);
  CHECK(d4().degree_in(Var::x) == 0);
  CHECK(MultiPoly(0).degree_in(Var::t) == -1);
  CHECK(MultiPoly(5).is_constant());
  CHECK_FALSE(var_p().is_constant());
  CHECK(MultiPoly(0).is_zero());
}
