#ifndef ANDREKIT_FORMULAS_HPP
#define ANDREKIT_FORMULAS_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace andrekit {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The algebraic auxiliaries of the triple-sum formula for D_n(1,q,t),
/// taken with the principal square root. v is a root of
/// t v^2 - ((1+q) - 2t) v + t = 0.
struct AlgebraicParams {
  double q = 0;
  double t = 0;
  double u = 0;
  double v = 0;
  double discriminant = 0;

  double v_residual() const { return t * v * v - ((1 + q) - 2 * t) * v + t; }

  double u_residual() const {
    const double P = 1 + q * q - 2 * (1 + q) * t;
    const double W = q - t * (1 + q);
    const double R = 1 - q;
    // u solves W u^2 - P u + (P^2 - R^2 * disc) / (4 W) = 0.
    return W * u * u - P * u +
           (P * P - R * R * discriminant) / (4 * W);
  }
};

inline AlgebraicParams algebraic_params(double q, double t) {
  AlgebraicParams ap;
  ap.q = q;
  ap.t = t;
  ap.discriminant = (1 + q) * (1 + q) - 4 * t * (1 + q);
  if (ap.discriminant < 0) throw DomainError("negative discriminant");
  if (t == 0) throw DomainError("t must be nonzero");
  if (q == 1 || q == -1) throw DomainError("q must differ from +-1");
  const double W = q - t * (1 + q);
  if (W == 0) throw DomainError("vanishing denominator in u");
  const double root = std::sqrt(ap.discriminant);
  // Radical coefficient in u is (1-q): the (1+q) variant fails the exact
  // cross-check on every grid point, this one passes on both branches.
  ap.u = (1 + q * q - 2 * (1 + q) * t - (1 - q) * root) / (2 * W);
  ap.v = ((1 + q) - 2 * t - root) / (2 * t);
  if (ap.v == 0) throw DomainError("vanishing v");
  return ap;
}

/// The display of the inner j-sum is ambiguous; both readings are
/// implemented and the agreement test against exact D_n arbitrates.
/// BracketedDifference: sum_j v^j [C(n,j)C(n,j+k) - C(n,j-1)C(n,j+k+1)].
/// SplitDifference: sum_j (v^j C(n,j)C(n,j+k) - C(n,j-1)C(n,j+k+1)).
enum class SumReading { BracketedDifference, SplitDifference };

namespace detail {
inline double fbinom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}
}  // namespace detail

/// Floating evaluation of the triple-sum formula for D_n(1,q,t).
inline double dn_1q_triple_sum(int n, double q, double t,
                               SumReading reading =
                                   SumReading::BracketedDifference) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  AlgebraicParams ap = algebraic_params(q, t);
  const double u = ap.u, v = ap.v;
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    double jsum = 0.0;
    for (int j = 0; j <= n - k; ++j) {
      const double a = detail::fbinom(n, j) * detail::fbinom(n, j + k);
      const double b = detail::fbinom(n, j - 1) * detail::fbinom(n, j + k + 1);
      const double vj = std::pow(v, j);
      jsum += reading == SumReading::BracketedDifference ? vj * (a - b)
                                                         : vj * a - b;
    }
    double isum = 0.0;
    for (int i = 0; i <= k; ++i)
      isum += std::pow(v, i) * std::pow(q, i * (k + 1 - i));
    sum += (k % 2 == 0 ? 1.0 : -1.0) * jsum * isum;
  }
  const double prefactor = 1.0 / (v * (1 - q));
  const double base = (1 + u) / ((1 + u * v) * (1 - q * q));
  return prefactor * std::pow(base, n - 1) * sum;
}

}  // namespace andrekit

#endif  // ANDREKIT_FORMULAS_HPP
