#ifndef ANDREKIT_PQNUM_HPP
#define ANDREKIT_PQNUM_HPP

#include <stdexcept>

#include "andrekit/multipoly.hpp"

namespace andrekit {

/// The (p,q)-analogue of n: sum of p^i q^j over i+j = n-1. Zero for n = 0,
/// and [n] at p = q = 1 equals n.
inline MultiPoly pq_int(int n) {
  if (n < 0) throw std::invalid_argument("pq_int: negative n");
  MultiPoly r;
  for (int i = 0; i < n; ++i) {
    Exponents e{};
    e[static_cast<int>(Var::p)] = i;
    e[static_cast<int>(Var::q)] = n - 1 - i;
    r += MultiPoly::monomial(1, e);
  }
  return r;
}

/// The (p,q)-binomial [n]...[n-k+1] / ([1]...[k]), computed by the
/// product-then-exact-divide route. The quotient is always a polynomial;
/// NotDivisible escaping here would mean an implementation bug.
inline MultiPoly pq_binomial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("pq_binomial: need 0<=k<=n");
  MultiPoly num(1), den(1);
  for (int i = 0; i < k; ++i) {
    num *= pq_int(n - i);
    den *= pq_int(i + 1);
  }
  return exact_div(num, den);
}

}  // namespace andrekit

#endif  // ANDREKIT_PQNUM_HPP
