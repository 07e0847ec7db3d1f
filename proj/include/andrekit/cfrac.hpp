#ifndef ANDREKIT_CFRAC_HPP
#define ANDREKIT_CFRAC_HPP

#include <functional>
#include <vector>

#include "andrekit/multipoly.hpp"
#include "andrekit/pqnum.hpp"

namespace andrekit {

/// Coefficient sequences of a continued fraction. For a J-type fraction a
/// level step at height i weighs b(i) and a down step from height i weighs
/// lambda(i); up steps weigh 1. For an S-type fraction b is identically zero.
struct CFSpec {
  enum class Kind { Jacobi, Stieltjes };

  Kind kind = Kind::Jacobi;
  std::function<MultiPoly(int)> b;       // level weight at height i >= 0
  std::function<MultiPoly(int)> lambda;  // down weight from height i >= 1
};

/// Series expansion of a continued fraction: mu_0 .. mu_N.
///
/// Computed by the height-indexed transfer DP over weighted Motzkin paths
/// (Flajolet's correspondence), not by rational-convergent arithmetic.
/// For an S-type fraction the contraction to Dyck paths applies: mu_n is the
/// weighted sum over Dyck paths of semilength n.
inline std::vector<MultiPoly> jfraction_series(const CFSpec& spec, int N) {
  if (N < 0) throw std::invalid_argument("jfraction_series: negative N");
  const bool stype = spec.kind == CFSpec::Kind::Stieltjes;
  const int steps = stype ? 2 * N : N;
  const int max_h = steps / 2 + 1;

  std::vector<MultiPoly> level(max_h + 2), down(max_h + 2);
  for (int h = 0; h <= max_h + 1; ++h) {
    level[h] = stype ? MultiPoly(0) : spec.b(h);
    down[h] = h >= 1 ? spec.lambda(h) : MultiPoly(0);
  }

  // g[h] = weighted sum over nonnegative prefix paths from height 0 to h.
  std::vector<MultiPoly> g(max_h + 2);
  g[0] = MultiPoly(1);
  std::vector<MultiPoly> out;
  out.push_back(g[0]);
  std::vector<MultiPoly> next(max_h + 2);
  for (int step = 1; step <= steps; ++step) {
    for (int h = 0; h <= max_h; ++h) {
      MultiPoly acc;
      if (h > 0) acc += g[h - 1];  // up step into h, weight 1
      if (!level[h].is_zero()) acc += g[h] * level[h];
      acc += g[h + 1] * down[h + 1];
      next[h] = std::move(acc);
    }
    next[max_h + 1] = MultiPoly();
    g.swap(next);
    if (!stype || step % 2 == 0) out.push_back(g[0]);
  }
  return out;
}

/// The fraction defining D_{n+1}(p,q,t): b_i = [i+1]_{p,q},
/// lambda_i = binom(i+1, 2)_{p,q} * t.
inline CFSpec dn_spec() {
  CFSpec s;
  s.b = [](int i) { return pq_int(i + 1); };
  s.lambda = [](int i) { return pq_binomial(i + 1, 2) * var_t(); };
  return s;
}

/// The master fraction for A_n(p,q,t,u,v,w): b_n = (u+tv)[n+1]_{p,q},
/// lambda_n = [n]_{p,q} [n+1]_{p,q} t w.
inline CFSpec master_spec() {
  CFSpec s;
  s.b = [](int i) { return (var_u() + var_t() * var_v()) * pq_int(i + 1); };
  s.lambda = [](int i) {
    return pq_int(i) * pq_int(i + 1) * var_t() * var_w();
  };
  return s;
}

/// The (p,q) = (1,-1) specialization: b_{2i} = 1, b_{2i+1} = 0,
/// lambda_i = floor((i+1)/2) * t.
inline CFSpec neg1_spec() {
  CFSpec s;
  s.b = [](int i) { return MultiPoly(i % 2 == 0 ? 1 : 0); };
  s.lambda = [](int i) { return MultiPoly((i + 1) / 2) * var_t(); };
  return s;
}

/// Euler's S-fraction for n!: lambda_i = floor((i+1)/2).
inline CFSpec euler_spec() {
  CFSpec s;
  s.kind = CFSpec::Kind::Stieltjes;
  s.b = [](int) { return MultiPoly(0); };
  s.lambda = [](int i) { return MultiPoly((i + 1) / 2); };
  return s;
}

/// D_1 .. D_{N+1} as a vector (index n holds D_{n+1}).
inline std::vector<MultiPoly> dn_series(int N) {
  return jfraction_series(dn_spec(), N);
}

/// A_1 .. A_{N+1} in the six variables p,q,t,u,v,w.
inline std::vector<MultiPoly> master_series(int N) {
  return jfraction_series(master_spec(), N);
}

/// D_1(1,-1,t) .. D_{N+1}(1,-1,t) via the specialized fraction.
inline std::vector<MultiPoly> neg1_series(int N) {
  return jfraction_series(neg1_spec(), N);
}

}  // namespace andrekit

#endif  // ANDREKIT_CFRAC_HPP
