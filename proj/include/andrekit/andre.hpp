#ifndef ANDREKIT_ANDRE_HPP
#define ANDREKIT_ANDRE_HPP

#include <string>
#include <vector>

#include "andrekit/cfrac.hpp"
#include "andrekit/multipoly.hpp"
#include "andrekit/permutation.hpp"

namespace andrekit {

struct NotGammaExpressible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
/// Double-descent check on an arbitrary word under the 0-boundary convention.
/// An ending descent counts: the last letter then sits above the boundary 0.
inline bool word_has_double_descent(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i) {
    const int prev = i > 0 ? w[i - 1] : 0;
    const int next = i + 1 < n ? w[i + 1] : 0;
    if (prev > w[i] && w[i] > next) return true;
  }
  return false;
}
}  // namespace detail

/// Andre recognizer by the subword characterization: every restriction
/// sigma_[k] (letters 1..k in order of appearance) is free of double
/// descents. Under the 0-boundary convention a final descent of sigma_[k]
/// is itself a double descent, so this already forces each restriction to
/// end with an ascent.
inline bool is_andre(const Permutation& s) {
  const int n = s.n();
  std::vector<int> sub;
  sub.reserve(n);
  for (int k = n; k >= 1; --k) {
    sub.clear();
    for (int v : s.word())
      if (v <= k) sub.push_back(v);
    if (detail::word_has_double_descent(sub)) return false;
  }
  return true;
}

/// Andre recognizer by x-factorization: no double descents, the word ends
/// with an ascent, and every valley x satisfies min(w2) > min(w4).
inline bool is_andre_xfact(const Permutation& s) {
  const int n = s.n();
  if (n == 0) return true;
  auto cls = classify_letters(s);
  for (int v = 1; v <= n; ++v)
    if (cls[v] == LetterClass::DoubleDescent) return false;
  if (n >= 2 && s.at(n - 1) > s.at(n)) return false;
  for (int v = 1; v <= n; ++v) {
    if (cls[v] != LetterClass::Valley) continue;
    Factorization f = x_factorization(s, v);
    const int y1 = *std::min_element(f.w2.begin(), f.w2.end());
    const int y2 = *std::min_element(f.w4.begin(), f.w4.end());
    if (y1 < y2) return false;
  }
  return true;
}

/// Andre permutations of [n] with k descents, by filtering S_n.
inline std::vector<Permutation> enumerate_D(int n, int k) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& s) {
    if (des(s) == k && is_andre(s)) out.push_back(s);
  });
  return out;
}

/// Permutations of [n] with k valleys and no double descents.
inline std::vector<Permutation> enumerate_G(int n, int k) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& s) {
    if (dd_count(s) == 0 && valley_count(s) == k) out.push_back(s);
  });
  return out;
}

/// gamma_{n,k}(p,q) = sum over G_{n,k} of p^res q^les.
inline MultiPoly gamma_poly(int n, int k) {
  MultiPoly out;
  for (const auto& s : enumerate_G(n, k)) {
    Exponents e{};
    e[static_cast<int>(Var::p)] = res(s);
    e[static_cast<int>(Var::q)] = les(s);
    out += MultiPoly::monomial(1, e);
  }
  return out;
}

/// d_{n,k}(p,q) = sum over D_{n,k} of p^res q^{les-k}.
inline MultiPoly d_poly(int n, int k) {
  MultiPoly out;
  for (const auto& s : enumerate_D(n, k)) {
    Exponents e{};
    e[static_cast<int>(Var::p)] = res(s);
    e[static_cast<int>(Var::q)] = les(s) - k;
    out += MultiPoly::monomial(1, e);
  }
  return out;
}

/// A_n(p,q,t) = sum over S_n of p^res q^les t^des.
inline MultiPoly eulerian_poly(int n) {
  return sum_over_sn(n, [](const Permutation& s) {
    Exponents e{};
    e[static_cast<int>(Var::p)] = res(s);
    e[static_cast<int>(Var::q)] = les(s);
    e[static_cast<int>(Var::t)] = des(s);
    return MultiPoly::monomial(1, e);
  });
}

/// A_n(p,q,t,u,v,w) with u,v,w tracking double ascents, double descents and
/// valleys.
inline MultiPoly eulerian_poly6(int n) {
  return sum_over_sn(n, [](const Permutation& s) {
    auto cls = classify_letters(s);
    int da = 0, dd = 0, val = 0;
    for (int v = 1; v <= s.n(); ++v) {
      if (cls[v] == LetterClass::DoubleAscent) ++da;
      if (cls[v] == LetterClass::DoubleDescent) ++dd;
      if (cls[v] == LetterClass::Valley) ++val;
    }
    Exponents e{};
    e[static_cast<int>(Var::p)] = res(s);
    e[static_cast<int>(Var::q)] = les(s);
    e[static_cast<int>(Var::t)] = des(s);
    e[static_cast<int>(Var::u)] = da;
    e[static_cast<int>(Var::v)] = dd;
    e[static_cast<int>(Var::w)] = val;
    return MultiPoly::monomial(1, e);
  });
}

struct GammaExpansion {
  int n = 0;
  std::vector<MultiPoly> gammas;  // gamma_0 .. gamma_{floor((n-1)/2)}
};

/// Unique expansion h = sum_k gamma_k t^k (1+t)^{n-1-2k}, extracted by
/// peeling ascending coefficients of t. A nonzero final residual means h was
/// not palindromic about (n-1)/2.
inline GammaExpansion gamma_expand(const MultiPoly& h, int n) {
  if (h.degree_in(Var::t) > n - 1)
    throw NotGammaExpressible("degree in t exceeds n-1");
  GammaExpansion ge;
  ge.n = n;
  MultiPoly residual = h;
  const MultiPoly one_plus_t = MultiPoly(1) + var_t();
  for (int k = 0; 2 * k <= n - 1; ++k) {
    MultiPoly g = residual.coeff_of(Var::t, k);
    ge.gammas.push_back(g);
    residual -= g * var_t().pow(k) * one_plus_t.pow(n - 1 - 2 * k);
  }
  if (!residual.is_zero())
    throw NotGammaExpressible("input is not palindromic about (n-1)/2");
  return ge;
}

/// d_{n,k} from the recurrence d_{n,k} = (k+1) d_{n-1,k} + (n-2k) d_{n-1,k-1}
/// with d_{1,0} = 1. Row n holds indices 0 <= 2k < n.
inline std::vector<std::vector<long long>> d_recurrence_table(int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max >= 1 required");
  std::vector<std::vector<long long>> table(n_max + 1);
  table[1] = {1};
  for (int n = 2; n <= n_max; ++n) {
    const int kmax = (n - 1) / 2;
    table[n].assign(kmax + 1, 0);
    auto prev = [&](int k) -> long long {
      if (k < 0 || k >= static_cast<int>(table[n - 1].size())) return 0;
      return table[n - 1][k];
    };
    for (int k = 0; k <= kmax; ++k)
      table[n][k] = (k + 1) * prev(k) + (n - 2 * k) * prev(k - 1);
  }
  return table;
}

/// Value-object verification report; failures carry both computed sides.
struct VerifyReport {
  std::string name;
  bool ok = true;
  std::string detail;

  void fail(const std::string& msg) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += msg;
  }
};

/// Theorem: A_n's gamma-coefficients equal the G_{n,k} enumeration, and each
/// gamma_{n,k}(p,q) is exactly divisible by (p+q)^k with quotient d_{n,k}(p,q).
inline VerifyReport verify_main1(int n) {
  VerifyReport rep{"main1(n=" + std::to_string(n) + ")"};
  GammaExpansion ge = gamma_expand(eulerian_poly(n), n);
  const MultiPoly p_plus_q = var_p() + var_q();
  for (int k = 0; 2 * k <= n - 1; ++k) {
    MultiPoly g = gamma_poly(n, k);
    if (ge.gammas[k] != g) {
      rep.fail("gamma mismatch at k=" + std::to_string(k) + ": expansion=" +
               ge.gammas[k].str() + " vs enumeration=" + g.str());
      continue;
    }
    try {
      MultiPoly quot = exact_div(g, p_plus_q.pow(k));
      MultiPoly d = d_poly(n, k);
      if (quot != d)
        rep.fail("quotient mismatch at k=" + std::to_string(k) + ": " +
                 quot.str() + " vs " + d.str());
    } catch (const NotDivisible&) {
      rep.fail("gamma_{" + std::to_string(n) + "," + std::to_string(k) +
               "} not divisible by (p+q)^k");
    }
  }
  return rep;
}

/// Theorem: the continued-fraction D_n(p,q,t) equals the Andre enumeration
/// sum of p^res q^{les-des} t^des.
inline VerifyReport verify_main2(int n) {
  VerifyReport rep{"main2(n=" + std::to_string(n) + ")"};
  MultiPoly cf = dn_series(n - 1).back();
  MultiPoly enumd;
  for_each_permutation(n, [&](const Permutation& s) {
    if (!is_andre(s)) return;
    Exponents e{};
    e[static_cast<int>(Var::p)] = res(s);
    e[static_cast<int>(Var::q)] = les(s) - des(s);
    e[static_cast<int>(Var::t)] = des(s);
    enumd += MultiPoly::monomial(1, e);
  });
  if (cf != enumd)
    rep.fail("CF " + cf.str() + " vs enumeration " + enumd.str());
  return rep;
}

/// Corollary: the (inv-exc, exc) generating function equals the
/// (1+q)^k d_{n,k}(q) gamma-expansion with d_{n,k}(q) = sum q^{2res+les}.
inline VerifyReport verify_corollary_q(int n) {
  VerifyReport rep{"corollary_q(n=" + std::to_string(n) + ")"};
  MultiPoly lhs = sum_over_sn(n, [](const Permutation& s) {
    Exponents e{};
    e[static_cast<int>(Var::q)] = inv(s) - exc(s);
    e[static_cast<int>(Var::t)] = exc(s);
    return MultiPoly::monomial(1, e);
  });
  MultiPoly rhs;
  const MultiPoly one_plus_q = MultiPoly(1) + var_q();
  const MultiPoly one_plus_t = MultiPoly(1) + var_t();
  for (int k = 0; 2 * k <= n - 1; ++k) {
    MultiPoly dq;
    for (const auto& s : enumerate_D(n, k)) {
      Exponents e{};
      e[static_cast<int>(Var::q)] = 2 * res(s) + les(s);
      dq += MultiPoly::monomial(1, e);
    }
    rhs += one_plus_q.pow(k) * dq * var_t().pow(k) *
           one_plus_t.pow(n - 1 - 2 * k);
  }
  if (lhs != rhs) rep.fail("lhs " + lhs.str() + " vs rhs " + rhs.str());
  return rep;
}

/// Corollary: E_n(q) = D_n(1,q,1) equals both sum q^res and sum q^{les-des}
/// over the Andre permutations.
inline VerifyReport verify_en_q(int n) {
  VerifyReport rep{"en_q(n=" + std::to_string(n) + ")"};
  MultiPoly en = dn_series(n - 1).back().substitute(
      {{Var::p, MultiPoly(1)}, {Var::t, MultiPoly(1)}});
  MultiPoly by_res, by_les;
  for_each_permutation(n, [&](const Permutation& s) {
    if (!is_andre(s)) return;
    Exponents e1{}, e2{};
    e1[static_cast<int>(Var::q)] = res(s);
    e2[static_cast<int>(Var::q)] = les(s) - des(s);
    by_res += MultiPoly::monomial(1, e1);
    by_les += MultiPoly::monomial(1, e2);
  });
  if (en != by_res) rep.fail("CF " + en.str() + " vs q^res " + by_res.str());
  if (en != by_les)
    rep.fail("CF " + en.str() + " vs q^{les-des} " + by_les.str());
  return rep;
}

}  // namespace andrekit

#endif  // ANDREKIT_ANDRE_HPP
