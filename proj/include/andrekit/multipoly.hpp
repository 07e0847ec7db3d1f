#ifndef ANDREKIT_MULTIPOLY_HPP
#define ANDREKIT_MULTIPOLY_HPP

#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace andrekit {

/// The fixed variable universe. Every polynomial in the library lives in
/// Z[p,q,t,u,v,w,x]; exponent vectors are fixed-width arrays in this order.
enum class Var : int { p = 0, q, t, u, v, w, x };

inline constexpr int kNumVars = 7;
inline constexpr std::array<char, kNumVars> kVarNames{'p', 'q', 't',
                                                      'u', 'v', 'w', 'x'};

using Exponents = std::array<int, kNumVars>;

/// Graded-lexicographic order on exponent vectors: total degree first,
/// then lexicographic. The leading term of a polynomial is the maximum.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
  }
};

/// Thrown by exact_div when the divisor does not divide exactly. Doubles as
/// a theorem-violation detector in the divisibility checks.
struct NotDivisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Canonical form: no stored term has a zero coefficient, so
/// equality is term-map equality. Values are immutable in spirit; all
/// operations are pure and return new polynomials.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, mpz_class, GrlexLess>;

  MultiPoly() = default;
  MultiPoly(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_[Exponents{}] = c;
  }
  MultiPoly(const mpz_class& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_[Exponents{}] = c;
  }

  static MultiPoly variable(Var var, int e = 1) {
    MultiPoly m;
    if (e < 0) throw std::invalid_argument("negative exponent");
    Exponents exps{};
    exps[static_cast<int>(var)] = e;
    m.terms_[exps] = 1;
    return m;
  }

  static MultiPoly monomial(mpz_class coeff, const Exponents& exps) {
    for (int e : exps)
      if (e < 0) throw std::invalid_argument("negative exponent");
    MultiPoly m;
    if (coeff != 0) m.terms_[exps] = std::move(coeff);
    return m;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Exponents{});
  }

  /// Degree in a single variable; -1 for the zero polynomial.
  int degree_in(Var var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(var)]);
    return d;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    MultiPoly r(1);
    MultiPoly base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return r;
  }

  /// Simultaneous substitution of polynomials for a subset of the variables.
  /// Unbound variables are left untouched.
  MultiPoly substitute(const std::map<Var, MultiPoly>& bindings) const {
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
      Exponents residual = e;
      MultiPoly acc = MultiPoly(c);
      bool trivial = true;
      for (const auto& [var, val] : bindings) {
        const int i = static_cast<int>(var);
        if (e[i] > 0) {
          acc *= val.pow(e[i]);
          residual[i] = 0;
          trivial = false;
        }
      }
      if (trivial) {
        out.add_term(e, c);
      } else {
        out += acc * monomial(1, residual);
      }
    }
    return out;
  }

  /// Polynomial coefficient of var^k; the remaining variables stay intact.
  MultiPoly coeff_of(Var var, int k) const {
    MultiPoly out;
    const int i = static_cast<int>(var);
    for (const auto& [e, c] : terms_) {
      if (e[i] == k) {
        Exponents r = e;
        r[i] = 0;
        out.add_term(r, c);
      }
    }
    return out;
  }

  /// Floating evaluation. Every variable occurring in the polynomial must be
  /// bound in the point.
  double eval_float(const std::map<Var, double>& point) const {
    double total = 0.0;
    for (const auto& [e, c] : terms_) {
      double term = c.get_d();
      for (int i = 0; i < kNumVars; ++i) {
        if (e[i] == 0) continue;
        auto it = point.find(static_cast<Var>(i));
        if (it == point.end())
          throw std::invalid_argument(std::string("unbound variable ") +
                                      kVarNames[i]);
        double f = 1.0;
        for (int j = 0; j < e[i]; ++j) f *= it->second;
        term *= f;
      }
      total += term;
    }
    return total;
  }

  /// Text form: terms in decreasing graded-lex order,
  /// e.g. "p^2 + p*q + q^2 + 1".
  std::string str() const { return render(" + ", " - "); }

  /// Compact text form without spaces, used inside parentheses.
  std::string str_compact() const { return render("+", "-"); }

  /// Text form grouped by ascending powers of one variable, with the
  /// coefficient polynomials parenthesized: "1 + (p+q+2)*t".
  std::string str_grouped(Var var) const {
    if (is_zero()) return "0";
    const int d = degree_in(var);
    std::string out;
    for (int k = 0; k <= d; ++k) {
      MultiPoly c = coeff_of(var, k);
      if (c.is_zero()) continue;
      std::string piece;
      bool negative = false;
      if (k == 0) {
        piece = c.str_compact();
      } else {
        std::string tp(1, kVarNames[static_cast<int>(var)]);
        if (k > 1) tp += "^" + std::to_string(k);
        if (c == MultiPoly(1)) {
          piece = tp;
        } else if (c == MultiPoly(-1)) {
          piece = tp;
          negative = true;
        } else if (c.terms().size() == 1) {
          piece = c.str_compact();
          if (piece[0] == '-') {
            negative = true;
            piece.erase(0, 1);
          }
          piece += "*" + tp;
        } else {
          piece = "(" + c.str_compact() + ")*" + tp;
        }
      }
      if (out.empty()) {
        out = negative ? "-" + piece : piece;
      } else {
        out += (negative ? " - " : " + ") + piece;
      }
    }
    return out;
  }

 private:
  void add_term(const Exponents& e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::string render(const char* plus, const char* minus) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool neg = c < 0;
      mpz_class a = neg ? mpz_class(-c) : c;
      std::string mono;
      for (int i = 0; i < kNumVars; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += kVarNames[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      std::string body;
      if (mono.empty()) {
        body = a.get_str();
      } else if (a == 1) {
        body = mono;
      } else {
        body = a.get_str() + "*" + mono;
      }
      if (out.empty()) {
        out = neg ? "-" + body : body;
      } else {
        out += (neg ? minus : plus) + body;
      }
    }
    return out;
  }

  TermMap terms_;
};

/// Exact multivariate division: returns q with a = q*b, or throws
/// NotDivisible. Single-divisor long division against the graded-lex
/// leading term of b; any reduction failure certifies non-divisibility.
inline MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const auto& lead = *b.terms().rbegin();
  MultiPoly r = a;
  MultiPoly quot;
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms().rbegin();
    Exponents d;
    for (int i = 0; i < kNumVars; ++i) {
      d[i] = re[i] - lead.first[i];
      if (d[i] < 0) throw NotDivisible("leading monomial not divisible");
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), lead.second.get_mpz_t()))
      throw NotDivisible("leading coefficient not divisible");
    MultiPoly step = MultiPoly::monomial(rc / lead.second, d);
    quot += step;
    r -= step * b;
  }
  return quot;
}

inline MultiPoly var_p() { return MultiPoly::variable(Var::p); }
inline MultiPoly var_q() { return MultiPoly::variable(Var::q); }
inline MultiPoly var_t() { return MultiPoly::variable(Var::t); }
inline MultiPoly var_u() { return MultiPoly::variable(Var::u); }
inline MultiPoly var_v() { return MultiPoly::variable(Var::v); }
inline MultiPoly var_w() { return MultiPoly::variable(Var::w); }
inline MultiPoly var_x() { return MultiPoly::variable(Var::x); }

}  // namespace andrekit

#endif  // ANDREKIT_MULTIPOLY_HPP
