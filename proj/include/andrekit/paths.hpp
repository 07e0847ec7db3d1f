#ifndef ANDREKIT_PATHS_HPP
#define ANDREKIT_PATHS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "andrekit/cfrac.hpp"
#include "andrekit/multipoly.hpp"

namespace andrekit {

struct MalformedDecomposition : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Step : char { U = 'U', L = 'L', D = 'D' };

/// A word over {U, L, D} whose running height never goes negative and ends
/// at zero. Heights are recomputed on demand; paths here are short.
struct LatticePath {
  std::vector<Step> steps;

  LatticePath() = default;
  explicit LatticePath(std::vector<Step> s) : steps(std::move(s)) {}

  static LatticePath parse(const std::string& text) {
    std::vector<Step> s;
    for (char c : text) {
      if (c != 'U' && c != 'L' && c != 'D')
        throw std::invalid_argument("bad step letter");
      s.push_back(static_cast<Step>(c));
    }
    return LatticePath(std::move(s));
  }

  std::string str() const {
    std::string out;
    for (Step s : steps) out += static_cast<char>(s);
    return out;
  }

  int length() const { return static_cast<int>(steps.size()); }

  /// Heights before each step (heights[i] is where step i starts) plus the
  /// final height at the back.
  std::vector<int> heights() const {
    std::vector<int> h{0};
    for (Step s : steps) {
      int d = s == Step::U ? 1 : s == Step::D ? -1 : 0;
      h.push_back(h.back() + d);
    }
    return h;
  }

  bool is_motzkin() const {
    int h = 0;
    for (Step s : steps) {
      h += s == Step::U ? 1 : s == Step::D ? -1 : 0;
      if (h < 0) return false;
    }
    return h == 0;
  }

  bool is_dyck() const {
    if (!is_motzkin()) return false;
    for (Step s : steps)
      if (s == Step::L) return false;
    return true;
  }

  /// Andre path: a Motzkin path whose level steps all start at even height.
  bool is_andre_path() const {
    if (!is_motzkin()) return false;
    auto h = heights();
    for (int i = 0; i < length(); ++i)
      if (steps[i] == Step::L && h[i] % 2 != 0) return false;
    return true;
  }

  friend bool operator==(const LatticePath& a, const LatticePath& b) {
    return a.steps == b.steps;
  }
  friend bool operator<(const LatticePath& a, const LatticePath& b) {
    return a.steps < b.steps;
  }
};

namespace detail {
enum class PathKind { Motzkin, Dyck, Andre };

inline void enumerate_paths(int remaining, int height, PathKind kind,
                            std::vector<Step>& prefix,
                            std::vector<LatticePath>& out) {
  if (remaining == 0) {
    if (height == 0) out.push_back(LatticePath(prefix));
    return;
  }
  if (height > remaining) return;  // cannot return to zero
  prefix.push_back(Step::U);
  enumerate_paths(remaining - 1, height + 1, kind, prefix, out);
  prefix.pop_back();
  const bool level_ok = kind == PathKind::Motzkin ||
                        (kind == PathKind::Andre && height % 2 == 0);
  if (level_ok) {
    prefix.push_back(Step::L);
    enumerate_paths(remaining - 1, height, kind, prefix, out);
    prefix.pop_back();
  }
  if (height > 0) {
    prefix.push_back(Step::D);
    enumerate_paths(remaining - 1, height - 1, kind, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace detail

inline std::vector<LatticePath> enumerate_motzkin(int n) {
  std::vector<LatticePath> out;
  std::vector<Step> prefix;
  detail::enumerate_paths(n, 0, detail::PathKind::Motzkin, prefix, out);
  return out;
}

inline std::vector<LatticePath> enumerate_dyck(int semilength) {
  std::vector<LatticePath> out;
  std::vector<Step> prefix;
  detail::enumerate_paths(2 * semilength, 0, detail::PathKind::Dyck, prefix,
                          out);
  return out;
}

inline std::vector<LatticePath> enumerate_andre_paths(int n) {
  std::vector<LatticePath> out;
  std::vector<Step> prefix;
  detail::enumerate_paths(n, 0, detail::PathKind::Andre, prefix, out);
  return out;
}

/// Product of step weights: U -> 1, L at height i -> b_i, D from height
/// i -> lambda_i.
inline MultiPoly weight(const LatticePath& path, const CFSpec& spec) {
  MultiPoly w(1);
  auto h = path.heights();
  for (int i = 0; i < path.length(); ++i) {
    switch (path.steps[i]) {
      case Step::U:
        break;
      case Step::L:
        w *= spec.kind == CFSpec::Kind::Stieltjes ? MultiPoly(0)
                                                  : spec.b(h[i]);
        break;
      case Step::D:
        w *= spec.lambda(h[i]);
        break;
    }
  }
  return w;
}

/// Image of the level-step-deletion bijection: the level-run lengths
/// y_1..y_{k+1} around the k two-step blocks, and the Dyck path the blocks
/// concatenate to. Every retained step keeps its original height.
struct AndrePathDecomposition {
  std::vector<int> composition;
  LatticePath dyck;
};

inline AndrePathDecomposition psi(const LatticePath& path) {
  if (!path.is_andre_path())
    throw std::invalid_argument("psi: input is not an Andre path");
  std::vector<Step> core;
  for (Step s : path.steps)
    if (s != Step::L) core.push_back(s);
  if (core.size() % 2 != 0) throw std::logic_error("psi: odd core length");
  const int k = static_cast<int>(core.size()) / 2;
  std::vector<int> comp(k + 1, 0);
  int seen = 0;  // non-L steps so far
  for (Step s : path.steps) {
    if (s == Step::L) {
      // L steps sit at even height, hence exactly at 2-block boundaries.
      if (seen % 2 != 0) throw std::logic_error("psi: level step inside block");
      comp[seen / 2] += 1;
    } else {
      ++seen;
    }
  }
  return AndrePathDecomposition{comp, LatticePath(core)};
}

inline LatticePath psi_inverse(const AndrePathDecomposition& dec) {
  if (dec.dyck.length() % 2 != 0 ||
      static_cast<int>(dec.composition.size()) != dec.dyck.length() / 2 + 1)
    throw MalformedDecomposition("composition size must be semilength + 1");
  for (int y : dec.composition)
    if (y < 0) throw MalformedDecomposition("negative composition part");
  std::vector<Step> steps;
  int idx = 0;
  for (size_t b = 0; b < dec.composition.size(); ++b) {
    for (int i = 0; i < dec.composition[b]; ++i) steps.push_back(Step::L);
    if (idx + 1 < dec.dyck.length()) {
      steps.push_back(dec.dyck.steps[idx]);
      steps.push_back(dec.dyck.steps[idx + 1]);
      idx += 2;
    }
  }
  LatticePath path(std::move(steps));
  if (!path.is_andre_path())
    throw MalformedDecomposition("reassembled path is not an Andre path");
  return path;
}

namespace detail {
inline mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}
inline mpz_class binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}
}  // namespace detail

/// Closed form for D_n(1,-1,t): sum_{k} binom(n-1-k, k) k! t^k.
inline MultiPoly closed_formula_neg1(int n) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  MultiPoly out;
  for (int k = 0; k <= n - 1; ++k) {
    mpz_class c = detail::binom(n - 1 - k, k) * detail::factorial(k);
    if (c == 0) continue;
    Exponents e{};
    e[static_cast<int>(Var::t)] = k;
    out += MultiPoly::monomial(c, e);
  }
  return out;
}

}  // namespace andrekit

#endif  // ANDREKIT_PATHS_HPP
