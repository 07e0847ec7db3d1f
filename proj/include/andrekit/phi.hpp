#ifndef ANDREKIT_PHI_HPP
#define ANDREKIT_PHI_HPP

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "andrekit/andre.hpp"
#include "andrekit/permutation.hpp"

namespace andrekit {

struct NotAValley : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotAndre : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotASubset : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotInG : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class ValleyType { I, II };

/// Per-valley record driving the phi transform. For a valley both w2 and w4
/// are nonempty, so y1 = min(w2) and y2 = min(w4) always exist. The valley is
/// good when y1 > y2; its type is decided by the class of min(y1, y2): type I
/// for a peak or double ascent, type II for a valley.
struct ValleyInfo {
  int x = 0;
  int y1 = 0;
  int y2 = 0;
  bool good = false;
  ValleyType vtype = ValleyType::I;
};

inline ValleyInfo valley_info(const Permutation& s, int x) {
  auto cls = classify_letters(s);
  if (cls[x] != LetterClass::Valley)
    throw NotAValley("letter " + std::to_string(x) + " is not a valley of " +
                     s.str());
  Factorization f = x_factorization(s, x);
  ValleyInfo info;
  info.x = x;
  info.y1 = *std::min_element(f.w2.begin(), f.w2.end());
  info.y2 = *std::min_element(f.w4.begin(), f.w4.end());
  info.good = info.y1 > info.y2;
  const int y = std::min(info.y1, info.y2);
  switch (cls[y]) {
    case LetterClass::Peak:
    case LetterClass::DoubleAscent:
      info.vtype = ValleyType::I;
      break;
    case LetterClass::Valley:
      info.vtype = ValleyType::II;
      break;
    case LetterClass::DoubleDescent:
      throw std::logic_error("min(y1,y2) is a double descent; input not in G_n");
  }
  return info;
}

/// One elementary phi step for the CLI trace.
struct PhiStep {
  int x = 0;
  int case_id = 0;  // 1: y peak, 2: y double ascent, 3: y valley
  std::string before;
  std::string after;
};

/// The single-valley transform phi(sigma, x): the letter y = min(y1, y2)
/// switches sides of x according to its class. Requires sigma without double
/// descents and x a valley of sigma.
inline Permutation phi_x(const Permutation& s, int x,
                         std::vector<PhiStep>* trace = nullptr) {
  auto cls = classify_letters(s);
  if (cls[x] != LetterClass::Valley)
    throw NotAValley("letter " + std::to_string(x) + " is not a valley of " +
                     s.str());
  Factorization f = x_factorization(s, x);
  const int y1 = *std::min_element(f.w2.begin(), f.w2.end());
  const int y2 = *std::min_element(f.w4.begin(), f.w4.end());
  const int y = std::min(y1, y2);
  int case_id = 0;
  Factorization g = f;
  auto split_at = [](const std::vector<int>& w, int letter) {
    auto it = std::find(w.begin(), w.end(), letter);
    return std::pair<std::vector<int>, std::vector<int>>(
        std::vector<int>(w.begin(), it), std::vector<int>(it + 1, w.end()));
  };
  switch (cls[y]) {
    case LetterClass::Peak: {
      case_id = 1;
      if (y == y2) {
        // w4 must be the single letter y here.
        g.w2 = {y};
        g.w4 = f.w2;
      } else {
        g.w2 = f.w4;
        g.w4 = {y};
      }
      break;
    }
    case LetterClass::DoubleAscent: {
      case_id = 2;
      if (y == y2) {
        auto [head, tail] = split_at(f.w4, y);
        if (!head.empty() || tail.empty())
          throw std::logic_error("phi case (ii): unexpected w4 shape");
        g.w2 = {y};
        g.w2.insert(g.w2.end(), f.w2.begin(), f.w2.end());
        g.w4 = tail;
      } else {
        auto [head, tail] = split_at(f.w2, y);
        if (!head.empty() || tail.empty())
          throw std::logic_error("phi case (ii): unexpected w2 shape");
        g.w2 = tail;
        g.w4 = {y};
        g.w4.insert(g.w4.end(), f.w4.begin(), f.w4.end());
      }
      break;
    }
    case LetterClass::Valley: {
      case_id = 3;
      if (y == y2) {
        auto [head, tail] = split_at(f.w4, y);
        if (head.empty() || tail.empty())
          throw std::logic_error("phi case (iii): unexpected w4 shape");
        g.w2 = f.w2;
        g.w2.push_back(y);
        g.w2.insert(g.w2.end(), head.begin(), head.end());
        g.w4 = tail;
      } else {
        auto [head, tail] = split_at(f.w2, y);
        if (head.empty() || tail.empty())
          throw std::logic_error("phi case (iii): unexpected w2 shape");
        g.w2 = head;
        g.w4 = tail;
        g.w4.push_back(y);
        g.w4.insert(g.w4.end(), f.w4.begin(), f.w4.end());
      }
      break;
    }
    case LetterClass::DoubleDescent:
      throw std::logic_error("min(y1,y2) is a double descent; input not in G_n");
  }
  Permutation out(g.reassemble());
  if (trace) trace->push_back({x, case_id, s.str(), out.str()});
  return out;
}

/// Subset of valley letters of a reference permutation, with the index view
/// over [k] given by the order-isomorphism onto the sorted valley list.
struct SubsetS {
  std::set<int> letters;
  std::set<int> indices;
};

inline SubsetS make_subset(const Permutation& s, const std::set<int>& letters) {
  std::vector<int> valleys;
  auto cls = classify_letters(s);
  for (int v = 1; v <= s.n(); ++v)
    if (cls[v] == LetterClass::Valley) valleys.push_back(v);
  SubsetS subset;
  subset.letters = letters;
  for (int x : letters) {
    auto it = std::find(valleys.begin(), valleys.end(), x);
    if (it == valleys.end())
      throw NotASubset("letter " + std::to_string(x) + " is not a valley of " +
                       s.str());
    subset.indices.insert(static_cast<int>(it - valleys.begin()) + 1);
  }
  return subset;
}

namespace detail {
/// Apply phi over a set of valleys: type I letters first (in increasing
/// letter order; the image is order-independent), then type II letters in
/// decreasing order. Types are evaluated once, on the input permutation.
inline Permutation phi_apply_set(const Permutation& s,
                                 const std::set<int>& letters,
                                 std::vector<PhiStep>* trace = nullptr) {
  std::vector<int> type1, type2;
  for (int x : letters) {
    ValleyInfo info = valley_info(s, x);
    (info.vtype == ValleyType::I ? type1 : type2).push_back(x);
  }
  std::sort(type1.begin(), type1.end());
  std::sort(type2.rbegin(), type2.rend());
  Permutation cur = s;
  for (int x : type1) cur = phi_x(cur, x, trace);
  for (int x : type2) cur = phi_x(cur, x, trace);
  return cur;
}
}  // namespace detail

/// phi(sigma, S) for sigma an Andre permutation and S a subset of its
/// valleys; the image lies in G_{n,k} with res/les shifted by +|S|/-|S|.
inline Permutation phi_set(const Permutation& s, const SubsetS& subset,
                           std::vector<PhiStep>* trace = nullptr) {
  if (!is_andre(s)) throw NotAndre(s.str() + " is not an Andre permutation");
  make_subset(s, subset.letters);  // validates membership
  return detail::phi_apply_set(s, subset.letters, trace);
}

struct PhiInverseResult {
  Permutation sigma;
  SubsetS subset;
};

/// Inverse of phi on G_{n,k}: repeatedly undo the minimal bad type II valley,
/// then all bad type I valleys at once. S comes back as the bad-valley
/// letters of tau; successive loop choices are strictly increasing.
inline PhiInverseResult phi_inverse(const Permutation& tau,
                                    std::vector<PhiStep>* trace = nullptr) {
  if (dd_count(tau) > 0)
    throw NotInG(tau.str() + " has a double descent");
  Permutation sigma = tau;
  std::set<int> s_letters;
  int last_z = 0;
  for (;;) {
    int z = 0;
    auto cls = classify_letters(sigma);
    for (int v = 1; v <= sigma.n(); ++v) {
      if (cls[v] != LetterClass::Valley) continue;
      ValleyInfo info = valley_info(sigma, v);
      if (info.vtype == ValleyType::II && !info.good) {
        z = v;
        break;
      }
    }
    if (z == 0) break;
    if (z <= last_z)
      throw std::logic_error("phi_inverse: loop choice not increasing");
    last_z = z;
    sigma = phi_x(sigma, z, trace);
    s_letters.insert(z);
  }
  std::vector<int> type1_bad;
  {
    auto cls = classify_letters(sigma);
    for (int v = 1; v <= sigma.n(); ++v) {
      if (cls[v] != LetterClass::Valley) continue;
      ValleyInfo info = valley_info(sigma, v);
      if (info.vtype == ValleyType::I && !info.good) type1_bad.push_back(v);
    }
  }
  for (int x : type1_bad) {
    sigma = phi_x(sigma, x, trace);
    s_letters.insert(x);
  }
  SubsetS subset = make_subset(sigma, s_letters);
  return PhiInverseResult{sigma, subset};
}

}  // namespace andrekit

#endif  // ANDREKIT_PHI_HPP
