#ifndef ANDREKIT_PERMUTATION_HPP
#define ANDREKIT_PERMUTATION_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "andrekit/multipoly.hpp"

namespace andrekit {

enum class LetterClass { Peak, Valley, DoubleAscent, DoubleDescent };

/// One-line notation, 1-based word of [n].
class Permutation {
 public:
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size() + 1, false);
    for (int v : word_) {
      if (v < 1 || v > static_cast<int>(word_.size()) || seen[v])
        throw std::invalid_argument("not a permutation of [n]");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  /// Text form: space-free digits for n <= 9 ("31524"), comma-separated
  /// for larger n ("11,2,12,...").
  static Permutation parse(std::string_view s) {
    std::vector<int> w;
    if (s.find(',') != std::string_view::npos) {
      size_t pos = 0;
      while (pos < s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string_view::npos) next = s.size();
        w.push_back(std::stoi(std::string(s.substr(pos, next - pos))));
        pos = next + 1;
      }
    } else {
      for (char c : s) {
        if (c < '1' || c > '9')
          throw std::invalid_argument("bad permutation text");
        w.push_back(c - '0');
      }
    }
    return Permutation(std::move(w));
  }

  std::string str() const {
    std::string out;
    if (n() <= 9) {
      for (int v : word_) out += static_cast<char>('0' + v);
    } else {
      for (size_t i = 0; i < word_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(word_[i]);
      }
    }
    return out;
  }

  int n() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  int at(int pos) const { return word_[pos - 1]; }  // 1-based position

  int position_of(int letter) const {  // 1-based
    for (size_t i = 0; i < word_.size(); ++i)
      if (word_[i] == letter) return static_cast<int>(i) + 1;
    throw std::invalid_argument("letter not present");
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.word_ == b.word_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.word_ < b.word_;
  }

 private:
  std::vector<int> word_;
};

inline int des(const Permutation& s) {
  int c = 0;
  for (int i = 1; i < s.n(); ++i)
    if (s.at(i) > s.at(i + 1)) ++c;
  return c;
}

inline int exc(const Permutation& s) {
  int c = 0;
  for (int i = 1; i <= s.n(); ++i)
    if (s.at(i) > i) ++c;
  return c;
}

inline int inv(const Permutation& s) {
  int c = 0;
  for (int i = 1; i <= s.n(); ++i)
    for (int j = i + 1; j <= s.n(); ++j)
      if (s.at(i) > s.at(j)) ++c;
  return c;
}

/// Classification of every letter under the boundary convention
/// sigma_0 = sigma_{n+1} = 0. Indexed by letter: result[v] for v in [1..n].
inline std::vector<LetterClass> classify_letters(const Permutation& s) {
  const int n = s.n();
  std::vector<LetterClass> cls(n + 1, LetterClass::Peak);
  for (int i = 1; i <= n; ++i) {
    const int prev = i > 1 ? s.at(i - 1) : 0;
    const int cur = s.at(i);
    const int next = i < n ? s.at(i + 1) : 0;
    LetterClass c;
    if (prev < cur && cur > next)
      c = LetterClass::Peak;
    else if (prev > cur && cur < next)
      c = LetterClass::Valley;
    else if (prev < cur && cur < next)
      c = LetterClass::DoubleAscent;
    else
      c = LetterClass::DoubleDescent;
    cls[cur] = c;
  }
  return cls;
}

inline int count_class(const Permutation& s, LetterClass want) {
  auto cls = classify_letters(s);
  int c = 0;
  for (int v = 1; v <= s.n(); ++v)
    if (cls[v] == want) ++c;
  return c;
}

inline int valley_count(const Permutation& s) {
  return count_class(s, LetterClass::Valley);
}
inline int dd_count(const Permutation& s) {
  return count_class(s, LetterClass::DoubleDescent);
}
inline int da_count(const Permutation& s) {
  return count_class(s, LetterClass::DoubleAscent);
}

enum class VincularPattern { P2_13, P31_2, P13_2 };

/// The three vincular pattern counters used throughout:
///   2-13 (res): pairs i < j <= n-1 with sigma_{j+1} > sigma_i > sigma_j;
///   31-2 (les): pairs 2 <= i < j <= n with sigma_{i-1} > sigma_j > sigma_i;
///   13-2:       pairs (i,j), i+1 < j, with sigma_i < sigma_j < sigma_{i+1}.
inline int count_vincular(const Permutation& s, VincularPattern pat) {
  const int n = s.n();
  int c = 0;
  switch (pat) {
    case VincularPattern::P2_13:
      for (int j = 1; j <= n - 1; ++j)
        for (int i = 1; i < j; ++i)
          if (s.at(j + 1) > s.at(i) && s.at(i) > s.at(j)) ++c;
      break;
    case VincularPattern::P31_2:
      for (int i = 2; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          if (s.at(i - 1) > s.at(j) && s.at(j) > s.at(i)) ++c;
      break;
    case VincularPattern::P13_2:
      for (int i = 1; i + 1 <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
          if (s.at(i) < s.at(j) && s.at(j) < s.at(i + 1)) ++c;
      break;
  }
  return c;
}

inline int res(const Permutation& s) {
  return count_vincular(s, VincularPattern::P2_13);
}
inline int les(const Permutation& s) {
  return count_vincular(s, VincularPattern::P31_2);
}

/// The unique five-part split (w1, w2, x, w4, w5) around a letter x:
/// w2 and w4 are the maximal runs of letters greater than x adjacent to it.
struct Factorization {
  std::vector<int> w1, w2, w4, w5;
  int x = 0;

  std::vector<int> reassemble() const {
    std::vector<int> out = w1;
    out.insert(out.end(), w2.begin(), w2.end());
    out.push_back(x);
    out.insert(out.end(), w4.begin(), w4.end());
    out.insert(out.end(), w5.begin(), w5.end());
    return out;
  }
};

inline Factorization x_factorization(const Permutation& s, int x) {
  const auto& w = s.word();
  const int n = s.n();
  int pos = s.position_of(x) - 1;  // 0-based
  Factorization f;
  f.x = x;
  int a = pos - 1;
  while (a >= 0 && w[a] > x) --a;
  f.w1.assign(w.begin(), w.begin() + (a + 1));
  f.w2.assign(w.begin() + (a + 1), w.begin() + pos);
  int b = pos + 1;
  while (b < n && w[b] > x) ++b;
  f.w4.assign(w.begin() + pos + 1, w.begin() + b);
  f.w5.assign(w.begin() + b, w.end());
  return f;
}

/// Braenden's modified Foata-Strehl involution: swap w2 and w4 when x is a
/// double ascent or double descent, fix peaks and valleys.
inline Permutation mfs_phi(const Permutation& s, int x) {
  auto cls = classify_letters(s)[x];
  if (cls != LetterClass::DoubleAscent && cls != LetterClass::DoubleDescent)
    return s;
  Factorization f = x_factorization(s, x);
  std::swap(f.w2, f.w4);
  return Permutation(f.reassemble());
}

/// Full orbit under all MFS involutions, plus the unique representative
/// without double descents.
struct MfsOrbit {
  std::vector<Permutation> members;  // sorted
  Permutation representative;
};

inline MfsOrbit mfs_orbit(const Permutation& s) {
  std::set<Permutation> seen{s};
  std::vector<Permutation> queue{s};
  while (!queue.empty()) {
    Permutation cur = queue.back();
    queue.pop_back();
    for (int x = 1; x <= s.n(); ++x) {
      Permutation img = mfs_phi(cur, x);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  const Permutation* rep = nullptr;
  for (const auto& m : seen) {
    if (dd_count(m) == 0) {
      if (rep != nullptr)
        throw std::logic_error("orbit with two double-descent-free members");
      rep = &m;
    }
  }
  if (rep == nullptr) throw std::logic_error("orbit without representative");
  return MfsOrbit{{seen.begin(), seen.end()}, *rep};
}

inline void for_each_permutation(
    int n, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    fn(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

/// Worker count: ANDREKIT_THREADS if set, else 1 (sequential default keeps
/// runs reproducible without relying on reduction order).
inline int thread_count() {
  if (const char* env = std::getenv("ANDREKIT_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

/// Parallel map-reduce over S_n, partitioned by first letter; partial sums
/// are reduced in deterministic block order.
inline MultiPoly sum_over_sn(
    int n, const std::function<MultiPoly(const Permutation&)>& fn) {
  if (n == 0) return MultiPoly(1);
  const int workers = std::min(thread_count(), n);
  std::vector<MultiPoly> block(n);
  auto run_block = [&](int first) {
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
      if (v != first + 1) rest.push_back(v);
    MultiPoly acc;
    std::vector<int> w(n);
    w[0] = first + 1;
    do {
      std::copy(rest.begin(), rest.end(), w.begin() + 1);
      acc += fn(Permutation(w));
    } while (std::next_permutation(rest.begin(), rest.end()));
    block[first] = std::move(acc);
  };
  if (workers <= 1) {
    for (int b = 0; b < n; ++b) run_block(b);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (int b = next.fetch_add(1); b < n; b = next.fetch_add(1))
          run_block(b);
      });
    }
    for (auto& th : pool) th.join();
  }
  MultiPoly total;
  for (int b = 0; b < n; ++b) total += block[b];
  return total;
}

}  // namespace andrekit

#endif  // ANDREKIT_PERMUTATION_HPP
