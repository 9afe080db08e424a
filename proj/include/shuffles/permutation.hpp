#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "shuffles/partition.hpp"

namespace shuffles {

// Permutation of [1, n] in one-line notation: img[i-1] = sigma(i).
// Products compose like functions: (pi * sigma)(i) = pi(sigma(i)).
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> one_line) : img(std::move(one_line)) { validate(); }

  void validate() const {
    std::vector<bool> seen(img.size(), false);
    for (int v : img) {
      if (v < 1 || v > static_cast<int>(img.size()) || seen[v - 1])
        throw std::invalid_argument("not a permutation one-line form");
      seen[v - 1] = true;
    }
  }

  int n() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i - 1]; }

  static Perm identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    Perm p;
    p.img = std::move(v);
    return p;
  }

  bool is_identity() const {
    for (int i = 1; i <= n(); ++i)
      if (img[i - 1] != i) return false;
    return true;
  }

  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator!=(const Perm& o) const { return !(*this == o); }
  bool operator<(const Perm& o) const { return img < o.img; }
};

inline Perm compose(const Perm& pi, const Perm& sigma) {
  if (pi.n() != sigma.n()) throw std::invalid_argument("compose: degree mismatch");
  Perm r;
  r.img.resize(pi.n());
  for (int i = 1; i <= pi.n(); ++i) r.img[i - 1] = pi(sigma(i));
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r;
  r.img.resize(p.n());
  for (int i = 1; i <= p.n(); ++i) r.img[p(i) - 1] = i;
  return r;
}

// Cycle on the listed points: i_1 -> i_2 -> ... -> i_k -> i_1, everything else
// fixed.  A single point (or no points) gives the identity.
inline Perm cyc(int n, const std::vector<int>& points) {
  if (n < 0) throw std::invalid_argument("cyc: negative degree");
  std::vector<bool> seen(n, false);
  for (int x : points) {
    if (x < 1 || x > n) throw std::invalid_argument("cyc: point out of range");
    if (seen[x - 1]) throw std::invalid_argument("cyc: repeated point");
    seen[x - 1] = true;
  }
  Perm r = Perm::identity(n);
  for (size_t t = 0; t < points.size(); ++t)
    r.img[points[t] - 1] = points[(t + 1) % points.size()];
  return r;
}

// Adjacent transposition s_i = (i, i+1).
inline Perm adjacent_transposition(int n, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("adjacent transposition index out of range");
  return cyc(n, {i, i + 1});
}

inline Partition cycle_type(const Perm& p) {
  std::vector<bool> seen(p.n(), false);
  std::vector<int> lens;
  for (int i = 1; i <= p.n(); ++i) {
    if (seen[i - 1]) continue;
    int len = 0, j = i;
    do {
      seen[j - 1] = true;
      ++len;
      j = p(j);
    } while (j != i);
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return Partition(std::move(lens));
}

inline int perm_sign(const Perm& p) {
  Partition t = cycle_type(p);
  return ((p.n() - t.num_parts()) % 2 == 0) ? 1 : -1;
}

// Canonical representative of a conjugacy class: consecutive cycles
// (1..k_1)(k_1+1..k_1+k_2)...
inline Perm perm_of_cycle_type(int n, const Partition& type) {
  if (type.size() != n) throw std::invalid_argument("cycle type does not sum to n");
  Perm r = Perm::identity(n);
  int pos = 1;
  for (int k : type.parts) {
    for (int t = 0; t < k - 1; ++t) r.img[pos + t - 1] = pos + t + 1;
    r.img[pos + k - 2] = pos;  // close the cycle (no-op when k = 1)
    pos += k;
  }
  return r;
}

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Conjugacy class size n!/z with z = prod over part sizes k of k^{m_k} m_k!.
inline long long class_size(int n, const Partition& type) {
  if (type.size() != n) throw std::invalid_argument("cycle type does not sum to n");
  long long z = 1;
  int run = 0, prev = -1;
  for (int k : type.parts) {
    if (k == prev)
      ++run;
    else {
      prev = k;
      run = 1;
    }
    z *= k * run;  // accumulates k^{m_k} * m_k! across the run
  }
  return factorial(n) / z;
}

// Lexicographic (Lehmer) rank of the one-line form among all n! permutations.
inline long long perm_rank(const Perm& p) {
  const int n = p.n();
  long long r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p.img[j] < p.img[i]) ++smaller;
    r += smaller * factorial(n - 1 - i);
  }
  return r;
}

inline Perm perm_unrank(int n, long long r) {
  if (r < 0 || r >= factorial(n)) throw std::invalid_argument("perm_unrank: rank out of range");
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 1);
  Perm p;
  p.img.reserve(n);
  for (int i = 0; i < n; ++i) {
    long long f = factorial(n - 1 - i);
    int idx = static_cast<int>(r / f);
    r %= f;
    p.img.push_back(avail[idx]);
    avail.erase(avail.begin() + idx);
  }
  return p;
}

// All permutations of [1, n] in lexicographic order, cached per degree.
inline const std::vector<Perm>& perm_table(int n) {
  if (n < 0 || n > 9) throw std::invalid_argument("perm_table supports 0 <= n <= 9");
  static std::map<int, std::vector<Perm>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Perm> all;
  all.reserve(factorial(n));
  Perm p = Perm::identity(n);
  do {
    all.push_back(p);
  } while (std::next_permutation(p.img.begin(), p.img.end()));
  return cache.emplace(n, std::move(all)).first->second;
}

// Word a_1..a_k with sigma = s_{a_1} ∘ s_{a_2} ∘ ... ∘ s_{a_k}, of minimal
// length (= inversion count).  Found by bubble-sorting the one-line form:
// swapping a descent at positions (i, i+1) multiplies by s_i on the right and
// removes exactly one inversion.
inline std::vector<int> reduced_word(const Perm& p) {
  std::vector<int> w = p.img;
  std::vector<int> rec;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        rec.push_back(static_cast<int>(i) + 1);
        changed = true;
      }
    }
  }
  std::reverse(rec.begin(), rec.end());
  return rec;
}

inline std::string perm_str(const Perm& p) {
  std::string s = "[";
  for (int i = 1; i <= p.n(); ++i) {
    if (i > 1) s += ",";
    s += std::to_string(p(i));
  }
  return s + "]";
}

inline Perm perm_parse(const std::string& s, int n) {
  std::vector<int> img;
  std::string cur;
  for (char ch : s) {
    if (ch == '[' || ch == ' ') continue;
    if (ch == ',' || ch == ']') {
      if (!cur.empty()) {
        img.push_back(std::stoi(cur));
        cur.clear();
      }
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) img.push_back(std::stoi(cur));
  if (static_cast<int>(img.size()) != n)
    throw std::invalid_argument("permutation literal has wrong degree");
  return Perm(std::move(img));
}

}  // namespace shuffles
