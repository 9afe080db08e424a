#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "shuffles/partition.hpp"

namespace shuffles {

// A set is lacunar when it contains no two consecutive integers.  Sets are
// kept as strictly increasing element vectors.
inline bool is_lacunar(const std::vector<int>& elems) {
  for (size_t i = 0; i + 1 < elems.size(); ++i)
    if (elems[i + 1] == elems[i] + 1) return false;
  return true;
}

struct LacunarSet {
  int n = 0;               // ambient degree: elements live in [1, n-1]
  std::vector<int> elems;  // strictly increasing

  LacunarSet() = default;
  LacunarSet(int n_, std::vector<int> e) : n(n_), elems(std::move(e)) { validate(); }

  void validate() const {
    if (n < 1) throw std::invalid_argument("lacunar set needs n >= 1");
    for (size_t i = 0; i < elems.size(); ++i) {
      if (elems[i] < 1 || elems[i] > n - 1)
        throw std::invalid_argument("lacunar set element out of [1, n-1]");
      if (i > 0 && elems[i] <= elems[i - 1])
        throw std::invalid_argument("lacunar set elements must be strictly increasing");
    }
    if (!is_lacunar(elems)) throw std::invalid_argument("set has consecutive elements");
  }

  int sum() const { return std::accumulate(elems.begin(), elems.end(), 0); }
  bool contains(int x) const { return std::binary_search(elems.begin(), elems.end(), x); }
  bool operator==(const LacunarSet& o) const { return n == o.n && elems == o.elems; }
};

inline std::string set_str(const std::vector<int>& elems) {
  std::string s = "{";
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(elems[i]);
  }
  return s + "}";
}

inline unsigned long long fibonacci(int m) {
  if (m < 0) throw std::invalid_argument("fibonacci of negative index");
  unsigned long long a = 0, b = 1;  // f_0, f_1
  for (int i = 0; i < m; ++i) {
    unsigned long long next = a + b;
    a = b;
    b = next;
  }
  return a;
}

// All lacunar subsets of [1, n-1], ordered by increasing element sum, ties
// broken lexicographically on the increasing element sequences.
inline std::vector<LacunarSet> enumerate_lacunar(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_lacunar needs n >= 1");
  std::vector<LacunarSet> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    out.push_back(LacunarSet(n, cur));
    for (int x = next; x <= n - 1; ++x) {
      cur.push_back(x);
      self(self, x + 2);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  std::stable_sort(out.begin(), out.end(), [](const LacunarSet& a, const LacunarSet& b) {
    int sa = a.sum(), sb = b.sum();
    if (sa != sb) return sa < sb;
    return a.elems < b.elems;
  });
  return out;
}

namespace detail {
inline void check_subset(int n, const std::vector<int>& I, int lo, int hi, const char* what) {
  for (size_t i = 0; i < I.size(); ++i) {
    if (I[i] < lo || I[i] > hi)
      throw std::invalid_argument(std::string(what) + ": element out of range");
    if (i > 0 && I[i] <= I[i - 1])
      throw std::invalid_argument(std::string(what) + ": elements must be strictly increasing");
  }
}
}  // namespace detail

// The taxicab distance from ell to the next element of I weakly above it,
// where 0 and n+1 are adjoined to I as sentinels.  For I = {i_1 < ...}, this
// is (min of {0} ∪ I ∪ {n+1} that is >= ell) - ell; zero exactly when ell ∈ I.
// Defined for arbitrary subsets I of [n].
inline int m_value(int n, const std::vector<int>& I, int ell) {
  if (n < 1) throw std::invalid_argument("m_value needs n >= 1");
  detail::check_subset(n, I, 1, n, "m_value");
  if (ell < 1 || ell > n) throw std::invalid_argument("m_value: ell out of [1, n]");
  int up = n + 1;
  for (int x : I)
    if (x >= ell) {
      up = x;
      break;
    }
  return up - ell;
}

inline std::vector<int> m_vector(int n, const std::vector<int>& I) {
  std::vector<int> m(n);
  for (int ell = 1; ell <= n; ++ell) m[ell - 1] = m_value(n, I, ell);
  return m;
}

// {0} ∪ I ∪ {n+1}, the sentinel-padded copy of I used by m_value.
inline std::vector<int> enclosure(int n, const std::vector<int>& I) {
  detail::check_subset(n, I, 1, n, "enclosure");
  std::vector<int> out;
  out.push_back(0);
  out.insert(out.end(), I.begin(), I.end());
  out.push_back(n + 1);
  return out;
}

// Indices j in [1, n-1] with j ∉ I and j+1 ∉ I: the adjacent swaps whose
// right action fixes the spaces attached to I.
inline std::vector<int> non_shadow(int n, const std::vector<int>& I) {
  if (n < 1) throw std::invalid_argument("non_shadow needs n >= 1");
  detail::check_subset(n, I, 1, n, "non_shadow");
  std::vector<int> out;
  for (int j = 1; j <= n - 1; ++j) {
    bool inI = std::binary_search(I.begin(), I.end(), j);
    bool succ = std::binary_search(I.begin(), I.end(), j + 1);
    if (!inI && !succ) out.push_back(j);
  }
  return out;
}

// Writing I ∪ {n+1} = {i_1 < ... < i_m} and i_0 = 1, the gaps j_k = i_k - i_{k-1}
// satisfy j_1 >= 0, j_k >= 2 for k >= 2 (lacunarity), and sum to n.  The block
// J_k = [i_{k-1}, i_k - 1] collects the positions strictly before i_k.
struct GapDecomposition {
  std::vector<int> i_seq;                      // i_1..i_m (last entry n+1)
  std::vector<int> j_seq;                      // j_1..j_m
  std::vector<std::pair<int, int>> blocks;     // J_k as [lo, hi]; empty block has hi < lo
};

inline GapDecomposition gap_decomposition(const LacunarSet& I) {
  GapDecomposition g;
  g.i_seq = I.elems;
  g.i_seq.push_back(I.n + 1);
  int prev = 1;
  for (int ik : g.i_seq) {
    g.j_seq.push_back(ik - prev);
    g.blocks.emplace_back(prev, ik - 1);
    prev = ik;
  }
  return g;
}

// Lacunar sets are counted by Fibonacci numbers; this is the closed-form
// census used as the cross-check target.
inline unsigned long long lacunar_census(int n) { return fibonacci(n + 1); }

// Given a subset I of [1, n-1] (not necessarily lacunar) and j ∈ I, produces
// a lacunar J with strictly smaller element sum whose non-shadow set is
// contained in non_shadow(I) ∪ {j}.  Two phases:
//   seed:   K = (I \ {j}) ∪ {j-1}   (j-1 dropped when it is 0 or already there);
//           coverage K ∪ (K-1) loses at most the index j, so the non-shadow
//           set grows by at most {j}, and the sum drops by at least 1.
//   repair: while K has a consecutive pair {i, i+1}, replace i by i-1
//           (dropping it at 0).  The pair guarantees i stays covered via i+1
//           and i-1 becomes covered directly, so coverage never shrinks and
//           the non-shadow set never grows; the sum strictly decreases, so
//           this terminates in a lacunar set.
inline LacunarSet reduction_witness(int n, const std::vector<int>& I, int j) {
  detail::check_subset(n, I, 1, n - 1, "reduction_witness");
  if (!std::binary_search(I.begin(), I.end(), j))
    throw std::invalid_argument("reduction_witness: j must be an element of I");
  std::vector<int> K = I;
  K.erase(std::lower_bound(K.begin(), K.end(), j));
  if (j > 1 && !std::binary_search(K.begin(), K.end(), j - 1))
    K.insert(std::lower_bound(K.begin(), K.end(), j - 1), j - 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < K.size(); ++i) {
      if (K[i + 1] == K[i] + 1) {
        int lowered = K[i] - 1;
        K.erase(K.begin() + static_cast<long>(i));
        if (lowered >= 1 && !std::binary_search(K.begin(), K.end(), lowered))
          K.insert(std::lower_bound(K.begin(), K.end(), lowered), lowered);
        changed = true;
        break;
      }
    }
  }
  LacunarSet J(n, K);
  // Postconditions, checked on every call: these two facts are what the
  // triangularity induction consumes.
  int sum_I = std::accumulate(I.begin(), I.end(), 0);
  if (J.sum() >= sum_I) throw std::logic_error("reduction_witness: sum did not drop");
  std::vector<int> allowed = non_shadow(n, I);
  for (int x : non_shadow(n, J.elems)) {
    if (x != j && !std::binary_search(allowed.begin(), allowed.end(), x))
      throw std::logic_error("reduction_witness: non-shadow set escaped");
  }
  return J;
}

}  // namespace shuffles
