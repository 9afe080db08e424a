#pragma once

// Brute-force reference implementations used only by the test suites.  Each
// oracle recomputes a quantity straight from its definition, along a code path
// disjoint from the library's (bitmask scans, monomial expansions, cofactor
// determinants), so agreement is meaningful evidence rather than tautology.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "shuffles/lacunar.hpp"
#include "shuffles/matrix.hpp"
#include "shuffles/partition.hpp"
#include "shuffles/permutation.hpp"
#include "shuffles/poly.hpp"
#include "shuffles/schur.hpp"

namespace oracle {

using shuffles::Matrix;
using shuffles::Partition;
using shuffles::Rational;
using shuffles::UniPoly;

// All subsets of [1, n-1] with no two consecutive members, by bitmask scan,
// ordered by (sum, lex).
inline std::vector<std::vector<int>> lacunar_bitmask(int n) {
  std::vector<std::vector<int>> out;
  const int bits = n - 1;
  for (unsigned mask = 0; mask < (1u << std::max(bits, 0)); ++mask) {
    if (mask & (mask << 1)) continue;  // adjacent bits = consecutive members
    std::vector<int> s;
    for (int i = 0; i < bits; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    out.push_back(std::move(s));
  }
  auto key = [](const std::vector<int>& s) {
    return std::pair<int, const std::vector<int>&>(std::accumulate(s.begin(), s.end(), 0), s);
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return out;
}

// m-value straight from the definition: distance from ell to the first point
// of {0} u I u {n+1} at or above ell.
inline int m_value_direct(int n, const std::vector<int>& I, int ell) {
  for (int x = ell; x <= n; ++x)
    if (std::find(I.begin(), I.end(), x) != I.end()) return x - ell;
  return n + 1 - ell;
}

inline std::vector<int> non_shadow_direct(int n, const std::vector<int>& I) {
  std::vector<int> out;
  for (int i = 1; i <= n - 1; ++i) {
    bool in_i = std::find(I.begin(), I.end(), i) != I.end();
    bool in_ip = std::find(I.begin(), I.end(), i + 1) != I.end();
    if (!in_i && !in_ip) out.push_back(i);
  }
  return out;
}

// Witness validity for the sum-lowering step: J lacunar, sum J < sum I, and
// every non-shadow of J is a non-shadow of I or equals j itself.
inline bool valid_witness(int n, const std::vector<int>& I, int j, const std::vector<int>& J) {
  if (!shuffles::is_lacunar(J)) return false;
  for (int x : J)
    if (x < 1 || x > n - 1) return false;
  long long sI = std::accumulate(I.begin(), I.end(), 0LL);
  long long sJ = std::accumulate(J.begin(), J.end(), 0LL);
  if (sJ >= sI) return false;
  std::vector<int> allowed = non_shadow_direct(n, I);
  allowed.push_back(j);
  for (int x : non_shadow_direct(n, J))
    if (std::find(allowed.begin(), allowed.end(), x) == allowed.end()) return false;
  return true;
}

inline bool witness_exists(int n, const std::vector<int>& I, int j) {
  for (const auto& J : lacunar_bitmask(n))
    if (valid_witness(n, I, j, J)) return true;
  return false;
}

// Counts column-strict fillings of `shape` with entry multiplicities bounded
// by `content` (componentwise); when |shape| = sum(content) this is the
// Kostka number for that content.
inline long long count_ssyt_bounded(const std::vector<int>& shape, const std::vector<int>& content) {
  const int rows = static_cast<int>(shape.size());
  const int vals = static_cast<int>(content.size());
  std::vector<int> remaining = content;
  std::vector<std::vector<int>> fill(rows);
  for (int r = 0; r < rows; ++r) fill[r].assign(shape[r], 0);
  long long count = 0;
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r == rows) {
      ++count;
      return;
    }
    int nr = r, nc = c + 1;
    if (nc == shape[r]) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, fill[r][c - 1]);
    if (r > 0) lo = std::max(lo, fill[r - 1][c] + 1);
    for (int v = lo; v <= vals; ++v) {
      if (remaining[v - 1] == 0) continue;
      --remaining[v - 1];
      fill[r][c] = v;
      self(self, nr, nc);
      ++remaining[v - 1];
    }
  };
  if (rows == 0)
    count = 1;
  else
    rec(rec, 0, 0);
  return count;
}

inline long long kostka(const Partition& shape, const std::vector<int>& content) {
  long long total = std::accumulate(content.begin(), content.end(), 0LL);
  if (total != shape.size()) throw std::invalid_argument("kostka: content size mismatch");
  return count_ssyt_bounded(shape.parts, content);
}

// Checks one Pieri product coefficient-by-coefficient against the monomial
// expansion in |lambda| + m variables.  The x^nu coefficient of s_lambda h_m
// counts column-strict fillings of lambda with content bounded by nu (the
// complete homogeneous factor absorbs the leftover multiplicities), while the
// x^nu coefficient of the claimed Schur sum is a weighted Kostka count.
inline bool pieri_check(const Partition& lam, int m) {
  const int nvars = lam.size() + m;
  shuffles::SchurExpansion prod = shuffles::pieri_mul_h(shuffles::schur_single(lam), m);
  for (const Partition& nu : shuffles::partitions_of(nvars)) {
    if (nu.num_parts() > nvars) continue;
    std::vector<int> content = nu.parts;
    content.resize(nvars, 0);
    long long lhs = count_ssyt_bounded(lam.parts, content);
    long long rhs = 0;
    for (const auto& [mu, c] : prod) rhs += c * kostka(mu, content);
    if (lhs != rhs) return false;
  }
  return true;
}

// Characteristic polynomial by signed permutation expansion of det(xI - A);
// coefficient vectors are convolved by hand.  Exponential in the size, so
// keep it at d <= 5.
inline UniPoly charpoly_leibniz(const Matrix& A) {
  if (!A.is_square()) throw std::invalid_argument("charpoly_leibniz: square only");
  const int d = A.rows;
  std::vector<Rational> acc(d + 1, Rational(0));
  std::vector<int> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end());
  do {
    int inversions = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (idx[i] > idx[j]) ++inversions;
    std::vector<Rational> term{Rational(1)};
    for (int i = 0; i < d; ++i) {
      std::vector<Rational> factor;
      if (idx[i] == i)
        factor = {-A.at(i, i), Rational(1)};  // x - a_ii
      else
        factor = {-A.at(i, idx[i])};
      std::vector<Rational> next(term.size() + factor.size() - 1, Rational(0));
      for (size_t a = 0; a < term.size(); ++a)
        for (size_t b = 0; b < factor.size(); ++b) next[a + b] += term[a] * factor[b];
      term = std::move(next);
    }
    for (size_t k = 0; k < term.size(); ++k) {
      if (inversions % 2 == 0)
        acc[k] += term[k];
      else
        acc[k] -= term[k];
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return UniPoly(acc);
}

// Dimension of {q : q s_j = q for all j in the non-shadow of I} inside the
// full group algebra, as the kernel of the stacked difference operators on
// ambient coordinates.  Dense and exponential in n; use n <= 5.
inline long long fixed_space_dim(int n, const std::vector<int>& I) {
  const auto& table = shuffles::perm_table(n);
  const int N = static_cast<int>(table.size());
  std::vector<int> gens = non_shadow_direct(n, I);
  if (gens.empty()) return N;
  Matrix A(N * static_cast<int>(gens.size()), N);
  int row = 0;
  for (int j : gens) {
    shuffles::Perm s = shuffles::adjacent_transposition(n, j);
    for (int r = 0; r < N; ++r, ++row) {
      shuffles::Perm moved = shuffles::compose(table[r], s);
      A.at(row, static_cast<int>(shuffles::perm_rank(moved))) += 1;
      A.at(row, r) -= 1;
    }
  }
  return N - shuffles::rank(A);
}

// Frozen character tables for small symmetric groups, validated against row
// and column orthogonality.  Classes are listed in ascending cycle-type order.
inline const std::vector<Partition>& char_classes(int n) {
  static const std::vector<Partition> c3{Partition({1, 1, 1}), Partition({2, 1}), Partition({3})};
  static const std::vector<Partition> c4{Partition({1, 1, 1, 1}), Partition({2, 1, 1}),
                                         Partition({2, 2}), Partition({3, 1}), Partition({4})};
  static const std::vector<Partition> c5{
      Partition({1, 1, 1, 1, 1}), Partition({2, 1, 1, 1}), Partition({2, 2, 1}),
      Partition({3, 1, 1}),       Partition({3, 2}),       Partition({4, 1}),
      Partition({5})};
  switch (n) {
    case 3: return c3;
    case 4: return c4;
    case 5: return c5;
    default: throw std::invalid_argument("char_classes: tables cover n = 3, 4, 5");
  }
}

inline const std::map<Partition, std::vector<long long>>& char_table(int n) {
  static const std::map<Partition, std::vector<long long>> t3{
      {Partition({3}), {1, 1, 1}},
      {Partition({2, 1}), {2, 0, -1}},
      {Partition({1, 1, 1}), {1, -1, 1}},
  };
  static const std::map<Partition, std::vector<long long>> t4{
      {Partition({4}), {1, 1, 1, 1, 1}},
      {Partition({3, 1}), {3, 1, -1, 0, -1}},
      {Partition({2, 2}), {2, 0, 2, -1, 0}},
      {Partition({2, 1, 1}), {3, -1, -1, 0, 1}},
      {Partition({1, 1, 1, 1}), {1, -1, 1, 1, -1}},
  };
  static const std::map<Partition, std::vector<long long>> t5{
      {Partition({5}), {1, 1, 1, 1, 1, 1, 1}},
      {Partition({4, 1}), {4, 2, 0, 1, -1, 0, -1}},
      {Partition({3, 2}), {5, 1, 1, -1, 1, -1, 0}},
      {Partition({3, 1, 1}), {6, 0, -2, 0, 0, 0, 1}},
      {Partition({2, 2, 1}), {5, -1, 1, -1, -1, 1, 0}},
      {Partition({2, 1, 1, 1}), {4, -2, 0, 1, 1, 0, -1}},
      {Partition({1, 1, 1, 1, 1}), {1, -1, 1, 1, -1, -1, 1}},
  };
  switch (n) {
    case 3: return t3;
    case 4: return t4;
    case 5: return t5;
    default: throw std::invalid_argument("char_table: tables cover n = 3, 4, 5");
  }
}

inline long long char_value(int n, const Partition& lam, const Partition& type) {
  const auto& classes = char_classes(n);
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == type) return char_table(n).at(lam)[i];
  throw std::invalid_argument("char_value: unknown class");
}

}  // namespace oracle
