#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shuffles/groupalg.hpp"
#include "shuffles/matrix.hpp"
#include "shuffles/partition.hpp"
#include "shuffles/permutation.hpp"

namespace shuffles {

// Row tabloid: rows as sorted sets, row lengths following a partition shape.
struct Tabloid {
  std::vector<std::vector<int>> rows;

  bool operator==(const Tabloid& o) const { return rows == o.rows; }
  bool operator<(const Tabloid& o) const { return rows < o.rows; }
};

inline Tabloid apply_perm(const Perm& p, const Tabloid& t) {
  Tabloid r = t;
  for (auto& row : r.rows) {
    for (auto& x : row) x = p(x);
    std::sort(row.begin(), row.end());
  }
  return r;
}

namespace detail {

// All tabloids of the given shape, ordered by recursive choice of row sets in
// lexicographic order (row 1 subset outermost).
inline void enumerate_tabloids(const Partition& shape, std::vector<int> remaining, size_t row,
                               Tabloid& cur, std::vector<Tabloid>& out) {
  if (row == cur.rows.size()) {
    out.push_back(cur);
    return;
  }
  const int k = shape.parts[row];
  std::vector<int> pick(k);
  // Iterate k-subsets of `remaining` (already sorted) in lex order.
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  const int m = static_cast<int>(remaining.size());
  while (true) {
    for (int i = 0; i < k; ++i) pick[i] = remaining[idx[i]];
    cur.rows[row] = pick;
    std::vector<int> rest;
    std::set_difference(remaining.begin(), remaining.end(), pick.begin(), pick.end(),
                        std::back_inserter(rest));
    enumerate_tabloids(shape, std::move(rest), row + 1, cur, out);
    // next combination
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// All standard tableaux: place 1..n left to right along partially filled rows,
// keeping the filled region a Young diagram.  Output is then sorted by the
// row-reading word.
inline void enumerate_standard(const Partition& shape, int next, std::vector<int>& fill,
                               std::vector<std::vector<int>>& cur,
                               std::vector<std::vector<std::vector<int>>>& out) {
  const int n = shape.size();
  if (next > n) {
    out.push_back(cur);
    return;
  }
  for (size_t r = 0; r < cur.size(); ++r) {
    if (fill[r] >= shape.parts[r]) continue;
    if (r > 0 && fill[r - 1] <= fill[r]) continue;
    cur[r].push_back(next);
    ++fill[r];
    enumerate_standard(shape, next + 1, fill, cur, out);
    --fill[r];
    cur[r].pop_back();
  }
}

}  // namespace detail

// Specht module data: tabloid basis of the ambient permutation module, the
// standard polytabloids spanning the submodule, and solver data for expressing
// ambient vectors in polytabloid coordinates.
struct SpechtModule {
  Partition shape;
  int n = 0;
  std::vector<std::vector<std::vector<int>>> standard_tableaux;  // row lists
  std::vector<Tabloid> tabloids;
  std::map<Tabloid, int> tabloid_index;
  Matrix polytabloid_matrix;  // tabloids x dim, column b = polytabloid of tableau b
  std::vector<std::vector<std::pair<int, Rational>>> column_support;  // sparse columns
  std::vector<int> pivot_rows;  // tabloid indices giving an invertible square block
  Matrix pivot_inverse;

  int dim() const { return static_cast<int>(standard_tableaux.size()); }
  int num_tabloids() const { return static_cast<int>(tabloids.size()); }
};

inline SpechtModule build_specht(const Partition& shape) {
  SpechtModule M;
  M.shape = shape;
  M.n = shape.size();

  std::vector<int> all(M.n);
  std::iota(all.begin(), all.end(), 1);
  Tabloid cur;
  cur.rows.resize(shape.num_parts());
  detail::enumerate_tabloids(shape, all, 0, cur, M.tabloids);
  for (size_t i = 0; i < M.tabloids.size(); ++i)
    M.tabloid_index.emplace(M.tabloids[i], static_cast<int>(i));

  {
    std::vector<int> fill(shape.num_parts(), 0);
    std::vector<std::vector<int>> t(shape.num_parts());
    detail::enumerate_standard(shape, 1, fill, t, M.standard_tableaux);
    std::sort(M.standard_tableaux.begin(), M.standard_tableaux.end(),
              [](const auto& a, const auto& b) {
                std::vector<int> wa, wb;
                for (const auto& r : a) wa.insert(wa.end(), r.begin(), r.end());
                for (const auto& r : b) wb.insert(wb.end(), r.begin(), r.end());
                return wa < wb;
              });
  }

  const int T = M.num_tabloids();
  const int d = M.dim();
  M.polytabloid_matrix = Matrix(T, d);

  // Polytabloid of tableau b: signed sum over the column stabilizer.
  Partition conj = conjugate_partition(shape);
  for (int b = 0; b < d; ++b) {
    const auto& tab = M.standard_tableaux[b];
    // Column entries and, per column, all arrangements with their signs.
    std::vector<std::vector<std::pair<std::vector<int>, int>>> col_arr;
    for (int j = 1; j <= shape.part(1); ++j) {
      const int h = conj.part(j);
      std::vector<int> entries;
      for (int i = 0; i < h; ++i) entries.push_back(tab[i][j - 1]);
      std::vector<int> idx(h);
      std::iota(idx.begin(), idx.end(), 0);
      std::vector<std::pair<std::vector<int>, int>> arrs;
      do {
        int inv = 0;
        for (int x = 0; x < h; ++x)
          for (int y = x + 1; y < h; ++y)
            if (idx[x] > idx[y]) ++inv;
        std::vector<int> arr(h);
        for (int i = 0; i < h; ++i) arr[i] = entries[idx[i]];
        arrs.emplace_back(std::move(arr), inv % 2 == 0 ? 1 : -1);
      } while (std::next_permutation(idx.begin(), idx.end()));
      col_arr.push_back(std::move(arrs));
    }
    // Odometer over per-column choices.
    std::vector<size_t> pos(col_arr.size(), 0);
    while (true) {
      int sign = 1;
      Tabloid t;
      t.rows.resize(shape.num_parts());
      for (size_t j = 0; j < col_arr.size(); ++j) {
        const auto& [arr, s] = col_arr[j][pos[j]];
        sign *= s;
        for (size_t i = 0; i < arr.size(); ++i) t.rows[i].push_back(arr[i]);
      }
      for (auto& row : t.rows) std::sort(row.begin(), row.end());
      M.polytabloid_matrix.at(M.tabloid_index.at(t), b) += sign;
      size_t j = 0;
      while (j < pos.size() && ++pos[j] == col_arr[j].size()) pos[j++] = 0;
      if (j == pos.size()) break;
    }
  }

  for (int b = 0; b < d; ++b) {
    auto& supp = M.column_support.emplace_back();
    for (int t = 0; t < T; ++t)
      if (M.polytabloid_matrix.at(t, b) != 0) supp.emplace_back(t, M.polytabloid_matrix.at(t, b));
  }

  // Row selection: greedily collect tabloid rows until they span d dimensions.
  {
    std::vector<std::vector<Rational>> ech;  // dense echelon over dim-d row space
    std::vector<int> piv;
    for (int t = 0; t < T && static_cast<int>(M.pivot_rows.size()) < d; ++t) {
      std::vector<Rational> v(d);
      for (int b = 0; b < d; ++b) v[b] = M.polytabloid_matrix.at(t, b);
      for (size_t k = 0; k < ech.size(); ++k) {
        if (v[piv[k]] == 0) continue;
        Rational f = v[piv[k]] / ech[k][piv[k]];
        for (int b = 0; b < d; ++b) v[b] -= f * ech[k][b];
      }
      int p = -1;
      for (int b = 0; b < d; ++b)
        if (v[b] != 0) {
          p = b;
          break;
        }
      if (p < 0) continue;
      ech.push_back(std::move(v));
      piv.push_back(p);
      M.pivot_rows.push_back(t);
    }
    if (static_cast<int>(M.pivot_rows.size()) != d)
      throw std::logic_error("polytabloid matrix does not have full column rank");
    Matrix block(d, d);
    for (int r = 0; r < d; ++r)
      for (int b = 0; b < d; ++b) block.at(r, b) = M.polytabloid_matrix.at(M.pivot_rows[r], b);
    M.pivot_inverse = inverse(block);
  }
  return M;
}

// Coordinates of an ambient tabloid vector over the standard polytabloids.
// Throws if the vector is outside the submodule: every caller feeds it vectors
// that are provably inside, so failure means a broken invariant.
inline std::vector<Rational> specht_coords(const SpechtModule& M, const std::vector<Rational>& w) {
  if (static_cast<int>(w.size()) != M.num_tabloids())
    throw std::invalid_argument("specht_coords: wrong ambient dimension");
  const int d = M.dim();
  std::vector<Rational> wp(d);
  for (int r = 0; r < d; ++r) wp[r] = w[M.pivot_rows[r]];
  std::vector<Rational> x = M.pivot_inverse * wp;
  // Full residual check: B x must equal w on every tabloid coordinate.
  std::vector<Rational> bx(M.num_tabloids(), Rational(0));
  for (int b = 0; b < d; ++b) {
    if (x[b] == 0) continue;
    for (const auto& [t, c] : M.column_support[b]) bx[t] += x[b] * c;
  }
  if (bx != w) throw std::logic_error("specht_coords: vector outside the module");
  return x;
}

// Matrix of the right module action v -> a . v in the standard polytabloid
// basis (column b = image of basis vector b).
inline Matrix action_matrix(const SpechtModule& M, const AlgEl& a) {
  if (a.n != M.n) throw std::invalid_argument("action_matrix: degree mismatch");
  const int T = M.num_tabloids();
  const int d = M.dim();
  // Index action of each support permutation on tabloids.
  std::vector<std::vector<int>> maps;
  std::vector<Rational> coeffs;
  maps.reserve(a.terms.size());
  for (const auto& [p, c] : a.terms) {
    std::vector<int> mp(T);
    for (int t = 0; t < T; ++t) mp[t] = M.tabloid_index.at(apply_perm(p, M.tabloids[t]));
    maps.push_back(std::move(mp));
    coeffs.push_back(c);
  }
  Matrix out(d, d);
  std::vector<Rational> w(T);
  for (int b = 0; b < d; ++b) {
    std::fill(w.begin(), w.end(), Rational(0));
    for (size_t m = 0; m < maps.size(); ++m)
      for (const auto& [t, c] : M.column_support[b]) w[maps[m][t]] += coeffs[m] * c;
    std::vector<Rational> x = specht_coords(M, w);
    for (int r = 0; r < d; ++r) out.at(r, b) = x[r];
  }
  return out;
}

inline Matrix perm_action_matrix(const SpechtModule& M, const Perm& p) {
  return action_matrix(M, alg_perm(p));
}

}  // namespace shuffles
