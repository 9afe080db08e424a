#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shuffles/poly.hpp"
#include "shuffles/rational.hpp"

namespace shuffles {

// Dense matrix over the rationals, row major.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rational(0)) {
    if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dimension");
  }

  Rational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool is_zero() const {
    for (const auto& x : a)
      if (x != 0) return false;
    return true;
  }

  bool is_square() const { return rows == cols; }

  Matrix transpose() const {
    Matrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Rational trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    Rational s(0);
    for (int i = 0; i < rows; ++i) s += at(i, i);
    return s;
  }

  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }
};

inline Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix shape mismatch");
  Matrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

inline Matrix operator-(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix shape mismatch");
  Matrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

inline Matrix operator*(const Rational& s, const Matrix& x) {
  Matrix r = x;
  for (auto& v : r.a) v *= s;
  return r;
}

inline Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rational& xv = x.at(i, k);
      if (xv == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Rational& yv = y.at(k, j);
        if (yv != 0) r.at(i, j) += xv * yv;
      }
    }
  return r;
}

inline std::vector<Rational> operator*(const Matrix& m, const std::vector<Rational>& v) {
  if (m.cols != static_cast<int>(v.size())) throw std::invalid_argument("matrix/vector shape mismatch");
  std::vector<Rational> r(m.rows, Rational(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0 && v[j] != 0) r[i] += m.at(i, j) * v[j];
  return r;
}

namespace detail {

// Pivot choice: among nonzero candidates take the entry whose numerator has
// the smallest absolute value.  Keeps intermediate entries small in the
// structured 0/±1-heavy systems this library produces.
inline int pick_pivot(const Matrix& m, int from_row, int col) {
  int best = -1;
  for (int i = from_row; i < m.rows; ++i) {
    if (m.at(i, col) == 0) continue;
    if (best < 0 ||
        mpz_cmpabs(m.at(i, col).get_num_mpz_t(), m.at(best, col).get_num_mpz_t()) < 0)
      best = i;
  }
  return best;
}

// In-place reduced row echelon form; returns pivot columns.
inline std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < m.cols && r < m.rows; ++col) {
    int p = pick_pivot(m, r, col);
    if (p < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rational inv = Rational(1) / m.at(r, col);
    for (int j = col; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace detail

inline int rank(Matrix m) { return static_cast<int>(detail::rref(m).size()); }

// Basis of the right kernel {x : m x = 0}, one vector per free column.
inline std::vector<std::vector<Rational>> nullspace(const Matrix& m) {
  Matrix r = m;
  std::vector<int> pivots = detail::rref(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols, Rational(0));
    v[free] = 1;
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(static_cast<int>(k), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Expresses v as a linear combination of the given row vectors if possible:
// returns c with sum_i c[i] * rows[i] == v, otherwise nullopt.
inline std::optional<std::vector<Rational>> solve_membership(
    const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& v) {
  const int k = static_cast<int>(rows.size());
  const int len = static_cast<int>(v.size());
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != len) throw std::invalid_argument("row length mismatch");
  if (k == 0) {
    for (const auto& x : v)
      if (x != 0) return std::nullopt;
    return std::vector<Rational>{};
  }
  // Solve rows^T c = v with an augmented column.
  Matrix m(len, k + 1);
  for (int i = 0; i < len; ++i) {
    for (int j = 0; j < k; ++j) m.at(i, j) = rows[j][i];
    m.at(i, k) = v[i];
  }
  std::vector<int> pivots = detail::rref(m);
  for (int c : pivots)
    if (c == k) return std::nullopt;  // inconsistent
  std::vector<Rational> coeff(k, Rational(0));
  for (size_t i = 0; i < pivots.size(); ++i) coeff[pivots[i]] = m.at(static_cast<int>(i), k);
  return coeff;
}

// Characteristic polynomial det(x I - m) by the Faddeev-LeVerrier recurrence;
// division-free except by the integers 2..n, and always monic.
inline UniPoly char_poly(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
  const int d = m.rows;
  std::vector<Rational> cs(d + 1, Rational(0));
  cs[d] = 1;
  if (d == 0) return UniPoly(std::move(cs));
  Matrix mk = m;
  cs[d - 1] = -mk.trace();
  for (int k = 2; k <= d; ++k) {
    Matrix shifted = mk;
    for (int i = 0; i < d; ++i) shifted.at(i, i) += cs[d - k + 1];
    mk = m * shifted;
    cs[d - k] = -mk.trace() / Rational(k);
  }
  return UniPoly(std::move(cs));
}

namespace detail {

// Minimal polynomial of m relative to the start vector: the monic p of least
// degree with p(m) v = 0.  Krylov vectors are reduced incrementally while the
// combination in terms of earlier Krylov vectors is carried along.
inline UniPoly relative_min_poly(const Matrix& m, const std::vector<Rational>& start) {
  const int d = m.rows;
  struct Row {
    std::vector<Rational> v;      // reduced Krylov vector
    std::vector<Rational> combo;  // coordinates over w_0..w_t
    int pivot;
  };
  std::vector<Row> ech;
  std::vector<Rational> w = start;
  for (int step = 0;; ++step) {
    std::vector<Rational> combo(step + 1, Rational(0));
    combo[step] = 1;
    std::vector<Rational> v = w;
    for (const Row& row : ech) {
      const Rational& f = v[row.pivot];
      if (f == 0) continue;
      Rational c = f / row.v[row.pivot];
      for (int j = 0; j < d; ++j)
        if (row.v[j] != 0) v[j] -= c * row.v[j];
      for (size_t j = 0; j < row.combo.size(); ++j) combo[j] -= c * row.combo[j];
    }
    int pivot = -1;
    for (int j = 0; j < d; ++j)
      if (v[j] != 0) {
        pivot = j;
        break;
      }
    if (pivot < 0) {
      // w_step reduced to zero: combo gives the dependence, i.e. the polynomial.
      return make_monic(UniPoly(std::move(combo)));
    }
    ech.push_back(Row{std::move(v), std::move(combo), pivot});
    w = m * w;
  }
}

}  // namespace detail

// Minimal polynomial: lcm over basis vectors of their relative minimal
// polynomials, with early exit once the degree hits the matrix size.
inline UniPoly min_poly(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("min_poly of non-square matrix");
  const int d = m.rows;
  UniPoly mp = UniPoly::one();
  for (int i = 0; i < d && mp.degree() < d; ++i) {
    std::vector<Rational> e(d, Rational(0));
    e[i] = 1;
    mp = poly_lcm(mp, detail::relative_min_poly(m, e));
  }
  return mp;
}

// p(m) by Horner's rule.
inline Matrix poly_eval_matrix(const UniPoly& p, const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("poly_eval_matrix of non-square matrix");
  const int d = m.rows;
  Matrix acc(d, d);
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * m;
    for (int i = 0; i < d; ++i) acc.at(i, i) += p.coeff(k);
  }
  return acc;
}

// Inverse via Gauss-Jordan; throws if singular.
inline Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const int d = m.rows;
  Matrix aug(d, 2 * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, d + i) = 1;
  }
  std::vector<int> pivots = detail::rref(aug);
  if (static_cast<int>(pivots.size()) != d || (d > 0 && pivots.back() >= d))
    throw std::invalid_argument("matrix not invertible");
  Matrix inv(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) inv.at(i, j) = aug.at(i, d + j);
  return inv;
}

}  // namespace shuffles
