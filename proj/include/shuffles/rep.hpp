#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shuffles/matrix.hpp"
#include "shuffles/partition.hpp"
#include "shuffles/permutation.hpp"
#include "shuffles/specht.hpp"

namespace shuffles {

// Finite-dimensional rational representation of S_n, stored by its values on
// the adjacent transpositions.  Matrices act on column vectors and compose
// like the group: R(pi sigma) = R(pi) R(sigma).
struct Representation {
  int n = 0;
  int dim = 0;
  std::vector<Matrix> gens;  // gens[i-1] = R(s_i), i = 1..n-1

  void validate() const {
    if (static_cast<int>(gens.size()) != std::max(0, n - 1))
      throw std::invalid_argument("representation needs n-1 generator matrices");
    for (const auto& g : gens)
      if (g.rows != dim || g.cols != dim)
        throw std::invalid_argument("generator matrix has wrong size");
  }
};

inline Matrix rep_matrix(const Representation& R, const Perm& p) {
  if (p.n() != R.n) throw std::invalid_argument("rep_matrix: degree mismatch");
  Matrix m = Matrix::identity(R.dim);
  for (int letter : reduced_word(p)) m = m * R.gens[letter - 1];
  return m;
}

inline Representation trivial_rep(int p) {
  if (p < 0) throw std::invalid_argument("trivial_rep: negative degree");
  Representation R;
  R.n = p;
  R.dim = 1;
  for (int i = 1; i <= p - 1; ++i) R.gens.push_back(Matrix::identity(1));
  return R;
}

inline Representation natural_rep(int p) {
  if (p < 0) throw std::invalid_argument("natural_rep: negative degree");
  Representation R;
  R.n = p;
  R.dim = p;
  for (int i = 1; i <= p - 1; ++i) {
    Matrix m = Matrix::identity(p);
    std::swap(m.a[static_cast<size_t>(i - 1) * p + (i - 1)], m.a[static_cast<size_t>(i) * p + (i - 1)]);
    std::swap(m.a[static_cast<size_t>(i - 1) * p + i], m.a[static_cast<size_t>(i) * p + i]);
    R.gens.push_back(std::move(m));
  }
  return R;
}

// Quotient of the natural representation by the fixed line spanned by
// e_1 + ... + e_p.  Basis: classes of e_1..e_{p-1}; the class of e_p equals
// minus their sum, which is where the -1 column below comes from.
inline Representation reflection_quotient(int p) {
  if (p < 1) throw std::invalid_argument("reflection_quotient needs p >= 1");
  Representation R;
  R.n = p;
  R.dim = p - 1;
  for (int i = 1; i <= p - 1; ++i) {
    Perm s = adjacent_transposition(p, i);
    Matrix m(p - 1, p - 1);
    for (int j = 1; j <= p - 1; ++j) {
      int img = s(j);
      if (img <= p - 1)
        m.at(img - 1, j - 1) = 1;
      else
        for (int r = 1; r <= p - 1; ++r) m.at(r - 1, j - 1) = -1;
    }
    R.gens.push_back(std::move(m));
  }
  return R;
}

// Dual (contragredient) representation.  On involutions the dual matrix is the
// plain transpose, and adjacent transpositions generate, so transposing the
// generators presents the dual.
inline Representation dual_rep(const Representation& R) {
  Representation D = R;
  for (auto& g : D.gens) g = g.transpose();
  return D;
}

inline Representation specht_rep(const SpechtModule& M) {
  Representation R;
  R.n = M.n;
  R.dim = M.dim();
  for (int i = 1; i <= M.n - 1; ++i)
    R.gens.push_back(perm_action_matrix(M, adjacent_transposition(M.n, i)));
  return R;
}

// Left translation on the group algebra, basis = lexicographic permutations.
inline Representation regular_rep(int n) {
  const std::vector<Perm>& tab = perm_table(n);
  Representation R;
  R.n = n;
  R.dim = static_cast<int>(tab.size());
  for (int i = 1; i <= n - 1; ++i) {
    Perm s = adjacent_transposition(n, i);
    Matrix m(R.dim, R.dim);
    for (int j = 0; j < R.dim; ++j)
      m.at(static_cast<int>(perm_rank(compose(s, tab[j]))), j) = 1;
    R.gens.push_back(std::move(m));
  }
  return R;
}

// Ordered interval blocks of [1, n]; zero-size blocks are allowed and
// contribute nothing.
struct ParabolicShape {
  std::vector<int> sizes;

  int n() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }
  std::vector<std::pair<int, int>> blocks() const {  // [lo, hi], hi < lo when empty
    std::vector<std::pair<int, int>> b;
    int lo = 1;
    for (int s : sizes) {
      b.emplace_back(lo, lo + s - 1);
      lo += s;
    }
    return b;
  }
};

// Outer tensor product of representations of the block factors, presented as
// matrices for the adjacent transpositions internal to a block.
struct ParabolicRep {
  ParabolicShape shape;
  int dim = 0;
  std::map<int, Matrix> gen;  // key: global j with j, j+1 in the same block
};

inline ParabolicRep outer_tensor(const std::vector<Representation>& factors,
                                 const ParabolicShape& shape) {
  if (factors.size() != shape.sizes.size())
    throw std::invalid_argument("outer_tensor: factor/shape length mismatch");
  for (size_t i = 0; i < factors.size(); ++i)
    if (factors[i].n != shape.sizes[i])
      throw std::invalid_argument("outer_tensor: factor degree does not match block size");
  ParabolicRep P;
  P.shape = shape;
  P.dim = 1;
  std::vector<int> dims;
  for (const auto& f : factors) {
    dims.push_back(f.dim);
    P.dim *= f.dim;
  }
  // Row-major mixed radix over factor coordinates.
  auto strides = [&]() {
    std::vector<long long> st(dims.size(), 1);
    for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i)
      st[i] = st[i + 1] * dims[i + 1];
    return st;
  }();
  auto bl = shape.blocks();
  for (size_t f = 0; f < factors.size(); ++f) {
    auto [lo, hi] = bl[f];
    for (int j = lo; j <= hi - 1; ++j) {
      const Matrix& local = factors[f].gens[j - lo];
      Matrix m(P.dim, P.dim);
      for (int col = 0; col < P.dim; ++col) {
        int cf = static_cast<int>((col / strides[f]) % dims[f]);
        long long base = col - cf * strides[f];
        for (int rf = 0; rf < dims[f]; ++rf) {
          const Rational& v = local.at(rf, cf);
          if (v != 0) m.at(static_cast<int>(base + rf * strides[f]), col) = v;
        }
      }
      P.gen.emplace(j, std::move(m));
    }
  }
  return P;
}

// Matrix of a block-preserving permutation on the outer tensor factor.  Its
// reduced word only uses letters internal to blocks, because the one-line form
// never has a descent across a block boundary.
inline Matrix parabolic_matrix(const ParabolicRep& P, const Perm& h) {
  Matrix m = Matrix::identity(P.dim);
  for (int letter : reduced_word(h)) {
    auto it = P.gen.find(letter);
    if (it == P.gen.end())
      throw std::logic_error("parabolic_matrix: permutation does not preserve blocks");
    m = m * it->second;
  }
  return m;
}

// Induction to S_n.  Basis: (coset, factor basis vector), cosets being the
// permutations increasing on every block, in lexicographic order.
inline Representation induce(const ParabolicRep& P) {
  const int n = P.shape.n();
  auto bl = P.shape.blocks();
  std::vector<Perm> cosets;
  std::map<Perm, int> coset_index;
  for (const Perm& p : perm_table(n)) {
    bool ok = true;
    for (auto [lo, hi] : bl)
      for (int i = lo; i < hi && ok; ++i)
        if (p(i) > p(i + 1)) ok = false;
    if (ok) {
      coset_index.emplace(p, static_cast<int>(cosets.size()));
      cosets.push_back(p);
    }
  }
  Representation R;
  R.n = n;
  R.dim = static_cast<int>(cosets.size()) * P.dim;
  for (int j = 1; j <= n - 1; ++j) {
    Perm s = adjacent_transposition(n, j);
    Matrix m(R.dim, R.dim);
    for (size_t r = 0; r < cosets.size(); ++r) {
      Perm tau = compose(s, cosets[r]);
      // Split tau = g' h with g' increasing on blocks and h block-preserving.
      Perm gp = Perm::identity(n);
      for (auto [lo, hi] : bl) {
        std::vector<int> vals;
        for (int i = lo; i <= hi; ++i) vals.push_back(tau(i));
        std::sort(vals.begin(), vals.end());
        for (int i = lo; i <= hi; ++i) gp.img[i - 1] = vals[i - lo];
      }
      Perm h = compose(inverse(gp), tau);
      Matrix mh = parabolic_matrix(P, h);
      int rp = coset_index.at(gp);
      for (int b = 0; b < P.dim; ++b)
        for (int bp = 0; bp < P.dim; ++bp) {
          const Rational& v = mh.at(bp, b);
          if (v != 0)
            m.at(rp * P.dim + bp, static_cast<int>(r) * P.dim + b) = v;
        }
    }
    R.gens.push_back(std::move(m));
  }
  return R;
}

// Induction product: outer tensor along consecutive blocks, then induce.
inline Representation induction_product(const std::vector<Representation>& factors) {
  if (factors.empty()) return trivial_rep(0);
  ParabolicShape shape;
  for (const auto& f : factors) shape.sizes.push_back(f.n);
  return induce(outer_tensor(factors, shape));
}

// Trace of R at the canonical permutation of the given cycle type, evaluated
// column by column through the generator word so large representations never
// need a full matrix product.
inline Rational character(const Representation& R, const Partition& type) {
  if (type.size() != R.n) throw std::invalid_argument("character: cycle type size mismatch");
  Perm sigma = perm_of_cycle_type(R.n, type);
  std::vector<int> word = reduced_word(sigma);
  if (word.empty()) return Rational(R.dim);
  // Sparse columns of the generators appearing in the word.
  std::map<int, std::vector<std::vector<std::pair<int, Rational>>>> cols;
  for (int letter : word) {
    if (cols.count(letter)) continue;
    const Matrix& g = R.gens[letter - 1];
    auto& c = cols[letter];
    c.resize(R.dim);
    for (int j = 0; j < R.dim; ++j)
      for (int i = 0; i < R.dim; ++i)
        if (g.at(i, j) != 0) c[j].emplace_back(i, g.at(i, j));
  }
  Rational tr(0);
  std::map<int, Rational> v, w;
  for (int x = 0; x < R.dim; ++x) {
    v.clear();
    v[x] = 1;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      w.clear();
      for (const auto& [i, c] : v)
        for (const auto& [r, g] : cols[*it][i]) {
          Rational& slot = w[r];
          slot += c * g;
        }
      std::erase_if(w, [](const auto& kv) { return kv.second == 0; });
      std::swap(v, w);
    }
    auto it = v.find(x);
    if (it != v.end()) tr += it->second;
  }
  return tr;
}

// Matrix-valued intertwiner space: solutions X of X R1(s_i) = R2(s_i) X.
inline std::vector<Matrix> hom_basis(const Representation& R1, const Representation& R2) {
  if (R1.n != R2.n) throw std::invalid_argument("hom_basis: degree mismatch");
  const int d1 = R1.dim, d2 = R2.dim;
  const int g = static_cast<int>(R1.gens.size());
  Matrix sys(g * d1 * d2, d1 * d2);
  int row = 0;
  for (int k = 0; k < g; ++k) {
    const Matrix& A = R1.gens[k];
    const Matrix& B = R2.gens[k];
    for (int p = 0; p < d2; ++p)
      for (int q = 0; q < d1; ++q) {
        // coefficient of X[i][j] (index i*d1+j) in (X A - B X)[p][q]
        for (int j = 0; j < d1; ++j) sys.at(row, p * d1 + j) += A.at(j, q);
        for (int i = 0; i < d2; ++i) sys.at(row, i * d1 + q) -= B.at(p, i);
        ++row;
      }
  }
  std::vector<Matrix> basis;
  for (const auto& v : nullspace(sys)) {
    Matrix X(d2, d1);
    for (int i = 0; i < d2; ++i)
      for (int j = 0; j < d1; ++j) X.at(i, j) = v[static_cast<size_t>(i) * d1 + j];
    basis.push_back(std::move(X));
  }
  return basis;
}

inline long long hom_dimension(const Representation& R1, const Representation& R2) {
  if (R1.n != R2.n) throw std::invalid_argument("hom_dimension: degree mismatch");
  if (R1.n <= 1) return static_cast<long long>(R1.dim) * R2.dim;  // no generators: everything intertwines
  return static_cast<long long>(hom_basis(R1, R2).size());
}

}  // namespace shuffles
