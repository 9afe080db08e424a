#pragma once

#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shuffles/filtration.hpp"
#include "shuffles/groupalg.hpp"
#include "shuffles/lacunar.hpp"
#include "shuffles/matrix.hpp"
#include "shuffles/rep.hpp"
#include "shuffles/schur.hpp"
#include "shuffles/specht.hpp"

namespace shuffles {

// Predicted eigenvalue data of the weighted shuffle operator on one Specht
// module: each lacunar set with nonzero Schur coefficient contributes the
// weight-m inner product as an eigenvalue with that coefficient as its
// multiplicity.
struct SpectrumEntry {
  LacunarSet I;
  std::vector<int> m_vec;
  Rational omega;
  long long multiplicity = 0;
};

struct SpectrumPrediction {
  int n = 0;
  Partition lambda;
  std::vector<Rational> weights;
  std::vector<SpectrumEntry> entries;            // filtration order
  std::map<Rational, long long> grouped;         // eigenvalue -> total multiplicity
  long long total_multiplicity = 0;
};

inline SpectrumPrediction predict_spectrum(const Partition& lambda,
                                           const std::vector<Rational>& weights) {
  SpectrumPrediction P;
  P.n = lambda.size();
  if (P.n < 1) throw std::invalid_argument("predict_spectrum: empty partition");
  P.lambda = lambda;
  P.weights = weights;
  if (static_cast<int>(weights.size()) != P.n)
    throw std::invalid_argument("predict_spectrum: need n weights");
  for (const LacunarSet& I : enumerate_lacunar(P.n)) {
    long long c = c_coeff(I, lambda);
    if (c == 0) continue;
    SpectrumEntry e;
    e.I = I;
    e.m_vec = m_vector(P.n, I.elems);
    for (int ell = 1; ell <= P.n; ++ell) e.omega += weights[ell - 1] * Rational(e.m_vec[ell - 1]);
    e.multiplicity = c;
    P.grouped[e.omega] += c;
    P.total_multiplicity += c;
    P.entries.push_back(std::move(e));
  }
  return P;
}

inline UniPoly predicted_charpoly(const SpectrumPrediction& P) {
  UniPoly r = UniPoly::one();
  for (const SpectrumEntry& e : P.entries)
    for (long long k = 0; k < e.multiplicity; ++k) r = r * UniPoly::linear_root(e.omega);
  return r;
}

// Action matrices of t_1..t_n on the module; the weighted operator is their
// weighted sum.
inline std::vector<Matrix> t_action_matrices(const SpechtModule& M) {
  std::vector<Matrix> acts;
  for (int ell = 1; ell <= M.n; ++ell) acts.push_back(action_matrix(M, t_shuffle(M.n, ell)));
  return acts;
}

inline Matrix weighted_operator(const std::vector<Matrix>& t_acts,
                                const std::vector<Rational>& weights) {
  if (t_acts.empty()) throw std::invalid_argument("weighted_operator: no actions");
  if (weights.size() != t_acts.size())
    throw std::invalid_argument("weighted_operator: weight count mismatch");
  Matrix L(t_acts[0].rows, t_acts[0].cols);
  for (size_t i = 0; i < t_acts.size(); ++i)
    if (weights[i] != 0) L = L + weights[i] * t_acts[i];
  return L;
}

struct CharpolyCheck {
  UniPoly lhs;  // characteristic polynomial of the operator
  UniPoly rhs;  // product of predicted linear factors
  bool equal = false;
};

inline CharpolyCheck verify_charpoly(const Matrix& L, const SpectrumPrediction& P) {
  CharpolyCheck c;
  c.lhs = char_poly(L);
  c.rhs = predicted_charpoly(P);
  c.equal = (c.lhs == c.rhs);
  return c;
}

// Product of (L - omega id) over the contributing lacunar sets in filtration
// order; the triangular structure makes it vanish.
inline bool verify_annihilator(const Matrix& L, const SpectrumPrediction& P) {
  Matrix acc = Matrix::identity(L.rows);
  for (const SpectrumEntry& e : P.entries) {
    Matrix shifted = L;
    for (int i = 0; i < L.rows; ++i) shifted.at(i, i) -= e.omega;
    acc = acc * shifted;
  }
  return acc.is_zero();
}

struct DiagReport {
  bool distinct = false;        // all contributing eigenvalues pairwise distinct
  bool diagonalizable = false;  // minimal polynomial squarefree
};

inline DiagReport check_diagonalizable(const Matrix& L, const SpectrumPrediction& P) {
  DiagReport r;
  r.distinct = true;
  for (size_t a = 0; a < P.entries.size(); ++a)
    for (size_t b = a + 1; b < P.entries.size(); ++b)
      if (P.entries[a].omega == P.entries[b].omega) r.distinct = false;
  r.diagonalizable = L.rows == 0 || poly_squarefree(min_poly(L));
  return r;
}

// Convenience wrapper running all spectrum checks for one (lambda, weights).
struct SpectrumVerification {
  SpectrumPrediction prediction;
  CharpolyCheck charpoly;
  bool annihilator_zero = false;
  DiagReport diag;
  bool dimension_match = false;  // total multiplicity = module dimension

  bool pass() const {
    bool ok = charpoly.equal && annihilator_zero && dimension_match;
    if (diag.distinct) ok = ok && diag.diagonalizable;
    return ok;
  }
};

inline SpectrumVerification verify_spectrum(const SpechtModule& M,
                                            const std::vector<Matrix>& t_acts,
                                            const std::vector<Rational>& weights) {
  SpectrumVerification V;
  V.prediction = predict_spectrum(M.shape, weights);
  Matrix L = weighted_operator(t_acts, weights);
  V.charpoly = verify_charpoly(L, V.prediction);
  V.annihilator_zero = verify_annihilator(L, V.prediction);
  V.diag = check_diagonalizable(L, V.prediction);
  V.dimension_match = (V.prediction.total_multiplicity == M.dim());
  return V;
}

// Annihilator chain inside a module: member i of the chain collects the
// vectors killed by every stage space up to i.  dims[0] is the full module
// dimension, dims[stages] is 0.
struct SpechtAnnReport {
  std::vector<long long> dims;
  bool dims_ok = true;        // successive drops equal the Schur coefficients
  bool stagnation_ok = true;  // no drop exactly when the coefficient vanishes
  bool shift_ok = true;       // t_ell shifts classes by the stage m-value
  bool monomial_ok = true;    // random t-monomials act by the matching scalar
  bool pass() const { return dims_ok && stagnation_ok && shift_ok && monomial_ok; }
};

inline SpechtAnnReport annihilator_filtration(const SpechtModule& M, const Filtration& F,
                                              unsigned long long seed,
                                              int monomials_per_stage = 10) {
  if (M.n != F.n) throw std::invalid_argument("annihilator_filtration: degree mismatch");
  const int d = M.dim();
  const int n = F.n;
  SpechtAnnReport rep;

  // Left action of every permutation, then of every stage orbit sum.
  std::vector<Matrix> perm_act;
  perm_act.reserve(perm_table(n).size());
  for (const Perm& p : perm_table(n)) perm_act.push_back(perm_action_matrix(M, p));

  // Stacked annihilation rows per stage prefix.
  std::vector<std::vector<Rational>> rows;       // accumulated rows
  std::vector<size_t> rows_at_stage{0};          // prefix sizes
  for (int i = 1; i <= F.stages(); ++i) {
    for (const SparseVec& v : F.stage_orbit_sums[i - 1]) {
      Matrix L(d, d);
      for (const auto& [idx, c] : v.e) L = L + c * perm_act[idx];
      for (int r = 0; r < d; ++r) {
        std::vector<Rational> row(d);
        for (int cidx = 0; cidx < d; ++cidx) row[cidx] = L.at(r, cidx);
        rows.push_back(std::move(row));
      }
    }
    rows_at_stage.push_back(rows.size());
  }

  auto kernel_basis = [&](int stage) {
    Matrix A(static_cast<int>(rows_at_stage[stage]), d);
    for (size_t r = 0; r < rows_at_stage[stage]; ++r)
      for (int c = 0; c < d; ++c) A.at(static_cast<int>(r), c) = rows[r][c];
    return nullspace(A);
  };
  auto in_kernel = [&](int stage, const std::vector<Rational>& v) {
    for (size_t r = 0; r < rows_at_stage[stage]; ++r) {
      Rational s(0);
      for (int c = 0; c < d; ++c)
        if (rows[r][c] != 0 && v[c] != 0) s += rows[r][c] * v[c];
      if (s != 0) return false;
    }
    return true;
  };

  std::vector<std::vector<std::vector<Rational>>> bases;  // bases[i] for chain member i
  bases.reserve(F.stages() + 1);
  for (int i = 0; i <= F.stages(); ++i) bases.push_back(kernel_basis(i));
  for (int i = 0; i <= F.stages(); ++i) rep.dims.push_back(static_cast<long long>(bases[i].size()));

  std::vector<Matrix> t_acts = t_action_matrices(M);
  std::mt19937_64 rng(seed);

  for (int i = 1; i <= F.stages(); ++i) {
    long long c = c_coeff(F.order[i - 1], M.shape);
    long long drop = rep.dims[i - 1] - rep.dims[i];
    if (drop != c) rep.dims_ok = false;
    if ((drop == 0) != (c == 0)) rep.stagnation_ok = false;
    // Property: on classes modulo chain member i, t_ell scales by the stage
    // m-value; checked on a basis of member i-1.
    for (int ell = 1; ell <= n; ++ell) {
      const int m = F.m_vectors[i - 1][ell - 1];
      for (const auto& v : bases[i - 1]) {
        std::vector<Rational> w = t_acts[ell - 1] * v;
        for (int r = 0; r < d; ++r) w[r] -= Rational(m) * v[r];
        if (!in_kernel(i, w)) rep.shift_ok = false;
      }
    }
    // Random t-monomials act by the product of the stage m-values.
    for (int s = 0; s < monomials_per_stage; ++s) {
      int len = 1 + static_cast<int>(rng() % 4);
      std::vector<int> word;
      long long scalar = 1;
      for (int t = 0; t < len; ++t) {
        int ell = 1 + static_cast<int>(rng() % n);
        word.push_back(ell);
        scalar *= F.m_vectors[i - 1][ell - 1];
      }
      for (const auto& v : bases[i - 1]) {
        std::vector<Rational> w = v;
        for (auto it = word.rbegin(); it != word.rend(); ++it) w = t_acts[*it - 1] * w;
        for (int r = 0; r < d; ++r) w[r] -= rat_int(scalar) * v[r];
        if (!in_kernel(i, w)) rep.monomial_ok = false;
      }
    }
  }
  return rep;
}

// Same chain for an arbitrary representation, with the expected per-stage
// drops given by the character pairing against the stage subquotient.
struct GeneralAnnReport {
  std::vector<long long> dims;
  std::vector<Rational> expected_drops;
  bool drops_match = true;
};

inline GeneralAnnReport generalized_annihilator_filtration(const Representation& V,
                                                           const Filtration& F) {
  if (V.n != F.n) throw std::invalid_argument("generalized_annihilator_filtration: degree mismatch");
  const int d = V.dim;
  const int n = F.n;
  GeneralAnnReport rep;

  std::vector<Matrix> perm_act;
  perm_act.reserve(perm_table(n).size());
  for (const Perm& p : perm_table(n)) perm_act.push_back(rep_matrix(V, p));

  std::vector<std::vector<Rational>> rows;
  std::vector<size_t> rows_at_stage{0};
  for (int i = 1; i <= F.stages(); ++i) {
    for (const SparseVec& v : F.stage_orbit_sums[i - 1]) {
      Matrix L(d, d);
      for (const auto& [idx, c] : v.e) L = L + c * perm_act[idx];
      for (int r = 0; r < d; ++r) {
        std::vector<Rational> row(d);
        for (int cidx = 0; cidx < d; ++cidx) row[cidx] = L.at(r, cidx);
        rows.push_back(std::move(row));
      }
    }
    rows_at_stage.push_back(rows.size());
  }
  for (int i = 0; i <= F.stages(); ++i) {
    Matrix A(static_cast<int>(rows_at_stage[i]), d);
    for (size_t r = 0; r < rows_at_stage[i]; ++r)
      for (int c = 0; c < d; ++c) A.at(static_cast<int>(r), c) = rows[r][c];
    rep.dims.push_back(static_cast<long long>(d - rank(A)));
  }

  // Expected drop at stage i: (1/n!) sum over classes of size * chi_stage * chi_V.
  std::vector<Partition> types = partitions_of(n);
  std::vector<Rational> chi_V;
  for (const Partition& t : types) chi_V.push_back(character(V, t));
  for (int i = 1; i <= F.stages(); ++i) {
    Rational inner(0);
    for (size_t t = 0; t < types.size(); ++t) {
      Rational chi_sub = subquotient_character(F, i, types[t]);
      inner += rat_int(class_size(n, types[t])) * chi_sub * chi_V[t];
    }
    inner /= rat_int(factorial(n));
    rep.expected_drops.push_back(inner);
    if (rat_int(rep.dims[i - 1] - rep.dims[i]) != inner) rep.drops_match = false;
  }
  return rep;
}

}  // namespace shuffles
