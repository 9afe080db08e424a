#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "shuffles/permutation.hpp"
#include "shuffles/rational.hpp"
#include "shuffles/sparsevec.hpp"

namespace shuffles {

// Element of the rational group algebra of S_n: finitely many permutations
// with nonzero rational coefficients.
struct AlgEl {
  int n = 0;
  std::map<Perm, Rational> terms;

  explicit AlgEl(int n_ = 0) : n(n_) {}

  void add_term(const Perm& p, const Rational& c) {
    if (p.n() != n) throw std::invalid_argument("group algebra degree mismatch");
    auto it = terms.find(p);
    if (it == terms.end()) {
      if (c != 0) terms.emplace(p, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  Rational coeff(const Perm& p) const {
    auto it = terms.find(p);
    return it == terms.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms.empty(); }
  size_t support_size() const { return terms.size(); }

  Rational coeff_mass() const {  // sum of coefficients (counts cycle summands)
    Rational s(0);
    for (const auto& [p, c] : terms) s += c;
    return s;
  }

  bool operator==(const AlgEl& o) const { return n == o.n && terms == o.terms; }
};

inline AlgEl alg_zero(int n) { return AlgEl(n); }

inline AlgEl alg_unit(int n) {
  AlgEl a(n);
  a.add_term(Perm::identity(n), Rational(1));
  return a;
}

inline AlgEl alg_perm(const Perm& p) {
  AlgEl a(p.n());
  a.add_term(p, Rational(1));
  return a;
}

inline AlgEl operator+(const AlgEl& a, const AlgEl& b) {
  if (a.n != b.n) throw std::invalid_argument("group algebra degree mismatch");
  AlgEl r = a;
  for (const auto& [p, c] : b.terms) r.add_term(p, c);
  return r;
}

inline AlgEl operator-(const AlgEl& a, const AlgEl& b) {
  if (a.n != b.n) throw std::invalid_argument("group algebra degree mismatch");
  AlgEl r = a;
  for (const auto& [p, c] : b.terms) r.add_term(p, -c);
  return r;
}

inline AlgEl operator*(const Rational& s, const AlgEl& a) {
  AlgEl r(a.n);
  if (s == 0) return r;
  for (const auto& [p, c] : a.terms) r.terms.emplace(p, s * c);
  return r;
}

inline AlgEl mul(const AlgEl& a, const AlgEl& b) {
  if (a.n != b.n) throw std::invalid_argument("group algebra degree mismatch");
  AlgEl r(a.n);
  for (const auto& [p, cp] : a.terms)
    for (const auto& [q, cq] : b.terms) r.add_term(compose(p, q), cp * cq);
  return r;
}

// The somewhere-to-below shuffle: the sum of the cycles that pick the card at
// position ell and insert it below position k, over all k from ell to n.
// The k = ell summand is the identity; t_n itself is the identity.
inline AlgEl t_shuffle(int n, int ell) {
  if (ell < 1 || ell > n) throw std::invalid_argument("t_shuffle: ell out of [1, n]");
  AlgEl r(n);
  for (int k = ell; k <= n; ++k) {
    std::vector<int> pts;
    for (int i = ell; i <= k; ++i) pts.push_back(i);
    r.add_term(cyc(n, pts), Rational(1));
  }
  return r;
}

// One-sided cycle shuffle: w_1 t_1 + ... + w_n t_n.
inline AlgEl ocs(int n, const std::vector<Rational>& weights) {
  if (static_cast<int>(weights.size()) != n)
    throw std::invalid_argument("ocs: need exactly n weights");
  AlgEl r(n);
  for (int ell = 1; ell <= n; ++ell) {
    if (weights[ell - 1] == 0) continue;
    r = r + (weights[ell - 1] * t_shuffle(n, ell));
  }
  return r;
}

// Coordinates of an algebra element over the lexicographic permutation list.
inline SparseVec to_sparse(const AlgEl& a) {
  std::vector<std::pair<int, Rational>> terms;
  terms.reserve(a.terms.size());
  for (const auto& [p, c] : a.terms) terms.emplace_back(static_cast<int>(perm_rank(p)), c);
  return sparse_from_terms(std::move(terms));
}

inline AlgEl from_sparse(int n, const SparseVec& v) {
  AlgEl a(n);
  for (const auto& [idx, c] : v.e) a.terms.emplace(perm_unrank(n, idx), c);
  return a;
}

// v * a where v is a coordinate vector over S_n and a is an algebra element.
inline SparseVec sparse_right_mul(int n, const SparseVec& v, const AlgEl& a) {
  const std::vector<Perm>& tab = perm_table(n);
  std::vector<std::pair<int, Rational>> terms;
  terms.reserve(v.e.size() * a.terms.size());
  for (const auto& [idx, c] : v.e)
    for (const auto& [q, cq] : a.terms)
      terms.emplace_back(static_cast<int>(perm_rank(compose(tab[idx], q))), c * cq);
  return sparse_from_terms(std::move(terms));
}

// pi * v: left translation of a coordinate vector.
inline SparseVec sparse_left_mul(int n, const Perm& pi, const SparseVec& v) {
  const std::vector<Perm>& tab = perm_table(n);
  std::vector<std::pair<int, Rational>> terms;
  terms.reserve(v.e.size());
  for (const auto& [idx, c] : v.e)
    terms.emplace_back(static_cast<int>(perm_rank(compose(pi, tab[idx]))), c);
  return sparse_from_terms(std::move(terms));
}

inline std::string algel_str(const AlgEl& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [p, c] : a.terms) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += rat_str(c) + "*";
    s += perm_str(p);
  }
  return s;
}

}  // namespace shuffles
