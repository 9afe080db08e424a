#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shuffles/groupalg.hpp"
#include "shuffles/lacunar.hpp"
#include "shuffles/matrix.hpp"
#include "shuffles/partition.hpp"
#include "shuffles/permutation.hpp"
#include "shuffles/sparsevec.hpp"

namespace shuffles {

// Right-invariance space attached to a subset I of [1, n]: all group algebra
// elements fixed under right multiplication by s_j for every j in the
// non-shadow set of I.  Its basis consists of orbit sums over the left cosets
// of the Young subgroup generated by those s_j.
struct FSpace {
  int n = 0;
  std::vector<int> I;
  std::vector<int> non_shadow_set;
  std::vector<std::pair<int, int>> gamma_blocks;  // intervals glued by the generators
  long long gamma_order = 1;
  std::vector<AlgEl> basis;  // orbit sums in deterministic order
};

namespace detail {

// Maximal runs of [1, n] linked by j -> j+1 for j in links.
inline std::vector<std::pair<int, int>> linked_blocks(int n, const std::vector<int>& links) {
  std::vector<std::pair<int, int>> blocks;
  int lo = 1;
  for (int i = 1; i <= n; ++i) {
    bool linked = std::binary_search(links.begin(), links.end(), i);
    if (i == n || !linked) {
      blocks.emplace_back(lo, i);
      lo = i + 1;
    }
  }
  return blocks;
}

// Appends to `out` the sum over all permutations that map each block onto the
// chosen image set (as sets), with the positions listed per block.
inline void orbit_sum_terms(const std::vector<std::vector<int>>& block_positions,
                            const std::vector<std::vector<int>>& images, int n, AlgEl& out) {
  // Odometer over per-block arrangements of the image values.
  std::vector<std::vector<std::vector<int>>> all_arr(images.size());
  for (size_t b = 0; b < images.size(); ++b) {
    std::vector<int> a = images[b];
    std::sort(a.begin(), a.end());
    do {
      all_arr[b].push_back(a);
    } while (std::next_permutation(a.begin(), a.end()));
  }
  std::vector<size_t> pos(images.size(), 0);
  while (true) {
    Perm p = Perm::identity(n);
    for (size_t b = 0; b < block_positions.size(); ++b)
      for (size_t t = 0; t < block_positions[b].size(); ++t)
        p.img[block_positions[b][t] - 1] = all_arr[b][pos[b]][t];
    out.add_term(p, Rational(1));
    size_t b = 0;
    while (b < pos.size() && ++pos[b] == all_arr[b].size()) pos[b++] = 0;
    if (b == pos.size()) break;
  }
}

}  // namespace detail

inline FSpace f_space(int n, const std::vector<int>& I) {
  FSpace fs;
  fs.n = n;
  fs.I = I;
  fs.non_shadow_set = non_shadow(n, I);
  fs.gamma_blocks = detail::linked_blocks(n, fs.non_shadow_set);
  for (auto [lo, hi] : fs.gamma_blocks) fs.gamma_order *= factorial(hi - lo + 1);

  std::vector<std::vector<int>> block_positions;
  for (auto [lo, hi] : fs.gamma_blocks) {
    std::vector<int> ps;
    for (int i = lo; i <= hi; ++i) ps.push_back(i);
    block_positions.push_back(std::move(ps));
  }
  // Enumerate coset labels: an ordered choice of image sets, one per block,
  // lexicographic in each block from the remaining values.
  std::vector<std::vector<int>> images(block_positions.size());
  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 1);
  auto rec = [&](auto&& self, size_t b, std::vector<int> rem) -> void {
    if (b == block_positions.size()) {
      AlgEl sum(n);
      detail::orbit_sum_terms(block_positions, images, n, sum);
      fs.basis.push_back(std::move(sum));
      return;
    }
    const int k = static_cast<int>(block_positions[b].size());
    const int m = static_cast<int>(rem.size());
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<int> pick(k);
      for (int i = 0; i < k; ++i) pick[i] = rem[idx[i]];
      images[b] = pick;
      std::vector<int> rest;
      std::set_difference(rem.begin(), rem.end(), pick.begin(), pick.end(),
                          std::back_inserter(rest));
      self(self, b + 1, std::move(rest));
      int i = k - 1;
      while (i >= 0 && idx[i] == m - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  };
  rec(rec, 0, std::move(remaining));
  return fs;
}

// The nested chain of right-invariance spaces indexed by lacunar sets in
// sum-then-lex order.  Built as one incremental echelon; stage i owns row
// positions [stage_rank[i-1], stage_rank[i]).
struct Filtration {
  int n = 0;
  std::vector<LacunarSet> order;
  std::vector<std::vector<int>> m_vectors;
  std::vector<GapDecomposition> gaps;
  std::vector<std::vector<SparseVec>> stage_orbit_sums;
  Echelon ech;
  std::vector<size_t> stage_rank;  // stage_rank[0] = 0

  int stages() const { return static_cast<int>(order.size()); }
  long long stage_dim(int i) const {  // 1-based stage index
    return static_cast<long long>(stage_rank[i] - stage_rank[i - 1]);
  }
};

inline Filtration build_filtration(int n) {
  Filtration F;
  F.n = n;
  F.order = enumerate_lacunar(n);
  F.stage_rank.push_back(0);
  for (const LacunarSet& Q : F.order) {
    F.m_vectors.push_back(m_vector(n, Q.elems));
    F.gaps.push_back(gap_decomposition(Q));
    FSpace fs = f_space(n, Q.elems);
    std::vector<SparseVec> sparse;
    sparse.reserve(fs.basis.size());
    for (const AlgEl& v : fs.basis) {
      SparseVec sv = to_sparse(v);
      F.ech.insert(sv);
      sparse.push_back(std::move(sv));
    }
    F.stage_orbit_sums.push_back(std::move(sparse));
    F.stage_rank.push_back(F.ech.rank());
  }
  return F;
}

// Closed-form dimension of stage i's contribution: n! / prod(j_k!) times
// prod over k >= 2 of (j_k - 1).
inline long long subquotient_rank_formula(int n, const LacunarSet& Q) {
  GapDecomposition g = gap_decomposition(Q);
  long long r = factorial(n);
  for (int jk : g.j_seq) r /= factorial(jk);
  for (size_t k = 1; k < g.j_seq.size(); ++k) r *= g.j_seq[k] - 1;
  return r;
}

inline long long subquotient_rank(const Filtration& F, int i) {
  if (i < 1 || i > F.stages()) throw std::invalid_argument("stage index out of range");
  return F.stage_dim(i);
}

// Checks, on the orbit-sum generators of stage i, the two right-stability
// claims: v * t_ell stays in the stage-i span, and v * (t_ell - m) drops into
// the previous span, m being the stage's m-value at ell.  Because earlier
// stages satisfy the same claims, the generators carry the full statement.
struct StabilityReport {
  int i = 0, ell = 0, m = 0;
  int vectors = 0;
  int stay_failures = 0;   // v * t_ell outside stage span
  int drop_failures = 0;   // v * (t_ell - m) outside previous span
  bool pass() const { return stay_failures == 0 && drop_failures == 0; }
};

inline StabilityReport verify_right_stability(const Filtration& F, int i, int ell) {
  if (i < 1 || i > F.stages()) throw std::invalid_argument("stage index out of range");
  if (ell < 1 || ell > F.n) throw std::invalid_argument("ell out of range");
  StabilityReport rep;
  rep.i = i;
  rep.ell = ell;
  rep.m = F.m_vectors[i - 1][ell - 1];
  AlgEl t = t_shuffle(F.n, ell);
  for (const SparseVec& v : F.stage_orbit_sums[i - 1]) {
    ++rep.vectors;
    SparseVec w = sparse_right_mul(F.n, v, t);
    if (!F.ech.member(w, F.stage_rank[i])) ++rep.stay_failures;
    sparse_axpy(w, Rational(-rep.m), v);
    if (!F.ech.member(std::move(w), F.stage_rank[i - 1])) ++rep.drop_failures;
  }
  return rep;
}

// Anchored sums: for lacunar I with blocks J_1..J_m, the element nabla_p sums
// the permutations preserving every block and sending the first position of
// J_k to p_k for k >= 2.
inline AlgEl nabla(int n, const LacunarSet& I, const std::vector<int>& p) {
  GapDecomposition g = gap_decomposition(I);
  const size_t m = g.j_seq.size();
  if (p.size() != m - 1) throw std::invalid_argument("nabla: need one anchor per block past the first");
  for (size_t k = 0; k < p.size(); ++k) {
    auto [lo, hi] = g.blocks[k + 1];
    if (p[k] < lo || p[k] > hi) throw std::invalid_argument("nabla: anchor outside its block");
  }
  AlgEl out(n);
  // Per-block position lists and allowed value arrangements.
  std::vector<std::vector<int>> positions(m);
  std::vector<std::vector<std::vector<int>>> arrangements(m);
  for (size_t k = 0; k < m; ++k) {
    auto [lo, hi] = g.blocks[k];
    for (int i = lo; i <= hi; ++i) positions[k].push_back(i);
    std::vector<int> vals = positions[k];
    if (k == 0) {
      std::sort(vals.begin(), vals.end());
      do {
        arrangements[k].push_back(vals);
      } while (std::next_permutation(vals.begin(), vals.end()));
    } else {
      // First position is pinned to the anchor; the rest range freely.
      std::vector<int> rest;
      for (int v : vals)
        if (v != p[k - 1]) rest.push_back(v);
      do {
        std::vector<int> a;
        a.push_back(p[k - 1]);
        a.insert(a.end(), rest.begin(), rest.end());
        arrangements[k].push_back(std::move(a));
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  }
  std::vector<size_t> pos(m, 0);
  while (true) {
    Perm q = Perm::identity(n);
    for (size_t k = 0; k < m; ++k)
      for (size_t t = 0; t < positions[k].size(); ++t)
        q.img[positions[k][t] - 1] = arrangements[k][pos[k]][t];
    out.add_term(q, Rational(1));
    size_t k = 0;
    while (k < m && ++pos[k] == arrangements[k].size()) pos[k++] = 0;
    if (k == m) break;
  }
  return out;
}

// Property report for the anchored sums of stage i:
//   a: block-preserving tau satisfy tau * nabla_p = nabla_{tau p};
//   b: the left ideal generated by one nabla_p is the whole stage space;
//   c: summing the anchor of one block over its range lands in the previous
//      filtration step.
struct NablaReport {
  int i = 0;
  bool a_pass = true, b_pass = true, c_pass = true;
  int a_checked = 0, c_checked = 0;
  bool sampled = false;
  bool pass() const { return a_pass && b_pass && c_pass; }
};

inline NablaReport verify_nabla_properties(const Filtration& F, int i, unsigned long long seed,
                                           long long exhaustive_bound = 10000) {
  if (i < 1 || i > F.stages()) throw std::invalid_argument("stage index out of range");
  NablaReport rep;
  rep.i = i;
  const LacunarSet& I = F.order[i - 1];
  const int n = F.n;
  GapDecomposition g = F.gaps[i - 1];
  const size_t m = g.j_seq.size();
  std::mt19937_64 rng(seed);

  // Anchor tuple space: p_k ranges over block k (k >= 2).
  std::vector<std::vector<int>> anchor_ranges;
  long long tuple_count = 1;
  for (size_t k = 1; k < m; ++k) {
    auto [lo, hi] = g.blocks[k];
    std::vector<int> r;
    for (int v = lo; v <= hi; ++v) r.push_back(v);
    tuple_count *= static_cast<long long>(r.size());
    anchor_ranges.push_back(std::move(r));
  }
  auto anchors_at = [&](long long code) {
    std::vector<int> p;
    for (const auto& r : anchor_ranges) {
      p.push_back(r[code % r.size()]);
      code /= static_cast<long long>(r.size());
    }
    return p;
  };

  // Block-preserving permutations, coded block by block.
  std::vector<std::vector<std::vector<int>>> block_arrs;
  long long tau_count = 1;
  for (size_t k = 0; k < m; ++k) {
    auto [lo, hi] = g.blocks[k];
    std::vector<int> vals;
    for (int v = lo; v <= hi; ++v) vals.push_back(v);
    std::vector<std::vector<int>> arrs;
    std::sort(vals.begin(), vals.end());
    do {
      arrs.push_back(vals);
    } while (std::next_permutation(vals.begin(), vals.end()));
    tau_count *= static_cast<long long>(arrs.size());
    block_arrs.push_back(std::move(arrs));
  }
  auto tau_at = [&](long long code) {
    Perm tau = Perm::identity(n);
    for (size_t k = 0; k < m; ++k) {
      auto [lo, hi] = g.blocks[k];
      const auto& arrs = block_arrs[k];
      const auto& arr = arrs[code % static_cast<long long>(arrs.size())];
      code /= static_cast<long long>(arrs.size());
      for (int t = 0; t < hi - lo + 1; ++t) tau.img[lo + t - 1] = arr[t];
    }
    return tau;
  };

  // (a) tau * nabla_p = nabla_{tau p}.
  {
    long long total = tuple_count * tau_count;
    std::vector<std::pair<long long, long long>> cases;
    if (total <= exhaustive_bound) {
      for (long long pc = 0; pc < tuple_count; ++pc)
        for (long long tc = 0; tc < tau_count; ++tc) cases.emplace_back(pc, tc);
    } else {
      rep.sampled = true;
      for (int s = 0; s < 200; ++s)
        cases.emplace_back(static_cast<long long>(rng() % tuple_count),
                           static_cast<long long>(rng() % tau_count));
    }
    for (auto [pc, tc] : cases) {
      std::vector<int> p = anchors_at(pc);
      Perm tau = tau_at(tc);
      std::vector<int> tp(p.size());
      for (size_t k = 0; k < p.size(); ++k) tp[k] = tau(p[k]);
      AlgEl lhs = mul(alg_perm(tau), nabla(n, I, p));
      if (!(lhs == nabla(n, I, tp))) rep.a_pass = false;
      ++rep.a_checked;
    }
  }

  // (b) span{ sigma * nabla_p0 } has the stage dimension and sits inside the
  // span of the stage's orbit sums (so the two spaces coincide).
  {
    std::vector<int> p0;
    for (size_t k = 1; k < m; ++k) p0.push_back(g.blocks[k].first);
    SparseVec nb = to_sparse(nabla(n, I, p0));
    Echelon span;
    Echelon stage;
    for (const SparseVec& v : F.stage_orbit_sums[i - 1]) stage.insert(v);
    for (const Perm& s : perm_table(n)) {
      SparseVec sv = sparse_left_mul(n, s, nb);
      if (!stage.member(sv)) rep.b_pass = false;
      span.insert(std::move(sv));
    }
    if (static_cast<long long>(span.rank()) != static_cast<long long>(stage.rank()))
      rep.b_pass = false;
  }

  // (c) for each later block, summing its anchor over the block drops the sum
  // into the previous filtration step.
  for (size_t bl = 1; bl < m; ++bl) {
    long long rest_count = 1;
    for (size_t k = 1; k < m; ++k)
      if (k != bl) rest_count *= static_cast<long long>(anchor_ranges[k - 1].size());
    std::vector<long long> rest_codes;
    if (rest_count <= exhaustive_bound) {
      for (long long c = 0; c < rest_count; ++c) rest_codes.push_back(c);
    } else {
      rep.sampled = true;
      for (int s = 0; s < 50; ++s)
        rest_codes.push_back(static_cast<long long>(rng() % rest_count));
    }
    for (long long code : rest_codes) {
      std::vector<int> p(m - 1, 0);
      long long c = code;
      for (size_t k = 1; k < m; ++k) {
        if (k == bl) continue;
        const auto& r = anchor_ranges[k - 1];
        p[k - 1] = r[c % static_cast<long long>(r.size())];
        c /= static_cast<long long>(r.size());
      }
      AlgEl sum(n);
      for (int v : anchor_ranges[bl - 1]) {
        p[bl - 1] = v;
        sum = sum + nabla(n, I, p);
      }
      if (!F.ech.member(to_sparse(sum), F.stage_rank[i - 1])) rep.c_pass = false;
      ++rep.c_checked;
    }
  }
  return rep;
}

// Trace of left multiplication by the canonical cycle-type permutation on the
// stage-i slice, read off from reduction coefficients against the echelon.
inline Rational subquotient_character(const Filtration& F, int i, const Partition& type) {
  if (i < 1 || i > F.stages()) throw std::invalid_argument("stage index out of range");
  Perm pi = perm_of_cycle_type(F.n, type);
  Rational tr(0);
  for (size_t pos = F.stage_rank[i - 1]; pos < F.stage_rank[i]; ++pos) {
    SparseVec w = sparse_left_mul(F.n, pi, F.ech.rows[pos]);
    std::vector<std::pair<size_t, Rational>> coeffs;
    SparseVec rem = F.ech.reduce(std::move(w), F.stage_rank[i], &coeffs);
    if (!rem.is_zero())
      throw std::logic_error("subquotient_character: slice is not invariant under left action");
    for (const auto& [rpos, c] : coeffs)
      if (rpos == pos) tr += c;
  }
  return tr;
}

// Fixed-vector inclusion: elements of the stage space fixed by right
// multiplication by s_j, j in the stage's defining set, already lie in the
// previous filtration step.
inline bool verify_fixed_inclusion(const Filtration& F, int i) {
  if (i < 1 || i > F.stages()) throw std::invalid_argument("stage index out of range");
  const LacunarSet& I = F.order[i - 1];
  const auto& basis = F.stage_orbit_sums[i - 1];
  const int D = static_cast<int>(basis.size());
  const long long N = factorial(F.n);
  for (int j : I.elems) {
    AlgEl s = alg_perm(adjacent_transposition(F.n, j));
    // Kernel of x -> sum_b x_b (v_b s - v_b) over ambient coordinates.
    Matrix A(static_cast<int>(N), D);
    for (int b = 0; b < D; ++b) {
      SparseVec d = sparse_right_mul(F.n, basis[b], s);
      sparse_axpy(d, Rational(-1), basis[b]);
      for (const auto& [idx, c] : d.e) A.at(idx, b) = c;
    }
    for (const auto& x : nullspace(A)) {
      SparseVec v;
      for (int b = 0; b < D; ++b) sparse_axpy(v, x[b], basis[b]);
      if (!F.ech.member(std::move(v), F.stage_rank[i - 1])) return false;
    }
  }
  return true;
}

}  // namespace shuffles
