#pragma once

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "shuffles/filtration.hpp"
#include "shuffles/lacunar.hpp"
#include "shuffles/rep.hpp"
#include "shuffles/schur.hpp"
#include "shuffles/spectrum.hpp"

namespace shuffles::verify {

struct Outcome {
  std::string name;
  bool pass = true;
  bool skipped = false;
  std::string detail;
};

// Deterministic weight sweep: all ones, each coordinate vector, then five
// seeded vectors with entries in [-9, 9].
inline std::vector<std::vector<Rational>> weight_sweep(int n, unsigned long long seed) {
  std::vector<std::vector<Rational>> sweep;
  sweep.emplace_back(n, Rational(1));
  for (int ell = 1; ell <= n; ++ell) {
    std::vector<Rational> w(n, Rational(0));
    w[ell - 1] = 1;
    sweep.push_back(std::move(w));
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < 5; ++s) {
    std::vector<Rational> w;
    for (int i = 0; i < n; ++i)
      w.push_back(Rational(static_cast<long>(rng() % 19) - 9));
    sweep.push_back(std::move(w));
  }
  return sweep;
}

inline Outcome census(int max_n) {
  Outcome o{"lacunar-census"};
  for (int n = 1; n <= max_n; ++n) {
    std::vector<LacunarSet> L = enumerate_lacunar(n);
    std::set<std::vector<int>> distinct;
    bool all_lacunar = true;
    for (const LacunarSet& s : L) {
      distinct.insert(s.elems);
      if (!is_lacunar(s.elems)) all_lacunar = false;
    }
    if (L.size() != lacunar_census(n) || distinct.size() != L.size() || !all_lacunar) {
      o.pass = false;
      o.detail = "mismatch at n=" + std::to_string(n);
      return o;
    }
  }
  o.detail = "sizes match f_{n+1} for n=1.." + std::to_string(max_n);
  return o;
}

inline Outcome worked_examples() {
  Outcome o{"worked-examples"};
  auto fail = [&](const std::string& d) {
    o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += d;
  };
  if (m_vector(6, {2, 5}) != std::vector<int>{1, 0, 2, 1, 0, 1}) fail("m-vector at n=6 {2,5}");
  if (non_shadow(5, {2, 3}) != std::vector<int>{4}) fail("non-shadow at n=5 {2,3}");
  if (enclosure(5, {2, 3}) != std::vector<int>{0, 2, 3, 6}) fail("enclosure at n=5 {2,3}");
  if (m_vector(5, {2, 3}) != std::vector<int>{1, 0, 0, 2, 1}) fail("m-vector at n=5 {2,3}");
  {
    std::vector<std::vector<int>> want{{}, {1}, {2}, {3}, {1, 3}, {4}, {1, 4}, {2, 4}};
    std::vector<LacunarSet> got = enumerate_lacunar(5);
    bool ok = got.size() == want.size();
    for (size_t i = 0; ok && i < want.size(); ++i) ok = got[i].elems == want[i];
    if (!ok) fail("enumeration order at n=5");
  }
  if (o.pass) o.detail = "all pinned values match";
  return o;
}

inline Outcome filtration_ranks(const Filtration& F) {
  Outcome o{"filtration-ranks(n=" + std::to_string(F.n) + ")"};
  long long cum = 0;
  for (int i = 1; i <= F.stages(); ++i) {
    long long got = subquotient_rank(F, i);
    long long want = subquotient_rank_formula(F.n, F.order[i - 1]);
    cum += got;
    if (got != want) {
      o.pass = false;
      o.detail = "stage " + std::to_string(i) + ": computed " + std::to_string(got) +
                 " formula " + std::to_string(want);
      return o;
    }
  }
  if (cum != factorial(F.n)) {
    o.pass = false;
    o.detail = "ranks do not telescope to n!";
    return o;
  }
  o.detail = std::to_string(F.stages()) + " stages telescope to " + std::to_string(cum);
  return o;
}

// Deterministic sample of (stage, ell) pairs: full set when fraction >= 1,
// otherwise a seeded shuffle prefix, reported in sorted order.
inline std::vector<std::pair<int, int>> stability_sample(const Filtration& F, double fraction,
                                                         unsigned long long seed) {
  std::vector<std::pair<int, int>> all;
  for (int i = 1; i <= F.stages(); ++i)
    for (int ell = 1; ell <= F.n; ++ell) all.emplace_back(i, ell);
  if (fraction >= 1.0) return all;
  std::mt19937_64 rng(seed);
  for (size_t i = all.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(rng() % i);
    std::swap(all[i - 1], all[j]);
  }
  size_t keep = static_cast<size_t>(fraction * static_cast<double>(all.size()) + 0.999999);
  if (keep < 1) keep = 1;
  all.resize(std::min(keep, all.size()));
  std::sort(all.begin(), all.end());
  return all;
}

inline Outcome stability(const Filtration& F, double fraction, unsigned long long seed) {
  Outcome o{"right-stability(n=" + std::to_string(F.n) + ")"};
  auto pairs = stability_sample(F, fraction, seed);
  int failures = 0;
  for (auto [i, ell] : pairs) {
    StabilityReport r = verify_right_stability(F, i, ell);
    if (!r.pass()) ++failures;
  }
  o.pass = failures == 0;
  std::ostringstream d;
  d << pairs.size() << "/" << F.stages() * F.n << " (stage,ell) pairs";
  if (fraction < 1.0) d << " [sampled, seed " << seed << "]";
  if (failures) d << ", " << failures << " failed";
  o.detail = d.str();
  return o;
}

inline Outcome nabla_properties_all(const Filtration& F, unsigned long long seed) {
  Outcome o{"anchored-sums(n=" + std::to_string(F.n) + ")"};
  int checked = 0;
  for (int i = 1; i <= F.stages(); ++i) {
    NablaReport r = verify_nabla_properties(F, i, seed + static_cast<unsigned long long>(i));
    ++checked;
    if (!r.pass()) {
      o.pass = false;
      o.detail = "stage " + std::to_string(i) + " failed (a=" + std::to_string(r.a_pass) +
                 " b=" + std::to_string(r.b_pass) + " c=" + std::to_string(r.c_pass) + ")";
      return o;
    }
  }
  o.detail = "properties a/b/c hold for all " + std::to_string(checked) + " stages";
  return o;
}

inline Outcome fixed_inclusion_all(const Filtration& F) {
  Outcome o{"fixed-vector-inclusion(n=" + std::to_string(F.n) + ")"};
  for (int i = 1; i <= F.stages(); ++i) {
    if (!verify_fixed_inclusion(F, i)) {
      o.pass = false;
      o.detail = "stage " + std::to_string(i);
      return o;
    }
  }
  o.detail = "all stages";
  return o;
}

// Stage factors: trivial of size j_1, then reflection quotients of the later
// gaps.
inline std::vector<Representation> stage_factors(const GapDecomposition& g) {
  std::vector<Representation> f;
  f.push_back(trivial_rep(g.j_seq[0]));
  for (size_t k = 1; k < g.j_seq.size(); ++k) f.push_back(reflection_quotient(g.j_seq[k]));
  return f;
}

inline Outcome subquotient_characters_all(const Filtration& F) {
  Outcome o{"subquotient-characters(n=" + std::to_string(F.n) + ")"};
  std::vector<Partition> types = partitions_of(F.n);
  for (int i = 1; i <= F.stages(); ++i) {
    SchurExpansion z = z_of_lacunar(F.order[i - 1]);
    Representation ind = induction_product(stage_factors(F.gaps[i - 1]));
    for (const Partition& t : types) {
      Rational from_filtration = subquotient_character(F, i, t);
      Rational from_schur(0);
      for (const auto& [lam, c] : z) from_schur += rat_int(c) * rat_int(mn_character(lam, t));
      Rational from_induction = character(ind, t);
      if (from_filtration != from_schur || from_filtration != from_induction) {
        o.pass = false;
        o.detail = "stage " + std::to_string(i) + " type " + partition_str(t) + ": " +
                   rat_str(from_filtration) + " / " + rat_str(from_schur) + " / " +
                   rat_str(from_induction);
        return o;
      }
    }
  }
  o.detail = "filtration = Schur sum = induction product on every class";
  return o;
}

inline Outcome spectrum_sweep(int n, unsigned long long seed) {
  Outcome o{"spectrum-sweep(n=" + std::to_string(n) + ")"};
  int cases = 0;
  for (const Partition& lam : partitions_of(n)) {
    SpechtModule M = build_specht(lam);
    std::vector<Matrix> t_acts = t_action_matrices(M);
    for (const auto& w : weight_sweep(n, seed)) {
      SpectrumVerification V = verify_spectrum(M, t_acts, w);
      ++cases;
      if (!V.pass()) {
        o.pass = false;
        o.detail = "lambda " + partition_str(lam) + " failed";
        return o;
      }
    }
  }
  o.detail = std::to_string(cases) + " (lambda, weights) cases";
  return o;
}

inline Outcome specht_chain(int n, unsigned long long seed, const Filtration* F = nullptr) {
  Outcome o{"module-annihilator-chain(n=" + std::to_string(n) + ")"};
  Filtration local;
  if (!F) {
    local = build_filtration(n);
    F = &local;
  }
  for (const Partition& lam : partitions_of(n)) {
    SpechtModule M = build_specht(lam);
    SpechtAnnReport r = annihilator_filtration(M, *F, seed);
    if (!r.pass()) {
      o.pass = false;
      o.detail = "lambda " + partition_str(lam) + " (dims=" + std::to_string(r.dims_ok) +
                 " stagnation=" + std::to_string(r.stagnation_ok) +
                 " shift=" + std::to_string(r.shift_ok) +
                 " monomial=" + std::to_string(r.monomial_ok) + ")";
      return o;
    }
  }
  o.detail = "dims, stagnation, shifts, monomials for all partitions";
  return o;
}

// The cyclic-shift module in two guises: dual of the hook Specht module in
// general, and the hook module itself over the rationals.  Both isomorphisms
// are checked with explicit invertible intertwiners, on top of character
// equality.
inline Outcome cyclic_module_isos(int max_p) {
  Outcome o{"cyclic-module-isomorphisms"};
  for (int p = 2; p <= max_p; ++p) {
    Representation Z = reflection_quotient(p);
    Partition hook({p - 1, 1});
    SpechtModule SM = build_specht(hook);
    Representation S = specht_rep(SM);
    // character agreement
    for (const Partition& t : partitions_of(p)) {
      Rational cz = character(Z, t);
      Rational cs = character(S, t);
      if (cz != cs || cz != character(dual_rep(S), t)) {
        o.pass = false;
        o.detail = "character mismatch at p=" + std::to_string(p);
        return o;
      }
    }
    // tabloid of shape (p-1, 1) with second row {v}
    auto tabloid_idx = [&](int v) {
      Tabloid t;
      t.rows.resize(2);
      for (int k = 1; k <= p; ++k)
        if (k != v) t.rows[0].push_back(k);
      t.rows[1].push_back(v);
      return SM.tabloid_index.at(t);
    };
    const int d = p - 1;
    // Intertwiner into the dual: column v reads off polytabloid coefficients
    // at the tabloid labelled v.
    Matrix Mf(d, d);
    for (int v = 1; v <= d; ++v)
      for (int b = 0; b < d; ++b) Mf.at(b, v - 1) = SM.polytabloid_matrix.at(tabloid_idx(v), b);
    bool ok = rank(Mf) == d;
    for (int i = 1; ok && i <= p - 1; ++i) {
      if (Mf * Z.gens[i - 1] != S.gens[i - 1].transpose() * Mf) ok = false;
    }
    if (!ok) {
      o.pass = false;
      o.detail = "dual intertwiner failed at p=" + std::to_string(p);
      return o;
    }
    // Rational-only intertwiner into the module itself: column i is the
    // polytabloid coordinate vector of (tabloid i) - average of all tabloids.
    Matrix G(d, d);
    for (int i = 1; i <= d; ++i) {
      std::vector<Rational> w(SM.num_tabloids(), Rational(0));
      for (int k = 1; k <= p; ++k) w[tabloid_idx(k)] = -Rational(1, p);
      w[tabloid_idx(i)] += 1;
      std::vector<Rational> x = specht_coords(SM, w);
      for (int b = 0; b < d; ++b) G.at(b, i - 1) = x[b];
    }
    ok = rank(G) == d;
    for (int i = 1; ok && i <= p - 1; ++i) {
      if (G * Z.gens[i - 1] != S.gens[i - 1] * G) ok = false;
    }
    if (!ok) {
      o.pass = false;
      o.detail = "rational intertwiner failed at p=" + std::to_string(p);
      return o;
    }
  }
  o.detail = "dual and rational intertwiners invertible for p=2.." + std::to_string(max_p);
  return o;
}

inline Outcome hom_delta(int n) {
  Outcome o{"module-hom-dimensions(n=" + std::to_string(n) + ")"};
  std::vector<Partition> parts = partitions_of(n);
  std::vector<Representation> reps;
  for (const Partition& p : parts) reps.push_back(specht_rep(build_specht(p)));
  for (size_t a = 0; a < reps.size(); ++a)
    for (size_t b = 0; b < reps.size(); ++b) {
      long long want = (a == b) ? 1 : 0;
      if (hom_dimension(reps[a], reps[b]) != want) {
        o.pass = false;
        o.detail = partition_str(parts[a]) + " vs " + partition_str(parts[b]);
        return o;
      }
    }
  o.detail = "delta pattern over all pairs";
  return o;
}

inline Outcome induction_associativity() {
  Outcome o{"induction-associativity"};
  std::vector<std::vector<Representation>> cases;
  cases.push_back({trivial_rep(1), trivial_rep(1), trivial_rep(1)});
  cases.push_back({reflection_quotient(2), trivial_rep(1), reflection_quotient(2)});
  cases.push_back({trivial_rep(2), reflection_quotient(2), trivial_rep(2)});
  cases.push_back({reflection_quotient(3), reflection_quotient(2), trivial_rep(1)});
  cases.push_back({natural_rep(2), reflection_quotient(2), trivial_rep(2)});
  for (const auto& f : cases) {
    int total = f[0].n + f[1].n + f[2].n;
    Representation left = induction_product({induction_product({f[0], f[1]}), f[2]});
    Representation right = induction_product({f[0], induction_product({f[1], f[2]})});
    Representation flat = induction_product(f);
    for (const Partition& t : partitions_of(total)) {
      Rational cl = character(left, t);
      if (cl != character(right, t) || cl != character(flat, t)) {
        o.pass = false;
        o.detail = "grouping changed the character at total " + std::to_string(total);
        return o;
      }
    }
  }
  o.detail = std::to_string(cases.size()) + " bracketings agree at character level";
  return o;
}

inline Outcome mn_vs_traces(int n) {
  Outcome o{"character-recursion-vs-traces(n=" + std::to_string(n) + ")"};
  std::vector<Partition> parts = partitions_of(n);
  for (const Partition& lam : parts) {
    SpechtModule M = build_specht(lam);
    for (const Partition& t : parts) {
      Rational tr = perm_action_matrix(M, perm_of_cycle_type(n, t)).trace();
      if (tr != rat_int(mn_character(lam, t))) {
        o.pass = false;
        o.detail = partition_str(lam) + " at " + partition_str(t);
        return o;
      }
    }
  }
  o.detail = "all partitions x classes";
  return o;
}

inline Outcome global_dimension_sum(int max_n) {
  Outcome o{"coefficient-dimension-sum"};
  for (int n = 1; n <= max_n; ++n) {
    long long total = 0;
    for (const LacunarSet& I : enumerate_lacunar(n))
      for (const auto& [lam, c] : z_of_lacunar(I)) total += c * count_syt(lam);
    if (total != factorial(n)) {
      o.pass = false;
      o.detail = "n=" + std::to_string(n) + ": sum " + std::to_string(total);
      return o;
    }
  }
  o.detail = "sum over stages of coeff*dim equals n! for n=1.." + std::to_string(max_n);
  return o;
}

}  // namespace shuffles::verify
