#include <gtest/gtest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "shuffles/filtration.hpp"
#include "shuffles/verify.hpp"

using namespace shuffles;

TEST(FSpace, PinnedBasesAtN3) {
  // Empty set: both adjacent swaps act as gluings, one orbit of size 6.
  FSpace f0 = f_space(3, {});
  EXPECT_EQ(f0.basis.size(), 1u);
  EXPECT_EQ(f0.basis[0].support_size(), 6u);
  EXPECT_EQ(f0.gamma_order, 6);
  // {1}: only s_2 glues; three cosets of size 2.
  FSpace f1 = f_space(3, {1});
  EXPECT_EQ(f1.non_shadow_set, (std::vector<int>{2}));
  EXPECT_EQ(f1.basis.size(), 3u);
  for (const AlgEl& v : f1.basis) EXPECT_EQ(v.support_size(), 2u);
  // {2}: nothing glues; six singletons.
  FSpace f2 = f_space(3, {2});
  EXPECT_TRUE(f2.non_shadow_set.empty());
  EXPECT_EQ(f2.basis.size(), 6u);
  for (const AlgEl& v : f2.basis) EXPECT_EQ(v.support_size(), 1u);
}

TEST(FSpace, OrbitSumsAreRightInvariant) {
  for (int n = 3; n <= 5; ++n)
    for (const LacunarSet& I : enumerate_lacunar(n)) {
      FSpace fs = f_space(n, I.elems);
      for (int j : fs.non_shadow_set) {
        AlgEl s = alg_perm(adjacent_transposition(n, j));
        for (const AlgEl& v : fs.basis) EXPECT_TRUE(mul(v, s) == v);
      }
    }
}

TEST(FSpace, BasisSizeMatchesKernelOracle) {
  // The span of the orbit sums is the full right-fixed subspace: the sums are
  // independent (disjoint supports) and their count matches the brute-force
  // kernel dimension.
  for (int n = 2; n <= 5; ++n)
    for (const LacunarSet& I : enumerate_lacunar(n)) {
      FSpace fs = f_space(n, I.elems);
      EXPECT_EQ(static_cast<long long>(fs.basis.size()), oracle::fixed_space_dim(n, I.elems))
          << "n=" << n << " I=" << set_str(I.elems);
      EXPECT_EQ(static_cast<long long>(fs.basis.size()), factorial(n) / fs.gamma_order);
    }
}

TEST(Filtration, StageRanksPinnedAtN3) {
  Filtration F = build_filtration(3);
  ASSERT_EQ(F.stages(), 3);
  EXPECT_EQ(F.stage_rank, (std::vector<size_t>{0, 1, 3, 6}));
  EXPECT_EQ(F.stage_dim(1), 1);
  EXPECT_EQ(F.stage_dim(2), 2);
  EXPECT_EQ(F.stage_dim(3), 3);
  EXPECT_EQ(subquotient_rank_formula(3, LacunarSet(3, {})), 1);
  EXPECT_EQ(subquotient_rank_formula(3, LacunarSet(3, {1})), 2);
  EXPECT_EQ(subquotient_rank_formula(3, LacunarSet(3, {2})), 3);
}

TEST(Filtration, RanksMatchFormula) {
  for (int n = 1; n <= 5; ++n) {
    Filtration F = build_filtration(n);
    verify::Outcome o = verify::filtration_ranks(F);
    EXPECT_TRUE(o.pass) << o.detail;
  }
}

TEST(Filtration, RightStabilityExhaustive) {
  for (int n = 2; n <= 5; ++n) {
    Filtration F = build_filtration(n);
    verify::Outcome o = verify::stability(F, 1.0, 7);
    EXPECT_TRUE(o.pass) << o.detail;
  }
}

TEST(Filtration, StabilityReportCounts) {
  Filtration F = build_filtration(4);
  StabilityReport r = verify_right_stability(F, 3, 1);
  EXPECT_EQ(r.i, 3);
  EXPECT_EQ(r.ell, 1);
  EXPECT_EQ(r.m, m_vector(4, {2})[0]);
  EXPECT_EQ(r.vectors, static_cast<int>(F.stage_orbit_sums[2].size()));
  EXPECT_TRUE(r.pass());
  EXPECT_THROW(verify_right_stability(F, 0, 1), std::invalid_argument);
  EXPECT_THROW(verify_right_stability(F, 1, 9), std::invalid_argument);
}

TEST(Filtration, SampleIsDeterministicAndSized) {
  Filtration F = build_filtration(5);
  auto s1 = verify::stability_sample(F, 0.2, 42);
  auto s2 = verify::stability_sample(F, 0.2, 42);
  EXPECT_EQ(s1, s2);
  size_t total = static_cast<size_t>(F.stages()) * 5;
  EXPECT_EQ(s1.size(), (total + 4) / 5);  // ceil(total / 5)
  auto full = verify::stability_sample(F, 1.0, 0);
  EXPECT_EQ(full.size(), total);
  auto other = verify::stability_sample(F, 0.2, 43);
  EXPECT_NE(s1, other);  // different seed reshuffles
}

TEST(Nabla, PinnedAtN3) {
  LacunarSet I(3, {2});
  // Blocks are [1,1] and [2,3]; the anchor ranges over {2, 3}.
  AlgEl n2 = nabla(3, I, {2});
  EXPECT_TRUE(n2 == alg_unit(3));
  AlgEl n3 = nabla(3, I, {3});
  EXPECT_TRUE(n3 == alg_perm(cyc(3, {2, 3})));
  // {2} is stage 3; summing the anchor over its block drops into the second
  // filtration step, because id + s_2 is an orbit sum for {1}.
  Filtration F = build_filtration(3);
  EXPECT_TRUE(F.ech.member(to_sparse(n2 + n3), F.stage_rank[2]));
  EXPECT_FALSE(F.ech.member(to_sparse(n2), F.stage_rank[2]));
  EXPECT_FALSE(F.ech.member(to_sparse(n2 + n3), F.stage_rank[1]));
  EXPECT_THROW(nabla(3, I, {1}), std::invalid_argument);   // anchor outside its block
  EXPECT_THROW(nabla(3, I, {2, 3}), std::invalid_argument);  // too many anchors
}

TEST(Nabla, PropertiesAllStages) {
  for (int n = 2; n <= 5; ++n) {
    Filtration F = build_filtration(n);
    verify::Outcome o = verify::nabla_properties_all(F, 7);
    EXPECT_TRUE(o.pass) << "n=" << n << ": " << o.detail;
  }
}

TEST(Nabla, ReportFieldsAtN4) {
  Filtration F = build_filtration(4);
  // Stage 5 is {1,3}: three blocks with j = (0, 2, 2).
  NablaReport r = verify_nabla_properties(F, 5, 11);
  EXPECT_TRUE(r.pass());
  EXPECT_FALSE(r.sampled);
  EXPECT_GT(r.a_checked, 0);
  EXPECT_GT(r.c_checked, 0);
}

TEST(Filtration, FixedInclusionSmall) {
  for (int n = 2; n <= 4; ++n) {
    Filtration F = build_filtration(n);
    verify::Outcome o = verify::fixed_inclusion_all(F);
    EXPECT_TRUE(o.pass) << o.detail;
  }
}

TEST(Subquotient, CharacterPinnedAtN3) {
  Filtration F = build_filtration(3);
  // Stage 1 carries the trivial module, stage 2 the standard 2-dimensional
  // one, stage 3 the rest of the regular module.
  EXPECT_EQ(subquotient_character(F, 1, Partition({1, 1, 1})), Rational(1));
  EXPECT_EQ(subquotient_character(F, 1, Partition({3})), Rational(1));
  EXPECT_EQ(subquotient_character(F, 2, Partition({1, 1, 1})), Rational(2));
  EXPECT_EQ(subquotient_character(F, 2, Partition({2, 1})), Rational(0));
  EXPECT_EQ(subquotient_character(F, 2, Partition({3})), Rational(-1));
  EXPECT_EQ(subquotient_character(F, 3, Partition({1, 1, 1})), Rational(3));
}

TEST(Subquotient, CharacterIdentitiesAllStages) {
  for (int n = 2; n <= 5; ++n) {
    Filtration F = build_filtration(n);
    verify::Outcome o = verify::subquotient_characters_all(F);
    EXPECT_TRUE(o.pass) << "n=" << n << ": " << o.detail;
  }
}

TEST(Subquotient, StageFactorShapes) {
  GapDecomposition g = gap_decomposition(LacunarSet(5, {2, 4}));
  auto factors = verify::stage_factors(g);
  ASSERT_EQ(factors.size(), 3u);
  EXPECT_EQ(factors[0].n, 1);  // trivial of the first gap
  EXPECT_EQ(factors[0].dim, 1);
  EXPECT_EQ(factors[1].n, 2);  // reflection quotient of gap 2
  EXPECT_EQ(factors[1].dim, 1);
  EXPECT_EQ(factors[2].n, 2);
}
