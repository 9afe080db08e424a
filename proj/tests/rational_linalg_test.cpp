#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "shuffles/matrix.hpp"
#include "shuffles/poly.hpp"
#include "shuffles/rational.hpp"
#include "shuffles/sparsevec.hpp"

using namespace shuffles;

namespace {

Matrix seeded_matrix(int d, std::mt19937_64& rng, int span = 7) {
  Matrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      m.at(i, j) = Rational(static_cast<long>(rng() % (2 * span + 1)) - span);
  return m;
}

}  // namespace

TEST(Rational, CanonicalStrings) {
  EXPECT_EQ(rat_str(make_rational(3, 6)), "1/2");
  EXPECT_EQ(rat_str(make_rational(-4, 6)), "-2/3");
  EXPECT_EQ(rat_str(make_rational(5, -10)), "-1/2");
  EXPECT_EQ(rat_str(Rational(7)), "7");
  EXPECT_EQ(rat_str(Rational(0)), "0");
}

TEST(Rational, ParseRoundTrip) {
  for (const char* s : {"0", "1", "-3", "2/7", "-11/13", "100000000000000000001/3"}) {
    Rational r = rat_parse(s);
    EXPECT_EQ(rat_str(r), s);
  }
  EXPECT_EQ(rat_parse("4/6"), make_rational(2, 3));
  EXPECT_THROW(rat_parse("1/0"), std::invalid_argument);
  EXPECT_TRUE(is_integer(Rational(5)));
  EXPECT_FALSE(is_integer(make_rational(1, 2)));
}

TEST(UniPoly, DivmodPinned) {
  UniPoly num({Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
  UniPoly den({Rational(-1), Rational(1)});               // x - 1
  auto [q, r] = poly_divmod(num, den);
  EXPECT_EQ(q, UniPoly({Rational(1), Rational(1)}));
  EXPECT_TRUE(r.is_zero());
}

TEST(UniPoly, GcdLcmDerivative) {
  UniPoly a = UniPoly::linear_root(Rational(1)) * UniPoly::linear_root(Rational(2));
  UniPoly b = UniPoly::linear_root(Rational(2)) * UniPoly::linear_root(Rational(3));
  EXPECT_EQ(poly_gcd(a, b), UniPoly::linear_root(Rational(2)));
  UniPoly l = poly_lcm(a, b);
  EXPECT_EQ(l.degree(), 3);
  EXPECT_TRUE(poly_divmod(l, a).second.is_zero());
  EXPECT_TRUE(poly_divmod(l, b).second.is_zero());
  // d/dx (x^2 - 4x + 3) = 2x - 4
  UniPoly p({Rational(3), Rational(-4), Rational(1)});
  EXPECT_EQ(poly_derivative(p), UniPoly({Rational(-4), Rational(2)}));
}

TEST(UniPoly, Squarefree) {
  UniPoly x = UniPoly::x();
  EXPECT_TRUE(poly_squarefree(x));
  EXPECT_FALSE(poly_squarefree(x * x));
  EXPECT_TRUE(poly_squarefree(x * UniPoly::linear_root(Rational(1))));
  EXPECT_FALSE(poly_squarefree(x * x * UniPoly::linear_root(Rational(1))));
}

TEST(UniPoly, EvalAndString) {
  UniPoly p({Rational(1), Rational(0), Rational(2)});  // 2x^2 + 1
  EXPECT_EQ(p.eval(Rational(3)), Rational(19));
  EXPECT_EQ(poly_str(p), "2*x^2 + 1");
  EXPECT_EQ(poly_str(UniPoly::zero()), "0");
}

TEST(Matrix, RankPinned) {
  Matrix m(3, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  m.at(2, 0) = 1;
  EXPECT_EQ(rank(m), 2);
  EXPECT_EQ(rank(Matrix(4, 4)), 0);
  EXPECT_EQ(rank(Matrix::identity(5)), 5);
}

TEST(Matrix, SolveMembershipPinned) {
  std::vector<std::vector<Rational>> rows{{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}};
  auto c = solve_membership(rows, {Rational(2), Rational(0)});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ((*c)[0], Rational(1));
  EXPECT_EQ((*c)[1], Rational(1));
  // (1, 2) is not in the span of (1, 2, 3)-style short systems: here an
  // inconsistent target against a rank-1 family.
  std::vector<std::vector<Rational>> dep{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  EXPECT_FALSE(solve_membership(dep, {Rational(0), Rational(1)}).has_value());
  auto z = solve_membership({}, {Rational(0), Rational(0)});
  ASSERT_TRUE(z.has_value());
  EXPECT_TRUE(z->empty());
}

TEST(Matrix, NullspaceKillsMatrix) {
  std::mt19937_64 rng(17);
  Matrix m(4, 6);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 6; ++j) m.at(i, j) = Rational(static_cast<long>(rng() % 5) - 2);
  auto basis = nullspace(m);
  EXPECT_EQ(static_cast<int>(basis.size()), 6 - rank(m));
  for (const auto& v : basis) {
    auto mv = m * v;
    for (const auto& x : mv) EXPECT_EQ(x, Rational(0));
  }
}

TEST(Matrix, CharPolyPinned) {
  Matrix m(2, 2);
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  // x^2 - 1
  EXPECT_EQ(char_poly(m), UniPoly({Rational(-1), Rational(0), Rational(1)}));
  EXPECT_EQ(char_poly(Matrix::identity(3)),
            UniPoly({Rational(-1), Rational(3), Rational(-3), Rational(1)}));
}

TEST(Matrix, CharPolyMatchesCofactorOracle) {
  std::mt19937_64 rng(23);
  for (int d = 1; d <= 4; ++d)
    for (int rep = 0; rep < 4; ++rep) {
      Matrix m = seeded_matrix(d, rng);
      EXPECT_EQ(char_poly(m), oracle::charpoly_leibniz(m));
    }
}

TEST(Matrix, CayleyHamilton) {
  std::mt19937_64 rng(29);
  for (int d = 2; d <= 5; ++d) {
    Matrix m = seeded_matrix(d, rng, 4);
    EXPECT_TRUE(poly_eval_matrix(char_poly(m), m).is_zero());
  }
}

TEST(Matrix, MinPolyPinned) {
  Matrix diag(3, 3);
  diag.at(0, 0) = 2;
  diag.at(1, 1) = 2;
  diag.at(2, 2) = 3;
  EXPECT_EQ(min_poly(diag), UniPoly::linear_root(Rational(2)) * UniPoly::linear_root(Rational(3)));
  Matrix jordan(2, 2);
  jordan.at(0, 1) = 1;
  EXPECT_EQ(min_poly(jordan), UniPoly::x() * UniPoly::x());
  EXPECT_EQ(min_poly(Matrix::identity(4)), UniPoly::linear_root(Rational(1)));
}

TEST(Matrix, MinPolyDividesCharPoly) {
  std::mt19937_64 rng(31);
  for (int d = 2; d <= 5; ++d) {
    Matrix m = seeded_matrix(d, rng, 3);
    UniPoly mp = min_poly(m);
    EXPECT_TRUE(poly_eval_matrix(mp, m).is_zero());
    EXPECT_TRUE(poly_divmod(char_poly(m), mp).second.is_zero());
  }
}

TEST(Matrix, BlockTriangularCharPolyFactors) {
  std::mt19937_64 rng(37);
  Matrix a = seeded_matrix(2, rng), b = seeded_matrix(3, rng);
  Matrix m(5, 5);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(2 + i, 2 + j) = b.at(i, j);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, 2 + j) = Rational(static_cast<long>(rng() % 5) - 2);
  EXPECT_EQ(char_poly(m), char_poly(a) * char_poly(b));
}

TEST(Matrix, InverseRoundTrip) {
  std::mt19937_64 rng(41);
  for (int d = 1; d <= 4; ++d) {
    Matrix m = seeded_matrix(d, rng);
    while (rank(m) < d) m = seeded_matrix(d, rng);
    EXPECT_EQ(m * inverse(m), Matrix::identity(d));
  }
  Matrix sing(2, 2);
  sing.at(0, 0) = 1;
  sing.at(1, 0) = 2;
  EXPECT_THROW(inverse(sing), std::invalid_argument);
}

TEST(SparseVec, TermsAndAxpy) {
  SparseVec v = sparse_from_terms({{3, Rational(2)}, {1, Rational(1)}, {3, Rational(-2)}});
  EXPECT_EQ(v.support(), 1u);
  EXPECT_EQ(v.leading(), 1);
  EXPECT_EQ(v.coeff(1), Rational(1));
  EXPECT_EQ(v.coeff(3), Rational(0));
  SparseVec w = sparse_from_terms({{1, Rational(-1)}, {2, Rational(5)}});
  sparse_axpy(v, Rational(1), w);
  EXPECT_TRUE(v.coeff(1) == 0);
  EXPECT_EQ(v.coeff(2), Rational(5));
}

TEST(SparseVec, EchelonMembershipAndCoefficients) {
  Echelon e;
  SparseVec a = sparse_from_terms({{0, Rational(1)}, {1, Rational(1)}});
  SparseVec b = sparse_from_terms({{1, Rational(1)}, {2, Rational(1)}});
  EXPECT_TRUE(e.insert(a));
  EXPECT_TRUE(e.insert(b));
  EXPECT_FALSE(e.insert(sparse_from_terms({{0, Rational(1)}, {2, Rational(-1)}})));  // a - b
  EXPECT_EQ(e.rank(), 2u);
  SparseVec probe = sparse_from_terms({{0, Rational(2)}, {1, Rational(5)}, {2, Rational(3)}});
  std::vector<std::pair<size_t, Rational>> coeffs;
  SparseVec rem = e.reduce(probe, e.rank(), &coeffs);
  EXPECT_TRUE(rem.is_zero());
  // Reconstruct the probe from the recorded row multiples.
  SparseVec back;
  for (auto [pos, c] : coeffs) sparse_axpy(back, c, e.rows[pos]);
  EXPECT_TRUE(back == probe);
  // Prefix membership: a vector from the second row is not in the first row's span.
  EXPECT_TRUE(e.member(sparse_from_terms({{0, Rational(3)}, {1, Rational(3)}}), 1));
  EXPECT_FALSE(e.member(b, 1));
}
