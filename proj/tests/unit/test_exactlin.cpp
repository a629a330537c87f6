#include "rectrep/exactlin/lattice.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rectrep::exactlin;

TEST(IntVector, ArithmeticAndOrder) {
  IntVector a{1, -2, 3};
  IntVector b{0, 5, -1};
  a += b;
  EXPECT_EQ(a, (IntVector{1, 3, 2}));
  a -= b;
  EXPECT_EQ(a, (IntVector{1, -2, 3}));
  EXPECT_EQ(-a, (IntVector{-1, 2, -3}));
  EXPECT_TRUE(b < a);
  EXPECT_TRUE(IntVector(3).is_zero());
  EXPECT_EQ(IntVector::concat(IntVector{1}, IntVector{2, 3}), (IntVector{1, 2, 3}));
  EXPECT_EQ((IntVector{4, 5, 6}).slice(1, 2), (IntVector{5, 6}));
}

TEST(IntVector, Content) {
  EXPECT_EQ(content(IntVector{6, -9, 12}), 3);
  EXPECT_EQ(content(IntVector{0, 0}), 0);
  EXPECT_EQ(content(IntVector{0, -7}), 7);
}

TEST(IntVector, BigEntriesDoNotOverflow) {
  IntVector v{1};
  for (int i = 0; i < 100; ++i) v *= Integer(1000003);
  Integer expect = 1;
  for (int i = 0; i < 100; ++i) expect *= 1000003;
  EXPECT_EQ(v[0], expect);
}

TEST(RatMatrix, DeterminantRankSolve) {
  auto m = RatMatrix::from_rows({{Rational(2), Rational(1)}, {Rational(1), Rational(3)}});
  EXPECT_EQ(determinant(m), Rational(5));
  EXPECT_EQ(rank(m), 2u);
  const auto x = solve_exact(m, IntVector{3, 4});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], Rational(1));
  EXPECT_EQ((*x)[1], Rational(1));

  auto singular = RatMatrix::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}});
  EXPECT_EQ(rank(singular), 1u);
  EXPECT_EQ(determinant(singular), Rational(0));
  EXPECT_FALSE(solve_exact(singular, IntVector{1, 0}).has_value());
}

TEST(RatMatrix, HalvesStayExact) {
  auto m = RatMatrix::from_rows({{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 5)}});
  EXPECT_EQ(determinant(m), Rational(1, 10) - Rational(1, 12));
  EXPECT_EQ(m * RatMatrix::identity(2), m);
  EXPECT_EQ(m.transpose().at(0, 1), Rational(1, 4));
}

TEST(Hermite, KnownBasis) {
  std::vector<IntVector> gens{IntVector{2, 4}, IntVector{6, 8}};
  const auto h = hermite_basis(gens);
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h[0], (IntVector{2, 0}));
  EXPECT_EQ(h[1], (IntVector{0, 4}));
  EXPECT_TRUE(in_lattice(h, IntVector{8, 12}));
  EXPECT_FALSE(in_lattice(h, IntVector{1, 0}));
  EXPECT_FALSE(in_lattice(h, IntVector{0, 2}));
}

// Index of a full-rank plane lattice equals the gcd of its 2x2 minors.
TEST(Hermite, IndexMatchesMinorGcd) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<IntVector> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(IntVector{d(rng), d(rng)});
    Integer g = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        Integer minor = gens[i][0] * gens[j][1] - gens[i][1] * gens[j][0];
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), minor.get_mpz_t());
      }
    const auto h = hermite_basis(gens);
    if (g == 0) {
      EXPECT_LT(h.size(), 2u);
      continue;
    }
    ASSERT_EQ(h.size(), 2u);
    Integer det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
    EXPECT_EQ(abs(det), g);
    for (const auto& v : gens) EXPECT_TRUE(in_lattice(h, v));
  }
}

TEST(Unimodular, DeterminantIsUnitAndSeeded) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto m = random_unimodular(4, seed, Integer(5));
    EXPECT_TRUE(m.is_integral());
    EXPECT_EQ(abs(determinant(m)), Rational(1));
    EXPECT_EQ(m, random_unimodular(4, seed, Integer(5)));
  }
}
