#include "rectrep/liealg/orthogonal.hpp"
#include "rectrep/liealg/root_system.hpp"
#include "rectrep/liealg/weyl.hpp"

#include <gtest/gtest.h>

using namespace rectrep::liealg;
using rectrep::exactlin::Integer;
using rectrep::exactlin::Rational;

namespace {

Weight rho(const SemisimpleAlgebra& g) {
  Weight w(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) w[i] = 1;
  return w;
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST(SimpleType, Canonicalization) {
  EXPECT_EQ(SimpleType(Family::B, 1), SimpleType(Family::A, 1));
  EXPECT_EQ(SimpleType(Family::C, 1), SimpleType(Family::A, 1));
  EXPECT_EQ(SimpleType(Family::C, 2), SimpleType(Family::B, 2));
  EXPECT_EQ(SimpleType(Family::D, 3), SimpleType(Family::A, 3));
  EXPECT_EQ(SimpleType(Family::C, 3).name(), "C3");
  EXPECT_THROW(SimpleType(Family::D, 2), InvalidType);
  EXPECT_THROW(SimpleType(Family::E, 5), InvalidType);
  EXPECT_THROW(SimpleType(Family::G, 3), InvalidType);
  EXPECT_THROW(SimpleType(Family::A, 0), InvalidType);
  EXPECT_EQ(family_from_letter('d'), Family::D);
  EXPECT_THROW(family_from_letter('x'), std::invalid_argument);
}

TEST(SimpleType, CoordinateMaps) {
  // C2 entered: w1 is the 4-dim rep, which is the B2 spin w2.
  const auto c2 = canonicalize(Family::C, 2);
  EXPECT_EQ(to_canonical_coords(c2, Weight{1, 0}), (Weight{0, 1}));
  // D3 entered: w1 (6-dim) is A3 w2; the half-spins are A3 w1 / w3.
  const auto d3 = canonicalize(Family::D, 3);
  EXPECT_EQ(to_canonical_coords(d3, Weight{1, 0, 0}), (Weight{0, 1, 0}));
  const auto b1 = canonicalize(Family::B, 1);
  EXPECT_EQ(to_canonical_coords(b1, Weight{1}), (Weight{1}));
}

TEST(RootSystem, CartanB2AndG2) {
  EXPECT_EQ(cartan_matrix(SimpleType(Family::B, 2)), (IntMatrix{{2, -1}, {-2, 2}}));
  EXPECT_EQ(cartan_matrix(SimpleType(Family::G, 2)), (IntMatrix{{2, -3}, {-1, 2}}));
  const auto a3 = cartan_matrix(SimpleType(Family::A, 3));
  EXPECT_EQ(a3, (IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
}

TEST(RootSystem, PositiveRootCounts) {
  struct Case {
    Family f;
    int r;
    std::size_t count;
  };
  const Case cases[] = {{Family::A, 4, 10}, {Family::B, 3, 9},  {Family::C, 3, 9},  {Family::D, 4, 12},
                        {Family::D, 5, 20}, {Family::G, 2, 6},  {Family::F, 4, 24}, {Family::E, 6, 36},
                        {Family::E, 7, 63}, {Family::E, 8, 120}};
  for (const auto& c : cases) {
    const SimpleType t(c.f, c.r);
    EXPECT_EQ(positive_roots(t).size(), c.count) << t.name();
    EXPECT_EQ(positive_roots_simple_coords(t).size(), c.count) << t.name();
  }
}

TEST(Weyl, GroupOrders) {
  EXPECT_EQ(weyl_group_order(SimpleType(Family::A, 4)), factorial(5));
  EXPECT_EQ(weyl_group_order(SimpleType(Family::B, 4)), Integer(16) * factorial(4));
  EXPECT_EQ(weyl_group_order(SimpleType(Family::D, 5)), Integer(16) * factorial(5));
  EXPECT_EQ(weyl_group_order(SimpleType(Family::G, 2)), 12);
  EXPECT_EQ(weyl_group_order(SimpleType(Family::F, 4)), 1152);
  EXPECT_EQ(weyl_group_order(SimpleType(Family::E, 6)), 51840);
  EXPECT_EQ(weyl_group_order(SimpleType(Family::E, 8)), Integer("696729600"));
}

// The orbit of a regular weight is a free W-orbit.
TEST(Weyl, RegularOrbitHasGroupOrder) {
  for (const auto& t : {SimpleType(Family::A, 3), SimpleType(Family::B, 3), SimpleType(Family::C, 3),
                        SimpleType(Family::D, 4), SimpleType(Family::G, 2), SimpleType(Family::F, 4)}) {
    const SemisimpleAlgebra g({t});
    EXPECT_EQ(Integer(weyl_orbit(g, rho(g)).size()), weyl_group_order(t)) << t.name();
  }
  const SemisimpleAlgebra g({SimpleType(Family::A, 1), SimpleType(Family::B, 2)});
  EXPECT_EQ(weyl_orbit(g, rho(g)).size(), 16u);
}

TEST(Weyl, OrbitsAndDominance) {
  const SemisimpleAlgebra b3({SimpleType(Family::B, 3)});
  EXPECT_EQ(weyl_orbit(b3, Weight{1, 0, 0}).size(), 6u);
  EXPECT_EQ(weyl_orbit(b3, Weight{0, 0, 1}).size(), 8u);
  for (const auto& w : weyl_orbit(b3, Weight{0, 1, 0})) EXPECT_EQ(dominant_conjugate(b3, w), (Weight{0, 1, 0}));
  EXPECT_TRUE(is_dominant(Weight{0, 2, 1}));
  EXPECT_FALSE(is_dominant(Weight{1, -1}));
  // Reflection is an involution.
  const Weight w{3, -2, 1};
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(reflect(b3, reflect(b3, w, i), i), w);
}

TEST(Weyl, DualHighestWeight) {
  const SemisimpleAlgebra a3({SimpleType(Family::A, 3)});
  EXPECT_EQ(dual_highest_weight(a3, Weight{1, 0, 0}), (Weight{0, 0, 1}));
  EXPECT_EQ(dual_highest_weight(a3, Weight{2, 1, 0}), (Weight{0, 1, 2}));
  const SemisimpleAlgebra d5({SimpleType(Family::D, 5)});
  EXPECT_EQ(dual_highest_weight(d5, Weight{0, 0, 0, 0, 1}), (Weight{0, 0, 0, 1, 0}));
  const SemisimpleAlgebra d4({SimpleType(Family::D, 4)});
  EXPECT_EQ(dual_highest_weight(d4, Weight{0, 0, 0, 1}), (Weight{0, 0, 0, 1}));
  const SemisimpleAlgebra e6({SimpleType(Family::E, 6)});
  EXPECT_EQ(dual_highest_weight(e6, Weight{1, 0, 0, 0, 0, 0}), (Weight{0, 0, 0, 0, 0, 1}));
}

TEST(RootSystem, RootLattice) {
  const SimpleType a2(Family::A, 2);
  EXPECT_TRUE(in_root_lattice(a2, Weight{1, 1}));
  EXPECT_FALSE(in_root_lattice(a2, Weight{1, 0}));
  const auto c = simple_root_coords(a2, Weight{1, 0});
  EXPECT_EQ(c[0], Rational(2, 3));
  EXPECT_EQ(c[1], Rational(1, 3));
  const SimpleType b3(Family::B, 3);
  EXPECT_TRUE(in_root_lattice(b3, Weight{1, 0, 0}));
  EXPECT_FALSE(in_root_lattice(b3, Weight{0, 0, 1}));
}

TEST(Orthogonal, SpinAndStd) {
  const SimpleType b3(Family::B, 3);
  const auto s = to_orthogonal(b3, Weight{0, 0, 1});
  EXPECT_EQ(s.coords, (std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
  const SimpleType a2(Family::A, 2);
  const auto f = to_orthogonal(a2, Weight{1, 0});
  EXPECT_EQ(f.coords, (std::vector<Rational>{Rational(2, 3), Rational(-1, 3), Rational(-1, 3)}));
  EXPECT_THROW(to_orthogonal(SimpleType(Family::G, 2), Weight{1, 0}), std::invalid_argument);
}
