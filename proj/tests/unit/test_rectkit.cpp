#include "rectrep/charcalc/rep_spec.hpp"
#include "rectrep/exactlin/lattice.hpp"
#include "rectrep/rectkit/detect.hpp"

#include "box_oracle.hpp"

#include <gtest/gtest.h>

using namespace rectrep::rectkit;
using rectrep::charcalc::RepSpec;
using rectrep::liealg::Family;
using rectrep::liealg::SemisimpleAlgebra;
using rectrep::liealg::SimpleType;
using rectrep::liealg::Weight;

namespace {

WeightMultiset plane(const std::vector<box_oracle::P>& pts) {
  WeightMultiset s;
  s.dim = 2;
  for (const auto& p : pts) s.add(IntVector{p[0], p[1]});
  return s;
}

WeightMultiset of_spec(Family f, int r, const std::vector<Weight>& hws) {
  return from_character(rectrep::charcalc::character_of(RepSpec(SemisimpleAlgebra({SimpleType(f, r)}), hws)));
}

}  // namespace

TEST(Detect, Square) {
  const auto s = plane({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  const auto c = detect_rectangular(s);
  ASSERT_TRUE(c);
  EXPECT_TRUE(verify_certificate(s, *c));
  EXPECT_EQ(lengths(*c), (std::vector<std::uint64_t>{2, 2}));
  EXPECT_EQ(is_hypercubic(*c), std::optional<std::uint64_t>(2));
}

TEST(Detect, Reasons) {
  EXPECT_EQ(diagnose_rectangular(plane({})).reason, RectReason::Empty);
  EXPECT_EQ(diagnose_rectangular(plane({{1, 0}})).reason, RectReason::Asymmetric);
  auto doubled = plane({{1, 0}, {-1, 0}});
  doubled.add(IntVector{1, 0});
  EXPECT_EQ(diagnose_rectangular(doubled).reason, RectReason::Multiplicity);
  // A hexagon is symmetric but not a box.
  EXPECT_EQ(diagnose_rectangular(plane({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}})).reason,
            RectReason::BoxMismatch);
  EXPECT_EQ(to_string(RectReason::BoxMismatch), "box mismatch");
}

TEST(Detect, OriginAndLine) {
  const auto origin = detect_rectangular(plane({{0, 0}}));
  ASSERT_TRUE(origin);
  EXPECT_EQ(lengths(*origin), (std::vector<std::uint64_t>{1, 1}));
  const auto line = detect_rectangular(plane({{2, 1}, {0, 0}, {-2, -1}}));
  ASSERT_TRUE(line);
  EXPECT_EQ(lengths(*line), (std::vector<std::uint64_t>{1, 3}));
  EXPECT_FALSE(is_hypercubic(*line));
}

TEST(Detect, AgreesWithBruteForceOnSmallSets) {
  std::size_t sets = 0, boxes = 0;
  box_oracle::for_each_symmetric_set(8, [&](const std::vector<box_oracle::P>& pts) {
    ++sets;
    const auto expect = box_oracle::plane_box_lengths(pts);
    const auto got = detect_rectangular(plane(pts));
    ASSERT_EQ(expect.has_value(), got.has_value());
    if (got) {
      ++boxes;
      EXPECT_EQ(lengths(*got), *expect);
    }
  });
  EXPECT_GT(sets, 10000u);
  EXPECT_GT(boxes, 100u);
}

TEST(Detect, CatalogueExamples) {
  const auto b3 = detect_rectangular(of_spec(Family::B, 3, {Weight{0, 0, 1}}));
  ASSERT_TRUE(b3);
  EXPECT_EQ(lengths(*b3), (std::vector<std::uint64_t>{2, 2, 2}));
  const auto b2 = detect_rectangular(of_spec(Family::B, 2, {Weight{1, 0}, Weight{0, 1}}));
  ASSERT_TRUE(b2);
  EXPECT_EQ(lengths(*b2), (std::vector<std::uint64_t>{3, 3}));
  EXPECT_FALSE(detect_rectangular(of_spec(Family::A, 2, {Weight{1, 0}})));
  EXPECT_FALSE(detect_rectangular(of_spec(Family::B, 3, {Weight{1, 0, 0}})));
  const auto a1 = detect_rectangular(of_spec(Family::A, 1, {Weight{4}, Weight{3}}));
  ASSERT_TRUE(a1);
  EXPECT_EQ(lengths(*a1), (std::vector<std::uint64_t>{9}));
}

TEST(Detect, UnimodularInvarianceAndTranslation) {
  const auto s = of_spec(Family::B, 2, {Weight{1, 0}, Weight{0, 1}});
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto m = rectrep::exactlin::random_unimodular(2, seed, Integer(6));
    const auto c = detect_rectangular(transform(m, s));
    ASSERT_TRUE(c);
    EXPECT_EQ(lengths(*c), (std::vector<std::uint64_t>{3, 3}));
    EXPECT_FALSE(detect_rectangular(translate(s, IntVector{long(seed % 5) + 1, -long(seed % 3)})));
  }
}

TEST(Detect, TamperedCertificateFails) {
  const auto s = of_spec(Family::B, 3, {Weight{0, 0, 1}});
  auto c = *detect_rectangular(s);
  EXPECT_TRUE(verify_certificate(s, c));
  c.degrees[0] += 1;
  EXPECT_FALSE(verify_certificate(s, c));
}

TEST(WeightMultisetOps, MidpointsAndNormalization) {
  const auto s = plane({{1, 0}, {-1, 0}});
  const auto mid = midpoint_set(s);
  EXPECT_EQ(mid.denominator, 2);
  WeightMultiset scaled;
  scaled.dim = 1;
  scaled.denominator = 4;
  scaled.add(IntVector{2});
  scaled.add(IntVector{-6});
  const auto n = normalized(scaled);
  EXPECT_EQ(n.denominator, 2);
  EXPECT_EQ(n.points.count(IntVector{-3}), 1u);
}

TEST(Automorphisms, BoxSymmetryOrder) {
  EXPECT_EQ(automorphism_order({2, 2, 2}), 48);
  EXPECT_EQ(automorphism_order({3, 3}), 8);
  EXPECT_EQ(automorphism_order({2, 3}), 4);
  EXPECT_THROW(automorphism_order({1}), std::invalid_argument);
}
