#include "rectrep/classify/canonical.hpp"
#include "rectrep/classify/census.hpp"
#include "rectrep/classify/decompose.hpp"
#include "rectrep/classify/enumerate.hpp"
#include "rectrep/classify/howe.hpp"
#include "rectrep/rectkit/detect.hpp"

#include <gtest/gtest.h>

using namespace rectrep::classify;
using rectrep::charcalc::character_of;
using rectrep::liealg::Family;
using rectrep::liealg::SimpleType;
using rectrep::liealg::Weight;

namespace {

SemisimpleAlgebra alg(std::vector<SimpleType> ts) { return SemisimpleAlgebra(std::move(ts)); }
const SimpleType kA1(Family::A, 1);

}  // namespace

TEST(Catalogue, LengthsMatchDetection) {
  for (const auto& item : catalogue_items(5, Integer(128))) {
    const auto spec = catalogue_spec(item);
    EXPECT_EQ(rectrep::charcalc::dimension(spec), catalogue_dimension(item)) << item.to_string();
    const auto cert = rectrep::rectkit::detect_rectangular(rectrep::rectkit::from_character(character_of(spec)));
    ASSERT_TRUE(cert) << item.to_string();
    EXPECT_EQ(rectrep::rectkit::lengths(*cert), catalogue_lengths(item)) << item.to_string();
    EXPECT_TRUE(rectrep::charcalc::is_faithful(spec)) << item.to_string();
  }
  EXPECT_EQ(catalogue_lengths(CatalogueItem::b2_std_spin()), (std::vector<std::uint64_t>{3, 3}));
  EXPECT_EQ(catalogue_lengths(CatalogueItem::d2_spin()), (std::vector<std::uint64_t>{2, 2}));
  EXPECT_EQ(catalogue_lengths(CatalogueItem::a1_pair_sym(4, 3)), (std::vector<std::uint64_t>{9}));
}

TEST(Catalogue, KindNames) {
  EXPECT_EQ(kind_name(CatalogueItem::Kind::B2StdSpin), "B2StdSpin");
  EXPECT_EQ(kind_from_name("DmSpin"), CatalogueItem::Kind::DmSpin);
  EXPECT_FALSE(kind_from_name("dmspin"));
  EXPECT_EQ(CatalogueItem::a1_pair_sym(4, 3).to_string(), "A1PairSym(4,3)");
}

TEST(Canonical, FactorOrderIsForgotten) {
  const auto g1 = alg({SimpleType(Family::B, 3), kA1});
  const auto g2 = alg({kA1, SimpleType(Family::B, 3)});
  const RepSpec a(g1, std::vector<Weight>{Weight{0, 0, 1, 1}});
  const RepSpec b(g2, std::vector<Weight>{Weight{1, 0, 0, 1}});
  EXPECT_EQ(spec_key(canonical_form(a)), spec_key(canonical_form(b)));
  const RepSpec c(g2, std::vector<Weight>{Weight{3, 0, 0, 1}});
  EXPECT_NE(spec_key(canonical_form(a)), spec_key(canonical_form(c)));
}

TEST(Decompose, CatalogueItemsComeBack) {
  for (const auto& item : catalogue_items(4, Integer(128))) {
    const auto d = decompose(catalogue_spec(item));
    ASSERT_EQ(d.parts.size(), 1u) << item.to_string();
    EXPECT_EQ(d.parts[0].item, item);
  }
}

TEST(Decompose, ProductOfThree) {
  const auto g = alg({kA1, SimpleType(Family::B, 3), kA1});
  const RepSpec s(g, std::vector<Weight>{Weight{4, 0, 0, 1, 1}, Weight{3, 0, 0, 1, 1}});
  const auto d = decompose(s);
  ASSERT_EQ(d.parts.size(), 3u);
  EXPECT_EQ(d.parts[0].item, CatalogueItem::a1_pair_sym(4, 3));
  EXPECT_EQ(d.parts[1].item, CatalogueItem::bm_spin(3));
  EXPECT_EQ(d.parts[2].item, CatalogueItem::a1_sym(1));
  EXPECT_EQ(reassemble(g, d), character_of(s));
}

TEST(Decompose, D2SpinAcrossFactors) {
  const auto g = alg({kA1, SimpleType(Family::B, 2), kA1});
  // std(1) x spin(B2) x triv + triv x spin x std(3)
  const RepSpec s(g, std::vector<Weight>{Weight{1, 0, 1, 0}, Weight{0, 0, 1, 1}});
  const auto d = decompose(s);
  ASSERT_EQ(d.parts.size(), 2u);
  EXPECT_EQ(d.parts[0].item, CatalogueItem::d2_spin());
  EXPECT_EQ(d.parts[0].factors, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(d.parts[1].item, CatalogueItem::bm_spin(2));
}

TEST(Decompose, Errors) {
  const auto a2 = alg({SimpleType(Family::A, 2)});
  try {
    decompose(RepSpec(a2, std::vector<Weight>{Weight{1, 0}}));
    FAIL();
  } catch (const DecomposeError& e) {
    EXPECT_EQ(e.kind(), DecomposeError::Kind::NotRectangular);
  }
  try {
    decompose(RepSpec(alg({kA1, kA1}), std::vector<Weight>{Weight{1, 0}}));
    FAIL();
  } catch (const DecomposeError& e) {
    EXPECT_EQ(e.kind(), DecomposeError::Kind::NotFaithful);
  }
}

// Faithful rectangular A1 reps: Sym^r (r >= 1) and Sym^r + Sym^(r-1).
TEST(Search, A1MatchesHandCount) {
  for (std::uint64_t dim : {2, 5, 10, 31}) {
    std::size_t expect = 0;
    for (std::uint64_t r = 1; r + 1 <= dim; ++r) ++expect;
    for (std::uint64_t r = 1; 2 * r + 1 <= dim; ++r) ++expect;
    EXPECT_EQ(search_rectangular(alg({kA1}), dim).size(), expect) << dim;
  }
}

TEST(Search, A3OnlyStdPlusDual) {
  const auto found = search_rectangular(alg({SimpleType(Family::A, 3)}), 64);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].highest_weights(), (std::vector<Weight>{Weight{0, 0, 1}, Weight{1, 0, 0}}));
}

TEST(Search, SmallHighestWeightsMonotone) {
  const auto ws = small_highest_weights(SimpleType(Family::G, 2), 64);
  EXPECT_EQ(ws.size(), 5u);  // 1, 7, 14, 27, 64
  EXPECT_THROW(search_rectangular(alg({kA1}), 5000), std::invalid_argument);
}

TEST(Enumerate, BlocksAgreeWithExhaustive) {
  const auto a = enumerate_rectangular(3, 24);
  const auto b = enumerate_rectangular(3, 24, {true});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(spec_key(a[i]), spec_key(b[i]));
}

TEST(Enumerate, BoundsAndEstimate) {
  EXPECT_THROW(enumerate_rectangular(5, 10), BoundsError);
  EXPECT_THROW(enumerate_rectangular(2, 257), BoundsError);
  EXPECT_THROW(enumerate_rectangular(0, 10), BoundsError);
  const auto e = estimate_enumeration(2, 64);
  EXPECT_EQ(e.algebras, algebras_up_to_rank(2).size());
  EXPECT_GT(e.candidates, 0u);
}

TEST(Enumerate, AlgebraCounts) {
  // Rank 1: A1. Rank 2: A2, B2, G2, A1xA1.
  EXPECT_EQ(algebras_up_to_rank(1).size(), 1u);
  EXPECT_EQ(algebras_up_to_rank(2).size(), 5u);
  EXPECT_EQ(simple_types_up_to_rank(3).size(), 7u);  // A1 A2 B2 G2 A3 B3 C3
}

TEST(Verify, SmallRunPassesAndTamperingIsCaught) {
  EXPECT_TRUE(verify_classification(2, 32).passed());
  VerifyOptions opts;
  opts.excluded_kinds.insert(CatalogueItem::Kind::D2Spin);
  const auto r = verify_classification(2, 32, opts);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.only_enumerated.empty());
  EXPECT_TRUE(r.only_catalogue.empty());
}

TEST(Howe, SmallCases) {
  EXPECT_TRUE(verify_howe(kA1, 20).passed());
  EXPECT_EQ(verify_howe(kA1, 20).flagged.size(), 20u);
  const auto f4 = verify_howe(SimpleType(Family::F, 4), 64);
  EXPECT_TRUE(f4.passed());
  EXPECT_EQ(f4.flagged.size(), 1u);  // trivial only
  const auto c3 = verify_howe(SimpleType(Family::C, 3), 64);
  EXPECT_TRUE(c3.passed());
  EXPECT_EQ(c3.flagged.size(), 3u);
}

TEST(Census, PlanesAndLongRoots) {
  const auto p3 = roots_in_plane_census(3);
  EXPECT_TRUE(p3.passed());
  EXPECT_EQ(p3.rich.size(), 3u);
  const auto p4 = roots_in_plane_census(4);
  EXPECT_TRUE(p4.passed());
  EXPECT_EQ(p4.rich.size(), 6u);
  const auto l4 = long_roots_3space_census(4);
  EXPECT_TRUE(l4.passed());
  EXPECT_EQ(l4.standard_rich, 4u);
  EXPECT_EQ(l4.complement_rich, 8u);
  EXPECT_EQ(b_roots(3).size(), 18u);
  EXPECT_EQ(b_long_roots(4).size(), 24u);
}
