#include "rectrep/classify/catalogue.hpp"

#include <stdexcept>

namespace rectrep::classify {

using liealg::Family;
using liealg::SimpleType;
using liealg::Weight;

CatalogueItem CatalogueItem::a1_sym(int r) {
  if (r < 1) throw std::out_of_range("A1Sym needs r >= 1");
  return {Kind::A1Sym, r, 0};
}

CatalogueItem CatalogueItem::a1_pair_sym(int r1, int r2) {
  if (r1 < 0 || r2 < 0 || (r1 - r2 != 1 && r2 - r1 != 1)) throw std::out_of_range("A1PairSym needs |r1 - r2| = 1");
  return {Kind::A1PairSym, std::max(r1, r2), std::min(r1, r2)};
}

CatalogueItem CatalogueItem::d2_spin() { return {Kind::D2Spin, 0, 0}; }
CatalogueItem CatalogueItem::b2_std_spin() { return {Kind::B2StdSpin, 0, 0}; }

CatalogueItem CatalogueItem::bm_spin(int m) {
  if (m < 2) throw std::out_of_range("BmSpin needs m >= 2");
  return {Kind::BmSpin, m, 0};
}

CatalogueItem CatalogueItem::a3_std_dual() { return {Kind::A3StdDual, 0, 0}; }
CatalogueItem CatalogueItem::d4_spin() { return {Kind::D4Spin, 0, 0}; }
CatalogueItem CatalogueItem::d4_std_spin_plus() { return {Kind::D4StdSpinPlus, 0, 0}; }
CatalogueItem CatalogueItem::d4_std_spin_minus() { return {Kind::D4StdSpinMinus, 0, 0}; }

CatalogueItem CatalogueItem::dm_spin(int m) {
  if (m < 5) throw std::out_of_range("DmSpin needs m >= 5");
  return {Kind::DmSpin, m, 0};
}

std::string CatalogueItem::to_string() const {
  switch (kind_) {
    case Kind::A1Sym: return "A1Sym(" + std::to_string(p1_) + ")";
    case Kind::A1PairSym: return "A1PairSym(" + std::to_string(p1_) + "," + std::to_string(p2_) + ")";
    case Kind::D2Spin: return "D2Spin";
    case Kind::B2StdSpin: return "B2StdSpin";
    case Kind::BmSpin: return "BmSpin(" + std::to_string(p1_) + ")";
    case Kind::A3StdDual: return "A3StdDual";
    case Kind::D4Spin: return "D4Spin";
    case Kind::D4StdSpinPlus: return "D4StdSpinPlus";
    case Kind::D4StdSpinMinus: return "D4StdSpinMinus";
    case Kind::DmSpin: return "DmSpin(" + std::to_string(p1_) + ")";
  }
  return "?";
}

std::size_t CatalogueItem::rank() const {
  switch (kind_) {
    case Kind::A1Sym:
    case Kind::A1PairSym: return 1;
    case Kind::D2Spin:
    case Kind::B2StdSpin: return 2;
    case Kind::A3StdDual: return 3;
    case Kind::D4Spin:
    case Kind::D4StdSpinPlus:
    case Kind::D4StdSpinMinus: return 4;
    case Kind::BmSpin:
    case Kind::DmSpin: return static_cast<std::size_t>(p1_);
  }
  return 0;
}

std::string kind_name(CatalogueItem::Kind kind) {
  using Kind = CatalogueItem::Kind;
  switch (kind) {
    case Kind::A1Sym: return "A1Sym";
    case Kind::A1PairSym: return "A1PairSym";
    case Kind::D2Spin: return "D2Spin";
    case Kind::B2StdSpin: return "B2StdSpin";
    case Kind::BmSpin: return "BmSpin";
    case Kind::A3StdDual: return "A3StdDual";
    case Kind::D4Spin: return "D4Spin";
    case Kind::D4StdSpinPlus: return "D4StdSpinPlus";
    case Kind::D4StdSpinMinus: return "D4StdSpinMinus";
    case Kind::DmSpin: return "DmSpin";
  }
  return "?";
}

std::optional<CatalogueItem::Kind> kind_from_name(std::string_view name) {
  using Kind = CatalogueItem::Kind;
  for (Kind k : {Kind::A1Sym, Kind::A1PairSym, Kind::D2Spin, Kind::B2StdSpin, Kind::BmSpin, Kind::A3StdDual,
                 Kind::D4Spin, Kind::D4StdSpinPlus, Kind::D4StdSpinMinus, Kind::DmSpin})
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

namespace {

Weight omega(int m, int i, long coeff = 1) {
  Weight w(static_cast<std::size_t>(m));
  w[static_cast<std::size_t>(i - 1)] = coeff;
  return w;
}

Weight scalar(long r) { return Weight{r}; }

}  // namespace

RepSpec catalogue_spec(const CatalogueItem& item) {
  using Kind = CatalogueItem::Kind;
  const SemisimpleAlgebra a1({SimpleType(Family::A, 1)});
  switch (item.kind()) {
    case Kind::A1Sym: return RepSpec(a1, std::vector<Weight>{scalar(item.p1())});
    case Kind::A1PairSym: return RepSpec(a1, std::vector<Weight>{scalar(item.p1()), scalar(item.p2())});
    case Kind::D2Spin:
      return RepSpec(SemisimpleAlgebra({SimpleType(Family::A, 1), SimpleType(Family::A, 1)}),
                     std::vector<Weight>{Weight{1, 0}, Weight{0, 1}});
    case Kind::B2StdSpin:
      return RepSpec(SemisimpleAlgebra({SimpleType(Family::B, 2)}), std::vector<Weight>{omega(2, 1), omega(2, 2)});
    case Kind::BmSpin:
      return RepSpec(SemisimpleAlgebra({SimpleType(Family::B, item.p1())}),
                     std::vector<Weight>{omega(item.p1(), item.p1())});
    case Kind::A3StdDual:
      return RepSpec(SemisimpleAlgebra({SimpleType(Family::A, 3)}), std::vector<Weight>{omega(3, 1), omega(3, 3)});
    case Kind::D4Spin:
      return RepSpec(SemisimpleAlgebra({SimpleType(Family::D, 4)}), std::vector<Weight>{omega(4, 3), omega(4, 4)});
    case Kind::D4StdSpinPlus:
      return RepSpec(SemisimpleAlgebra({SimpleType(Family::D, 4)}), std::vector<Weight>{omega(4, 1), omega(4, 4)});
    case Kind::D4StdSpinMinus:
      return RepSpec(SemisimpleAlgebra({SimpleType(Family::D, 4)}), std::vector<Weight>{omega(4, 1), omega(4, 3)});
    case Kind::DmSpin: {
      const int m = item.p1();
      return RepSpec(SemisimpleAlgebra({SimpleType(Family::D, m)}), std::vector<Weight>{omega(m, m - 1), omega(m, m)});
    }
  }
  throw std::logic_error("unhandled catalogue item");
}

Integer catalogue_dimension(const CatalogueItem& item) {
  using Kind = CatalogueItem::Kind;
  Integer two_m = 1;
  switch (item.kind()) {
    case Kind::A1Sym: return item.p1() + 1;
    case Kind::A1PairSym: return item.p1() + item.p2() + 2;
    case Kind::D2Spin: return 4;
    case Kind::B2StdSpin: return 9;
    case Kind::A3StdDual: return 8;
    case Kind::D4Spin:
    case Kind::D4StdSpinPlus:
    case Kind::D4StdSpinMinus: return 16;
    case Kind::BmSpin:
    case Kind::DmSpin:
      mpz_mul_2exp(two_m.get_mpz_t(), two_m.get_mpz_t(), static_cast<mp_bitcnt_t>(item.p1()));
      return two_m;
  }
  return 0;
}

std::vector<std::uint64_t> catalogue_lengths(const CatalogueItem& item) {
  using Kind = CatalogueItem::Kind;
  switch (item.kind()) {
    case Kind::A1Sym: return {static_cast<std::uint64_t>(item.p1()) + 1};
    case Kind::A1PairSym: return {static_cast<std::uint64_t>(item.p1() + item.p2()) + 2};
    case Kind::D2Spin: return {2, 2};
    case Kind::B2StdSpin: return {3, 3};
    case Kind::A3StdDual: return {2, 2, 2};
    default: return std::vector<std::uint64_t>(item.rank(), 2);
  }
}

std::vector<CatalogueItem> catalogue_items(std::size_t max_rank, const Integer& max_dim) {
  std::vector<CatalogueItem> out;
  auto keep = [&](const CatalogueItem& it) {
    if (it.rank() <= max_rank && catalogue_dimension(it) <= max_dim) out.push_back(it);
  };
  if (max_rank >= 1) {
    for (int r = 1; r + 1 <= max_dim; ++r) keep(CatalogueItem::a1_sym(r));
    for (int r = 0; 2 * r + 3 <= max_dim; ++r) keep(CatalogueItem::a1_pair_sym(r + 1, r));
  }
  keep(CatalogueItem::d2_spin());
  keep(CatalogueItem::b2_std_spin());
  for (int m = 2; static_cast<std::size_t>(m) <= max_rank; ++m) keep(CatalogueItem::bm_spin(m));
  keep(CatalogueItem::a3_std_dual());
  keep(CatalogueItem::d4_spin());
  keep(CatalogueItem::d4_std_spin_plus());
  keep(CatalogueItem::d4_std_spin_minus());
  for (int m = 5; static_cast<std::size_t>(m) <= max_rank; ++m) keep(CatalogueItem::dm_spin(m));
  return out;
}

}  // namespace rectrep::classify
