#pragma once

#include "rectrep/charcalc/rep_spec.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <string>
#include <vector>

namespace rectrep::classify {

using charcalc::RepSpec;
using exactlin::Integer;
using liealg::SemisimpleAlgebra;

// Faithful indecomposable hypercubic representations.
class CatalogueItem {
 public:
  enum class Kind {
    A1Sym,           // (A1, Sym^r), r >= 1
    A1PairSym,       // (A1, Sym^r1 + Sym^r2), |r1 - r2| = 1, stored with r1 > r2
    D2Spin,          // (A1 x A1, Std x 1 + 1 x Std)
    B2StdSpin,       // (B2, Std + Spin)
    BmSpin,          // (B_m, Spin), m >= 2
    A3StdDual,       // (A3, Std + Std^dual)
    D4Spin,          // (D4, Spin+ + Spin-)
    D4StdSpinPlus,   // (D4, Std + Spin+)
    D4StdSpinMinus,  // (D4, Std + Spin-)
    DmSpin,          // (D_m, Spin+ + Spin-), m >= 5
  };

  static CatalogueItem a1_sym(int r);
  static CatalogueItem a1_pair_sym(int r1, int r2);
  static CatalogueItem d2_spin();
  static CatalogueItem b2_std_spin();
  static CatalogueItem bm_spin(int m);
  static CatalogueItem a3_std_dual();
  static CatalogueItem d4_spin();
  static CatalogueItem d4_std_spin_plus();
  static CatalogueItem d4_std_spin_minus();
  static CatalogueItem dm_spin(int m);

  Kind kind() const { return kind_; }
  int p1() const { return p1_; }
  int p2() const { return p2_; }

  // "A1PairSym(4,3)"
  std::string to_string() const;
  std::size_t rank() const;

  friend bool operator==(const CatalogueItem&, const CatalogueItem&) = default;
  friend auto operator<=>(const CatalogueItem&, const CatalogueItem&) = default;

 private:
  CatalogueItem(Kind k, int p1, int p2) : kind_(k), p1_(p1), p2_(p2) {}
  Kind kind_;
  int p1_;
  int p2_;
};

// "B2StdSpin"; the inverse is case-sensitive.
std::string kind_name(CatalogueItem::Kind kind);
std::optional<CatalogueItem::Kind> kind_from_name(std::string_view name);

RepSpec catalogue_spec(const CatalogueItem& item);
Integer catalogue_dimension(const CatalogueItem& item);

// Closed-form lengths, ascending.
std::vector<std::uint64_t> catalogue_lengths(const CatalogueItem& item);

// Every item with rank <= max_rank and dimension <= max_dim, in a fixed order.
std::vector<CatalogueItem> catalogue_items(std::size_t max_rank, const Integer& max_dim);

}  // namespace rectrep::classify
