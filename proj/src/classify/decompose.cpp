#include "rectrep/classify/decompose.hpp"

#include <algorithm>
#include <optional>

namespace rectrep::classify {

using charcalc::FormalCharacter;
using liealg::Family;
using liealg::SimpleType;

DecomposeError::DecomposeError(Kind kind, std::string reason)
    : std::runtime_error(to_string(kind) + ": " + reason), kind_(kind), reason_(std::move(reason)) {}

std::string to_string(DecomposeError::Kind kind) {
  switch (kind) {
    case DecomposeError::Kind::NotFaithful: return "not faithful";
    case DecomposeError::Kind::NotRectangular: return "not rectangular";
    case DecomposeError::Kind::CatalogueMismatch: return "catalogue mismatch";
  }
  return "unknown";
}

namespace {

// Divides every multiplicity by their gcd.
FormalCharacter strip_multiple(const FormalCharacter& c) {
  Integer g = 0;
  for (const auto& [w, m] : c.entries()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
  if (g <= 1) return c;
  FormalCharacter out(c.algebra());
  for (const auto& [w, m] : c.entries()) out.add(w, m / g);
  return out;
}

std::vector<CatalogueItem> single_factor_candidates(const SimpleType& t, const RepSpec& parts) {
  std::vector<CatalogueItem> out;
  switch (t.family()) {
    case Family::A:
      if (t.rank() == 1) {
        const auto& s = parts.summands();
        if (s.size() == 1 && s[0].highest_weight[0] >= 1)
          out.push_back(CatalogueItem::a1_sym(static_cast<int>(s[0].highest_weight[0].get_si())));
        if (s.size() == 2) {
          long a = s[0].highest_weight[0].get_si(), b = s[1].highest_weight[0].get_si();
          if (a - b == 1 || b - a == 1)
            out.push_back(CatalogueItem::a1_pair_sym(static_cast<int>(a), static_cast<int>(b)));
        }
      } else if (t.rank() == 3) {
        out.push_back(CatalogueItem::a3_std_dual());
      }
      break;
    case Family::B:
      out.push_back(CatalogueItem::bm_spin(t.rank()));
      if (t.rank() == 2) out.push_back(CatalogueItem::b2_std_spin());
      break;
    case Family::D:
      if (t.rank() == 4) {
        out.push_back(CatalogueItem::d4_spin());
        out.push_back(CatalogueItem::d4_std_spin_plus());
        out.push_back(CatalogueItem::d4_std_spin_minus());
      } else if (t.rank() >= 5) {
        out.push_back(CatalogueItem::dm_spin(t.rank()));
      }
      break;
    default: break;
  }
  return out;
}

std::optional<CatalogueItem> match_single(const FormalCharacter& restriction) {
  FormalCharacter r = strip_multiple(restriction);
  if (!charcalc::is_multiplicity_free(r)) return std::nullopt;
  RepSpec parts = charcalc::decompose_character(r);
  for (const auto& item : single_factor_candidates(r.algebra().factor(0), parts))
    if (catalogue_spec(item) == parts) return item;
  return std::nullopt;
}

}  // namespace

FormalCharacter reassemble(const SemisimpleAlgebra& g, const Decomposition& d) {
  FormalCharacter acc(SemisimpleAlgebra{});
  acc.add(liealg::Weight(0), 1);
  std::vector<std::size_t> order;
  for (const auto& part : d.parts) {
    acc = charcalc::external_tensor(acc, charcalc::character_of(catalogue_spec(part.item)));
    order.insert(order.end(), part.factors.begin(), part.factors.end());
  }
  if (order.size() != g.num_factors()) throw std::invalid_argument("reassemble: parts do not cover the factors");
  std::vector<std::size_t> perm(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (order[pos] >= perm.size()) throw std::invalid_argument("reassemble: factor index out of range");
    perm[order[pos]] = pos;
  }
  return charcalc::permute_factors(acc, perm);
}

Decomposition decompose(const RepSpec& spec) {
  using Kind = DecomposeError::Kind;
  const auto& g = spec.algebra();
  if (!charcalc::is_faithful(spec)) throw DecomposeError(Kind::NotFaithful, "some simple factor acts trivially");

  const FormalCharacter chi = charcalc::character_of(spec);
  const auto verdict = rectkit::diagnose_rectangular(rectkit::from_character(chi));
  if (!verdict.certificate) throw DecomposeError(Kind::NotRectangular, rectkit::to_string(verdict.reason));

  Decomposition d;
  std::vector<std::size_t> unmatched;
  for (std::size_t f = 0; f < g.num_factors(); ++f) {
    auto item = match_single(charcalc::restrict_to_factors(chi, {f}));
    if (item)
      d.parts.push_back({{f}, *item});
    else
      unmatched.push_back(f);
  }

  const FormalCharacter d2 = charcalc::character_of(catalogue_spec(CatalogueItem::d2_spin()));
  std::vector<bool> used(g.num_factors(), false);
  for (std::size_t a = 0; a < unmatched.size(); ++a) {
    const std::size_t i = unmatched[a];
    if (used[i]) continue;
    if (g.factor(i) != SimpleType(Family::A, 1))
      throw DecomposeError(Kind::CatalogueMismatch, "factor " + std::to_string(i + 1) + " (" + g.factor(i).name() +
                                                        ") matches no catalogue item");
    bool paired = false;
    for (std::size_t b = a + 1; b < unmatched.size() && !paired; ++b) {
      const std::size_t j = unmatched[b];
      if (used[j] || g.factor(j) != SimpleType(Family::A, 1)) continue;
      if (strip_multiple(charcalc::restrict_to_factors(chi, {i, j})) == d2) {
        d.parts.push_back({{i, j}, CatalogueItem::d2_spin()});
        used[i] = used[j] = true;
        paired = true;
      }
    }
    if (!paired)
      throw DecomposeError(Kind::CatalogueMismatch,
                           "A1 factor " + std::to_string(i + 1) + " matches no catalogue item and pairs with no A1");
  }

  std::sort(d.parts.begin(), d.parts.end(),
            [](const DecompositionPart& x, const DecompositionPart& y) { return x.factors.front() < y.factors.front(); });
  if (!(reassemble(g, d) == chi))
    throw DecomposeError(Kind::CatalogueMismatch, "external tensor of the parts does not reproduce the character");
  return d;
}

}  // namespace rectrep::classify
