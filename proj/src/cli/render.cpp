#include "rectrep/cli/render.hpp"

#include "rectrep/charcalc/aliases.hpp"

namespace rectrep::cli {

using charcalc::AliasKind;
using charcalc::IrrepExpr;
using liealg::SimpleType;
using liealg::Weight;

std::string render_algebra(const liealg::SemisimpleAlgebra& g) { return g.name(); }

namespace {

bool names(const SimpleType& t, const IrrepExpr& e, const Weight& hw) {
  try {
    const auto r = charcalc::resolve_alias(t.family(), t.rank(), e);
    return r.size() == 1 && r.front() == hw;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

std::string render_irrep(const SimpleType& t, const Weight& hw) {
  const std::pair<AliasKind, const char*> plain[] = {{AliasKind::Triv, "triv"},
                                                     {AliasKind::Std, "std"},
                                                     {AliasKind::SpinPlus, "spin+"},
                                                     {AliasKind::SpinMinus, "spin-"},
                                                     {AliasKind::Spin, "spin"}};
  for (const auto& [kind, text] : plain)
    if (names(t, IrrepExpr{kind, 0, {}, 0}, hw)) return text;

  // Sym and dual(sym) are multiples of the first or last fundamental weight.
  const long first = hw[0].get_si(), last = hw[hw.dim() - 1].get_si();
  if (first >= 2 && names(t, IrrepExpr{AliasKind::Sym, first, {}, 0}, hw)) return "sym" + std::to_string(first);
  if (last >= 1 && names(t, IrrepExpr{AliasKind::Sym, last, {}, 1}, hw))
    return "dual(" + (last == 1 ? std::string("std") : "sym" + std::to_string(last)) + ")";
  for (long k = 2; k <= t.rank() + 1; ++k)
    if (names(t, IrrepExpr{AliasKind::Wedge, k, {}, 0}, hw)) return "wedge" + std::to_string(k);

  std::string out = "hw(";
  for (std::size_t i = 0; i < hw.dim(); ++i) {
    if (i) out += ",";
    out += hw[i].get_str();
  }
  return out + ")";
}

std::string render_spec(const charcalc::RepSpec& spec) {
  const auto& g = spec.algebra();
  std::string out;
  for (const auto& s : spec.summands()) {
    std::string term;
    for (std::size_t f = 0; f < g.num_factors(); ++f) {
      if (f) term += "*";
      term += render_irrep(g.factor(f), g.block(s.highest_weight, f));
    }
    for (exactlin::Integer k = 0; k < s.multiplicity; ++k) {
      if (!out.empty()) out += " + ";
      out += term;
    }
  }
  return out;
}

}  // namespace rectrep::cli
