#include "rectrep/charcalc/aliases.hpp"

#include "rectrep/liealg/weyl.hpp"

#include <string>

namespace rectrep::charcalc {

namespace {

std::string label(Family f, int m) { return std::string(1, liealg::family_letter(f)) + std::to_string(m); }

[[noreturn]] void undefined(const std::string& alias, Family f, int m) {
  throw AliasError("alias '" + alias + "' is not defined for " + label(f, m));
}

Weight omega(int m, int i, long coeff = 1) {
  Weight w(static_cast<std::size_t>(m));
  w[static_cast<std::size_t>(i - 1)] = coeff;
  return w;
}

Weight std_weight(Family f, int m) {
  switch (f) {
    case Family::A:
    case Family::C:
    case Family::D: return omega(m, 1);
    case Family::B: return m == 1 ? omega(m, 1, 2) : omega(m, 1);
    case Family::G: return omega(m, 1);
    case Family::F: return omega(m, 4);
    case Family::E: return m == 6 ? omega(m, 1) : omega(m, m);
  }
  return Weight(static_cast<std::size_t>(m));
}

std::vector<Weight> resolve_entered(Family f, int m, const IrrepExpr& e) {
  switch (e.kind) {
    case AliasKind::Triv: return {Weight(static_cast<std::size_t>(m))};
    case AliasKind::Std: return {std_weight(f, m)};
    case AliasKind::Spin:
      if (f == Family::B) return {omega(m, m)};
      if (f == Family::D) return {omega(m, m - 1), omega(m, m)};
      undefined("spin", f, m);
    case AliasKind::SpinPlus:
      if (f == Family::D) return {omega(m, m)};
      undefined("spin+", f, m);
    case AliasKind::SpinMinus:
      if (f == Family::D) return {omega(m, m - 1)};
      undefined("spin-", f, m);
    case AliasKind::Sym: {
      const std::string name = "sym" + std::to_string(e.k);
      if (e.k < 0) undefined(name, f, m);
      if (e.k == 0) return {Weight(static_cast<std::size_t>(m))};
      if (f == Family::A || f == Family::C) return {omega(m, 1, e.k)};
      if (e.k == 1) return {std_weight(f, m)};
      undefined(name, f, m);
    }
    case AliasKind::Wedge: {
      const std::string name = "wedge" + std::to_string(e.k);
      const long k = e.k;
      if (k < 0) undefined(name, f, m);
      if (k == 0) return {Weight(static_cast<std::size_t>(m))};
      switch (f) {
        case Family::A:
          if (k == m + 1) return {Weight(static_cast<std::size_t>(m))};
          if (k <= m) return {omega(m, static_cast<int>(k))};
          break;
        case Family::B:
          if (k < m) return {omega(m, static_cast<int>(k))};
          if (k == m) return {omega(m, m, 2)};
          break;
        case Family::C:
          if (k <= m) return {omega(m, static_cast<int>(k))};
          break;
        case Family::D:
          if (k <= m - 2) return {omega(m, static_cast<int>(k))};
          if (k == m - 1) {
            Weight w = omega(m, m - 1);
            w[static_cast<std::size_t>(m - 1)] = 1;
            return {w};
          }
          break;
        default: break;
      }
      undefined(name, f, m);
    }
    case AliasKind::Highest: {
      if (e.coords.size() != static_cast<std::size_t>(m))
        throw AliasError("hw(...) needs " + std::to_string(m) + " coordinates for " + label(f, m));
      Weight w(e.coords);
      if (!liealg::is_dominant(w)) throw AliasError("hw(...) coordinates must be non-negative");
      return {w};
    }
  }
  return {};
}

}  // namespace

std::vector<Weight> resolve_alias(Family family, int rank, const IrrepExpr& expr) {
  const auto form = liealg::canonicalize(family, rank);
  std::vector<Weight> out;
  const liealg::SemisimpleAlgebra g({form.type});
  for (const auto& w : resolve_entered(family, rank, expr)) {
    Weight c = liealg::to_canonical_coords(form, w);
    if (expr.dual_depth % 2 == 1) c = liealg::dual_highest_weight(g, c);
    out.push_back(c);
  }
  return out;
}

}  // namespace rectrep::charcalc
