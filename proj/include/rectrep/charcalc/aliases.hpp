#pragma once

#include "rectrep/liealg/simple_type.hpp"

#include <stdexcept>
#include <vector>

namespace rectrep::charcalc {

using exactlin::Integer;
using liealg::Family;
using liealg::Weight;

// Named irreducibles, resolved against the family and rank as entered
// (before canonicalization), in Bourbaki numbering:
//
//   triv        0
//   std         A,C,D: w1;  B_m: w1 (m >= 2), 2w1 (m = 1);
//               G2: w1 (7);  F4: w4 (26);  E6: w1;  E7: w7;  E8: w8
//   spin        B_m: w_m;  D_m: w_{m-1} + w_m (two summands)
//   spin+/-     D_m only: w_m / w_{m-1}
//   symK        A, C: K w1;  other families only K <= 1
//   wedgeK      A_m: w_K (K = 0 or m+1 gives triv)
//               B_m: w_K for K < m, 2w_m for K = m
//               C_m: w_K, the primitive part of the K-th exterior power
//               D_m: w_K for K <= m-2, w_{m-1} + w_m for K = m-1
//   dual(x)     highest weights of the dual, -w0(x)
//   hw(...)     explicit fundamental-weight coordinates
enum class AliasKind { Triv, Std, Spin, SpinPlus, SpinMinus, Sym, Wedge, Highest };

struct IrrepExpr {
  AliasKind kind = AliasKind::Triv;
  long k = 0;                    // Sym / Wedge index
  std::vector<Integer> coords;   // Highest
  int dual_depth = 0;            // number of enclosing dual(...)
};

class AliasError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Dominant highest weights in the coordinates of the canonical form of
// (family, rank). Only spin on D_m yields two summands.
std::vector<Weight> resolve_alias(Family family, int rank, const IrrepExpr& expr);

}  // namespace rectrep::charcalc
