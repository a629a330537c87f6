#pragma once

#include "rectrep/exactlin/int_vector.hpp"

#include <string>
#include <vector>

namespace rectrep::classify {

using exactlin::IntVector;

// One subspace of R^n spanned by roots of B_n (orthogonal coordinates,
// long roots ±e_i±e_j, short roots ±e_i), keyed by its reduced row basis.
struct RootSubspace {
  std::vector<std::vector<exactlin::Rational>> basis;  // reduced row echelon form
  std::size_t long_roots = 0;
  std::size_t short_roots = 0;
  bool standard = false;  // spanned by coordinate vectors
};

struct PlaneCensus {
  int n = 0;
  std::size_t planes = 0;                // distinct planes spanned by two roots
  std::vector<RootSubspace> rich;        // planes holding at least 8 roots
  std::vector<std::string> violations;   // rich planes that are not standard with 4+4 roots
  bool passed() const { return violations.empty(); }
};

struct LongRootCensus {
  int n = 0;
  std::size_t spaces = 0;                // distinct 3-spaces spanned by three long roots
  std::vector<RootSubspace> rich;        // holding at least 12 long roots
  std::size_t standard_rich = 0;
  // Rich spaces equal to the orthogonal complement, inside a standard
  // 4-space, of e_i ± e_j ± e_l ± e_s.
  std::size_t complement_rich = 0;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

std::vector<IntVector> b_roots(int n);
std::vector<IntVector> b_long_roots(int n);

// 2 <= n <= 4.
PlaneCensus roots_in_plane_census(int n);
// n = 3 or 4.
LongRootCensus long_roots_3space_census(int n);

// True iff the subspace is the orthogonal complement of v inside the span
// of the coordinates where v is nonzero.
bool is_complement_in_support(const RootSubspace& s, const IntVector& v);

}  // namespace rectrep::classify
