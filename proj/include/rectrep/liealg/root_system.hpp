#pragma once

#include "rectrep/liealg/simple_type.hpp"

#include <vector>

namespace rectrep::liealg {

using IntMatrix = std::vector<std::vector<long>>;

// Bourbaki numbering; entry (i,j) is <alpha_i^vee, alpha_j>, so column j
// holds the fundamental-weight coordinates of the simple root alpha_j.
IntMatrix cartan_matrix(const SimpleType& t);

// d_i = (alpha_i, alpha_i)/2 with short roots normalized to d = 1.
std::vector<long> symmetrizer(const SimpleType& t);

// Positive roots in fundamental-weight coordinates, ordered by height and
// then lexicographically in simple-root coordinates.
std::vector<Weight> positive_roots(const SimpleType& t);

// The same roots as non-negative integer combinations of simple roots.
std::vector<std::vector<long>> positive_roots_simple_coords(const SimpleType& t);

Integer weyl_group_order(const SimpleType& t);

// Symmetric bilinear form on fundamental-weight coordinates, scaled by a
// positive integer so every entry is integral: (x, y) = x^T G y / scale.
struct WeightForm {
  IntMatrix gram;
  long scale = 1;
};
WeightForm weight_form(const SimpleType& t);

// Coefficients of a weight in the simple-root basis (exact rationals).
std::vector<Rational> simple_root_coords(const SimpleType& t, const Weight& w);

// True iff w lies in the root lattice of t.
bool in_root_lattice(const SimpleType& t, const Weight& w);

}  // namespace rectrep::liealg
