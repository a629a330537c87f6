#pragma once

#include "rectrep/liealg/simple_type.hpp"

#include <vector>

namespace rectrep::liealg {

// Coordinates of one classical factor in the orthogonal realization:
// B/C/D of rank m use e_1..e_m; A_m uses m+1 coordinates summing to zero,
// so the standard representation has weights f_i = e_i - (1/(m+1))(1,..,1).
struct OrthoWeight {
  std::vector<Rational> coords;
  friend bool operator==(const OrthoWeight&, const OrthoWeight&) = default;
  friend bool operator<(const OrthoWeight& a, const OrthoWeight& b) { return a.coords < b.coords; }
  std::string to_string() const;
};

// Throws std::invalid_argument for exceptional factors.
OrthoWeight to_orthogonal(const SemisimpleAlgebra& g, const Weight& w, std::size_t factor_index);

// Block-level variant for a single simple type.
OrthoWeight to_orthogonal(const SimpleType& t, const Weight& block);

// A3 viewed as D3 (the 6-dimensional representation of A3 is the standard
// one of D3); lands in R^3 where Std and its dual sit on cube vertices.
OrthoWeight a3_to_d3_orthogonal(const Weight& block);

}  // namespace rectrep::liealg
