#pragma once

#include "rectrep/liealg/root_system.hpp"

#include <set>

namespace rectrep::liealg {

// Simple reflection s_i where i indexes the simple roots of the whole
// algebra (factor blocks laid end to end).
Weight reflect(const SemisimpleAlgebra& g, const Weight& w, std::size_t simple_index);

// Full orbit by breadth-first closure under the simple reflections.
std::set<Weight> weyl_orbit(const SemisimpleAlgebra& g, const Weight& w);

Weight dominant_conjugate(const SemisimpleAlgebra& g, const Weight& w);

// Highest weight of the dual irreducible: -w0(hw).
Weight dual_highest_weight(const SemisimpleAlgebra& g, const Weight& hw);

Integer weyl_group_order(const SemisimpleAlgebra& g);

}  // namespace rectrep::liealg
