#pragma once

#include "rectrep/charcalc/rep_spec.hpp"

#include <string>
#include <vector>

namespace rectrep::classify {

// Representative of a spec up to permutation of the factors: factors are
// sorted by type, then the least summand list over permutations of equal
// factors is chosen.
charcalc::RepSpec canonical_form(const charcalc::RepSpec& spec);

// Stable text key, e.g. "A1*B3|(2,0,0,1)x1". Equal keys iff equal specs.
std::string spec_key(const charcalc::RepSpec& spec);

// Factor orderings that sort the algebra's factors by type.
std::vector<std::vector<std::size_t>> sorting_permutations(const liealg::SemisimpleAlgebra& g);

}  // namespace rectrep::classify
