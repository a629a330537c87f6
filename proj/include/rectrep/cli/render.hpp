#pragma once

#include "rectrep/charcalc/rep_spec.hpp"

#include <string>

namespace rectrep::cli {

// "A1*B3"
std::string render_algebra(const liealg::SemisimpleAlgebra& g);

// Name of one irreducible of a simple type, preferring triv, std, spin+,
// spin-, spin, symK, wedgeK, dual(symK), then hw(...). Always parses back
// to the same highest weight.
std::string render_irrep(const liealg::SimpleType& t, const liealg::Weight& hw);

// Representation text accepted by parse_spec; a summand of multiplicity k
// is written k times.
std::string render_spec(const charcalc::RepSpec& spec);

}  // namespace rectrep::cli
