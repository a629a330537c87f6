#pragma once

#include "rectrep/charcalc/rep_spec.hpp"

#include <cstdint>
#include <vector>

namespace rectrep::classify {

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t candidates = 0;  // irreducibles considered
};

// Every faithful rectangular representation of g of dimension <= max_dim,
// found by depth-first search over sums of distinct multiplicity-free
// irreducibles (at most one per class of the weight lattice modulo the root
// lattice). Results are in the factor order of g, sorted by summand list.
// Supports rank <= 8 and max_dim <= 4096.
std::vector<charcalc::RepSpec> search_rectangular(const liealg::SemisimpleAlgebra& g, std::uint64_t max_dim,
                                                  SearchStats* stats = nullptr);

// Dominant weights of one simple type whose irreducible has dimension
// <= max_dim, in increasing order.
std::vector<liealg::Weight> small_highest_weights(const liealg::SimpleType& t, std::uint64_t max_dim);

}  // namespace rectrep::classify
