#pragma once

#include "rectrep/exactlin/int_vector.hpp"
#include "rectrep/exactlin/rat_matrix.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rectrep::exactlin {

// Row-style Hermite normal form of the lattice generated by `vectors`:
// pivot columns strictly increase, pivots are positive, and entries above a
// pivot lie in [0, pivot). Zero rows are dropped.
std::vector<IntVector> hermite_basis(std::span<const IntVector> vectors);

// True iff v lies in the lattice whose HNF basis is `basis`.
bool in_lattice(std::span<const IntVector> basis, const IntVector& v);

// Deterministic n×n integer matrix with determinant ±1 built from seeded
// elementary row operations. Draws exceeding entry_bound are discarded.
RatMatrix random_unimodular(std::size_t n, std::uint64_t seed, const Integer& entry_bound);

}  // namespace rectrep::exactlin
