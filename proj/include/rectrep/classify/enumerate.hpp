#pragma once

#include "rectrep/classify/catalogue.hpp"
#include "rectrep/classify/search.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rectrep::classify {

class BoundsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kEnumerateMaxRank = 4;
inline constexpr std::uint64_t kEnumerateMaxDim = 256;

struct EnumerateOptions {
  // Search each algebra as a whole instead of splitting it into blocks of
  // at most two factors. Far slower; used to cross-check the block split.
  bool exhaustive = false;
};

// Canonical simple types of rank <= max_rank.
std::vector<liealg::SimpleType> simple_types_up_to_rank(std::size_t max_rank);

// One algebra per isomorphism class, factors sorted, total rank in
// [1, max_rank].
std::vector<SemisimpleAlgebra> algebras_up_to_rank(std::size_t max_rank);

// Every faithful rectangular spec with rank <= max_rank and dimension <=
// max_dim, canonicalized up to factor permutation, sorted by algebra and
// then summands. Throws BoundsError beyond rank 4 or dimension 256.
//
// The default strategy rests on this: a Weyl group permutes the edge
// directions of a rectangular weight set up to sign, and the orbits of
// edges cut the algebra into groups of factors whose weight sets multiply.
// Counting orbits against box sizes bounds each group to a single factor
// or an A1 paired with one other factor.
std::vector<RepSpec> enumerate_rectangular(std::size_t max_rank, std::uint64_t max_dim,
                                           const EnumerateOptions& options = {}, SearchStats* stats = nullptr);

struct EnumerationEstimate {
  std::size_t algebras = 0;
  std::size_t searches = 0;    // distinct algebras handed to the search
  std::uint64_t candidates = 0;  // multiplicity-free irreducibles across those searches
};

// Cheap sizing of an enumerate_rectangular run without searching.
EnumerationEstimate estimate_enumeration(std::size_t max_rank, std::uint64_t max_dim,
                                         const EnumerateOptions& options = {});

// All external tensor products of catalogue items within the bounds,
// canonicalized and sorted like enumerate_rectangular.
std::vector<RepSpec> catalogue_closure(std::size_t max_rank, std::uint64_t max_dim,
                                       const std::set<CatalogueItem::Kind>& excluded = {});

struct VerifyOptions {
  bool exhaustive = false;
  std::set<CatalogueItem::Kind> excluded_kinds;  // tampering, for negative controls
};

struct ClassificationReport {
  std::size_t max_rank = 0;
  std::uint64_t max_dim = 0;
  std::size_t enumerated = 0;
  std::size_t catalogue = 0;
  std::vector<RepSpec> only_enumerated;
  std::vector<RepSpec> only_catalogue;
  std::vector<std::string> decompose_failures;
  std::vector<std::string> property_failures;

  bool sets_equal() const { return only_enumerated.empty() && only_catalogue.empty(); }
  bool passed() const { return sets_equal() && decompose_failures.empty() && property_failures.empty(); }
};

// Compares enumeration with the catalogue closure, round-trips every
// enumerated spec through decompose and checks the structural corollaries
// (summand count a power of two, allowed factor types, and irreducibility
// when all lengths are even with at most one 2).
ClassificationReport verify_classification(std::size_t max_rank, std::uint64_t max_dim,
                                           const VerifyOptions& options = {});

}  // namespace rectrep::classify
