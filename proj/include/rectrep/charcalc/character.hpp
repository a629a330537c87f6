#pragma once

#include "rectrep/liealg/simple_type.hpp"

#include <map>
#include <vector>

namespace rectrep::charcalc {

using exactlin::Integer;
using liealg::SemisimpleAlgebra;
using liealg::SimpleType;
using liealg::Weight;

// Multiset of weights with positive multiplicities over a fixed algebra.
class FormalCharacter {
 public:
  FormalCharacter() = default;
  explicit FormalCharacter(SemisimpleAlgebra g) : algebra_(std::move(g)) {}
  FormalCharacter(SemisimpleAlgebra g, std::map<Weight, Integer> entries);

  const SemisimpleAlgebra& algebra() const { return algebra_; }
  const std::map<Weight, Integer>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  // Adds m > 0 copies of w.
  void add(const Weight& w, const Integer& m);
  Integer multiplicity(const Weight& w) const;
  Integer mass() const;

  friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
    return a.algebra_ == b.algebra_ && a.entries_ == b.entries_;
  }

 private:
  SemisimpleAlgebra algebra_;
  std::map<Weight, Integer> entries_;
};

// Throws std::invalid_argument for a non-dominant or wrongly sized hw.
FormalCharacter irreducible_character(const SemisimpleAlgebra& g, const Weight& hw);
Integer weyl_dimension(const SemisimpleAlgebra& g, const Weight& hw);

// Multiplicities of the dominant weights of one simple irreducible,
// computed by Freudenthal's recursion.
std::map<Weight, Integer> dominant_multiplicities(const SimpleType& t, const Weight& hw);

FormalCharacter external_tensor(const FormalCharacter& a, const FormalCharacter& b);
FormalCharacter dual(const FormalCharacter& c);

// Projects onto the selected factor blocks (ascending order). Throws
// std::invalid_argument for an empty, repeated or out-of-range index set.
FormalCharacter restrict_to_factors(const FormalCharacter& c, const std::vector<std::size_t>& part);

bool is_multiplicity_free(const FormalCharacter& c);

// Reorders factor blocks: factor i of the result is factor perm[i] of c.
FormalCharacter permute_factors(const FormalCharacter& c, const std::vector<std::size_t>& perm);

}  // namespace rectrep::charcalc
