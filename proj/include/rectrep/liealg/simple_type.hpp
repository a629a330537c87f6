#pragma once

#include "rectrep/exactlin/int_vector.hpp"

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rectrep::liealg {

using exactlin::Integer;
using exactlin::IntVector;
using exactlin::Rational;

// Weights are integer vectors in the fundamental-weight basis, one
// coordinate block per simple factor (Bourbaki node numbering).
using Weight = IntVector;

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family family_from_letter(char c);  // case-insensitive; throws std::invalid_argument

class InvalidType : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A simple type label in canonical form. Construction normalizes
// B1, C1 -> A1, C2 -> B2, D3 -> A3 and rejects D2 and inadmissible ranks.
class SimpleType {
 public:
  SimpleType(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  bool is_classical() const { return family_ <= Family::D; }
  std::string name() const;  // "B3"

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;

 private:
  Family family_;
  int rank_;
};

// A label as entered, before canonicalization, together with the map from
// entered fundamental-weight coordinates to canonical ones:
// canonical[i] = entered[coordinate_map[i]].
struct CanonicalForm {
  SimpleType type;
  std::vector<std::size_t> coordinate_map;
};

CanonicalForm canonicalize(Family family, int rank);

Weight to_canonical_coords(const CanonicalForm& form, const Weight& entered);

class SemisimpleAlgebra {
 public:
  SemisimpleAlgebra() = default;
  explicit SemisimpleAlgebra(std::vector<SimpleType> factors);

  const std::vector<SimpleType>& factors() const { return factors_; }
  std::size_t num_factors() const { return factors_.size(); }
  const SimpleType& factor(std::size_t i) const { return factors_.at(i); }
  std::size_t rank() const { return rank_; }
  std::size_t offset(std::size_t factor_index) const { return offsets_.at(factor_index); }

  Weight block(const Weight& w, std::size_t factor_index) const;

  // "A1*B3"
  std::string name() const;

  bool isomorphic_up_to_permutation(const SemisimpleAlgebra& other) const;

  static SemisimpleAlgebra concat(const SemisimpleAlgebra& a, const SemisimpleAlgebra& b);

  friend bool operator==(const SemisimpleAlgebra& a, const SemisimpleAlgebra& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator<(const SemisimpleAlgebra& a, const SemisimpleAlgebra& b) {
    return a.factors_ < b.factors_;
  }

 private:
  std::vector<SimpleType> factors_;
  std::vector<std::size_t> offsets_;
  std::size_t rank_ = 0;
};

bool is_dominant(const Weight& w);

}  // namespace rectrep::liealg
