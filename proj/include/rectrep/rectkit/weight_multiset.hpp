#pragma once

#include "rectrep/charcalc/character.hpp"
#include "rectrep/exactlin/rat_matrix.hpp"

#include <map>

namespace rectrep::rectkit {

using exactlin::Integer;
using exactlin::IntVector;

// Integer points with multiplicities; the geometric point is
// point / denominator.
struct WeightMultiset {
  std::size_t dim = 0;
  std::map<IntVector, Integer> points;
  Integer denominator = 1;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  void add(const IntVector& p, const Integer& m = 1);

  friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;
};

// Fundamental-weight coordinates are already integral, so the
// denominator is 1.
WeightMultiset from_character(const charcalc::FormalCharacter& c);

// Orthogonal coordinates of a single classical factor, scaled by the least
// common denominator.
WeightMultiset from_character_orthogonal(const charcalc::FormalCharacter& c, std::size_t factor_index);

// All pairwise midpoints with multiplicity one, held as sums over twice
// the denominator.
WeightMultiset midpoint_set(const WeightMultiset& s);

// Divides out the largest common factor of the denominator and every
// coordinate.
WeightMultiset normalized(const WeightMultiset& s);

// M·S for an integral matrix M.
WeightMultiset transform(const exactlin::RatMatrix& m, const WeightMultiset& s);
WeightMultiset translate(const WeightMultiset& s, const IntVector& shift);

}  // namespace rectrep::rectkit
