#pragma once

#include "rectrep/liealg/simple_type.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rectrep::classify {

using liealg::SimpleType;
using liealg::Weight;

struct HoweEntry {
  Weight highest_weight;
  std::uint64_t dimension = 0;
  friend bool operator==(const HoweEntry&, const HoweEntry&) = default;
};

struct HoweReport {
  SimpleType type;
  std::uint64_t max_dim = 0;
  std::size_t examined = 0;            // dominant weights within the bound
  std::vector<HoweEntry> flagged;      // multiplicity-free, by Freudenthal
  std::vector<HoweEntry> expected;     // from the published list
  std::vector<HoweEntry> missing;      // expected but not flagged
  std::vector<HoweEntry> unexpected;   // flagged but not expected
  bool passed() const { return missing.empty() && unexpected.empty(); }
};

// Highest weights of the trivial representation and the irreducible weight
// multiplicity-free representations of t with dimension <= max_dim, as
// listed by Howe: A sym and alternating powers and duals; B std and spin;
// C std (and the last fundamental for C3); D std and half-spins; E6 the two
// 27s; E7 the 56; G2 the 7. Sorted.
std::vector<Weight> howe_list(const SimpleType& t, std::uint64_t max_dim);

// Throws std::invalid_argument for rank > 4 or max_dim > 512.
HoweReport verify_howe(const SimpleType& t, std::uint64_t max_dim);

}  // namespace rectrep::classify
