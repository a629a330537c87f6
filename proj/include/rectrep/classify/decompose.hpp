#pragma once

#include "rectrep/classify/catalogue.hpp"
#include "rectrep/rectkit/detect.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace rectrep::classify {

struct DecompositionPart {
  std::vector<std::size_t> factors;  // 0-based, ascending
  CatalogueItem item;
  friend bool operator==(const DecompositionPart&, const DecompositionPart&) = default;
};

// Parts ordered by their smallest factor index.
struct Decomposition {
  std::vector<DecompositionPart> parts;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

class DecomposeError : public std::runtime_error {
 public:
  enum class Kind { NotFaithful, NotRectangular, CatalogueMismatch };
  DecomposeError(Kind kind, std::string reason);
  Kind kind() const { return kind_; }
  const std::string& reason() const { return reason_; }

 private:
  Kind kind_;
  std::string reason_;
};

std::string to_string(DecomposeError::Kind kind);

// Splits a faithful rectangular representation into catalogue items.
// NotRectangular carries the detection reason ("multiplicity",
// "asymmetry", "box mismatch" or "empty").
Decomposition decompose(const RepSpec& spec);

// External tensor of the parts' characters with factor blocks put back in
// the order of g.
charcalc::FormalCharacter reassemble(const SemisimpleAlgebra& g, const Decomposition& d);

}  // namespace rectrep::classify
