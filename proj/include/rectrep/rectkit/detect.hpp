#pragma once

#include "rectrep/rectkit/weight_multiset.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rectrep::rectkit {

struct RectCertificate {
  IntVector vertex;
  std::vector<IntVector> edges;
  std::vector<std::uint64_t> degrees;
  std::uint64_t padding = 0;

  friend bool operator==(const RectCertificate&, const RectCertificate&) = default;
};

enum class RectReason { Rectangular, Empty, Multiplicity, Asymmetric, BoxMismatch };

std::string to_string(RectReason r);

struct RectVerdict {
  RectReason reason = RectReason::BoxMismatch;
  std::optional<RectCertificate> certificate;
};

// Vertex = lexicographic minimum; edges = additively irreducible elements
// of S - vertex; accepted iff the box they span reproduces S exactly and
// S = -S.
RectVerdict diagnose_rectangular(const WeightMultiset& s);
std::optional<RectCertificate> detect_rectangular(const WeightMultiset& s);

bool verify_certificate(const WeightMultiset& s, const RectCertificate& cert);

// {d_i + 1} and `padding` ones, ascending.
std::vector<std::uint64_t> lengths(const RectCertificate& cert);
std::optional<std::uint64_t> is_hypercubic(const RectCertificate& cert);

// Order of the symmetry group of a box with the given lengths:
// product over distinct lengths of 2^n n!. Throws for a length below 2.
Integer automorphism_order(const std::vector<std::uint64_t>& lengths);

}  // namespace rectrep::rectkit
