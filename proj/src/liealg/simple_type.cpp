#include "rectrep/liealg/simple_type.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace rectrep::liealg {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

Family family_from_letter(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw InvalidType(std::string("unknown family letter '") + c + "'");
  }
}

namespace {

std::vector<std::size_t> identity_map(int rank) {
  std::vector<std::size_t> m(static_cast<std::size_t>(rank));
  std::iota(m.begin(), m.end(), 0);
  return m;
}

void check_admissible(Family family, int rank) {
  std::string label = std::string(1, family_letter(family)) + std::to_string(rank);
  bool ok = false;
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::C: ok = rank >= 1; break;
    case Family::D: ok = rank >= 2; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) throw InvalidType("rank out of family bounds: " + label);
  if (family == Family::D && rank == 2) throw InvalidType("D2 is not simple; enter it as A1*A1");
}

}  // namespace

CanonicalForm canonicalize(Family family, int rank) {
  check_admissible(family, rank);
  if ((family == Family::B || family == Family::C) && rank == 1)
    return {SimpleType(Family::A, 1), {0}};
  if (family == Family::C && rank == 2) return {SimpleType(Family::B, 2), {1, 0}};
  // D3: node 1 is the branch point joined to nodes 2 and 3.
  if (family == Family::D && rank == 3) return {SimpleType(Family::A, 3), {1, 0, 2}};
  return {SimpleType(family, rank), identity_map(rank)};
}

Weight to_canonical_coords(const CanonicalForm& form, const Weight& entered) {
  if (entered.dim() != form.coordinate_map.size())
    throw std::invalid_argument("weight length does not match the factor rank");
  Weight out(entered.dim());
  for (std::size_t i = 0; i < entered.dim(); ++i) out[i] = entered[form.coordinate_map[i]];
  return out;
}

SimpleType::SimpleType(Family family, int rank) : family_(family), rank_(rank) {
  check_admissible(family, rank);
  if ((family == Family::B || family == Family::C) && rank == 1) family_ = Family::A;
  if (family == Family::C && rank == 2) family_ = Family::B;
  if (family == Family::D && rank == 3) family_ = Family::A;
}

std::string SimpleType::name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

SemisimpleAlgebra::SemisimpleAlgebra(std::vector<SimpleType> factors) : factors_(std::move(factors)) {
  offsets_.reserve(factors_.size());
  for (const auto& f : factors_) {
    offsets_.push_back(rank_);
    rank_ += static_cast<std::size_t>(f.rank());
  }
}

Weight SemisimpleAlgebra::block(const Weight& w, std::size_t factor_index) const {
  return w.slice(offset(factor_index), static_cast<std::size_t>(factor(factor_index).rank()));
}

std::string SemisimpleAlgebra::name() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "*";
    s += factors_[i].name();
  }
  return s;
}

bool SemisimpleAlgebra::isomorphic_up_to_permutation(const SemisimpleAlgebra& other) const {
  auto a = factors_, b = other.factors_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

SemisimpleAlgebra SemisimpleAlgebra::concat(const SemisimpleAlgebra& a, const SemisimpleAlgebra& b) {
  auto f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return SemisimpleAlgebra(std::move(f));
}

bool is_dominant(const Weight& w) {
  for (const auto& c : w.coords())
    if (sgn(c) < 0) return false;
  return true;
}

}  // namespace rectrep::liealg
