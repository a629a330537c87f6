#include "rectrep/charcalc/character.hpp"

#include "rectrep/liealg/root_system.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <stdexcept>

namespace rectrep::charcalc {

std::shared_ptr<const FormalCharacter> simple_irreducible(const SimpleType& t, const Weight& hw);

FormalCharacter::FormalCharacter(SemisimpleAlgebra g, std::map<Weight, Integer> entries)
    : algebra_(std::move(g)), entries_(std::move(entries)) {
  for (const auto& [w, m] : entries_) {
    if (w.dim() != algebra_.rank()) throw std::invalid_argument("character weight length does not match rank");
    if (sgn(m) <= 0) throw std::invalid_argument("character multiplicities must be positive");
  }
}

void FormalCharacter::add(const Weight& w, const Integer& m) {
  if (sgn(m) <= 0) throw std::invalid_argument("character multiplicities must be positive");
  if (w.dim() != algebra_.rank()) throw std::invalid_argument("character weight length does not match rank");
  auto [it, inserted] = entries_.emplace(w, m);
  if (!inserted) it->second += m;
}

Integer FormalCharacter::multiplicity(const Weight& w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? Integer(0) : it->second;
}

Integer FormalCharacter::mass() const {
  Integer s = 0;
  for (const auto& [w, m] : entries_) s += m;
  return s;
}

FormalCharacter external_tensor(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter out(SemisimpleAlgebra::concat(a.algebra(), b.algebra()));
  for (const auto& [x, m] : a.entries())
    for (const auto& [y, k] : b.entries()) out.add(Weight::concat(x, y), m * k);
  return out;
}

FormalCharacter irreducible_character(const SemisimpleAlgebra& g, const Weight& hw) {
  if (hw.dim() != g.rank()) throw std::invalid_argument("highest weight length does not match rank");
  if (!liealg::is_dominant(hw)) throw std::invalid_argument("highest weight is not dominant: " + hw.to_string());
  FormalCharacter acc(SemisimpleAlgebra{});
  acc.add(Weight(0), 1);
  for (std::size_t f = 0; f < g.num_factors(); ++f)
    acc = external_tensor(acc, *simple_irreducible(g.factor(f), g.block(hw, f)));
  return acc;
}

Integer weyl_dimension(const SemisimpleAlgebra& g, const Weight& hw) {
  if (hw.dim() != g.rank()) throw std::invalid_argument("highest weight length does not match rank");
  if (!liealg::is_dominant(hw)) throw std::invalid_argument("highest weight is not dominant: " + hw.to_string());
  Integer num = 1, den = 1;
  for (std::size_t f = 0; f < g.num_factors(); ++f) {
    const auto& t = g.factor(f);
    const auto d = liealg::symmetrizer(t);
    const std::size_t off = g.offset(f);
    for (const auto& c : liealg::positive_roots_simple_coords(t)) {
      Integer top = 0, bottom = 0;
      for (std::size_t j = 0; j < c.size(); ++j) {
        Integer w = c[j] * d[j];
        top += w * (hw[off + j] + 1);
        bottom += w;
      }
      num *= top;
      den *= bottom;
    }
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("Weyl dimension formula gave a non-integer");
  return num / den;
}

FormalCharacter dual(const FormalCharacter& c) {
  FormalCharacter out(c.algebra());
  for (const auto& [w, m] : c.entries()) out.add(-w, m);
  return out;
}

FormalCharacter restrict_to_factors(const FormalCharacter& c, const std::vector<std::size_t>& part) {
  const auto& g = c.algebra();
  if (part.empty()) throw std::invalid_argument("restrict_to_factors: empty factor set");
  std::vector<std::size_t> sorted = part;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("restrict_to_factors: repeated factor index");
  if (sorted.back() >= g.num_factors()) throw std::invalid_argument("restrict_to_factors: factor index out of range");
  std::vector<SimpleType> factors;
  for (auto i : sorted) factors.push_back(g.factor(i));
  FormalCharacter out{SemisimpleAlgebra(factors)};
  for (const auto& [w, m] : c.entries()) {
    Weight p(0);
    for (auto i : sorted) p = Weight::concat(p, g.block(w, i));
    out.add(p, m);
  }
  return out;
}

bool is_multiplicity_free(const FormalCharacter& c) {
  for (const auto& [w, m] : c.entries())
    if (m != 1) return false;
  return true;
}

FormalCharacter permute_factors(const FormalCharacter& c, const std::vector<std::size_t>& perm) {
  const auto& g = c.algebra();
  if (perm.size() != g.num_factors()) throw std::invalid_argument("permute_factors: wrong permutation length");
  std::vector<SimpleType> factors;
  for (auto i : perm) factors.push_back(g.factor(i));
  FormalCharacter out{SemisimpleAlgebra(factors)};
  for (const auto& [w, m] : c.entries()) {
    Weight p(0);
    for (auto i : perm) p = Weight::concat(p, g.block(w, i));
    out.add(p, m);
  }
  return out;
}

}  // namespace rectrep::charcalc
