#include "rectrep/rectkit/weight_multiset.hpp"

#include "rectrep/liealg/orthogonal.hpp"

#include <stdexcept>

namespace rectrep::rectkit {

void WeightMultiset::add(const IntVector& p, const Integer& m) {
  if (p.dim() != dim) throw std::invalid_argument("WeightMultiset: point dimension mismatch");
  if (sgn(m) <= 0) throw std::invalid_argument("WeightMultiset: multiplicity must be positive");
  auto [it, inserted] = points.emplace(p, m);
  if (!inserted) it->second += m;
}

WeightMultiset from_character(const charcalc::FormalCharacter& c) {
  WeightMultiset s;
  s.dim = c.algebra().rank();
  s.points = c.entries();
  return s;
}

WeightMultiset from_character_orthogonal(const charcalc::FormalCharacter& c, std::size_t factor_index) {
  const auto& g = c.algebra();
  std::vector<std::pair<liealg::OrthoWeight, Integer>> images;
  Integer den = 1;
  for (const auto& [w, m] : c.entries()) {
    auto o = liealg::to_orthogonal(g, w, factor_index);
    for (const auto& x : o.coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    images.emplace_back(std::move(o), m);
  }
  WeightMultiset s;
  s.dim = g.factor(factor_index).family() == liealg::Family::A
              ? static_cast<std::size_t>(g.factor(factor_index).rank()) + 1
              : static_cast<std::size_t>(g.factor(factor_index).rank());
  s.denominator = den;
  for (const auto& [o, m] : images) {
    IntVector p(s.dim);
    for (std::size_t i = 0; i < s.dim; ++i) {
      exactlin::Rational x = o.coords[i] * exactlin::Rational(den);
      p[i] = x.get_num();
    }
    s.add(p, m);
  }
  return s;
}

WeightMultiset midpoint_set(const WeightMultiset& s) {
  WeightMultiset out;
  out.dim = s.dim;
  out.denominator = 2 * s.denominator;
  for (auto a = s.points.begin(); a != s.points.end(); ++a)
    for (auto b = a; b != s.points.end(); ++b) out.points.emplace(a->first + b->first, Integer(1));
  return out;
}

WeightMultiset normalized(const WeightMultiset& s) {
  Integer g = s.denominator;
  for (const auto& [p, m] : s.points) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), exactlin::content(p).get_mpz_t());
  if (g == 1) return s;
  WeightMultiset out;
  out.dim = s.dim;
  out.denominator = s.denominator / g;
  for (const auto& [p, m] : s.points) {
    IntVector q = p;
    for (std::size_t i = 0; i < q.dim(); ++i) q[i] /= g;
    out.points.emplace(std::move(q), m);
  }
  return out;
}

WeightMultiset transform(const exactlin::RatMatrix& m, const WeightMultiset& s) {
  if (m.cols() != s.dim) throw std::invalid_argument("transform: dimension mismatch");
  WeightMultiset out;
  out.dim = m.rows();
  out.denominator = s.denominator;
  for (const auto& [p, k] : s.points) out.add(m.apply_integral(p), k);
  return out;
}

WeightMultiset translate(const WeightMultiset& s, const IntVector& shift) {
  WeightMultiset out;
  out.dim = s.dim;
  out.denominator = s.denominator;
  for (const auto& [p, k] : s.points) out.add(p + shift, k);
  return out;
}

}  // namespace rectrep::rectkit
