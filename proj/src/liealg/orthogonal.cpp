#include "rectrep/liealg/orthogonal.hpp"

namespace rectrep::liealg {

std::string OrthoWeight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += coords[i].get_str();
  }
  return s + ")";
}

namespace {

// Fundamental weight omega_i (0-based) in e-coordinates.
std::vector<Rational> fundamental(Family family, std::size_t m, std::size_t i) {
  const Rational half(1, 2);
  std::vector<Rational> v;
  switch (family) {
    case Family::A: {
      v.assign(m + 1, Rational(0));
      Rational shift(static_cast<long>(i + 1), static_cast<long>(m + 1));
      shift.canonicalize();
      for (std::size_t j = 0; j <= m; ++j) v[j] = (j <= i ? Rational(1) : Rational(0)) - shift;
      break;
    }
    case Family::B:
      v.assign(m, Rational(0));
      for (std::size_t j = 0; j <= i; ++j) v[j] = (i + 1 == m) ? half : Rational(1);
      break;
    case Family::C:
      v.assign(m, Rational(0));
      for (std::size_t j = 0; j <= i; ++j) v[j] = 1;
      break;
    case Family::D:
      v.assign(m, Rational(0));
      if (i + 2 < m) {
        for (std::size_t j = 0; j <= i; ++j) v[j] = 1;
      } else {
        for (std::size_t j = 0; j < m; ++j) v[j] = half;
        if (i + 2 == m) v[m - 1] = -half;
      }
      break;
    default: throw std::invalid_argument("no orthogonal realization for exceptional types");
  }
  return v;
}

OrthoWeight realize(Family family, std::size_t m, const Weight& block) {
  OrthoWeight out;
  out.coords.assign(family == Family::A ? m + 1 : m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(block[i]) == 0) continue;
    auto f = fundamental(family, m, i);
    for (std::size_t j = 0; j < f.size(); ++j) out.coords[j] += Rational(block[i]) * f[j];
  }
  return out;
}

}  // namespace

OrthoWeight to_orthogonal(const SimpleType& t, const Weight& block) {
  if (!t.is_classical()) throw std::invalid_argument("no orthogonal realization for " + t.name());
  if (block.dim() != static_cast<std::size_t>(t.rank()))
    throw std::invalid_argument("to_orthogonal: block length does not match rank");
  return realize(t.family(), static_cast<std::size_t>(t.rank()), block);
}

OrthoWeight to_orthogonal(const SemisimpleAlgebra& g, const Weight& w, std::size_t factor_index) {
  if (w.dim() != g.rank()) throw std::invalid_argument("to_orthogonal: weight length does not match rank");
  return to_orthogonal(g.factor(factor_index), g.block(w, factor_index));
}

OrthoWeight a3_to_d3_orthogonal(const Weight& block) {
  if (block.dim() != 3) throw std::invalid_argument("a3_to_d3_orthogonal: expected an A3 block");
  Weight d3(3);
  d3[0] = block[1];
  d3[1] = block[0];
  d3[2] = block[2];
  return realize(Family::D, 3, d3);
}

}  // namespace rectrep::liealg
