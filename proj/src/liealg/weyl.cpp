#include "rectrep/liealg/weyl.hpp"

#include <deque>

namespace rectrep::liealg {

namespace {

struct Located {
  std::size_t factor;
  std::size_t local;
};

Located locate(const SemisimpleAlgebra& g, std::size_t simple_index) {
  for (std::size_t f = 0; f < g.num_factors(); ++f) {
    std::size_t r = static_cast<std::size_t>(g.factor(f).rank());
    if (simple_index < g.offset(f) + r) return {f, simple_index - g.offset(f)};
  }
  throw std::out_of_range("simple root index out of range");
}

}  // namespace

Weight reflect(const SemisimpleAlgebra& g, const Weight& w, std::size_t simple_index) {
  if (w.dim() != g.rank()) throw std::invalid_argument("reflect: weight length does not match rank");
  auto [f, i] = locate(g, simple_index);
  const IntMatrix m = cartan_matrix(g.factor(f));
  const std::size_t off = g.offset(f);
  Weight out = w;
  const Integer k = w[off + i];
  if (sgn(k) == 0) return out;
  for (std::size_t j = 0; j < m.size(); ++j) out[off + j] -= k * m[j][i];
  return out;
}

std::set<Weight> weyl_orbit(const SemisimpleAlgebra& g, const Weight& w) {
  if (w.dim() != g.rank()) throw std::invalid_argument("weyl_orbit: weight length does not match rank");
  std::set<Weight> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight x = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < g.rank(); ++i) {
      if (sgn(x[i]) == 0) continue;
      Weight y = reflect(g, x, i);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return seen;
}

Weight dominant_conjugate(const SemisimpleAlgebra& g, const Weight& w) {
  Weight x = w;
  while (true) {
    std::size_t i = 0;
    while (i < x.dim() && sgn(x[i]) >= 0) ++i;
    if (i == x.dim()) return x;
    x = reflect(g, x, i);
  }
}

namespace {

Weight dual_block(const SimpleType& t, const Weight& hw) {
  const std::size_t n = hw.dim();
  Weight out = hw;
  switch (t.family()) {
    case Family::A:
      for (std::size_t i = 0; i < n; ++i) out[i] = hw[n - 1 - i];
      break;
    case Family::D:
      if (n % 2 == 1) std::swap(out[n - 1], out[n - 2]);
      break;
    case Family::E:
      if (n == 6) {
        std::swap(out[0], out[5]);
        std::swap(out[2], out[4]);
      }
      break;
    default: break;
  }
  return out;
}

}  // namespace

Weight dual_highest_weight(const SemisimpleAlgebra& g, const Weight& hw) {
  Weight out(g.rank());
  for (std::size_t f = 0; f < g.num_factors(); ++f) {
    Weight b = dual_block(g.factor(f), g.block(hw, f));
    for (std::size_t j = 0; j < b.dim(); ++j) out[g.offset(f) + j] = b[j];
  }
  return out;
}

Integer weyl_group_order(const SemisimpleAlgebra& g) {
  Integer o = 1;
  for (const auto& t : g.factors()) o *= weyl_group_order(t);
  return o;
}

}  // namespace rectrep::liealg
