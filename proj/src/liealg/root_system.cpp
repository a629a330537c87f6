#include "rectrep/liealg/root_system.hpp"

#include "rectrep/exactlin/rat_matrix.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace rectrep::liealg {

namespace {

void link(IntMatrix& m, std::size_t i, std::size_t j) {
  m[i][j] = -1;
  m[j][i] = -1;
}

}  // namespace

IntMatrix cartan_matrix(const SimpleType& t) {
  const auto n = static_cast<std::size_t>(t.rank());
  IntMatrix m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 2;
  switch (t.family()) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      break;
    case Family::B:
      for (std::size_t i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      m[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (std::size_t i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      m[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < n; ++i) link(m, i, i + 1);
      link(m, n - 3, n - 1);
      break;
    case Family::E:
      link(m, 0, 2);
      link(m, 1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(m, i, i + 1);
      break;
    case Family::F:
      link(m, 0, 1);
      link(m, 1, 2);
      link(m, 2, 3);
      m[2][1] = -2;
      break;
    case Family::G:
      m[0][1] = -3;  // alpha_1 short
      m[1][0] = -1;
      break;
  }
  return m;
}

std::vector<long> symmetrizer(const SimpleType& t) {
  const auto n = static_cast<std::size_t>(t.rank());
  std::vector<long> d(n, 1);
  switch (t.family()) {
    case Family::B:
      for (std::size_t i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case Family::C: d[n - 1] = 2; break;
    case Family::F: d[0] = d[1] = 2; break;
    case Family::G: d[1] = 3; break;
    default: break;
  }
  return d;
}

namespace {

struct RootData {
  std::vector<std::vector<long>> simple_coords;
  std::vector<Weight> fundamental;
  WeightForm form;
};

RootData build_root_data(const SimpleType& t) {
  const auto n = static_cast<std::size_t>(t.rank());
  const IntMatrix m = cartan_matrix(t);
  auto pairing = [&](const std::vector<long>& c, std::size_t i) {
    long s = 0;
    for (std::size_t j = 0; j < n; ++j) s += c[j] * m[i][j];
    return s;
  };

  std::set<std::vector<long>> known;
  std::vector<std::vector<long>> layer;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  std::vector<std::vector<long>> all;
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    all.insert(all.end(), layer.begin(), layer.end());
    std::set<std::vector<long>> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        long p = 0;
        auto down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        long q = p - pairing(beta, i);
        if (q > 0) {
          auto up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    known.insert(layer.begin(), layer.end());
  }

  RootData data;
  data.simple_coords = all;
  for (const auto& c : all) {
    Weight w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = pairing(c, i);
    data.fundamental.push_back(w);
  }

  // Gram matrix of fundamental weights: G = diag(d) * M^{-1}.
  exactlin::RatMatrix cm(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cm.set(i, j, Rational(m[i][j]));
  const auto d = symmetrizer(t);
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n, Rational(0));
    e[j] = 1;
    auto col = exactlin::solve_exact(cm, e);
    for (std::size_t i = 0; i < n; ++i) g[i][j] = Rational(d[i]) * (*col)[i];
  }
  Integer l = 1;
  for (const auto& row : g)
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  data.form.scale = l.get_si();
  data.form.gram.assign(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational x = g[i][j] * Rational(l);
      data.form.gram[i][j] = x.get_num().get_si();
    }
  return data;
}

const RootData& root_data(const SimpleType& t) {
  static std::mutex mu;
  static std::map<SimpleType, RootData> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, build_root_data(t)).first;
  return it->second;
}

}  // namespace

std::vector<Weight> positive_roots(const SimpleType& t) { return root_data(t).fundamental; }

std::vector<std::vector<long>> positive_roots_simple_coords(const SimpleType& t) {
  return root_data(t).simple_coords;
}

WeightForm weight_form(const SimpleType& t) { return root_data(t).form; }

Integer weyl_group_order(const SimpleType& t) {
  Integer fact = 1;
  for (int i = 2; i <= t.rank(); ++i) fact *= i;
  Integer two_pow = 1;
  mpz_mul_2exp(two_pow.get_mpz_t(), two_pow.get_mpz_t(), static_cast<mp_bitcnt_t>(t.rank()));
  switch (t.family()) {
    case Family::A: return fact * (t.rank() + 1);
    case Family::B:
    case Family::C: return two_pow * fact;
    case Family::D: return two_pow * fact / 2;
    case Family::E:
      if (t.rank() == 6) return Integer(51840);
      if (t.rank() == 7) return Integer(2903040);
      return Integer(696729600);
    case Family::F: return Integer(1152);
    case Family::G: return Integer(12);
  }
  return 0;
}

std::vector<Rational> simple_root_coords(const SimpleType& t, const Weight& w) {
  const auto n = static_cast<std::size_t>(t.rank());
  if (w.dim() != n) throw std::invalid_argument("simple_root_coords: dimension mismatch");
  const IntMatrix m = cartan_matrix(t);
  exactlin::RatMatrix cm(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cm.set(i, j, Rational(m[i][j]));
  return *exactlin::solve_exact(cm, w);
}

bool in_root_lattice(const SimpleType& t, const Weight& w) {
  for (const auto& c : simple_root_coords(t, w))
    if (c.get_den() != 1) return false;
  return true;
}

}  // namespace rectrep::liealg
