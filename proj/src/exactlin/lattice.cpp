#include "rectrep/exactlin/lattice.hpp"

#include <random>
#include <stdexcept>

namespace rectrep::exactlin {

namespace {

void axpy(std::vector<Integer>& row, const Integer& q, const std::vector<Integer>& other) {
  for (std::size_t j = 0; j < row.size(); ++j) row[j] -= q * other[j];
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::vector<IntVector> hermite_basis(std::span<const IntVector> vectors) {
  if (vectors.empty()) return {};
  const std::size_t n = vectors.front().dim();
  std::vector<std::vector<Integer>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.dim() != n) throw std::invalid_argument("hermite_basis: dimension mismatch");
    if (!v.is_zero()) rows.push_back(v.coords());
  }

  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    // Euclid on column c among rows r..end until one nonzero entry remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        if (best == rows.size() || cmp_abs(rows[i][c], rows[best][c]) < 0) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        Integer q = floor_div(rows[i][c], rows[r][c]);
        axpy(rows[i], q, rows[r]);
        if (sgn(rows[i][c]) != 0) done = false;
      }
      if (done) break;
    }
    if (r >= rows.size() || sgn(rows[r][c]) == 0) continue;
    if (sgn(rows[r][c]) < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(rows[i][c], rows[r][c]);
      if (sgn(q) != 0) axpy(rows[i], q, rows[r]);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  rows.resize(r);
  std::vector<IntVector> out;
  out.reserve(r);
  for (auto& row : rows) out.emplace_back(std::move(row));
  return out;
}

bool in_lattice(std::span<const IntVector> basis, const IntVector& v) {
  IntVector rest = v;
  for (const auto& b : basis) {
    std::size_t c = 0;
    while (c < b.dim() && sgn(b[c]) == 0) ++c;
    if (c == b.dim()) continue;
    for (std::size_t j = 0; j < c; ++j)
      if (sgn(rest[j]) != 0) return false;
    if (!mpz_divisible_p(rest[c].get_mpz_t(), b[c].get_mpz_t())) return false;
    Integer q = rest[c] / b[c];
    rest -= q * b;
  }
  return rest.is_zero();
}

namespace {

// Raw 64-bit draws reduced by modulo: std::uniform_int_distribution is not
// reproducible across standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t range) { return rng() % range; }

}  // namespace

RatMatrix random_unimodular(std::size_t n, std::uint64_t seed, const Integer& entry_bound) {
  if (n == 0) throw std::invalid_argument("random_unimodular: n must be positive");
  if (sgn(entry_bound) <= 0) throw std::invalid_argument("random_unimodular: entry_bound must be positive");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Integer>> m;

  for (std::size_t attempt = 0;; ++attempt) {
    m.assign(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    // Shrink the number of operations on repeated failures so the loop
    // always terminates: a single shear has entries in {0, ±1}.
    std::size_t ops = 3 * n;
    std::size_t shrink = attempt / 64;
    ops = shrink >= ops ? 1 : ops - shrink;
    for (std::size_t k = 0; k < ops; ++k) {
      std::uint64_t kind = draw(rng, 4);
      std::size_t i = draw(rng, n);
      if (kind == 0) {
        for (auto& x : m[i]) x = -x;
      } else if (kind == 1 && n > 1) {
        std::size_t j = (i + 1 + draw(rng, n - 1)) % n;
        std::swap(m[i], m[j]);
      } else if (n > 1) {
        std::size_t j = (i + 1 + draw(rng, n - 1)) % n;
        Integer c = draw(rng, 2) == 0 ? 1 : -1;
        for (std::size_t col = 0; col < n; ++col) m[i][col] += c * m[j][col];
      }
    }
    bool ok = true;
    for (const auto& row : m)
      for (const auto& x : row)
        if (cmp_abs(x, entry_bound) > 0) ok = false;
    if (ok) break;
  }

  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, Rational(m[i][j]));
  return out;
}

}  // namespace rectrep::exactlin
