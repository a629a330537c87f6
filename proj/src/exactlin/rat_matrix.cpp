#include "rectrep/exactlin/rat_matrix.hpp"

#include <stdexcept>

namespace rectrep::exactlin {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("RatMatrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

RatMatrix RatMatrix::from_int_rows(std::span<const IntVector> rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().dim();
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != cols) throw std::invalid_argument("RatMatrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.entries_[r * cols + c] = Rational(rows[r][c]);
  }
  return m;
}

void RatMatrix::set(std::size_t r, std::size_t c, Rational value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("RatMatrix::set");
  value.canonicalize();
  entries_[r * cols_ + c] = std::move(value);
}

bool RatMatrix::is_integral() const {
  for (const auto& e : entries_)
    if (e.get_den() != 1) return false;
  return true;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = at(r, c);
  return t;
}

std::vector<Rational> RatMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("RatMatrix::apply: dimension mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
  return out;
}

IntVector RatMatrix::apply_integral(const IntVector& v) const {
  if (v.dim() != cols_) throw std::invalid_argument("RatMatrix::apply_integral: dimension mismatch");
  if (!is_integral()) throw std::invalid_argument("RatMatrix::apply_integral: matrix not integral");
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c).get_num() * v[c];
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: product dimension mismatch");
  RatMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a.at(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p.entries_[i * b.cols_ + j] += x * b.at(k, j);
    }
  return p;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string RatMatrix::to_string() const {
  std::string s = "(";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) s += ",";
    s += "(";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) s += ",";
      s += at(r, c).get_str();
    }
    s += ")";
  }
  return s + ")";
}

std::vector<Rational> to_rationals(const IntVector& v) {
  std::vector<Rational> out;
  out.reserve(v.dim());
  for (const auto& c : v.coords()) out.emplace_back(c);
  return out;
}

namespace {

// Clear denominators row by row so Bareiss elimination runs over Z.
std::vector<std::vector<Integer>> integral_rows(const RatMatrix& m) {
  std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c).get_num() * (l / m.at(r, c).get_den());
  }
  return rows;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  auto a = integral_rows(m);
  const std::size_t rows = m.rows(), cols = m.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(a[piv][c]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref_in_place(std::vector<std::vector<Rational>>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && sgn(a[piv][c]) == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Rational>> solve_exact(const RatMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_exact: dimension mismatch");
  const std::size_t n = a.cols();
  std::vector<std::vector<Rational>> aug(a.rows(), std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a.at(i, j);
    aug[i][n] = b[i];
  }
  auto pivots = rref_in_place(aug, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][n];
  return x;
}

std::optional<std::vector<Rational>> solve_exact(const RatMatrix& a, const IntVector& b) {
  auto q = to_rationals(b);
  return solve_exact(a, q);
}

RatMatrix row_reduced_basis(const RatMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);
  auto pivots = rref_in_place(a, m.cols());
  a.resize(pivots.size());
  RatMatrix out(a.size(), m.cols());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, a[i][j]);
  return out;
}

}  // namespace rectrep::exactlin
