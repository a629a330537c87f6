#pragma once

#include "rectrep/exactlin/int_vector.hpp"

#include <optional>
#include <span>
#include <vector>

namespace rectrep::exactlin {

// Dense row-major rational matrix. Entries are kept canonical
// (lowest terms, positive denominator).
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix from_int_rows(std::span<const IntVector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Rational value);

  bool is_integral() const;
  RatMatrix transpose() const;

  // Row-vector times integer vector is not provided; apply() is M·v.
  std::vector<Rational> apply(std::span<const Rational> v) const;
  // M·v for an integral matrix; throws if M has a non-integer entry.
  IntVector apply_integral(const IntVector& v) const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

std::size_t rank(const RatMatrix& m);

std::optional<std::vector<Rational>> solve_exact(const RatMatrix& a, std::span<const Rational> b);
std::optional<std::vector<Rational>> solve_exact(const RatMatrix& a, const IntVector& b);

Rational determinant(const RatMatrix& m);

// Reduced row echelon form with zero rows dropped; canonical for the row span.
RatMatrix row_reduced_basis(const RatMatrix& m);

std::vector<Rational> to_rationals(const IntVector& v);

}  // namespace rectrep::exactlin
