#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace rectrep::exactlin {

using Integer = mpz_class;
using Rational = mpq_class;

// Arbitrary-precision integer vector. Ordering is lexicographic on
// coordinates (shorter vectors first when dimensions differ).
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t dim);
  IntVector(std::initializer_list<long> values);
  explicit IntVector(std::vector<Integer> coords);

  std::size_t dim() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }

  bool is_zero() const;

  IntVector& operator+=(const IntVector& other);
  IntVector& operator-=(const IntVector& other);
  IntVector& operator*=(const Integer& scalar);

  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator*(const Integer& s, IntVector v) { return v *= s; }
  IntVector operator-() const;

  friend bool operator==(const IntVector& a, const IntVector& b);
  friend bool operator!=(const IntVector& a, const IntVector& b) { return !(a == b); }
  friend bool operator<(const IntVector& a, const IntVector& b);

  // Concatenation of coordinate blocks.
  static IntVector concat(const IntVector& a, const IntVector& b);
  IntVector slice(std::size_t offset, std::size_t length) const;

  // "(a,b,c)"
  std::string to_string() const;

 private:
  std::vector<Integer> coords_;
};

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const;
};

inline int cmp_abs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// gcd of the absolute values of all coordinates; 0 for the zero vector.
Integer content(const IntVector& v);

}  // namespace rectrep::exactlin
