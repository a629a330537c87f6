#include "rectrep/exactlin/int_vector.hpp"

#include <stdexcept>

namespace rectrep::exactlin {

IntVector::IntVector(std::size_t dim) : coords_(dim, Integer(0)) {}

IntVector::IntVector(std::initializer_list<long> values) {
  coords_.reserve(values.size());
  for (long v : values) coords_.emplace_back(v);
}

IntVector::IntVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}

bool IntVector::is_zero() const {
  for (const auto& c : coords_)
    if (sgn(c) != 0) return false;
  return true;
}

IntVector& IntVector::operator+=(const IntVector& other) {
  if (other.dim() != dim()) throw std::invalid_argument("IntVector: dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

IntVector& IntVector::operator-=(const IntVector& other) {
  if (other.dim() != dim()) throw std::invalid_argument("IntVector: dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

IntVector& IntVector::operator*=(const Integer& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

IntVector IntVector::operator-() const {
  IntVector r(*this);
  for (auto& c : r.coords_) c = -c;
  return r;
}

bool operator==(const IntVector& a, const IntVector& b) { return a.coords_ == b.coords_; }

bool operator<(const IntVector& a, const IntVector& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

IntVector IntVector::concat(const IntVector& a, const IntVector& b) {
  std::vector<Integer> c;
  c.reserve(a.dim() + b.dim());
  c.insert(c.end(), a.coords_.begin(), a.coords_.end());
  c.insert(c.end(), b.coords_.begin(), b.coords_.end());
  return IntVector(std::move(c));
}

IntVector IntVector::slice(std::size_t offset, std::size_t length) const {
  if (offset + length > dim()) throw std::out_of_range("IntVector::slice");
  return IntVector(std::vector<Integer>(coords_.begin() + static_cast<std::ptrdiff_t>(offset),
                                        coords_.begin() + static_cast<std::ptrdiff_t>(offset + length)));
}

std::string IntVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coords_[i].get_str();
  }
  return s + ")";
}

std::size_t IntVectorHash::operator()(const IntVector& v) const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& c : v.coords()) {
    const mpz_srcptr z = c.get_mpz_t();
    std::size_t limb = mpz_size(z) ? static_cast<std::size_t>(mpz_getlimbn(z, 0)) : 0;
    h ^= limb + static_cast<std::size_t>(mpz_sgn(z) + 1) * 0x9e3779b97f4a7c15ULL;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& c : v.coords()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

}  // namespace rectrep::exactlin
