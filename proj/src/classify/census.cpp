#include "rectrep/classify/census.hpp"

#include "rectrep/exactlin/rat_matrix.hpp"

#include <map>
#include <stdexcept>

namespace rectrep::classify {

using exactlin::RatMatrix;
using exactlin::Rational;

namespace {

RatMatrix span_basis(const std::vector<IntVector>& rows) { return exactlin::row_reduced_basis(RatMatrix::from_int_rows(rows)); }

bool contains(const RatMatrix& basis, const IntVector& v) {
  RatMatrix m(basis.rows() + 1, basis.cols());
  for (std::size_t r = 0; r < basis.rows(); ++r)
    for (std::size_t c = 0; c < basis.cols(); ++c) m.set(r, c, basis.at(r, c));
  for (std::size_t c = 0; c < basis.cols(); ++c) m.set(basis.rows(), c, Rational(v[c]));
  return exactlin::rank(m) == basis.rows();
}

bool is_unit(const IntVector& v) {
  int nonzero = 0;
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (v[i] != 0) ++nonzero;
  return nonzero == 1;
}

RootSubspace describe(const RatMatrix& basis, const std::vector<IntVector>& roots) {
  RootSubspace s;
  s.standard = true;
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    std::vector<Rational> row;
    int nonzero = 0;
    for (std::size_t c = 0; c < basis.cols(); ++c) {
      row.push_back(basis.at(r, c));
      if (basis.at(r, c) != 0) ++nonzero;
    }
    if (nonzero != 1) s.standard = false;
    s.basis.push_back(std::move(row));
  }
  for (const auto& root : roots)
    if (contains(basis, root)) (is_unit(root) ? s.short_roots : s.long_roots)++;
  return s;
}

std::string describe_basis(const RootSubspace& s) {
  std::string out = "span{";
  for (std::size_t r = 0; r < s.basis.size(); ++r) {
    if (r) out += ", ";
    out += "(";
    for (std::size_t c = 0; c < s.basis[r].size(); ++c) {
      if (c) out += ",";
      out += s.basis[r][c].get_str();
    }
    out += ")";
  }
  return out + "}";
}

// Distinct spans of k linearly independent vectors drawn from gens.
std::map<std::string, RatMatrix> spans(const std::vector<IntVector>& gens, std::size_t k) {
  std::map<std::string, RatMatrix> out;
  std::vector<std::size_t> idx(k);
  auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    if (depth == k) {
      std::vector<IntVector> rows;
      for (auto i : idx) rows.push_back(gens[i]);
      RatMatrix b = span_basis(rows);
      if (b.rows() == k) out.emplace(b.to_string(), std::move(b));
      return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) {
      idx[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Vectors with exactly four entries ±1, the first of them +1.
std::vector<IntVector> complement_normals(int n) {
  std::vector<IntVector> out;
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t a = 0; a < un; ++a)
    for (std::size_t b = a + 1; b < un; ++b)
      for (std::size_t c = b + 1; c < un; ++c)
        for (std::size_t d = c + 1; d < un; ++d)
          for (int signs = 0; signs < 8; ++signs) {
            IntVector v(un);
            v[a] = 1;
            v[b] = (signs & 1) ? -1 : 1;
            v[c] = (signs & 2) ? -1 : 1;
            v[d] = (signs & 4) ? -1 : 1;
            out.push_back(v);
          }
  return out;
}

}  // namespace

std::vector<IntVector> b_long_roots(int n) {
  std::vector<IntVector> out;
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = i + 1; j < un; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          IntVector v(un);
          v[i] = si;
          v[j] = sj;
          out.push_back(v);
        }
  return out;
}

std::vector<IntVector> b_roots(int n) {
  auto out = b_long_roots(n);
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < un; ++i)
    for (int s : {1, -1}) {
      IntVector v(un);
      v[i] = s;
      out.push_back(v);
    }
  return out;
}

bool is_complement_in_support(const RootSubspace& s, const IntVector& v) {
  std::size_t support = 0;
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (v[i] != 0) ++support;
  if (s.basis.size() + 1 != support) return false;
  for (const auto& row : s.basis) {
    Rational dot = 0;
    for (std::size_t i = 0; i < v.dim(); ++i) {
      if (v[i] == 0 && row[i] != 0) return false;
      dot += row[i] * Rational(v[i]);
    }
    if (dot != 0) return false;
  }
  return true;
}

PlaneCensus roots_in_plane_census(int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("plane census supports 2 <= n <= 4");
  PlaneCensus c;
  c.n = n;
  const auto roots = b_roots(n);
  const auto planes = spans(roots, 2);
  c.planes = planes.size();
  for (const auto& [key, basis] : planes) {
    RootSubspace s = describe(basis, roots);
    if (s.long_roots + s.short_roots < 8) continue;
    if (!s.standard || s.long_roots != 4 || s.short_roots != 4)
      c.violations.push_back(describe_basis(s) + " holds " + std::to_string(s.long_roots) + " long and " +
                             std::to_string(s.short_roots) + " short roots");
    c.rich.push_back(std::move(s));
  }
  return c;
}

LongRootCensus long_roots_3space_census(int n) {
  if (n != 3 && n != 4) throw std::invalid_argument("long-root census supports n = 3 or 4");
  LongRootCensus c;
  c.n = n;
  const auto roots = b_long_roots(n);
  const auto spaces = spans(roots, 3);
  const auto normals = complement_normals(n);
  c.spaces = spaces.size();
  for (const auto& [key, basis] : spaces) {
    RootSubspace s = describe(basis, roots);
    if (s.long_roots < 12) continue;
    bool complement = false;
    for (const auto& v : normals)
      if (is_complement_in_support(s, v)) complement = true;
    if (s.standard) {
      ++c.standard_rich;
    } else if (complement) {
      ++c.complement_rich;
      if (s.long_roots != 12)
        c.violations.push_back(describe_basis(s) + " is a complement but holds " + std::to_string(s.long_roots) +
                               " long roots");
    } else {
      c.violations.push_back(describe_basis(s) + " holds " + std::to_string(s.long_roots) +
                             " long roots but is neither standard nor a complement");
    }
    c.rich.push_back(std::move(s));
  }
  return c;
}

}  // namespace rectrep::classify
