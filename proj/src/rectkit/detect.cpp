#include "rectrep/rectkit/detect.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace rectrep::rectkit {

std::string to_string(RectReason r) {
  switch (r) {
    case RectReason::Rectangular: return "rectangular";
    case RectReason::Empty: return "empty";
    case RectReason::Multiplicity: return "multiplicity";
    case RectReason::Asymmetric: return "asymmetry";
    case RectReason::BoxMismatch: return "box mismatch";
  }
  return "unknown";
}

namespace {

using PointSet = std::unordered_set<IntVector, exactlin::IntVectorHash>;

bool independent(const std::vector<IntVector>& vs) {
  return exactlin::rank(exactlin::RatMatrix::from_int_rows(vs)) == vs.size();
}

// Every point of the box, enumerated with a mixed-radix counter.
template <typename Fn>
bool for_each_box_point(const IntVector& vertex, const std::vector<IntVector>& edges,
                        const std::vector<std::uint64_t>& degrees, Fn&& fn) {
  std::vector<std::uint64_t> c(edges.size(), 0);
  IntVector p = vertex;
  while (true) {
    if (!fn(p)) return false;
    std::size_t i = 0;
    for (; i < edges.size(); ++i) {
      if (c[i] < degrees[i]) {
        ++c[i];
        p += edges[i];
        break;
      }
      p -= Integer(static_cast<unsigned long>(c[i])) * edges[i];
      c[i] = 0;
    }
    if (i == edges.size()) return true;
  }
}

}  // namespace

RectVerdict diagnose_rectangular(const WeightMultiset& s) {
  RectVerdict v;
  if (s.empty()) {
    v.reason = RectReason::Empty;
    return v;
  }
  for (const auto& [p, m] : s.points)
    if (m != 1) {
      v.reason = RectReason::Multiplicity;
      return v;
    }
  for (const auto& [p, m] : s.points)
    if (!s.points.count(-p)) {
      v.reason = RectReason::Asymmetric;
      return v;
    }

  v.reason = RectReason::BoxMismatch;
  const IntVector vertex = s.points.begin()->first;
  std::vector<IntVector> diffs;
  diffs.reserve(s.size());
  for (const auto& [p, m] : s.points) diffs.push_back(p - vertex);
  PointSet dset(diffs.begin(), diffs.end());

  // Differences are lexicographically non-negative; scanning them in
  // order, u is reducible iff u - e lies in D \ {0} for an edge e found
  // earlier (every summand of a decomposition is lexicographically smaller).
  std::vector<IntVector> edges;
  for (const auto& u : diffs) {
    if (u.is_zero()) continue;
    bool reducible = false;
    for (const auto& e : edges) {
      IntVector r = u - e;
      if (!r.is_zero() && dset.count(r)) {
        reducible = true;
        break;
      }
    }
    if (reducible) continue;
    edges.push_back(u);
    if (edges.size() > s.dim) return v;
  }
  if (!edges.empty() && !independent(edges)) return v;

  std::vector<std::uint64_t> degrees;
  std::uint64_t volume = 1;
  for (const auto& e : edges) {
    std::uint64_t d = 0;
    IntVector x = e;
    while (dset.count(x)) {
      ++d;
      x += e;
    }
    degrees.push_back(d);
    volume *= d + 1;
    if (volume > s.size()) return v;
  }
  if (volume != s.size()) return v;

  IntVector sym = vertex + vertex;
  for (std::size_t i = 0; i < edges.size(); ++i) sym += Integer(static_cast<unsigned long>(degrees[i])) * edges[i];
  if (!sym.is_zero()) return v;

  IntVector origin(s.dim);
  bool covered = for_each_box_point(origin, edges, degrees, [&](const IntVector& p) { return dset.count(p) > 0; });
  if (!covered) return v;

  v.reason = RectReason::Rectangular;
  const std::uint64_t padding = s.dim - edges.size();
  v.certificate = RectCertificate{vertex, std::move(edges), std::move(degrees), padding};
  return v;
}

std::optional<RectCertificate> detect_rectangular(const WeightMultiset& s) {
  return diagnose_rectangular(s).certificate;
}

bool verify_certificate(const WeightMultiset& s, const RectCertificate& cert) {
  if (cert.edges.size() != cert.degrees.size()) return false;
  if (cert.edges.size() + cert.padding != s.dim) return false;
  if (cert.vertex.dim() != s.dim) return false;
  for (const auto& e : cert.edges)
    if (e.dim() != s.dim) return false;
  if (!cert.edges.empty() && !independent(cert.edges)) return false;
  for (const auto& [p, m] : s.points)
    if (m != 1) return false;

  IntVector sym = cert.vertex + cert.vertex;
  for (std::size_t i = 0; i < cert.edges.size(); ++i)
    sym += Integer(static_cast<unsigned long>(cert.degrees[i])) * cert.edges[i];
  if (!sym.is_zero()) return false;

  // Independent edges make box points distinct, so covering S with the
  // right count is equality.
  Integer volume = 1;
  for (auto d : cert.degrees) volume *= static_cast<unsigned long>(d + 1);
  if (volume != static_cast<unsigned long>(s.size())) return false;
  return for_each_box_point(cert.vertex, cert.edges, cert.degrees,
                            [&](const IntVector& p) { return s.points.count(p) > 0; });
}

std::vector<std::uint64_t> lengths(const RectCertificate& cert) {
  std::vector<std::uint64_t> out;
  for (auto d : cert.degrees) out.push_back(d + 1);
  out.insert(out.end(), cert.padding, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::uint64_t> is_hypercubic(const RectCertificate& cert) {
  auto ls = lengths(cert);
  if (ls.empty()) return std::nullopt;
  if (ls.front() != ls.back()) return std::nullopt;
  return ls.front();
}

Integer automorphism_order(const std::vector<std::uint64_t>& lengths) {
  std::map<std::uint64_t, unsigned long> count;
  for (auto l : lengths) {
    if (l < 2) throw std::invalid_argument("automorphism_order: every length must be at least 2");
    ++count[l];
  }
  Integer order = 1;
  for (const auto& [l, n] : count) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    order *= f;
    mpz_mul_2exp(order.get_mpz_t(), order.get_mpz_t(), n);
  }
  return order;
}

}  // namespace rectrep::rectkit
