// Freudenthal's multiplicity recursion over dominant weights.
//
// Weight coordinates are handled as 64-bit integers after a range check;
// multiplicities are arbitrary precision.

#include "rectrep/charcalc/character.hpp"
#include "rectrep/liealg/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace rectrep::charcalc {

namespace {

using Vec = std::vector<long>;
constexpr long kCoordLimit = 1'000'000;

struct TypeData {
  std::size_t n = 0;
  liealg::IntMatrix cartan;
  std::vector<Vec> roots;       // fundamental coordinates
  std::vector<Vec> root_gram;   // G * root, for pairings
  std::vector<long> root_norm;  // (root, root) scaled
  liealg::WeightForm form;
};

TypeData make_type_data(const SimpleType& t) {
  TypeData d;
  d.n = static_cast<std::size_t>(t.rank());
  d.cartan = liealg::cartan_matrix(t);
  d.form = liealg::weight_form(t);
  for (const auto& r : liealg::positive_roots(t)) {
    Vec v(d.n);
    for (std::size_t i = 0; i < d.n; ++i) v[i] = r[i].get_si();
    Vec gv(d.n, 0);
    for (std::size_t i = 0; i < d.n; ++i)
      for (std::size_t j = 0; j < d.n; ++j) gv[i] += d.form.gram[i][j] * v[j];
    long norm = 0;
    for (std::size_t i = 0; i < d.n; ++i) norm += v[i] * gv[i];
    d.roots.push_back(v);
    d.root_gram.push_back(gv);
    d.root_norm.push_back(norm);
  }
  return d;
}

long dot(const Vec& a, const Vec& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

long norm(const TypeData& d, const Vec& x) {
  long s = 0;
  for (std::size_t i = 0; i < d.n; ++i)
    for (std::size_t j = 0; j < d.n; ++j) s += x[i] * d.form.gram[i][j] * x[j];
  return s;
}

void reflect_in_place(const TypeData& d, Vec& x, std::size_t i) {
  const long k = x[i];
  for (std::size_t j = 0; j < d.n; ++j) x[j] -= k * d.cartan[j][i];
}

Vec dominant(const TypeData& d, Vec x) {
  while (true) {
    std::size_t i = 0;
    while (i < d.n && x[i] >= 0) ++i;
    if (i == d.n) return x;
    reflect_in_place(d, x, i);
  }
}

Vec to_vec(const Weight& w) {
  Vec v(w.dim());
  for (std::size_t i = 0; i < w.dim(); ++i) {
    if (exactlin::cmp_abs(w[i], Integer(kCoordLimit)) > 0) throw std::overflow_error("highest weight coordinate too large");
    v[i] = w[i].get_si();
  }
  return v;
}

Weight to_weight(const Vec& v) {
  Weight w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i];
  return w;
}

std::map<Vec, Integer> freudenthal(const TypeData& d, const Vec& hw) {
  // Dominant weights of the irreducible: saturate root strings from hw.
  std::set<Vec> dom{hw};
  std::deque<Vec> queue{hw};
  while (!queue.empty()) {
    Vec mu = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < d.roots.size(); ++a) {
      long pairing = 2 * dot(mu, d.root_gram[a]);
      if (pairing <= 0) continue;
      long top = pairing / d.root_norm[a];
      Vec x = mu;
      for (long k = 1; k <= top; ++k) {
        for (std::size_t j = 0; j < d.n; ++j) x[j] -= d.roots[a][j];
        Vec y = dominant(d, x);
        if (dom.insert(y).second) queue.push_back(y);
      }
    }
  }

  Vec rho(d.n, 1);
  auto shifted_norm = [&](const Vec& mu) {
    Vec s = mu;
    for (std::size_t i = 0; i < d.n; ++i) s[i] += rho[i];
    return norm(d, s);
  };

  std::vector<Vec> order(dom.begin(), dom.end());
  std::vector<long> key(order.size());
  std::vector<std::size_t> idx(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    key[i] = shifted_norm(order[i]);
    idx[i] = i;
  }
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (key[a] != key[b]) return key[a] > key[b];
    return order[a] < order[b];
  });

  std::map<Vec, Integer> mult;
  const long top_norm = shifted_norm(hw);
  for (std::size_t i : idx) {
    const Vec& mu = order[i];
    if (mu == hw) {
      mult[mu] = 1;
      continue;
    }
    Integer sum = 0;
    for (std::size_t a = 0; a < d.roots.size(); ++a) {
      Vec x = mu;
      while (true) {
        for (std::size_t j = 0; j < d.n; ++j) x[j] += d.roots[a][j];
        auto it = mult.find(dominant(d, x));
        if (it == mult.end()) break;
        sum += it->second * dot(x, d.root_gram[a]);
      }
    }
    const long denom = top_norm - key[i];
    Integer num = 2 * sum;
    if (denom <= 0 || !mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(denom)))
      throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
    num /= denom;
    if (sgn(num) > 0) mult[mu] = num;
  }
  return mult;
}

struct Memo {
  std::mutex mu;
  std::map<SimpleType, std::shared_ptr<const TypeData>> types;
  std::map<std::pair<SimpleType, Vec>, std::shared_ptr<const std::map<Vec, Integer>>> dominant;
  std::map<std::pair<SimpleType, Vec>, std::shared_ptr<const FormalCharacter>> full;
};

Memo& memo() {
  static Memo m;
  return m;
}

std::shared_ptr<const TypeData> type_data(const SimpleType& t) {
  auto& m = memo();
  {
    std::lock_guard<std::mutex> lock(m.mu);
    auto it = m.types.find(t);
    if (it != m.types.end()) return it->second;
  }
  auto d = std::make_shared<const TypeData>(make_type_data(t));
  std::lock_guard<std::mutex> lock(m.mu);
  return m.types.emplace(t, d).first->second;
}

std::shared_ptr<const std::map<Vec, Integer>> dominant_memo(const SimpleType& t, const Vec& hw) {
  auto& m = memo();
  auto key = std::make_pair(t, hw);
  {
    std::lock_guard<std::mutex> lock(m.mu);
    auto it = m.dominant.find(key);
    if (it != m.dominant.end()) return it->second;
  }
  auto d = type_data(t);
  auto value = std::make_shared<const std::map<Vec, Integer>>(freudenthal(*d, hw));
  std::lock_guard<std::mutex> lock(m.mu);
  return m.dominant.emplace(key, value).first->second;
}

void check_hw(const SimpleType& t, const Weight& hw) {
  if (hw.dim() != static_cast<std::size_t>(t.rank()))
    throw std::invalid_argument("highest weight length does not match the rank of " + t.name());
  if (!liealg::is_dominant(hw)) throw std::invalid_argument("highest weight is not dominant: " + hw.to_string());
}

}  // namespace

std::map<Weight, Integer> dominant_multiplicities(const SimpleType& t, const Weight& hw) {
  check_hw(t, hw);
  auto m = dominant_memo(t, to_vec(hw));
  std::map<Weight, Integer> out;
  for (const auto& [v, k] : *m) out.emplace(to_weight(v), k);
  return out;
}

// Full character of one simple irreducible: dominant multiplicities
// spread over Weyl orbits.
std::shared_ptr<const FormalCharacter> simple_irreducible(const SimpleType& t, const Weight& hw) {
  check_hw(t, hw);
  const Vec key_hw = to_vec(hw);
  auto& m = memo();
  auto key = std::make_pair(t, key_hw);
  {
    std::lock_guard<std::mutex> lock(m.mu);
    auto it = m.full.find(key);
    if (it != m.full.end()) return it->second;
  }
  auto d = type_data(t);
  auto dom = dominant_memo(t, key_hw);
  std::map<Weight, Integer> entries;
  for (const auto& [mu, k] : *dom) {
    std::set<Vec> seen{mu};
    std::deque<Vec> queue{mu};
    while (!queue.empty()) {
      Vec x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < d->n; ++i) {
        if (x[i] == 0) continue;
        Vec y = x;
        reflect_in_place(*d, y, i);
        if (seen.insert(y).second) queue.push_back(y);
      }
    }
    for (const auto& x : seen) entries.emplace(to_weight(x), k);
  }
  auto value = std::make_shared<const FormalCharacter>(SemisimpleAlgebra({t}), std::move(entries));
  std::lock_guard<std::mutex> lock(m.mu);
  return m.full.emplace(key, value).first->second;
}

}  // namespace rectrep::charcalc
