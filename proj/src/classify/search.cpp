#include "rectrep/classify/search.hpp"

#include "rectrep/liealg/root_system.hpp"
#include "rectrep/rectkit/detect.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace rectrep::classify {

using charcalc::RepSpec;
using exactlin::Integer;
using exactlin::IntVector;
using exactlin::Rational;
using liealg::SemisimpleAlgebra;
using liealg::SimpleType;
using liealg::Weight;

namespace {

constexpr std::size_t kMaxRank = 8;
constexpr std::uint64_t kMaxDim = 4096;

using Pt = std::array<std::int32_t, kMaxRank>;
using Vec = std::array<std::int64_t, kMaxRank>;

struct PtHash {
  std::size_t operator()(const Pt& p) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : p) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

Pt to_pt(const Weight& w) {
  Pt p{};
  for (std::size_t i = 0; i < w.dim(); ++i) p[i] = static_cast<std::int32_t>(w[i].get_si());
  return p;
}

Pt negate(Pt p) {
  for (auto& x : p) x = -x;
  return p;
}

// Row-style Hermite basis over int64; rows[i] has its first nonzero entry
// at column i when present.
struct SmallLattice {
  std::array<Vec, kMaxRank> rows{};

  bool add(Vec v, std::size_t n) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      if (rows[i][i] == 0) {
        if (v[i] < 0)
          for (std::size_t j = 0; j < n; ++j) v[j] = -v[j];
        rows[i] = v;
        return true;
      }
      Vec a = rows[i], b = v;
      while (b[i] != 0) {
        const std::int64_t q = a[i] / b[i];
        for (std::size_t j = 0; j < n; ++j) a[j] -= q * b[j];
        std::swap(a, b);
      }
      if (a[i] < 0)
        for (std::size_t j = 0; j < n; ++j) a[j] = -a[j];
      if (a != rows[i]) {
        changed = true;
        rows[i] = a;
      }
      v = b;
      for (std::size_t j = 0; j < n; ++j)
        if (v[j] > (1ll << 40) || v[j] < -(1ll << 40)) throw std::overflow_error("lattice entries too large");
    }
    return changed;
  }

  // Largest h with v/h in the lattice, for v already in the lattice:
  // the gcd of its coordinates in the Hermite basis.
  std::int64_t content(Vec v, std::size_t n) const {
    std::int64_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      const std::int64_t q = v[i] / rows[i][i];
      h = std::gcd(h, q < 0 ? -q : q);
      for (std::size_t j = i; j < n; ++j) v[j] -= q * rows[i][j];
    }
    return h;
  }
};

// Per-point flag byte over the bounding box of the candidate weights; a
// dense array when the box is small, a hash map otherwise.
class PointFlags {
 public:
  void init(const Pt& lo, const Pt& hi, std::size_t n) {
    n_ = n;
    lo_ = lo;
    hi_ = hi;
    std::uint64_t volume = 1;
    for (std::size_t j = 0; j < n; ++j) {
      stride_[j] = volume;
      volume *= static_cast<std::uint64_t>(hi[j] - lo[j] + 1);
      if (volume > kDenseLimit) break;
    }
    dense_.clear();
    classes_.clear();
    if (volume <= kDenseLimit) {
      dense_.assign(volume, 0);
      classes_.assign(volume, kUnknown);
    }
  }

  bool inside(const Pt& p) const {
    for (std::size_t j = 0; j < n_; ++j)
      if (p[j] < lo_[j] || p[j] > hi_[j]) return false;
    return true;
  }

  std::uint8_t get(const Pt& p) const {
    if (!dense_.empty()) return dense_[index(p)];
    auto it = sparse_.find(p);
    return it == sparse_.end() ? 0 : it->second;
  }

  std::optional<int> cached_class(const Pt& p) const {
    if (dense_.empty()) return std::nullopt;
    const std::int16_t c = classes_[index(p)];
    if (c == kUnknown) return std::nullopt;
    return c;
  }

  void cache_class(const Pt& p, int c) {
    if (!dense_.empty()) classes_[index(p)] = static_cast<std::int16_t>(c);
  }

  void set(const Pt& p, std::uint8_t v) {
    if (!dense_.empty())
      dense_[index(p)] = v;
    else if (v == 0)
      sparse_.erase(p);
    else
      sparse_[p] = v;
  }

 private:
  static constexpr std::uint64_t kDenseLimit = 1ull << 24;
  static constexpr std::int16_t kUnknown = -2;

  std::size_t index(const Pt& p) const {
    std::uint64_t k = 0;
    for (std::size_t j = 0; j < n_; ++j) k += static_cast<std::uint64_t>(p[j] - lo_[j]) * stride_[j];
    return static_cast<std::size_t>(k);
  }

  std::size_t n_ = 0;
  Pt lo_{}, hi_{};
  std::array<std::uint64_t, kMaxRank> stride_{};
  std::vector<std::uint8_t> dense_;
  std::vector<std::int16_t> classes_;
  std::unordered_map<Pt, std::uint8_t, PtHash> sparse_;
};

struct Irrep {
  Weight hw;
  std::uint64_t dim = 0;
  std::vector<Pt> pts;  // sorted
  int cls = -1;
};

// Weight-lattice classes modulo the root lattice, one residue vector per
// factor packed into a single integer.
class ClassMap {
 public:
  explicit ClassMap(const SemisimpleAlgebra& g) {
    std::uint64_t radix = 1;
    for (std::size_t f = 0; f < g.num_factors(); ++f) {
      const auto& t = g.factor(f);
      const std::size_t r = static_cast<std::size_t>(t.rank());
      std::vector<std::vector<Rational>> cols;
      Integer den = 1;
      for (std::size_t j = 0; j < r; ++j) {
        Weight e(r);
        e[j] = 1;
        cols.push_back(liealg::simple_root_coords(t, e));
        for (const auto& q : cols.back()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
      }
      Block b;
      b.offset = g.offset(f);
      b.size = r;
      b.modulus = den.get_si();
      b.coeffs.assign(r, std::vector<long>(r));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
          Rational x = cols[j][i] * den;
          b.coeffs[i][j] = x.get_num().get_si();
        }
      b.radix = radix;
      for (std::size_t i = 0; i < r; ++i) radix *= static_cast<std::uint64_t>(b.modulus);
      blocks_.push_back(std::move(b));
    }
  }

  std::uint64_t key(const Pt& p) const {
    std::uint64_t k = 0;
    for (const auto& b : blocks_) {
      std::uint64_t scale = b.radix;
      for (std::size_t i = 0; i < b.size; ++i) {
        long s = 0;
        for (std::size_t j = 0; j < b.size; ++j) s += b.coeffs[i][j] * p[b.offset + j];
        s %= b.modulus;
        if (s < 0) s += b.modulus;
        k += static_cast<std::uint64_t>(s) * scale;
        scale *= static_cast<std::uint64_t>(b.modulus);
      }
    }
    return k;
  }

 private:
  struct Block {
    std::size_t offset = 0, size = 0;
    long modulus = 1;
    std::vector<std::vector<long>> coeffs;
    std::uint64_t radix = 1;
  };
  std::vector<Block> blocks_;
};

std::vector<Irrep> factor_irreps(const SimpleType& t, std::uint64_t max_dim) {
  std::vector<Irrep> out;
  const SemisimpleAlgebra g({t});
  for (const auto& hw : small_highest_weights(t, max_dim)) {
    const auto mults = charcalc::dominant_multiplicities(t, hw);
    if (std::any_of(mults.begin(), mults.end(), [](const auto& kv) { return kv.second != 1; })) continue;
    Irrep ir;
    ir.hw = hw;
    const auto chi = charcalc::irreducible_character(g, hw);
    ir.dim = chi.support_size();
    for (const auto& [w, m] : chi.entries()) ir.pts.push_back(to_pt(w));
    out.push_back(std::move(ir));
  }
  return out;
}

class Searcher {
 public:
  Searcher(const SemisimpleAlgebra& g, std::uint64_t max_dim) : g_(g), n_(g.rank()), max_dim_(max_dim), classes_(g) {}

  std::vector<RepSpec> run(SearchStats* stats) {
    build_irreps();
    decided_.assign(by_class_.size(), 0);
    dfs(0);
    if (stats) {
      stats->nodes += nodes_;
      stats->leaves += leaves_;
      stats->candidates += irreps_.size();
    }
    std::sort(found_.begin(), found_.end(),
              [](const RepSpec& a, const RepSpec& b) { return a.highest_weights() < b.highest_weights(); });
    return std::move(found_);
  }

 private:
  enum Flag : std::uint8_t { kForced = 1, kChosen = 2 };

  void build_irreps() {
    std::vector<std::vector<Irrep>> per_factor;
    for (std::size_t f = 0; f < g_.num_factors(); ++f) per_factor.push_back(factor_irreps(g_.factor(f), max_dim_));
    Irrep acc;
    acc.hw = Weight(0);
    acc.dim = 1;
    acc.pts = {Pt{}};
    product(per_factor, 0, acc);

    std::map<std::uint64_t, std::vector<std::size_t>> keyed;
    for (std::size_t i = 0; i < irreps_.size(); ++i) keyed[classes_.key(irreps_[i].pts.front())].push_back(i);
    for (auto& [k, members] : keyed) {
      class_index_[k] = static_cast<int>(by_class_.size());
      for (auto i : members) irreps_[i].cls = static_cast<int>(by_class_.size());
      by_class_.push_back(members);
    }

    Pt lo{}, hi{};
    for (const auto& ir : irreps_)
      for (const auto& p : ir.pts)
        for (std::size_t j = 0; j < n_; ++j) {
          lo[j] = std::min({lo[j], p[j], -p[j]});
          hi[j] = std::max({hi[j], p[j], -p[j]});
        }
    flags_.init(lo, hi, n_);
  }

  void product(const std::vector<std::vector<Irrep>>& per_factor, std::size_t f, const Irrep& acc) {
    if (f == per_factor.size()) {
      Irrep ir = acc;
      std::sort(ir.pts.begin(), ir.pts.end());
      irreps_.push_back(std::move(ir));
      return;
    }
    const std::size_t off = g_.offset(f);
    for (const auto& x : per_factor[f]) {
      if (acc.dim * x.dim > max_dim_) continue;
      Irrep next;
      next.hw = Weight::concat(acc.hw, x.hw);
      next.dim = acc.dim * x.dim;
      next.pts.reserve(next.dim);
      for (const auto& p : acc.pts)
        for (const auto& q : x.pts) {
          Pt r = p;
          for (std::size_t j = 0; j < x.hw.dim(); ++j) r[off + j] = q[j];
          next.pts.push_back(r);
        }
      product(per_factor, f + 1, next);
    }
  }

  int class_of(const Pt& p) {
    if (auto c = flags_.cached_class(p)) return *c;
    auto it = class_index_.find(classes_.key(p));
    const int c = it == class_index_.end() ? -1 : it->second;
    flags_.cache_class(p, c);
    return c;
  }

  std::uint8_t flags(const Pt& p) const { return flags_.get(p); }

  void set_flag(const Pt& p, std::uint8_t bit) {
    const std::uint8_t old = flags_.get(p);
    undo_.emplace_back(p, old);
    flags_.set(p, static_cast<std::uint8_t>(old | bit));
  }

  void restore(std::size_t undo_size, std::size_t forced_size) {
    while (undo_.size() > undo_size) {
      auto [p, old] = undo_.back();
      undo_.pop_back();
      flags_.set(p, old);
    }
    forced_.resize(forced_size);
    forced_cls_.resize(forced_size);
  }

  // Adds p to the forced set. False when this contradicts the decisions
  // taken so far.
  bool force(const Pt& p) {
    if (!flags_.inside(p)) return false;
    const auto fl = flags(p);
    if (fl & kForced) return true;
    const int c = class_of(p);
    if (c < 0) return false;
    if (decided_[static_cast<std::size_t>(c)] && !(fl & kChosen)) return false;
    set_flag(p, kForced);
    forced_.push_back(p);
    forced_cls_.push_back(c);
    if (forced_.size() > max_dim_) return false;
    if (forced_.size() > 1) {
      Vec v{};
      for (std::size_t j = 0; j < n_; ++j) v[j] = static_cast<std::int64_t>(p[j]) - forced_.front()[j];
      if (lattice_.add(v, n_)) lattice_changed_ = true;
    }
    return true;
  }

  bool filled(const Pt& base, const Vec& s, std::int64_t t) const {
    Pt z{};
    for (std::size_t j = 0; j < n_; ++j) z[j] = static_cast<std::int32_t>(base[j] + t * s[j]);
    return flags(z) & kForced;
  }

  // Every lattice point on a segment between two forced points is forced.
  bool close(std::size_t from) {
    for (;;) {
      lattice_changed_ = false;
      for (std::size_t b = from; b < forced_.size(); ++b) {
        for (std::size_t a = 0; a < b; ++a) {
          Vec d{};
          for (std::size_t j = 0; j < n_; ++j) d[j] = static_cast<std::int64_t>(forced_[b][j]) - forced_[a][j];
          const std::int64_t h = lattice_.content(d, n_);
          if (h <= 1) continue;
          {
            Vec s{};
            for (std::size_t j = 0; j < n_; ++j) s[j] = d[j] / h;
            const Pt base = forced_[a];
            // Mostly the segment is already filled; probing three of its
            // points keeps the pass cheap. Skipping only weakens pruning.
            if (h > 3 && filled(base, s, 1) && filled(base, s, h / 2) && filled(base, s, h - 1)) continue;
            for (std::int64_t t = 1; t < h; ++t) {
              Pt z{};
              for (std::size_t j = 0; j < n_; ++j) z[j] = static_cast<std::int32_t>(base[j] + t * s[j]);
              if (!force(z) || !force(negate(z))) return false;
            }
          }
        }
      }
      if (!lattice_changed_) return true;
      from = 0;
    }
  }

  static bool covers(const Irrep& t, const Pt& p) { return std::binary_search(t.pts.begin(), t.pts.end(), p); }

  void dfs(std::size_t ci) {
    ++nodes_;
    if (ci == by_class_.size()) {
      leaf();
      return;
    }
    decided_[ci] = 1;
    std::vector<Pt> need;
    for (std::size_t k = 0; k < forced_.size(); ++k)
      if (forced_cls_[k] == static_cast<int>(ci) && !(flags(forced_[k]) & kChosen)) need.push_back(forced_[k]);
    if (need.empty()) dfs(ci + 1);

    for (std::size_t idx : by_class_[ci]) {
      const Irrep& t = irreps_[idx];
      if (chosen_dim_ + t.dim > max_dim_) continue;
      if (!std::all_of(need.begin(), need.end(), [&](const Pt& p) { return covers(t, p); })) continue;
      const std::size_t undo_size = undo_.size(), forced_size = forced_.size();
      const SmallLattice saved = lattice_;
      lattice_changed_ = false;
      bool ok = true;
      for (const auto& p : t.pts) set_flag(p, kChosen);
      for (const auto& p : t.pts)
        if (!force(p) || !force(negate(p))) {
          ok = false;
          break;
        }
      if (ok) ok = close(lattice_changed_ ? 0 : forced_size);
      if (ok) {
        chosen_.push_back(idx);
        chosen_dim_ += t.dim;
        dfs(ci + 1);
        chosen_dim_ -= t.dim;
        chosen_.pop_back();
      }
      restore(undo_size, forced_size);
      lattice_ = saved;
    }
    decided_[ci] = 0;
  }

  void leaf() {
    if (chosen_.empty()) return;
    ++leaves_;
    for (std::size_t f = 0; f < g_.num_factors(); ++f) {
      const std::size_t off = g_.offset(f), r = static_cast<std::size_t>(g_.factor(f).rank());
      bool acts = false;
      for (auto idx : chosen_)
        for (std::size_t j = 0; j < r && !acts; ++j) acts = irreps_[idx].hw[off + j] != 0;
      if (!acts) return;
    }
    rectkit::WeightMultiset s;
    s.dim = n_;
    for (const auto& p : forced_) {
      IntVector v(n_);
      for (std::size_t j = 0; j < n_; ++j) v[j] = p[j];
      s.add(v);
    }
    if (!rectkit::detect_rectangular(s)) return;
    std::vector<Weight> hws;
    for (auto idx : chosen_) hws.push_back(irreps_[idx].hw);
    found_.emplace_back(g_, hws);
  }

  const SemisimpleAlgebra& g_;
  std::size_t n_;
  std::uint64_t max_dim_;
  ClassMap classes_;

  std::vector<Irrep> irreps_;
  std::vector<std::vector<std::size_t>> by_class_;
  std::unordered_map<std::uint64_t, int> class_index_;

  std::vector<Pt> forced_;
  std::vector<int> forced_cls_;
  PointFlags flags_;
  std::vector<std::pair<Pt, std::uint8_t>> undo_;
  SmallLattice lattice_;
  bool lattice_changed_ = false;
  std::vector<char> decided_;
  std::vector<std::size_t> chosen_;
  std::uint64_t chosen_dim_ = 0;

  std::vector<RepSpec> found_;
  std::uint64_t nodes_ = 0, leaves_ = 0;
};

void grow(const SimpleType& t, const SemisimpleAlgebra& g, Weight& hw, std::size_t i, std::uint64_t max_dim,
          std::vector<Weight>& out) {
  if (i == hw.dim()) {
    out.push_back(hw);
    return;
  }
  // Dimension is increasing in every coordinate.
  for (long x = 0;; ++x) {
    hw[i] = x;
    if (charcalc::weyl_dimension(g, hw) > max_dim) break;
    grow(t, g, hw, i + 1, max_dim, out);
  }
  hw[i] = 0;
}

}  // namespace

std::vector<Weight> small_highest_weights(const SimpleType& t, std::uint64_t max_dim) {
  const SemisimpleAlgebra g({t});
  Weight hw(static_cast<std::size_t>(t.rank()));
  std::vector<Weight> out;
  grow(t, g, hw, 0, max_dim, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RepSpec> search_rectangular(const SemisimpleAlgebra& g, std::uint64_t max_dim, SearchStats* stats) {
  if (g.rank() == 0 || g.rank() > kMaxRank) throw std::invalid_argument("search supports ranks 1 to 8");
  if (max_dim > kMaxDim) throw std::invalid_argument("search supports dimensions up to 4096");
  return Searcher(g, max_dim).run(stats);
}

}  // namespace rectrep::classify
