#include "rectrep/classify/enumerate.hpp"

#include "rectrep/classify/canonical.hpp"
#include "rectrep/classify/decompose.hpp"
#include "rectrep/rectkit/detect.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace rectrep::classify {

using liealg::Family;
using liealg::SimpleType;
using liealg::Weight;

namespace {

void check_bounds(std::size_t max_rank, std::uint64_t max_dim) {
  if (max_rank < 1 || max_rank > kEnumerateMaxRank)
    throw BoundsError("max rank must be between 1 and " + std::to_string(kEnumerateMaxRank));
  if (max_dim < 1 || max_dim > kEnumerateMaxDim)
    throw BoundsError("max dim must be between 1 and " + std::to_string(kEnumerateMaxDim));
}

bool spec_less(const RepSpec& a, const RepSpec& b) {
  if (!(a.algebra() == b.algebra())) return a.algebra() < b.algebra();
  const auto& x = a.summands();
  const auto& y = b.summands();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                      [](const charcalc::Summand& s, const charcalc::Summand& t) {
                                        if (s.highest_weight != t.highest_weight) return s.highest_weight < t.highest_weight;
                                        return s.multiplicity < t.multiplicity;
                                      });
}

std::vector<RepSpec> sorted_unique(std::map<std::string, RepSpec>& by_key) {
  std::vector<RepSpec> out;
  out.reserve(by_key.size());
  for (auto& [k, s] : by_key) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), spec_less);
  return out;
}

std::uint64_t dim_of(const RepSpec& s) { return charcalc::dimension(s).get_ui(); }

// Tensor of block specs (block factor lists into g), reordered to g.
RepSpec assemble(const SemisimpleAlgebra& g, const std::vector<std::vector<std::size_t>>& blocks,
                 const std::vector<const RepSpec*>& parts) {
  RepSpec acc(SemisimpleAlgebra{}, std::vector<Weight>{Weight(0)});
  std::vector<std::size_t> order;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    acc = charcalc::external_tensor(acc, *parts[b]);
    order.insert(order.end(), blocks[b].begin(), blocks[b].end());
  }
  std::vector<std::size_t> perm(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) perm[order[pos]] = pos;
  RepSpec out = charcalc::permute_factors(acc, perm);
  if (!(out.algebra() == g)) throw std::logic_error("assembled algebra differs from target");
  return out;
}

bool is_rectangular(const RepSpec& s) {
  return rectkit::detect_rectangular(rectkit::from_character(charcalc::character_of(s))).has_value();
}

// True when the spec's weight set is the product of its two factor
// projections, i.e. it already splits into two single-factor blocks.
bool splits(const RepSpec& s) {
  const auto chi = charcalc::character_of(s);
  return chi.support_size() == charcalc::restrict_to_factors(chi, {0}).support_size() *
                                   charcalc::restrict_to_factors(chi, {1}).support_size();
}

class BlockEnumerator {
 public:
  BlockEnumerator(std::uint64_t max_dim, SearchStats* stats) : max_dim_(max_dim), stats_(stats) {}

  void run(const SemisimpleAlgebra& g, std::map<std::string, RepSpec>& out) {
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<bool> used(g.num_factors(), false);
    partitions(g, used, blocks, out);
  }

 private:
  const std::vector<RepSpec>& solutions(const SemisimpleAlgebra& block) {
    auto it = cache_.find(block);
    if (it != cache_.end()) return it->second;
    auto found = search_rectangular(block, max_dim_, stats_);
    if (block.num_factors() == 2) std::erase_if(found, splits);
    return cache_.emplace(block, std::move(found)).first->second;
  }

  void partitions(const SemisimpleAlgebra& g, std::vector<bool>& used, std::vector<std::vector<std::size_t>>& blocks,
                  std::map<std::string, RepSpec>& out) {
    const auto first = std::find(used.begin(), used.end(), false);
    if (first == used.end()) {
      combine(g, blocks, out);
      return;
    }
    const std::size_t i = static_cast<std::size_t>(first - used.begin());
    used[i] = true;
    blocks.push_back({i});
    partitions(g, used, blocks, out);
    blocks.pop_back();
    const SimpleType a1(Family::A, 1);
    for (std::size_t j = i + 1; j < used.size(); ++j) {
      if (used[j] || (g.factor(i) != a1 && g.factor(j) != a1)) continue;
      used[j] = true;
      blocks.push_back({i, j});
      partitions(g, used, blocks, out);
      blocks.pop_back();
      used[j] = false;
    }
    used[i] = false;
  }

  void combine(const SemisimpleAlgebra& g, const std::vector<std::vector<std::size_t>>& blocks,
               std::map<std::string, RepSpec>& out) {
    std::vector<const std::vector<RepSpec>*> lists;
    for (const auto& b : blocks) {
      std::vector<SimpleType> ts;
      for (auto f : b) ts.push_back(g.factor(f));
      lists.push_back(&solutions(SemisimpleAlgebra(ts)));
      if (lists.back()->empty()) return;
    }
    std::vector<const RepSpec*> pick(blocks.size());
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t b, std::uint64_t dim) {
      if (b == blocks.size()) {
        RepSpec s = canonical_form(assemble(g, blocks, pick));
        out.emplace(spec_key(s), std::move(s));
        return;
      }
      for (const auto& s : *lists[b]) {
        const std::uint64_t d = dim_of(s);
        if (dim * d > max_dim_) continue;
        pick[b] = &s;
        rec(b + 1, dim * d);
      }
    };
    rec(0, 1);
  }

  std::uint64_t max_dim_;
  SearchStats* stats_;
  std::map<SemisimpleAlgebra, std::vector<RepSpec>> cache_;
};

bool allowed_factor(const SimpleType& t) {
  switch (t.family()) {
    case Family::A: return t.rank() == 1 || t.rank() == 3;
    case Family::B: return t.rank() >= 2;
    case Family::D: return t.rank() >= 4;
    default: return false;
  }
}

bool power_of_two(const Integer& n) { return n > 0 && mpz_popcount(n.get_mpz_t()) == 1; }

}  // namespace

std::vector<SimpleType> simple_types_up_to_rank(std::size_t max_rank) {
  std::vector<SimpleType> out;
  const int r = static_cast<int>(max_rank);
  for (int m = 1; m <= r; ++m) out.emplace_back(Family::A, m);
  for (int m = 2; m <= r; ++m) out.emplace_back(Family::B, m);
  for (int m = 3; m <= r; ++m) out.emplace_back(Family::C, m);
  for (int m = 4; m <= r; ++m) out.emplace_back(Family::D, m);
  for (int m = 6; m <= std::min(r, 8); ++m) out.emplace_back(Family::E, m);
  if (r >= 4) out.emplace_back(Family::F, 4);
  if (r >= 2) out.emplace_back(Family::G, 2);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SemisimpleAlgebra> algebras_up_to_rank(std::size_t max_rank) {
  const auto types = simple_types_up_to_rank(max_rank);
  std::vector<SemisimpleAlgebra> out;
  std::vector<SimpleType> current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t rank) {
    if (!current.empty()) out.emplace_back(current);
    for (std::size_t k = start; k < types.size(); ++k) {
      const auto r = static_cast<std::size_t>(types[k].rank());
      if (rank + r > max_rank) continue;
      current.push_back(types[k]);
      rec(k, rank + r);
      current.pop_back();
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RepSpec> enumerate_rectangular(std::size_t max_rank, std::uint64_t max_dim,
                                           const EnumerateOptions& options, SearchStats* stats) {
  check_bounds(max_rank, max_dim);
  std::map<std::string, RepSpec> found;
  BlockEnumerator blocks(max_dim, stats);
  for (const auto& g : algebras_up_to_rank(max_rank)) {
    if (options.exhaustive) {
      for (auto& s : search_rectangular(g, max_dim, stats)) {
        RepSpec c = canonical_form(s);
        found.emplace(spec_key(c), std::move(c));
      }
    } else {
      blocks.run(g, found);
    }
  }
  auto out = sorted_unique(found);
  for (const auto& s : out)
    if (!is_rectangular(s)) throw std::logic_error("enumerated spec fails detection: " + spec_key(s));
  return out;
}

EnumerationEstimate estimate_enumeration(std::size_t max_rank, std::uint64_t max_dim, const EnumerateOptions& options) {
  check_bounds(max_rank, max_dim);
  EnumerationEstimate e;
  const auto algebras = algebras_up_to_rank(max_rank);
  e.algebras = algebras.size();
  std::set<SemisimpleAlgebra> searched;
  for (const auto& g : algebras) {
    if (options.exhaustive || g.num_factors() == 1) {
      searched.insert(g);
      continue;
    }
    const SimpleType a1(Family::A, 1);
    for (std::size_t i = 0; i < g.num_factors(); ++i) {
      searched.insert(SemisimpleAlgebra({g.factor(i)}));
      for (std::size_t j = i + 1; j < g.num_factors(); ++j)
        if (g.factor(i) == a1 || g.factor(j) == a1) searched.insert(SemisimpleAlgebra({g.factor(i), g.factor(j)}));
    }
  }
  e.searches = searched.size();
  std::map<SimpleType, std::vector<std::uint64_t>> dims;
  for (const auto& t : simple_types_up_to_rank(max_rank)) {
    const SemisimpleAlgebra g({t});
    for (const auto& hw : small_highest_weights(t, max_dim)) {
      const auto mults = charcalc::dominant_multiplicities(t, hw);
      if (std::all_of(mults.begin(), mults.end(), [](const auto& kv) { return kv.second == 1; }))
        dims[t].push_back(charcalc::weyl_dimension(g, hw).get_ui());
    }
  }
  for (const auto& g : searched) {
    std::function<std::uint64_t(std::size_t, std::uint64_t)> count = [&](std::size_t f, std::uint64_t d) -> std::uint64_t {
      if (f == g.num_factors()) return 1;
      std::uint64_t n = 0;
      for (auto x : dims[g.factor(f)])
        if (d * x <= max_dim) n += count(f + 1, d * x);
      return n;
    };
    e.candidates += count(0, 1);
  }
  return e;
}

std::vector<RepSpec> catalogue_closure(std::size_t max_rank, std::uint64_t max_dim,
                                       const std::set<CatalogueItem::Kind>& excluded) {
  check_bounds(max_rank, max_dim);
  std::vector<CatalogueItem> items;
  for (const auto& it : catalogue_items(max_rank, Integer(static_cast<unsigned long>(max_dim))))
    if (!excluded.count(it.kind())) items.push_back(it);

  std::map<std::string, RepSpec> found;
  std::function<void(std::size_t, std::size_t, std::uint64_t, const RepSpec&)> rec =
      [&](std::size_t start, std::size_t rank, std::uint64_t dim, const RepSpec& acc) {
        if (rank > 0) {
          RepSpec c = canonical_form(acc);
          found.emplace(spec_key(c), std::move(c));
        }
        for (std::size_t k = start; k < items.size(); ++k) {
          const std::uint64_t d = catalogue_dimension(items[k]).get_ui();
          if (rank + items[k].rank() > max_rank || dim * d > max_dim) continue;
          rec(k, rank + items[k].rank(), dim * d, charcalc::external_tensor(acc, catalogue_spec(items[k])));
        }
      };
  rec(0, 0, 1, RepSpec(SemisimpleAlgebra{}, std::vector<Weight>{Weight(0)}));
  return sorted_unique(found);
}

ClassificationReport verify_classification(std::size_t max_rank, std::uint64_t max_dim, const VerifyOptions& options) {
  ClassificationReport report;
  report.max_rank = max_rank;
  report.max_dim = max_dim;
  const auto enumerated = enumerate_rectangular(max_rank, max_dim, {options.exhaustive});
  const auto closure = catalogue_closure(max_rank, max_dim, options.excluded_kinds);
  report.enumerated = enumerated.size();
  report.catalogue = closure.size();

  std::set<std::string> enum_keys, cat_keys;
  for (const auto& s : enumerated) enum_keys.insert(spec_key(s));
  for (const auto& s : closure) cat_keys.insert(spec_key(s));
  for (const auto& s : enumerated)
    if (!cat_keys.count(spec_key(s))) report.only_enumerated.push_back(s);
  for (const auto& s : closure)
    if (!enum_keys.count(spec_key(s))) report.only_catalogue.push_back(s);

  for (const auto& s : enumerated) {
    const std::string key = spec_key(s);
    try {
      const auto d = decompose(s);
      if (!(reassemble(s.algebra(), d) == charcalc::character_of(s)))
        report.decompose_failures.push_back(key + ": reassembled character differs");
    } catch (const std::exception& e) {
      report.decompose_failures.push_back(key + ": " + e.what());
    }

    if (!power_of_two(s.irreducible_count()))
      report.property_failures.push_back(key + ": summand count is not a power of two");
    for (const auto& t : s.algebra().factors())
      if (!allowed_factor(t)) report.property_failures.push_back(key + ": factor " + t.name() + " is not allowed");
    const auto cert = rectkit::detect_rectangular(rectkit::from_character(charcalc::character_of(s)));
    if (!cert) continue;
    const auto ls = rectkit::lengths(*cert);
    const bool all_even = std::all_of(ls.begin(), ls.end(), [](std::uint64_t l) { return l % 2 == 0; });
    if (all_even && std::count(ls.begin(), ls.end(), 2u) <= 1) {
      const bool only_a1 = std::all_of(s.algebra().factors().begin(), s.algebra().factors().end(),
                                       [](const SimpleType& t) { return t == SimpleType(Family::A, 1); });
      if (!only_a1 || s.summands().size() != 1 || s.summands().front().multiplicity != 1)
        report.property_failures.push_back(key + ": even lengths with at most one 2 but not an irreducible of A1 factors");
    }
  }
  return report;
}

}  // namespace rectrep::classify
