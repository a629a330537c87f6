#include "rectrep/classify/canonical.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

namespace rectrep::classify {

std::vector<std::vector<std::size_t>> sorting_permutations(const liealg::SemisimpleAlgebra& g) {
  std::vector<std::size_t> perm(g.num_factors());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return g.factor(a) < g.factor(b); });
  // Permute within runs of equal types only.
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t i = 0; i < perm.size();) {
    std::size_t j = i;
    while (j < perm.size() && g.factor(perm[j]) == g.factor(perm[i])) ++j;
    runs.emplace_back(i, j);
    i = j;
  }
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == runs.size()) {
      out.push_back(perm);
      return;
    }
    auto [lo, hi] = runs[r];
    std::sort(perm.begin() + static_cast<std::ptrdiff_t>(lo), perm.begin() + static_cast<std::ptrdiff_t>(hi));
    do {
      rec(r + 1);
    } while (std::next_permutation(perm.begin() + static_cast<std::ptrdiff_t>(lo),
                                   perm.begin() + static_cast<std::ptrdiff_t>(hi)));
  };
  rec(0);
  return out;
}

namespace {

bool less_summands(const std::vector<charcalc::Summand>& a, const std::vector<charcalc::Summand>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const charcalc::Summand& x, const charcalc::Summand& y) {
                                        if (x.highest_weight != y.highest_weight) return x.highest_weight < y.highest_weight;
                                        return x.multiplicity < y.multiplicity;
                                      });
}

}  // namespace

charcalc::RepSpec canonical_form(const charcalc::RepSpec& spec) {
  std::optional<charcalc::RepSpec> best;
  for (const auto& perm : sorting_permutations(spec.algebra())) {
    auto candidate = charcalc::permute_factors(spec, perm);
    if (!best || less_summands(candidate.summands(), best->summands())) best = std::move(candidate);
  }
  return *best;
}

std::string spec_key(const charcalc::RepSpec& spec) {
  std::string s = spec.algebra().name() + "|";
  bool first = true;
  for (const auto& x : spec.summands()) {
    if (!first) s += "+";
    first = false;
    s += x.highest_weight.to_string() + "x" + x.multiplicity.get_str();
  }
  return s;
}

}  // namespace rectrep::classify
