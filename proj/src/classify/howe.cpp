#include "rectrep/classify/howe.hpp"

#include "rectrep/charcalc/character.hpp"
#include "rectrep/classify/search.hpp"

#include <algorithm>
#include <set>

namespace rectrep::classify {

using liealg::Family;
using liealg::SemisimpleAlgebra;

namespace {

Weight fundamental(int rank, int i, long k = 1) {
  Weight w(static_cast<std::size_t>(rank));
  w[static_cast<std::size_t>(i - 1)] = k;
  return w;
}

std::uint64_t dim_of(const SimpleType& t, const Weight& hw) {
  return charcalc::weyl_dimension(SemisimpleAlgebra({t}), hw).get_ui();
}

}  // namespace

std::vector<Weight> howe_list(const SimpleType& t, std::uint64_t max_dim) {
  const int n = t.rank();
  std::set<Weight> out;
  out.insert(Weight(static_cast<std::size_t>(n)));
  auto keep = [&](const Weight& w) {
    if (dim_of(t, w) <= max_dim) out.insert(w);
  };
  switch (t.family()) {
    case Family::A:
      for (int m = 1; m <= n; ++m) keep(fundamental(n, m));
      for (long k = 1; dim_of(t, fundamental(n, 1, k)) <= max_dim; ++k) {
        keep(fundamental(n, 1, k));
        keep(fundamental(n, n, k));
      }
      break;
    case Family::B:
      keep(fundamental(n, 1));
      keep(fundamental(n, n));
      break;
    case Family::C:
      keep(fundamental(n, 1));
      if (n == 3) keep(fundamental(n, 3));
      break;
    case Family::D:
      keep(fundamental(n, 1));
      keep(fundamental(n, n - 1));
      keep(fundamental(n, n));
      break;
    case Family::E:
      if (n == 6) {
        keep(fundamental(n, 1));
        keep(fundamental(n, 6));
      } else if (n == 7) {
        keep(fundamental(n, 7));
      }
      break;
    case Family::F: break;
    case Family::G: keep(fundamental(n, 1)); break;
  }
  return {out.begin(), out.end()};
}

HoweReport verify_howe(const SimpleType& t, std::uint64_t max_dim) {
  if (t.rank() > 4) throw std::invalid_argument("verify_howe supports rank <= 4");
  if (max_dim < 1 || max_dim > 512) throw std::invalid_argument("verify_howe supports max dim 1 to 512");
  HoweReport r{t, max_dim, 0, {}, {}, {}, {}};
  for (const auto& hw : small_highest_weights(t, max_dim)) {
    ++r.examined;
    const auto mults = charcalc::dominant_multiplicities(t, hw);
    if (std::all_of(mults.begin(), mults.end(), [](const auto& kv) { return kv.second == 1; }))
      r.flagged.push_back({hw, dim_of(t, hw)});
  }
  for (const auto& hw : howe_list(t, max_dim)) r.expected.push_back({hw, dim_of(t, hw)});
  for (const auto& e : r.expected)
    if (std::find(r.flagged.begin(), r.flagged.end(), e) == r.flagged.end()) r.missing.push_back(e);
  for (const auto& f : r.flagged)
    if (std::find(r.expected.begin(), r.expected.end(), f) == r.expected.end()) r.unexpected.push_back(f);
  return r;
}

}  // namespace rectrep::classify
