#pragma once

// Brute-force rectangularity for small plane sets, independent of rectkit's
// lexicographic-vertex construction: try every anchor point and every pair of
// difference vectors, and accept if the spanned box reproduces the set.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace box_oracle {

using P = std::array<int, 2>;

class Grid {
 public:
  explicit Grid(const std::vector<P>& pts) {
    for (const auto& p : pts) bits_ |= bit(p);
  }
  bool has(const P& p) const {
    if (p[0] < -3 || p[0] > 3 || p[1] < -3 || p[1] > 3) return false;
    return (bits_ >> index(p)) & 1u;
  }

 private:
  static int index(const P& p) { return (p[0] + 3) * 7 + (p[1] + 3); }
  static std::uint64_t bit(const P& p) { return std::uint64_t{1} << index(p); }
  std::uint64_t bits_ = 0;
};

// Lengths {d1+1, d2+1} ascending if the set is a box, else nullopt.
inline std::optional<std::vector<std::uint64_t>> plane_box_lengths(const std::vector<P>& pts) {
  const std::size_t n = pts.size();
  if (n == 0) return std::nullopt;
  if (n == 1) return std::vector<std::uint64_t>{1, 1};
  const Grid grid(pts);
  auto run = [&](const P& v, const P& e) {
    int d = 0;
    while (grid.has({v[0] + (d + 1) * e[0], v[1] + (d + 1) * e[1]})) ++d;
    return d;
  };
  auto box_is_set = [&](const P& v, const P& e1, int d1, const P& e2, int d2) {
    for (int i = 0; i <= d1; ++i)
      for (int j = 0; j <= d2; ++j)
        if (!grid.has({v[0] + i * e1[0] + j * e2[0], v[1] + i * e1[1] + j * e2[1]})) return false;
    return true;
  };
  for (const auto& v : pts)
    for (const auto& a : pts) {
      if (a == v) continue;
      const P e1{a[0] - v[0], a[1] - v[1]};
      const int d1 = run(v, e1);
      if (n % (d1 + 1)) continue;
      if (static_cast<std::size_t>(d1 + 1) == n && box_is_set(v, e1, d1, P{0, 0}, 0))
        return std::vector<std::uint64_t>{1, n};
      for (const auto& b : pts) {
        if (b == v) continue;
        const P e2{b[0] - v[0], b[1] - v[1]};
        if (e1[0] * e2[1] - e1[1] * e2[0] == 0) continue;
        const int d2 = run(v, e2);
        if (static_cast<std::size_t>((d1 + 1) * (d2 + 1)) != n) continue;
        if (box_is_set(v, e1, d1, e2, d2)) {
          std::vector<std::uint64_t> ls{std::uint64_t(d1 + 1), std::uint64_t(d2 + 1)};
          std::sort(ls.begin(), ls.end());
          return ls;
        }
      }
    }
  return std::nullopt;
}

// Calls f on every centrally symmetric subset of [-3,3]^2 with at most
// max_points points (the empty set excluded).
inline void for_each_symmetric_set(std::size_t max_points, const std::function<void(const std::vector<P>&)>& f) {
  std::vector<P> reps;  // one point from each +-pair
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y)
      if (x > 0 || (x == 0 && y > 0)) reps.push_back({x, y});
  std::vector<P> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    for (int with_zero = 0; with_zero < 2; ++with_zero) {
      if (cur.size() + with_zero == 0 || cur.size() + with_zero > max_points) continue;
      auto pts = cur;
      if (with_zero) pts.push_back({0, 0});
      f(pts);
    }
    if (cur.size() + 2 > max_points) return;
    for (std::size_t i = from; i < reps.size(); ++i) {
      cur.push_back(reps[i]);
      cur.push_back({-reps[i][0], -reps[i][1]});
      rec(i + 1);
      cur.pop_back();
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace box_oracle
