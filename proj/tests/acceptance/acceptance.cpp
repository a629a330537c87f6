// One PASS/FAIL line per acceptance criterion. Usage:
//   rectrep_acceptance <path-to-rectrep> <golden-dir>

#include "rectrep/classify/canonical.hpp"
#include "rectrep/classify/census.hpp"
#include "rectrep/classify/decompose.hpp"
#include "rectrep/classify/enumerate.hpp"
#include "rectrep/classify/howe.hpp"
#include "rectrep/exactlin/lattice.hpp"
#include "rectrep/liealg/orthogonal.hpp"
#include "rectrep/rectkit/detect.hpp"

#include "box_oracle.hpp"
#include "json.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace rectrep;
using charcalc::RepSpec;
using exactlin::Integer;
using exactlin::IntVector;
using exactlin::Rational;
using liealg::Family;
using liealg::SemisimpleAlgebra;
using liealg::SimpleType;
using liealg::Weight;
using Json = nlohmann::ordered_json;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Check&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.ok && secs > limit_s) c.fail("over time budget");
  if (!c.ok) ++failures;
  std::printf("%s %d %s (%.2fs / %.0fs)%s%s\n", c.ok ? "PASS" : "FAIL", id, title, secs, limit_s,
              c.detail.empty() ? "" : ": ", c.detail.c_str());
  std::fflush(stdout);
}

using RatPoint = std::vector<Rational>;

std::set<RatPoint> orthogonal_set(const RepSpec& spec) {
  std::set<RatPoint> out;
  const auto chi = charcalc::character_of(spec);
  for (const auto& [w, m] : chi.entries())
    out.insert(liealg::to_orthogonal(spec.algebra(), w, 0).coords);
  return out;
}

std::set<RatPoint> sign_vectors(int n, Rational r) {
  std::set<RatPoint> out;
  for (int s = 0; s < (1 << n); ++s) {
    RatPoint p;
    for (int i = 0; i < n; ++i) p.push_back((s >> i) & 1 ? r : -r);
    out.insert(p);
  }
  return out;
}

SemisimpleAlgebra simple(Family f, int r) { return SemisimpleAlgebra({SimpleType(f, r)}); }

rectkit::WeightMultiset weights(const RepSpec& s) {
  return rectkit::from_character(charcalc::character_of(s));
}

void c1(Check& c) {
  const auto b3 = orthogonal_set(RepSpec(simple(Family::B, 3), std::vector<Weight>{Weight{0, 0, 1}}));
  if (b3 != sign_vectors(3, Rational(1, 2))) c.fail("B3 spin weights");

  auto b2 = orthogonal_set(RepSpec(simple(Family::B, 2), std::vector<Weight>{Weight{1, 0}, Weight{0, 1}}));
  auto expect = sign_vectors(2, Rational(1, 2));
  for (RatPoint p : {RatPoint{0, 0}, RatPoint{1, 0}, RatPoint{-1, 0}, RatPoint{0, 1}, RatPoint{0, -1}})
    expect.insert(p);
  if (b2 != expect || charcalc::dimension(RepSpec(simple(Family::B, 2),
                                                  std::vector<Weight>{Weight{1, 0}, Weight{0, 1}})) != 9)
    c.fail("B2 std+spin weights");

  std::set<RatPoint> a3;
  const auto a3_chi =
      charcalc::character_of(RepSpec(simple(Family::A, 3), std::vector<Weight>{Weight{1, 0, 0}, Weight{0, 0, 1}}));
  for (const auto& [w, m] : a3_chi.entries()) {
    if (m != 1) c.fail("A3 multiplicity");
    a3.insert(liealg::a3_to_d3_orthogonal(w).coords);
  }
  if (a3 != sign_vectors(3, Rational(1, 2))) c.fail("A3 std+dual is not the cube");
}

void c2(Check& c) {
  std::size_t n = 0;
  for (const auto& item : classify::catalogue_items(6, Integer(128))) {
    ++n;
    const auto cert = rectkit::detect_rectangular(weights(classify::catalogue_spec(item)));
    if (!cert || rectkit::lengths(*cert) != classify::catalogue_lengths(item)) c.fail(item.to_string());
  }
  using L = std::vector<std::uint64_t>;
  if (classify::catalogue_lengths(classify::CatalogueItem::b2_std_spin()) != L{3, 3}) c.fail("B2StdSpin");
  if (classify::catalogue_lengths(classify::CatalogueItem::d2_spin()) != L{2, 2}) c.fail("D2Spin");
  if (n < 30) c.fail("catalogue too small: " + std::to_string(n));
  c.detail = std::to_string(n) + " items";
}

void c3(Check& c, std::size_t r, std::uint64_t d) {
  const auto rep = classify::verify_classification(r, d);
  std::ostringstream msg;
  msg << rep.enumerated << " enumerated, " << rep.catalogue << " in catalogue closure";
  if (!rep.passed())
    c.fail(msg.str() + ", only_enumerated " + std::to_string(rep.only_enumerated.size()) + ", only_catalogue " +
           std::to_string(rep.only_catalogue.size()));
  else
    c.detail = msg.str();
}

void c4(Check& c) {
  std::vector<RepSpec> hyper;
  for (const auto& s : classify::search_rectangular(simple(Family::A, 3), 256)) {
    const auto cert = rectkit::detect_rectangular(weights(s));
    if (cert && rectkit::is_hypercubic(*cert)) hyper.push_back(s);
  }
  if (hyper.size() != 1 || hyper[0].highest_weights() != std::vector<Weight>{Weight{0, 0, 1}, Weight{1, 0, 0}})
    c.fail(std::to_string(hyper.size()) + " hypercubic specs");
}

void c5(Check& c) {
  const SimpleType types[] = {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 2},
                              {Family::B, 3}, {Family::B, 4}, {Family::C, 3}, {Family::D, 4}, {Family::G, 2},
                              {Family::F, 4}};
  std::size_t flagged = 0;
  for (const auto& t : types) {
    const auto rep = classify::verify_howe(t, 128);
    flagged += rep.flagged.size();
    if (!rep.passed()) c.fail(t.name());
    if (t.family() == Family::F && rep.flagged.size() != 1) c.fail("F4 flags a nontrivial rep");
    if (t.family() == Family::C) {
      std::set<std::uint64_t> dims;
      for (const auto& e : rep.flagged) dims.insert(e.dimension);
      if (dims != std::set<std::uint64_t>{1, 6, 14}) c.fail("C3 dimensions");
    }
  }
  if (c.ok) c.detail = std::to_string(flagged) + " flagged";
}

void c6(Check& c) {
  std::size_t sets = 0, boxes = 0;
  box_oracle::for_each_symmetric_set(12, [&](const std::vector<box_oracle::P>& pts) {
    ++sets;
    rectkit::WeightMultiset s;
    s.dim = 2;
    for (const auto& p : pts) s.add(IntVector{p[0], p[1]});
    const auto expect = box_oracle::plane_box_lengths(pts);
    const auto got = rectkit::detect_rectangular(s);
    if (expect.has_value() != got.has_value() || (got && rectkit::lengths(*got) != *expect))
      c.fail("oracle disagreement");
    boxes += got.has_value();
  });

  // 20 characters: every kind once, then the rest in catalogue order.
  const auto all = classify::catalogue_items(4, Integer(64));
  std::vector<classify::CatalogueItem> items;
  std::set<classify::CatalogueItem::Kind> kinds;
  for (const auto& it : all)
    if (kinds.insert(it.kind()).second) items.push_back(it);
  for (const auto& it : all)
    if (items.size() < 20 && std::find(items.begin(), items.end(), it) == items.end()) items.push_back(it);
  if (items.size() < 20) c.fail("fewer than 20 catalogue characters");
  std::mt19937_64 rng(2024);
  std::size_t transforms = 0, translations = 0;
  for (const auto& item : items) {
    const auto s = weights(classify::catalogue_spec(item));
    const auto want = classify::catalogue_lengths(item);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const auto m = exactlin::random_unimodular(s.dim, seed * 7919 + item.rank(), Integer(5));
      const auto cert = rectkit::detect_rectangular(rectkit::transform(m, s));
      if (!cert || rectkit::lengths(*cert) != want) c.fail("transform changed lengths: " + item.to_string());
      ++transforms;
    }
  }
  std::uniform_int_distribution<long> coord(-4, 4);
  for (int i = 0; i < 1000; ++i) {
    const auto& item = items[i % items.size()];
    const auto s = weights(classify::catalogue_spec(item));
    IntVector shift(s.dim);
    while (shift.is_zero())
      for (std::size_t k = 0; k < s.dim; ++k) shift[k] = coord(rng);
    if (rectkit::detect_rectangular(rectkit::translate(s, shift))) c.fail("translation accepted");
    ++translations;
  }
  c.detail = std::to_string(sets) + " plane sets (" + std::to_string(boxes) + " boxes), " +
             std::to_string(transforms) + " transforms, " + std::to_string(translations) + " translations";
}

void c7(Check& c) {
  for (int n = 2; n <= 4; ++n)
    if (!classify::roots_in_plane_census(n).passed()) c.fail("plane census n=" + std::to_string(n));
  for (int n = 3; n <= 4; ++n)
    if (!classify::long_roots_3space_census(n).passed()) c.fail("long-root census n=" + std::to_string(n));

  const auto census = classify::long_roots_3space_census(4);
  const auto longs = classify::b_long_roots(4);
  for (int s = 0; s < 8; ++s) {
    const IntVector v{1, s & 1 ? 1 : -1, s & 2 ? 1 : -1, s & 4 ? 1 : -1};
    std::size_t orth = 0;
    for (const auto& r : longs) {
      Integer dot = 0;
      for (std::size_t i = 0; i < 4; ++i) dot += r[i] * v[i];
      orth += dot == 0;
    }
    if (orth != 12) c.fail("complement of " + v.to_string() + " holds " + std::to_string(orth));
    bool seen = false;
    for (const auto& sp : census.rich)
      if (classify::is_complement_in_support(sp, v)) seen = sp.long_roots == 12;
    if (!seen) c.fail("complement of " + v.to_string() + " missing from census");
  }
}

bool power_of_two(const Integer& n) { return n > 0 && mpz_popcount(n.get_mpz_t()) == 1; }

void c8(Check& c) {
  std::size_t checked = 0;
  auto check = [&](const RepSpec& s) {
    ++checked;
    if (!power_of_two(s.irreducible_count())) c.fail("summand count of " + classify::spec_key(s));
    const auto cert = rectkit::detect_rectangular(weights(s));
    if (!cert) {
      c.fail("not rectangular: " + classify::spec_key(s));
      return;
    }
    const auto ls = rectkit::lengths(*cert);
    std::size_t twos = 0;
    bool even = true;
    for (auto l : ls) {
      if (l == 1) continue;
      even = even && l % 2 == 0;
      twos += l == 2;
    }
    if (even && twos <= 1) {
      bool pure_a1 = true;
      for (const auto& t : s.algebra().factors()) pure_a1 = pure_a1 && t == SimpleType(Family::A, 1);
      if (!pure_a1 || s.irreducible_count() != 1) c.fail("not an irreducible A1 tensor: " + classify::spec_key(s));
    }
  };
  for (const auto& [r, d] : {std::pair<std::size_t, std::uint64_t>{2, 64}, {3, 128}})
    for (const auto& s : classify::enumerate_rectangular(r, d)) check(s);
  for (const auto& s : classify::search_rectangular(simple(Family::A, 3), 256)) check(s);
  c.detail = std::to_string(checked) + " specs";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char ch : s) out += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return out + "'";
}

std::pair<int, std::string> run(const std::string& exe, const Json& argv) {
  std::string cmd = quote(exe);
  for (const auto& a : argv) cmd += " " + quote(a.get<std::string>());
  cmd += " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void c9(Check& c, const std::string& exe, const std::string& golden) {
  const auto cases = Json::parse(slurp(golden + "/cases.json"));
  std::set<std::string> positive, negative;
  for (const auto& k : cases) {
    const auto name = k["name"].get<std::string>();
    const auto first = run(exe, k["argv"]);
    const auto second = run(exe, k["argv"]);
    if (first.first != k["exit"].get<int>()) c.fail(name + ": exit " + std::to_string(first.first));
    if (first != second) c.fail(name + ": runs differ");
    if (first.second != slurp(golden + "/" + name + ".json")) c.fail(name + ": differs from golden");
    if (!Json::accept(first.second)) c.fail(name + ": invalid JSON");
    (first.first == 0 ? positive : negative).insert(k["argv"][0].get<std::string>());
  }
  for (const char* cmd : {"char", "rect", "decompose", "enumerate", "verify-catalogue", "verify-howe", "census"}) {
    if (!positive.count(cmd)) c.fail(std::string("no positive case for ") + cmd);
    if (!negative.count(cmd)) c.fail(std::string("no negative case for ") + cmd);
  }
  if (c.ok) c.detail = std::to_string(cases.size()) + " cases";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: rectrep_acceptance <rectrep> <golden-dir>\n";
    return 2;
  }
  const std::string exe = argv[1], golden = argv[2];

  criterion(1, "catalogue characters", 1, c1);
  criterion(2, "lengths table", 10, c2);
  criterion(3, "classification equality (rank 2, dim 64)", 300, [](Check& c) { c3(c, 2, 64); });
  criterion(3, "classification equality (rank 3, dim 128)", 300, [](Check& c) { c3(c, 3, 128); });
  criterion(4, "A3 uniqueness up to dim 256", 120, c4);
  criterion(5, "Howe multiplicity-free lists", 300, c5);
  criterion(6, "rectangularity property suite", 300, c6);
  criterion(7, "root-geometry censuses", 60, c7);
  criterion(8, "structural corollaries", 600, c8);
  criterion(9, "CLI contract", 30, [&](Check& c) { c9(c, exe, golden); });

  std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
