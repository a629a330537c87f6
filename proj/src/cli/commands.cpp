#include "rectrep/cli/commands.hpp"

#include "rectrep/classify/census.hpp"
#include "rectrep/classify/decompose.hpp"
#include "rectrep/classify/enumerate.hpp"
#include "rectrep/classify/howe.hpp"
#include "rectrep/cli/render.hpp"
#include "rectrep/cli/spec_parser.hpp"
#include "rectrep/exactlin/lattice.hpp"
#include "rectrep/liealg/orthogonal.hpp"
#include "rectrep/rectkit/detect.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace rectrep::cli {

using charcalc::RepSpec;
using exactlin::Integer;
using liealg::SemisimpleAlgebra;
using liealg::Weight;

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Outcome {
  Json result = Json::object();
  int exit_code = kExitOk;
  Json error = nullptr;
};

Json str(const Integer& n) { return n.get_str(); }
Json str(std::uint64_t n) { return std::to_string(n); }

Json vec_json(const exactlin::IntVector& v) {
  Json a = Json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(v[i].get_str());
  return a;
}

Json lengths_json(const std::vector<std::uint64_t>& ls) {
  Json a = Json::array();
  for (auto l : ls) a.push_back(str(l));
  return a;
}

Json domain_error(const std::string& reason, const std::string& detail) {
  return Json{{"kind", "domain"}, {"reason", reason}, {"detail", detail}};
}

RepSpec need_spec(const CommandOptions& o) {
  if (o.algebra.empty()) throw UsageError("--algebra is required");
  if (o.rep.empty()) throw UsageError("--rep is required");
  return parse_spec(o.algebra, o.rep);
}

Json summands_json(const RepSpec& spec) {
  Json a = Json::array();
  const auto& g = spec.algebra();
  for (const auto& s : spec.summands()) {
    std::string name;
    for (std::size_t f = 0; f < g.num_factors(); ++f) {
      if (f) name += "*";
      name += render_irrep(g.factor(f), g.block(s.highest_weight, f));
    }
    a.push_back({{"highest_weight", vec_json(s.highest_weight)},
                 {"name", name},
                 {"multiplicity", str(s.multiplicity)},
                 {"dimension", str(charcalc::weyl_dimension(g, s.highest_weight))}});
  }
  return a;
}

Json certificate_json(const rectkit::RectCertificate& c) {
  Json edges = Json::array();
  for (const auto& e : c.edges) edges.push_back(vec_json(e));
  Json degrees = Json::array();
  for (auto d : c.degrees) degrees.push_back(str(d));
  return {{"vertex", vec_json(c.vertex)}, {"edges", edges}, {"degrees", degrees}, {"padding", str(c.padding)}};
}

Outcome cmd_char(const CommandOptions& o) {
  const RepSpec spec = need_spec(o);
  const auto& g = spec.algebra();
  const auto chi = charcalc::character_of(spec);
  bool classical = true;
  for (const auto& t : g.factors()) classical = classical && t.is_classical();

  Json weights = Json::array();
  for (const auto& [w, m] : chi.entries()) {
    Json entry{{"weight", vec_json(w)}, {"multiplicity", str(m)}};
    if (classical) {
      Json orth = Json::array();
      for (std::size_t f = 0; f < g.num_factors(); ++f)
        for (const auto& q : liealg::to_orthogonal(g, w, f).coords) orth.push_back(q.get_str());
      entry["orthogonal"] = orth;
    }
    weights.push_back(entry);
  }
  Outcome out;
  out.result = {{"algebra", render_algebra(g)},
                {"rep", render_spec(spec)},
                {"summands", summands_json(spec)},
                {"dimension", str(chi.mass())},
                {"distinct_weights", str(static_cast<std::uint64_t>(chi.support_size()))},
                {"multiplicity_free", charcalc::is_multiplicity_free(chi)},
                {"faithful", charcalc::is_faithful(spec)},
                {"weights", weights}};
  return out;
}

Outcome cmd_rect(const CommandOptions& o) {
  const RepSpec spec = need_spec(o);
  auto s = rectkit::from_character(charcalc::character_of(spec));
  Outcome out;
  out.result["algebra"] = render_algebra(spec.algebra());
  out.result["rep"] = render_spec(spec);
  if (o.seed) {
    const auto m = exactlin::random_unimodular(s.dim, *o.seed, Integer(4));
    s = rectkit::transform(m, s);
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).get_str());
      rows.push_back(row);
    }
    out.result["transform"] = {{"seed", str(*o.seed)}, {"matrix", rows}};
  }
  const auto verdict = rectkit::diagnose_rectangular(s);
  out.result["rectangular"] = verdict.certificate.has_value();
  out.result["reason"] = rectkit::to_string(verdict.reason);
  if (verdict.certificate) {
    const auto ls = rectkit::lengths(*verdict.certificate);
    const auto cube = rectkit::is_hypercubic(*verdict.certificate);
    out.result["certificate"] = certificate_json(*verdict.certificate);
    out.result["certificate_verified"] = rectkit::verify_certificate(s, *verdict.certificate);
    out.result["lengths"] = lengths_json(ls);
    out.result["hypercubic"] = cube.has_value();
    out.result["length"] = cube ? str(*cube) : Json(nullptr);
  } else {
    out.exit_code = kExitDomain;
    out.error = domain_error("not rectangular", rectkit::to_string(verdict.reason));
  }
  return out;
}

Json decomposition_json(const classify::Decomposition& d) {
  Json parts = Json::array();
  for (const auto& p : d.parts) {
    Json factors = Json::array();
    for (auto f : p.factors) factors.push_back(std::to_string(f + 1));
    parts.push_back({{"factors", factors},
                     {"item", p.item.to_string()},
                     {"rep", render_spec(classify::catalogue_spec(p.item))},
                     {"lengths", lengths_json(classify::catalogue_lengths(p.item))}});
  }
  return parts;
}

Outcome cmd_decompose(const CommandOptions& o) {
  const RepSpec spec = need_spec(o);
  Outcome out;
  out.result["algebra"] = render_algebra(spec.algebra());
  out.result["rep"] = render_spec(spec);
  try {
    const auto d = classify::decompose(spec);
    out.result["parts"] = decomposition_json(d);
  } catch (const classify::DecomposeError& e) {
    using Kind = classify::DecomposeError::Kind;
    out.result["parts"] = nullptr;
    if (e.kind() == Kind::CatalogueMismatch) {
      out.exit_code = kExitInternal;
      out.error = {{"kind", "internal"}, {"reason", "catalogue mismatch"}, {"detail", e.reason()}};
    } else {
      out.exit_code = kExitDomain;
      out.error = domain_error(classify::to_string(e.kind()), e.reason());
    }
  }
  return out;
}

std::size_t rank_bound(const CommandOptions& o, std::size_t fallback) { return o.max_rank.value_or(fallback); }
std::uint64_t dim_bound(const CommandOptions& o, std::uint64_t fallback) { return o.max_dim.value_or(fallback); }

Json spec_entry(const RepSpec& s) {
  return {{"algebra", render_algebra(s.algebra())}, {"rep", render_spec(s)}};
}

Outcome cmd_enumerate(const CommandOptions& o) {
  const std::size_t r = rank_bound(o, 2);
  const std::uint64_t d = dim_bound(o, 64);
  Outcome out;
  out.result["max_rank"] = str(static_cast<std::uint64_t>(r));
  out.result["max_dim"] = str(d);
  out.result["mode"] = o.exhaustive ? "exhaustive" : "blocks";
  if (o.dry_run) {
    const auto e = classify::estimate_enumeration(r, d, {o.exhaustive});
    out.result["dry_run"] = true;
    out.result["algebras"] = str(static_cast<std::uint64_t>(e.algebras));
    out.result["searches"] = str(static_cast<std::uint64_t>(e.searches));
    out.result["candidate_irreducibles"] = str(e.candidates);
    return out;
  }
  const auto specs = classify::enumerate_rectangular(r, d, {o.exhaustive});
  Json entries = Json::array();
  for (const auto& s : specs) {
    Json e = spec_entry(s);
    e["dimension"] = str(charcalc::dimension(s));
    const auto cert = rectkit::detect_rectangular(rectkit::from_character(charcalc::character_of(s)));
    e["lengths"] = cert ? lengths_json(rectkit::lengths(*cert)) : Json(nullptr);
    Json items = Json::array();
    for (const auto& p : classify::decompose(s).parts) items.push_back(p.item.to_string());
    e["parts"] = items;
    entries.push_back(e);
  }
  out.result["count"] = str(static_cast<std::uint64_t>(specs.size()));
  out.result["entries"] = entries;
  return out;
}

Outcome cmd_verify_catalogue(const CommandOptions& o) {
  const std::size_t r = rank_bound(o, 2);
  const std::uint64_t d = dim_bound(o, 64);
  classify::VerifyOptions v;
  v.exhaustive = o.exhaustive;
  for (const auto& name : o.exclude) {
    auto k = classify::kind_from_name(name);
    if (!k) throw UsageError("unknown catalogue kind: " + name);
    v.excluded_kinds.insert(*k);
  }
  Outcome out;
  out.result["max_rank"] = str(static_cast<std::uint64_t>(r));
  out.result["max_dim"] = str(d);
  out.result["mode"] = o.exhaustive ? "exhaustive" : "blocks";
  if (o.dry_run) {
    const auto e = classify::estimate_enumeration(r, d, {o.exhaustive});
    out.result["dry_run"] = true;
    out.result["algebras"] = str(static_cast<std::uint64_t>(e.algebras));
    out.result["searches"] = str(static_cast<std::uint64_t>(e.searches));
    out.result["candidate_irreducibles"] = str(e.candidates);
    return out;
  }
  const auto rep = classify::verify_classification(r, d, v);
  Json excluded = Json::array();
  for (auto k : v.excluded_kinds) excluded.push_back(classify::kind_name(k));
  Json only_e = Json::array(), only_c = Json::array();
  for (const auto& s : rep.only_enumerated) only_e.push_back(spec_entry(s));
  for (const auto& s : rep.only_catalogue) only_c.push_back(spec_entry(s));
  out.result["excluded_kinds"] = excluded;
  out.result["verdict"] = rep.passed() ? "equal" : "mismatch";
  out.result["enumerated"] = str(static_cast<std::uint64_t>(rep.enumerated));
  out.result["catalogue"] = str(static_cast<std::uint64_t>(rep.catalogue));
  out.result["only_enumerated"] = only_e;
  out.result["only_catalogue"] = only_c;
  out.result["decompose_failures"] = rep.decompose_failures;
  out.result["property_failures"] = rep.property_failures;
  if (!rep.passed()) {
    out.exit_code = kExitMismatch;
    out.error = {{"kind", "mismatch"}, {"reason", "enumeration and catalogue closure differ"}};
  }
  return out;
}

Outcome cmd_verify_howe(const CommandOptions& o) {
  if (o.algebra.empty()) throw UsageError("--algebra is required");
  const auto g = parse_algebra(o.algebra);
  if (g.num_factors() != 1) throw UsageError("verify-howe needs a simple algebra");
  const auto& t = g.factor(0);
  const auto rep = classify::verify_howe(t, dim_bound(o, 128));
  auto list = [&](const std::vector<classify::HoweEntry>& es) {
    Json a = Json::array();
    for (const auto& e : es)
      a.push_back({{"highest_weight", vec_json(e.highest_weight)},
                   {"name", render_irrep(t, e.highest_weight)},
                   {"dimension", str(e.dimension)}});
    return a;
  };
  Outcome out;
  out.result = {{"type", t.name()},
                {"max_dim", str(rep.max_dim)},
                {"examined", str(static_cast<std::uint64_t>(rep.examined))},
                {"flagged", list(rep.flagged)},
                {"expected", list(rep.expected)},
                {"missing", list(rep.missing)},
                {"unexpected", list(rep.unexpected)},
                {"verdict", rep.passed() ? "equal" : "mismatch"}};
  if (!rep.passed()) {
    out.exit_code = kExitMismatch;
    out.error = {{"kind", "mismatch"}, {"reason", "flagged set differs from the published list"}};
  }
  return out;
}

Json subspace_json(const classify::RootSubspace& s) {
  Json basis = Json::array();
  for (const auto& row : s.basis) {
    Json r = Json::array();
    for (const auto& q : row) r.push_back(q.get_str());
    basis.push_back(r);
  }
  return {{"basis", basis},
          {"long_roots", str(static_cast<std::uint64_t>(s.long_roots))},
          {"short_roots", str(static_cast<std::uint64_t>(s.short_roots))},
          {"standard", s.standard}};
}

Outcome cmd_census(const CommandOptions& o) {
  const int n = static_cast<int>(rank_bound(o, 4));
  if (n < 2 || n > 4) throw UsageError("census needs --max-rank between 2 and 4");
  Outcome out;
  out.result["n"] = std::to_string(n);
  bool ok = true;

  const auto planes = classify::roots_in_plane_census(n);
  Json rich = Json::array();
  for (const auto& s : planes.rich) rich.push_back(subspace_json(s));
  out.result["planes"] = {{"total", str(static_cast<std::uint64_t>(planes.planes))},
                          {"rich", rich},
                          {"violations", planes.violations}};
  ok = ok && planes.passed();

  if (n >= 3) {
    const auto spaces = classify::long_roots_3space_census(n);
    Json rich3 = Json::array();
    for (const auto& s : spaces.rich) rich3.push_back(subspace_json(s));
    out.result["long_root_spaces"] = {{"total", str(static_cast<std::uint64_t>(spaces.spaces))},
                                      {"standard_rich", str(static_cast<std::uint64_t>(spaces.standard_rich))},
                                      {"complement_rich", str(static_cast<std::uint64_t>(spaces.complement_rich))},
                                      {"rich", rich3},
                                      {"violations", spaces.violations}};
    ok = ok && spaces.passed();
  } else {
    out.result["long_root_spaces"] = nullptr;
  }
  out.result["verdict"] = ok ? "consistent" : "violations";
  if (!ok) {
    out.exit_code = kExitMismatch;
    out.error = {{"kind", "mismatch"}, {"reason", "census found a violation"}};
  }
  return out;
}

Json input_json(const CommandOptions& o) {
  Json in = Json::object();
  if (!o.algebra.empty()) in["algebra"] = o.algebra;
  if (!o.rep.empty()) in["rep"] = o.rep;
  if (o.max_rank) in["max_rank"] = str(static_cast<std::uint64_t>(*o.max_rank));
  if (o.max_dim) in["max_dim"] = str(*o.max_dim);
  if (o.seed) in["seed"] = str(*o.seed);
  if (o.dry_run) in["dry_run"] = true;
  if (o.exhaustive) in["exhaustive"] = true;
  if (!o.exclude.empty()) in["exclude"] = o.exclude;
  return in;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    const bool flat = v.size() <= 8 && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_string(); });
    if (!flat) return std::to_string(v.size()) + " entries";
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].get<std::string>();
    return out + "]";
  }
  if (v.is_object()) return std::to_string(v.size()) + " fields";
  return v.dump();
}

std::string table(const Json& report) {
  std::string out = report["command"].get<std::string>() + "\n";
  if (report.contains("result"))
    for (const auto& [k, v] : report["result"].items()) out += "  " + k + ": " + scalar_text(v) + "\n";
  if (report.contains("error"))
    for (const auto& [k, v] : report["error"].items()) out += "  error." + k + ": " + scalar_text(v) + "\n";
  return out;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"char",           "rect",        "decompose", "enumerate",
                                              "verify-catalogue", "verify-howe", "census"};
  return names;
}

CommandResult run_command(const std::string& command, const CommandOptions& options) {
  static const std::map<std::string, std::function<Outcome(const CommandOptions&)>> handlers{
      {"char", cmd_char},
      {"rect", cmd_rect},
      {"decompose", cmd_decompose},
      {"enumerate", cmd_enumerate},
      {"verify-catalogue", cmd_verify_catalogue},
      {"verify-howe", cmd_verify_howe},
      {"census", cmd_census},
  };
  CommandResult res;
  res.report = {{"schema_version", kSchemaVersion}, {"command", command}, {"input", input_json(options)}};
  try {
    auto it = handlers.find(command);
    if (it == handlers.end()) throw UsageError("unknown command: " + command);
    Outcome o = it->second(options);
    res.report["result"] = std::move(o.result);
    if (!o.error.is_null()) res.report["error"] = std::move(o.error);
    res.exit_code = o.exit_code;
  } catch (const ParseError& e) {
    res.report["error"] = {{"kind", "parse"},
                           {"reason", to_string(e.kind())},
                           {"message", e.what()},
                           {"line", std::to_string(e.line())},
                           {"column", std::to_string(e.column())}};
    res.exit_code = kExitUsage;
  } catch (const std::invalid_argument& e) {
    res.report["error"] = {{"kind", "usage"}, {"message", e.what()}};
    res.exit_code = kExitUsage;
  } catch (const std::exception& e) {
    res.report["error"] = {{"kind", "internal"}, {"message", e.what()}};
    res.exit_code = kExitInternal;
  }
  res.table = table(res.report);
  return res;
}

}  // namespace rectrep::cli
