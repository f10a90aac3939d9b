#include "belyi/catalog.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace belyi {

namespace fs = std::filesystem;

namespace {

std::string stem_of(const std::string& ref) {
  fs::path p(ref);
  return p.stem().string();
}

const std::set<std::string> kKnownKinds = {
    "genus0",        "curve",           "genus1-cover", "genus1-explicit",
    "isogeny",       "genus1-isogeny-composite",        "transformation",
    "hpg-identity"};

void add_check(VerificationReport& rep, const std::string& claim, bool ok,
               const std::string& detail = "") {
  rep.checks.push_back({claim, ok ? "pass" : "fail", detail});
}

void add_skip(VerificationReport& rep, const std::string& claim,
              const std::string& detail) {
  rep.checks.push_back({claim, "skipped", detail});
}

FuncFieldElem lift_value(const FuncFieldElem& v, const SuperellipticCurve& target) {
  std::vector<RationalFunction> comps;
  for (const auto& c : v.comps()) comps.push_back(lift_ratfun(c, target.field()));
  return FuncFieldElem(target, std::move(comps));
}

}  // namespace

Catalog::Catalog(std::string dir) : dir_(std::move(dir)) {}

CatalogEntry Catalog::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::MissingDependency, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::SchemaError, std::string("JSON parse error in ") + path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    fail(ErrorKind::SchemaError, path + ": entry needs a string 'kind'");
  CatalogEntry e;
  e.name = stem_of(path);
  e.path = path;
  e.kind = j.at("kind").get<std::string>();
  if (!kKnownKinds.count(e.kind))
    fail(ErrorKind::SchemaError, path + ": unknown kind '" + e.kind + "'");
  e.field = parse_field(j.contains("field") ? j.at("field") : Json());
  e.raw = std::move(j);
  return e;
}

const CatalogEntry& Catalog::load(const std::string& ref) {
  std::string key = stem_of(ref);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  fs::path p = fs::path(dir_) / (key + ".json");
  if (!fs::exists(p))
    fail(ErrorKind::MissingDependency, "missing catalog entry: " + key);
  CatalogEntry e = load_file(p.string());
  return cache_.emplace(key, std::move(e)).first->second;
}

std::vector<std::string> Catalog::entry_names() const {
  std::vector<std::string> names;
  if (!fs::exists(dir_)) return names;
  for (const auto& de : fs::directory_iterator(dir_)) {
    if (de.path().extension() == ".json") names.push_back(de.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

Genus0BelyiMap Catalog::genus0_of(const CatalogEntry& e) {
  if (e.kind != "genus0")
    fail(ErrorKind::SchemaError, e.name + " is not a genus0 entry");
  RationalFunction map = parse_ratfun(e.raw.at("map"), e.field);
  return make_genus0(map);
}

IsogenyMap Catalog::isogeny_of(const CatalogEntry& e) {
  if (e.kind != "isogeny")
    fail(ErrorKind::SchemaError, e.name + " is not an isogeny entry");
  IsogenyMap iso;
  iso.source = parse_curve(e.raw.at("source"), e.field);
  iso.target = parse_curve(e.raw.at("target"), e.field);
  iso.u = parse_ratfun(e.raw.at("u"), e.field);
  if (e.raw.contains("R") && !e.raw.at("R").is_null())
    iso.R = parse_ratfun(e.raw.at("R"), e.field);
  iso.degree = e.raw.at("degree").get<int>();
  return iso;
}

Genus1BelyiMap Catalog::genus1_of(const CatalogEntry& e) {
  if (e.kind == "genus1-cover") {
    const CatalogEntry& base = load(e.raw.at("genus0").get<std::string>());
    Genus0BelyiMap g0 = genus0_of(base);
    SuperellipticCurve cover = parse_curve(e.raw.at("cover"), e.field);
    if (!base.field->same_field(*e.field)) {
      if (!base.field->is_rational_field())
        fail(ErrorKind::FieldMismatch,
             e.name + ": genus-0 base must be over Q or the entry field");
      g0.map = lift_ratfun(g0.map, e.field);
    }
    return compose_with_cover(g0, cover);
  }
  if (e.kind == "genus1-explicit") {
    SuperellipticCurve curve = parse_curve(e.raw.at("curve"), e.field);
    FuncFieldElem value =
        e.raw.contains("value")
            ? parse_funcfield_value(e.raw.at("value"), curve)
            : [&]() {
                const Json& vc = e.raw.at("value_compose");
                const CatalogEntry& base = load(vc.at("genus0").get<std::string>());
                Genus0BelyiMap g0 = genus0_of(base);
                RationalFunction outer = base.field->same_field(*e.field)
                                             ? g0.map
                                             : lift_ratfun(g0.map, e.field);
                FuncFieldElem inner = parse_funcfield_value(vc.at("inner"), curve);
                return eval_ratfun_at(outer, inner);
              }();
    return make_explicit_genus1(curve, value);
  }
  if (e.kind == "genus1-isogeny-composite") {
    const CatalogEntry& base_entry = load(e.raw.at("base").get<std::string>());
    Genus1BelyiMap base = genus1_of(base_entry);
    const CatalogEntry& iso_entry = load(e.raw.at("isogeny").get<std::string>());
    IsogenyMap iso = isogeny_of(iso_entry);
    if (!base_entry.field->same_field(*iso_entry.field)) {
      if (!base_entry.field->is_rational_field())
        fail(ErrorKind::FieldMismatch,
             e.name + ": base map must be over Q or the isogeny field");
      SuperellipticCurve lifted_curve =
          make_curve(base.curve.n, lift_poly(base.curve.f, iso_entry.field));
      base = Genus1BelyiMap{lifted_curve, lift_value(base.value, lifted_curve),
                            base.passport, base.provenance};
    }
    if (iso.R.has_value()) {
      IsogenyReport ir = verify_isogeny_full(iso);
      if (!ir.all_passed())
        fail(ErrorKind::InvalidInput, e.name + ": isogeny fails verification");
    } else {
      XOnlyResult xr = verify_isogeny_xonly(iso.source.f, iso.target.f, iso.u,
                                            iso.source.n);
      if (!xr.ok)
        fail(ErrorKind::InvalidInput, e.name + ": x-only isogeny check fails");
    }
    return compose_isogeny(base, iso);
  }
  fail(ErrorKind::SchemaError, e.name + " is not a genus-1 map entry");
}

long Catalog::entry_degree(const CatalogEntry& e) {
  if (e.raw.contains("degree")) return e.raw.at("degree").get<long>();
  if (e.kind == "genus0") return genus0_of(e).map.degree();
  if (e.kind == "genus1-cover" || e.kind == "genus1-explicit" ||
      e.kind == "genus1-isogeny-composite")
    return genus1_of(e).degree();
  return -1;
}

void Catalog::check_expected_passport(const CatalogEntry& e,
                                      const BranchingPassport& got,
                                      VerificationReport& rep) {
  if (!e.raw.contains("expected_passport")) {
    add_skip(rep, "expected passport", "no expectation stored");
    return;
  }
  BranchingPassport want =
      BranchingPassport::parse(e.raw.at("expected_passport").get<std::string>());
  bool ok = got == want;
  add_check(rep, "passport", ok, "computed " + got.str() +
                                     (ok ? "" : ", expected " + want.str()));
}

void Catalog::check_expected_j(const CatalogEntry& e, const SuperellipticCurve& curve,
                               VerificationReport& rep) {
  if (!e.raw.contains("expected_j")) return;
  if (curve.n != 2 || curve.f.degree() < 3 || curve.f.degree() > 4) {
    add_skip(rep, "j-invariant", "not an n=2 cubic/quartic model");
    return;
  }
  FieldElement want = parse_field_element(e.raw.at("expected_j"), e.field);
  FieldElement got = j_invariant(curve);
  bool ok = got == want;
  add_check(rep, "j-invariant", ok,
            ok ? got.to_string() : got.to_string() + " != " + want.to_string());
}

void Catalog::numeric_cross_check(const CatalogEntry& e, VerificationReport& rep,
                                  const VerifyOptions& opts) {
  if (e.kind != "genus0" && e.kind != "genus1-cover" &&
      e.kind != "genus1-explicit" && e.kind != "genus1-isogeny-composite")
    return;
  long deg = entry_degree(e);
  if (deg > opts.max_numeric_degree) {
    add_skip(rep, "numeric monodromy",
             "degree " + std::to_string(deg) + " above the numeric cutoff");
    return;
  }
  NumericSettings settings;
  settings.precision_bits = opts.precision_bits;
  settings.cluster_tol = opts.cluster_tol;
  settings.embedding_index = e.raw.value("embedding", 0);
  PermutationTriple t;
  BranchingPassport exact;
  int expected_genus = 0;
  if (e.kind == "genus0") {
    Genus0BelyiMap m = genus0_of(e);
    exact = m.passport;
    t = permutation_triple(m.map, settings);
  } else {
    Genus1BelyiMap m = genus1_of(e);
    exact = m.passport;
    expected_genus = 1;
    t = permutation_triple(m, settings);
  }
  BranchingPassport numeric = passport_of_triple(t);
  add_check(rep, "numeric cycle types match the exact passport", numeric == exact,
            "numeric " + numeric.str() + ", exact " + exact.str());
  int g = genus_from_triple(t);
  add_check(rep, "numeric genus", g == expected_genus,
            "genus " + std::to_string(g));
}

VerificationReport Catalog::verify(const std::string& ref, const VerifyOptions& opts) {
  VerificationReport rep;
  auto t0 = std::chrono::steady_clock::now();
  try {
    const CatalogEntry& e = load(ref);
    rep.name = e.name;
    rep.kind = e.kind;
    if (e.kind == "genus0") {
      Belyi0Report r = verify_belyi0(parse_ratfun(e.raw.at("map"), e.field));
      add_check(rep, "Belyi (Riemann-Hurwitz count)", r.is_belyi,
                std::to_string(r.ramification_sum) + " of " + std::to_string(r.required));
      check_expected_passport(e, r.passport, rep);
      if (e.raw.contains("degree"))
        add_check(rep, "degree", r.degree == e.raw.at("degree").get<long>(),
                  std::to_string(r.degree));
      if (opts.numeric) numeric_cross_check(e, rep, opts);
    } else if (e.kind == "curve") {
      SuperellipticCurve c = parse_curve(e.raw.at("curve"), e.field);
      add_check(rep, "squarefree model", true, "");
      int g = cover_genus(c);
      int want_g = e.raw.value("expected_genus", 1);
      add_check(rep, "genus", g == want_g, "genus " + std::to_string(g));
      check_expected_j(e, c, rep);
      if (e.raw.contains("j_equals")) {
        for (const auto& other_ref : e.raw.at("j_equals")) {
          const CatalogEntry& o = load(other_ref.get<std::string>());
          SuperellipticCurve oc = parse_curve(o.raw.at("curve"), o.field);
          FieldElement j1 = j_invariant(c);
          FieldElement j2 = j_invariant(oc);
          bool ok;
          if (o.field->same_field(*e.field)) ok = j1 == j2;
          else if (j2.is_rational()) ok = j1 == j2.lift_to(e.field);
          else if (j1.is_rational()) ok = j2 == j1.lift_to(o.field);
          else { ok = false; }
          add_check(rep, "j equals " + o.name, ok,
                    ok ? j1.to_string() : j1.to_string() + " != " + j2.to_string());
        }
      }
    } else if (e.kind == "genus1-cover" || e.kind == "genus1-explicit" ||
               e.kind == "genus1-isogeny-composite") {
      Genus1BelyiMap m = genus1_of(e);
      add_check(rep, "genus-1 Riemann-Hurwitz identity",
                m.passport.ramification_sum() == 2 * m.degree(),
                "sum(e-1) = " + std::to_string(m.passport.ramification_sum()) +
                    ", degree " + std::to_string(m.degree()));
      check_expected_passport(e, m.passport, rep);
      check_expected_j(e, m.curve, rep);
      if (e.raw.contains("degree"))
        add_check(rep, "degree", m.degree() == e.raw.at("degree").get<long>(),
                  std::to_string(m.degree()));
      if (e.raw.contains("expected_value")) {
        FuncFieldElem want = parse_funcfield_value(e.raw.at("expected_value"), m.curve);
        add_check(rep, "explicit value", m.value == want, "");
      }
      if (opts.numeric) numeric_cross_check(e, rep, opts);
    } else if (e.kind == "isogeny") {
      IsogenyMap iso = isogeny_of(e);
      if (iso.R.has_value()) {
        IsogenyReport ir = verify_isogeny_full(iso);
        for (const auto& c : ir.checks) add_check(rep, c.claim, c.passed, c.detail);
      }
      XOnlyResult xr =
          verify_isogeny_xonly(iso.source.f, iso.target.f, iso.u, iso.source.n);
      add_check(rep, "x-only power structure", xr.ok, "");
      if (xr.ok && e.raw.contains("expected_c")) {
        FieldElement want = parse_field_element(e.raw.at("expected_c"), e.field);
        add_check(rep, "recovered constant", xr.c == want, xr.c.to_string());
      }
      if (xr.ok && e.raw.contains("c_is_power")) {
        bool want = e.raw.at("c_is_power").get<bool>();
        add_check(rep, "constant is an n-th power in the field",
                  xr.c_is_nth_power == want,
                  xr.c_is_nth_power ? "yes" : "no (extension needed)");
      }
      if (xr.ok && iso.R.has_value()) {
        RationalFunction sq = *iso.R * *iso.R;
        RationalFunction expect = xr.R * xr.R * RationalFunction::constant(xr.c);
        add_check(rep, "printed R consistent with recovered c*S^n",
                  iso.source.n != 2 || sq == expect, "");
      }
    } else if (e.kind == "transformation") {
      SuperellipticCurve src = parse_curve(e.raw.at("source"), e.field);
      SuperellipticCurve tgt = parse_curve(e.raw.at("target"), e.field);
      FuncFieldElem x_expr = parse_funcfield_value(e.raw.at("x_expr"), tgt);
      FuncFieldElem y_expr = parse_funcfield_value(e.raw.at("y_expr"), tgt);
      bool ok = verify_transformation({src, tgt, x_expr, y_expr});
      add_check(rep, "substitution satisfies the source equation", ok, "");
      if (src.n == 2 && tgt.n == 2 && src.f.degree() >= 3 && src.f.degree() <= 4) {
        FieldElement j1 = j_invariant(src), j2 = j_invariant(tgt);
        add_check(rep, "j-invariants agree", j1 == j2, j1.to_string());
      }
    } else if (e.kind == "hpg-identity") {
      std::string which = e.raw.value("check", "deg5-identity");
      if (which == "deg5-identity") {
        IdentityCheckResult r = verify_isogeny_identity_deg5(default_identity_samples());
        add_check(rep, "accepted samples", r.accepted >= 10,
                  std::to_string(r.accepted) + " accepted, " +
                      std::to_string(r.rejected) + " rejected");
        add_check(rep, "max residual < 1e-10", r.max_residual < 1e-10,
                  std::to_string(r.max_residual));
      } else if (which == "quarter-integral") {
        double worst = 0;
        for (int i = 0; i < 20; ++i) {
          HR z = HR("0.05") + HR("0.45") * HR(i) / HR(19);
          HpgParams p{Rational(1, 2), Rational(1, 4), Rational(5, 4), HC(z)};
          double d = static_cast<double>(abs(hpg2f1(p) - integral_quarter_lattice(HC(z))));
          worst = std::max(worst, d);
        }
        add_check(rep, "series vs. elliptic integral < 1e-9 (20 samples)",
                  worst < 1e-9, std::to_string(worst));
      } else if (which == "sixth-integral") {
        HpgParams p{Rational(1, 2), Rational(1, 6), Rational(7, 6), HC(HR("0.3"))};
        double d = static_cast<double>(
            abs(hpg2f1(p) - integral_sixth_lattice(HC(HR("0.3")))));
        add_check(rep, "series vs. integral < 1e-10", d < 1e-10, std::to_string(d));
      } else if (which == "third-integral") {
        HpgParams p{Rational(1, 3), Rational(2, 3), Rational(4, 3), HC(HR("0.3"))};
        double d = static_cast<double>(
            abs(hpg2f1(p) - integral_third_lattice(HC(HR("0.3")))));
        add_check(rep, "series vs. integral < 1e-10", d < 1e-10, std::to_string(d));
      } else {
        fail(ErrorKind::SchemaError, "unknown hpg check: " + which);
      }
    }
  } catch (const Error& err) {
    rep.name = rep.name.empty() ? stem_of(ref) : rep.name;
    if (err.kind() == ErrorKind::SchemaError) rep.schema_error = true;
    if (err.kind() == ErrorKind::PrecisionError) rep.precision_error = true;
    rep.checks.push_back({"verification", "fail",
                          std::string(error_kind_name(err.kind())) + ": " + err.what()});
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<VerificationReport> Catalog::run(const std::string& filter,
                                             const VerifyOptions& opts) {
  std::vector<VerificationReport> out;
  std::string fk, fv;
  if (!filter.empty()) {
    auto eq = filter.find('=');
    if (eq == std::string::npos)
      fail(ErrorKind::SchemaError, "filter must look like key=value");
    fk = filter.substr(0, eq);
    fv = filter.substr(eq + 1);
  }
  for (const std::string& name : entry_names()) {
    if (!fk.empty()) {
      try {
        const CatalogEntry& e = load(name);
        if (fk == "kind" && e.kind != fv) continue;
        if (fk == "name" && name.find(fv) == std::string::npos) continue;
        if (fk == "degree" && entry_degree(e) != std::stol(fv)) continue;
      } catch (const Error&) {
        // fall through and let verify() report the failure
      }
    }
    out.push_back(verify(name, opts));
  }
  return out;
}

std::string summarize(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  int pass = 0, failn = 0, skip = 0;
  for (const auto& r : reports) {
    bool ok = r.passed();
    os << (ok ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.kind.empty()) os << " [" << r.kind << "]";
    os << "  (" << r.checks.size() << " checks, " << r.seconds << " s)\n";
    for (const auto& c : r.checks) {
      if (c.status == "fail")
        os << "      fail: " << c.claim << (c.detail.empty() ? "" : " -- " + c.detail)
           << "\n";
      if (c.status == "skipped") ++skip;
    }
    ok ? ++pass : ++failn;
  }
  os << pass << " passed, " << failn << " failed";
  if (skip) os << ", " << skip << " checks skipped";
  os << "\n";
  return os.str();
}

Json reports_to_json(const std::vector<VerificationReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"claim", c.claim}, {"status", c.status}, {"detail", c.detail}});
    arr.push_back({{"name", r.name},
                   {"kind", r.kind},
                   {"passed", r.passed()},
                   {"seconds", r.seconds},
                   {"checks", checks}});
  }
  return arr;
}

int exit_code_for(const std::vector<VerificationReport>& reports) {
  bool any_fail = false;
  for (const auto& r : reports) {
    if (r.schema_error) return 2;
    if (r.precision_error) return 3;
    if (!r.passed()) any_fail = true;
  }
  return any_fail ? 1 : 0;
}

}  // namespace belyi
