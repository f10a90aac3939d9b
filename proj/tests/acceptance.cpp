// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <iostream>
#include <random>

#include "belyi/catalog.hpp"
#include "belyi/hypergeo.hpp"

using namespace belyi;

namespace {

const std::string kData = BELYI_DATA_DIR;
int failures = 0;

class Criterion {
public:
  explicit Criterion(std::string name) : name_(std::move(name)) {
    start_ = std::chrono::steady_clock::now();
  }
  void check(bool ok, const std::string& what) {
    if (!ok) {
      ok_ = false;
      problems_ += (problems_.empty() ? "" : "; ") + what;
    }
    ++checks_;
  }
  ~Criterion() {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start_).count();
    std::cout << (ok_ ? "PASS" : "FAIL") << "  " << name_ << "  (" << checks_
              << " checks, " << secs << " s)";
    if (!ok_) {
      std::cout << "\n      " << problems_;
      ++failures;
    }
    std::cout << "\n";
  }

private:
  std::string name_;
  std::string problems_;
  std::chrono::steady_clock::time_point start_;
  int checks_ = 0;
  bool ok_ = true;
};

BranchingPassport pp(const std::string& s) { return BranchingPassport::parse(s); }

FieldElement qn(long n, long d = 1) {
  return FieldElement::from_rational(NumberField::rationals(), Rational(n, d));
}

}  // namespace

// 1. Passport reproduction for all genus-0 maps (exact, < 5 s).
static void criterion1(Catalog& cat) {
  Criterion c("criterion 1: genus-0 passports");
  struct Row {
    const char* entry;
    const char* passport;
    bool swapped;  // printed with the 0 and infinity fibers interchanged
  };
  const Row rows[] = {
      {"phi1", "3^2/2^3/2^3", false},
      {"phi2", "3^2/4 2/2^2 1^2", true},
      {"phi3", "3^2/3^2/2^2 1^2", false},
      {"phi4", "3 2/3 2/2^2 1", false},
      {"phi5", "3 2/3 2/3 1^2", false},
      {"map_c", "2^2 3/2^2 3/2^2 3", false},
      {"map_d", "4 3/4 3/1^4 3", false},
      {"map_e", "4 3/2^2 3/1^2 2 3", false},
      {"map_f", "4 3/4 3/2^2 1^3", false},
      {"map_g", "4 3/2^2 3/2^3 1", false},
      {"map_h", "5 3/4^2/2^2 1^4", false},
      {"map_i", "5 3/4 2^2/2^3 1^2", false},
      {"map_j", "3^3/3^3/1^3 3^2", false},
  };
  for (const Row& r : rows) {
    Genus0BelyiMap m = cat.genus0_of(cat.load(r.entry));
    BranchingPassport want = pp(r.passport);
    if (r.swapped) want = want.swapped_inf_zero();
    c.check(m.passport == want, std::string(r.entry) + " computed " +
                                    m.passport.str() + " vs " + want.str());
  }
}

// 2. Composite passports with the Riemann-Hurwitz identity (exact, < 10 s).
static void criterion2(Catalog& cat) {
  Criterion c("criterion 2: genus-1 composite passports");
  struct Row {
    const char* entry;
    const char* passport;
    bool swapped;
  };
  const Row rows[] = {
      {"cov_dp3_i", "3^2 6/4^3/2^6", false},
      {"cov_t334", "3^2 6/4^3/2^6", true},
      {"cov_t332", "3^2 6/3^2 6/2^6", false},
      {"cov_t337", "3^2 6/3^2 6/2^6", false},
      {"exp_k", "3^2 6/3^2 6/2^6", false},
      {"cov_f0ii", "3^4/3^4/4^2 2^2", false},
      {"exp_l", "3^4/3^4/4^2 2^2", false},
      {"cov_t312", "3^2 4/3^2 4/2^3 4", false},
      {"cov_l222ii", "3^2 4/3^2 4/3^2 2^2", false},
      {"cov_c", "4^2 3^2/4^2 3^2/2^4 3^2", false},
      {"cov_d", "4^2 3^2/4^2 3^2/2^4 3^2", false},
      {"cov_e", "4^2 3^2/4^2 3^2/2^4 3^2", false},
      {"cov_f", "4^2 3^2/4^2 3^2/2^5 4", false},
      {"cov_g", "4^2 3^2/4^2 3^2/2^5 4", false},
      {"cov_h", "5^2 3^2/4^4/2^8", false},
      {"cov_i", "5^2 3^2/4^4/2^8", false},
      {"cov_j", "3^6/3^6/2^3 3^2 6", false},
      {"cov_deg18b", "3^6/3^6/2^3 3^2 6", false},
      {"cov_deg15", "4^3 3/4^3 3/2^6 3", false},
      {"isoc_24a", "3^4 6^2/4^6/2^12", true},
      {"isoc_24b", "3^4 6^2/4^6/2^12", true},
      {"isoc_24c", "3^4 6^2/4^6/2^12", true},
      {"isoc_deg6", "3^2/3^2/3^2", false},
      {"cov_psi0", "4/4/2^2", false},
      {"isoc_psi1", "4^2/4^2/2^4", false},
      {"isoc_psi2", "4^2/4^2/2^4", false},
      {"isoc_psi3", "4^3/4^3/2^6", false},
      {"isoc_mult2", "4^4/4^4/2^8", false},
      {"isoc_endo5", "4^5/4^5/2^10", false},
  };
  for (const Row& r : rows) {
    Genus1BelyiMap m = cat.genus1_of(cat.load(r.entry));
    BranchingPassport want = pp(r.passport);
    if (r.swapped) want = want.swapped_inf_zero();
    c.check(m.passport == want, std::string(r.entry) + " computed " +
                                    m.passport.str() + " vs " + want.str());
    c.check(m.passport.ramification_sum() == 2 * m.degree(),
            std::string(r.entry) + " Riemann-Hurwitz identity");
  }
}

// 3. The thirteen j-invariants, exactly (exact).
static void criterion3(Catalog& cat) {
  Criterion c("criterion 3: j-invariants");
  struct Row {
    const char* entry;
    Rational j;
  };
  const Row rows[] = {
      {"crv_j0", Rational(0)},
      {"crv_e1", Rational(1728)},
      {"crv_ec28", Rational(21952, 9)},
      {"crv_ec52", Rational(140608, 3)},
      {"crv_iso34b", Rational(7301384, 3)},
      {"crv_iso34c", Rational(97336, 81)},
      {"crv_phi4", Rational(-108, 5)},
      {"crv_phi5", Rational(132304644, 5)},
      {"crv_54000", Rational(54000)},
      {"crv_psi2", Rational(287496)},
      {"crv_h1", Rational(-5000)},
      {"crv_c1", Rational(740772, 49)},
      {"crv_d1", Rational(16581375)},
  };
  for (const Row& r : rows) {
    const CatalogEntry& e = cat.load(r.entry);
    SuperellipticCurve curve = parse_curve(e.raw.at("curve"), e.field);
    FieldElement got = j_invariant(curve);
    FieldElement want = FieldElement::from_rational(e.field, r.j);
    c.check(got == want, std::string(r.entry) + " j = " + got.to_string());
  }
}

// 4. Isogeny identities, exactly (< 5 s).
static void criterion4(Catalog& cat) {
  Criterion c("criterion 4: isogeny identities");
  for (const char* name : {"iso_4_2", "iso_4_7", "iso_4_8", "iso_4_12", "iso_4_14",
                           "iso_5_11", "iso_5_13", "iso_psi3"}) {
    IsogenyMap iso = cat.isogeny_of(cat.load(name));
    c.check(verify_isogeny_full(iso).all_passed(), std::string(name));
  }
  for (const char* name : {"iso_4_4a", "iso_4_4b", "iso_4_4c"}) {
    IsogenyMap iso = cat.isogeny_of(cat.load(name));
    XOnlyResult xr =
        verify_isogeny_xonly(iso.source.f, iso.target.f, iso.u, iso.source.n);
    c.check(xr.ok && xr.c == qn(1, 64), std::string(name) + " x-only");
  }
  // 2-descent at ten random parameter pairs
  std::mt19937 rng(8128);
  std::uniform_int_distribution<int> co(-9, 9);
  int done = 0;
  while (done < 10) {
    long a = co(rng), b = co(rng);
    Polynomial x({qn(0), qn(1)});
    Polynomial quartic({qn(b), qn(0), qn(a), qn(0), qn(1)});
    Polynomial cubic = x * Polynomial({qn(b), qn(a), qn(1)});
    Polynomial reduced = x * Polynomial({qn(a * a - 4 * b), qn(-2 * a), qn(1)});
    if (poly_gcd(quartic, quartic.derivative()).degree() > 0 ||
        poly_gcd(cubic, cubic.derivative()).degree() > 0 ||
        poly_gcd(reduced, reduced.derivative()).degree() > 0)
      continue;
    XOnlyResult xr = verify_isogeny_xonly(quartic, cubic,
                                          RationalFunction(x * x), 2);
    c.check(xr.ok && xr.c == qn(1), "2-descent x-only at a=" + std::to_string(a));
    c.check(j_invariant(make_curve(2, quartic)) == j_invariant(make_curve(2, reduced)),
            "2-descent Weierstrass reduction at a=" + std::to_string(a));
    ++done;
  }
}

// 5. Transformation verification (exact).
static void criterion5(Catalog& cat) {
  Criterion c("criterion 5: curve transformations");
  std::mt19937 rng(515);
  std::uniform_int_distribution<int> co(-8, 8);
  int done = 0;
  while (done < 20) {
    FieldElement a = qn(co(rng)), b = qn(co(rng)), cc = qn(co(rng)), d = qn(co(rng));
    Polynomial quartic({d, cc, b, a, qn(1)});
    if (poly_gcd(quartic, quartic.derivative()).degree() > 0) continue;
    auto [w, t] = quartic_to_weierstrass(a, b, cc, d);
    c.check(verify_transformation(t), "random quartic round trip");
    ++done;
  }
  for (const char* name : {"tra_deg18", "tra_deg18b"}) {
    VerificationReport rep = cat.verify(name, VerifyOptions{});
    c.check(rep.passed(), std::string(name));
  }
}

// 6. Numeric monodromy oracle (numeric, < 120 s at 128-bit precision).
static void criterion6(Catalog& cat) {
  Criterion c("criterion 6: monodromy oracle");
  NumericSettings settings;  // 128-bit default
  int checked = 0;
  for (const std::string& name : cat.entry_names()) {
    const CatalogEntry& e = cat.load(name);
    if (e.kind != "genus0" && e.kind != "genus1-cover" &&
        e.kind != "genus1-explicit" && e.kind != "genus1-isogeny-composite")
      continue;
    long deg = cat.entry_degree(e);
    if (deg > 16) continue;
    NumericSettings s = settings;
    s.embedding_index = e.raw.value("embedding", 0);
    BranchingPassport exact;
    PermutationTriple t;
    int genus_want = 0;
    if (e.kind == "genus0") {
      Genus0BelyiMap m = cat.genus0_of(e);
      exact = m.passport;
      t = permutation_triple(m.map, s);
    } else {
      Genus1BelyiMap m = cat.genus1_of(e);
      exact = m.passport;
      genus_want = 1;
      t = permutation_triple(m, s);
    }
    c.check(passport_of_triple(t) == exact, name + " cycle types");
    c.check(genus_from_triple(t) == genus_want, name + " genus");
    ++checked;
  }
  c.check(checked >= 40, "coverage of the numeric oracle");

  // the two same-passport cut choices carry inequivalent dessins
  Genus1BelyiMap a = cat.genus1_of(cat.load("cov_t332"));
  Genus1BelyiMap b = cat.genus1_of(cat.load("cov_t337"));
  PermutationTriple ta = permutation_triple(a, settings);
  PermutationTriple tb = permutation_triple(b, settings);
  c.check(passport_of_triple(ta) == passport_of_triple(tb),
          "equal cycle types for the same passport");
  c.check(!triples_equivalent(ta, tb), "inequivalent dessins for the two cuts");
}

// 7. Hypergeometric identities (numeric).
static void criterion7(Catalog&) {
  Criterion c("criterion 7: hypergeometric identities");
  IdentityCheckResult r = verify_isogeny_identity_deg5(default_identity_samples());
  c.check(r.accepted >= 10, "ten accepted samples");
  c.check(r.max_residual < 1e-10,
          "max residual " + std::to_string(r.max_residual));
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    HR z = HR("0.05") + HR("0.45") * HR(i) / HR(19);
    HpgParams p{Rational(1, 2), Rational(1, 4), Rational(5, 4), HC(z)};
    worst = std::max(worst, static_cast<double>(
                                abs(hpg2f1(p) - integral_quarter_lattice(HC(z)))));
  }
  c.check(worst < 1e-9, "series vs quadrature " + std::to_string(worst));
}

// 8. Full catalog run with numerics in under three minutes.
static void criterion8(Catalog&) {
  Criterion c("criterion 8: full catalog run");
  auto t0 = std::chrono::steady_clock::now();
  Catalog cat(kData);
  VerifyOptions opts;
  opts.numeric = true;
  auto reports = cat.run("", opts);
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  int failed = 0;
  for (const auto& r : reports)
    if (!r.passed()) ++failed;
  c.check(!reports.empty(), "catalog is non-empty");
  c.check(failed == 0, std::to_string(failed) + " entries failed");
  c.check(secs < 180.0, "elapsed " + std::to_string(secs) + " s");
}

int main() {
  Catalog cat(kData);
  criterion1(cat);
  criterion2(cat);
  criterion3(cat);
  criterion4(cat);
  criterion5(cat);
  criterion6(cat);
  criterion7(cat);
  criterion8(cat);
  if (failures) {
    std::cout << failures << " criteria FAILED\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
