#ifndef BELYI_CATALOG_HPP
#define BELYI_CATALOG_HPP

#include <map>
#include <string>

#include "belyi/isogeny.hpp"
#include "belyi/json_io.hpp"
#include "belyi/hypergeo.hpp"
#include "belyi/monodromy.hpp"

namespace belyi {

struct CatalogEntry {
  std::string name;  // file stem
  std::string path;
  std::string kind;
  FieldPtr field;
  Json raw;
};

struct CheckResult {
  std::string claim;
  std::string status;  // "pass", "fail", "skipped"
  std::string detail;
};

struct VerificationReport {
  std::string name;
  std::string kind;
  std::vector<CheckResult> checks;
  double seconds = 0.0;
  bool schema_error = false;
  bool precision_error = false;

  bool passed() const {
    for (const auto& c : checks)
      if (c.status == "fail") return false;
    return true;
  }
};

struct VerifyOptions {
  bool numeric = false;
  int precision_bits = 128;
  double cluster_tol = 1e-9;
  int max_numeric_degree = 16;
};

class Catalog {
public:
  explicit Catalog(std::string dir);

  static CatalogEntry load_file(const std::string& path);
  const CatalogEntry& load(const std::string& ref);

  std::vector<std::string> entry_names() const;  // sorted file stems

  VerificationReport verify(const std::string& ref, const VerifyOptions& opts);
  std::vector<VerificationReport> run(const std::string& filter,
                                      const VerifyOptions& opts);

  // Domain builders (throw on inconsistent data).
  Genus0BelyiMap genus0_of(const CatalogEntry& e);
  Genus1BelyiMap genus1_of(const CatalogEntry& e);
  IsogenyMap isogeny_of(const CatalogEntry& e);
  long entry_degree(const CatalogEntry& e);

private:
  void check_expected_passport(const CatalogEntry& e, const BranchingPassport& got,
                               VerificationReport& rep);
  void check_expected_j(const CatalogEntry& e, const SuperellipticCurve& curve,
                        VerificationReport& rep);
  void numeric_cross_check(const CatalogEntry& e, VerificationReport& rep,
                           const VerifyOptions& opts);

  std::string dir_;
  std::map<std::string, CatalogEntry> cache_;
};

std::string summarize(const std::vector<VerificationReport>& reports);
Json reports_to_json(const std::vector<VerificationReport>& reports);

// Exit code: 0 all pass, 1 any fail, 2 schema error, 3 numeric precision.
int exit_code_for(const std::vector<VerificationReport>& reports);

}  // namespace belyi

#endif
