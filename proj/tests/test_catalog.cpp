#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "belyi/catalog.hpp"

using namespace belyi;

namespace {
const std::string kData = BELYI_DATA_DIR;
}

TEST_CASE("loading catalog entries") {
  Catalog cat(kData);
  const CatalogEntry& phi1 = cat.load("phi1");
  CHECK(phi1.kind == "genus0");
  CHECK(phi1.raw.at("expected_passport") == "3^2/2^3/2^3");
  CHECK(phi1.field->is_rational_field());

  const CatalogEntry& dp3 = cat.load("cov_dp3_i.json");
  CHECK(dp3.kind == "genus1-cover");
  CHECK(dp3.raw.at("expected_j") == "0");
  CHECK(dp3.raw.at("tiling_id") == "Davey (3.28)");

  CHECK_THROWS_AS(cat.load("no_such_entry"), Error);
}

TEST_CASE("schema errors carry the right kind") {
  auto tmp = std::filesystem::temp_directory_path() / "belyi_schema_test";
  std::filesystem::create_directories(tmp);
  {
    std::ofstream f(tmp / "broken.json");
    f << "{ not json";
  }
  Catalog cat(tmp.string());
  try {
    cat.load("broken");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SchemaError);
  }
  {
    std::ofstream f(tmp / "nokind.json");
    f << "{\"map\": []}";
  }
  try {
    cat.load("nokind");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SchemaError);
  }
  std::filesystem::remove_all(tmp);
}

TEST_CASE("an empty directory verifies to an empty report list") {
  auto tmp = std::filesystem::temp_directory_path() / "belyi_empty_test";
  std::filesystem::create_directories(tmp);
  Catalog cat(tmp.string());
  auto reports = cat.run("", VerifyOptions{});
  CHECK(reports.empty());
  CHECK(exit_code_for(reports) == 0);
  std::filesystem::remove_all(tmp);
}

TEST_CASE("reports are deterministic across runs") {
  Catalog cat(kData);
  VerifyOptions opts;
  auto a = cat.run("kind=genus0", opts);
  auto b = cat.run("kind=genus0", opts);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    REQUIRE(a[i].checks.size() == b[i].checks.size());
    for (size_t j = 0; j < a[i].checks.size(); ++j) {
      CHECK(a[i].checks[j].claim == b[i].checks[j].claim);
      CHECK(a[i].checks[j].status == b[i].checks[j].status);
      CHECK(a[i].checks[j].detail == b[i].checks[j].detail);
    }
  }
}

TEST_CASE("the degree filter selects exactly the degree-12 maps") {
  Catalog cat(kData);
  VerifyOptions opts;
  auto reports = cat.run("degree=12", opts);
  std::set<std::string> names;
  for (const auto& r : reports) names.insert(r.name);
  std::set<std::string> expect = {"cov_dp3_i",  "cov_t334", "cov_t332", "cov_t337",
                                  "cov_f0ii",   "cov_psi3", "cov_psi3c", "exp_k",
                                  "exp_l",      "isoc_psi3", "isoc_hex12"};
  CHECK(names == expect);
  for (const auto& r : reports) CHECK(r.passed());
}

TEST_CASE("every equation-bearing claim has a catalog entry") {
  Catalog cat(kData);
  std::vector<std::string> names = cat.entry_names();
  std::set<std::string> have(names.begin(), names.end());
  // one entry per covered construction: the five degree <= 6 maps, the eight
  // higher-degree genus-0 maps, the square-lattice family, the isogenies and
  // their composites, the parametric cover cases, and the numeric identities
  const char* required[] = {
      "phi1", "phi2", "phi3", "phi4", "phi5",
      "map_c", "map_d", "map_e", "map_f", "map_g", "map_h", "map_i", "map_j",
      "cov_dp3_i", "cov_t334", "cov_t332", "cov_t337", "cov_f0ii", "cov_t312",
      "cov_l222ii", "cov_c", "cov_d", "cov_e", "cov_f", "cov_g", "cov_h",
      "cov_i", "cov_j", "cov_hex3", "cov_hex6", "cov_hex9", "cov_deg15",
      "cov_deg18b", "cov_psi0", "cov_psi1", "cov_psi2", "cov_psi3", "cov_psi3c",
      "cov_sq16f", "cov_sq16f2", "cov_sq16g", "cov_sq16g2", "cov_sq16h",
      "cov_sq16i", "cov_sq20kl", "cov_sq20kl2",
      "exp_phi0", "exp_k", "exp_l",
      "iso_4_2", "iso_4_4a", "iso_4_4b", "iso_4_4c", "iso_4_7", "iso_4_8",
      "iso_psi3", "iso_4_12", "iso_4_14", "iso_5_11", "iso_5_13",
      "isoc_deg6", "isoc_24a", "isoc_24b", "isoc_24c", "isoc_psi1", "isoc_psi2",
      "isoc_psi3", "isoc_mult2", "isoc_endo5", "isoc_hex12", "isoc_511",
      "tra_deg18", "tra_deg18b", "tra_k", "tra_l", "tra_psi1q", "tra_e1_twist",
      "crv_j0", "crv_e1", "crv_ec28", "crv_ec52", "crv_ec1728a", "crv_ec1728b",
      "crv_phi4", "crv_phi5", "crv_54000", "crv_iso34a", "crv_iso34b",
      "crv_iso34c", "crv_c1", "crv_d1", "crv_h1", "crv_psi1", "crv_psi2",
      "crv_x4m1", "crv_g2", "crv_e_quartic", "crv_f_cubic1", "crv_g_curve",
      "crv_i_quartic", "crv_alt24a", "crv_alt24b", "crv_alt24c",
      "hpg_deg5", "hpg_quarter", "hpg_sixth", "hpg_third",
  };
  for (const char* r : required) {
    INFO("missing catalog entry: " << r);
    CHECK(have.count(r) == 1);
  }
}

TEST_CASE("verification reports serialize to JSON") {
  Catalog cat(kData);
  VerifyOptions opts;
  auto reports = cat.run("name=phi1", opts);
  REQUIRE(!reports.empty());
  Json j = reports_to_json(reports);
  CHECK(j.is_array());
  CHECK(j[0].at("name") == "phi1");
  CHECK(j[0].at("passed") == true);
}
