#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "belyi/catalog.hpp"
#include "belyi/hypergeo.hpp"

namespace fs = std::filesystem;
using namespace belyi;

namespace {

int env_precision() {
  const char* p = std::getenv("BELYI_PRECISION");
  if (!p) return 128;
  try {
    return std::stoi(p);
  } catch (const std::exception&) {
    return 128;
  }
}

std::pair<std::string, std::string> split_entry_path(const std::string& path) {
  fs::path p(path);
  return {p.parent_path().string(), p.stem().string()};
}

std::string cycles(const std::vector<int>& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  std::ostringstream os;
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    size_t j = i;
    std::vector<size_t> cyc;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j);
      j = static_cast<size_t>(sigma[j]);
    }
    if (cyc.size() == 1) continue;
    os << "(";
    for (size_t k = 0; k < cyc.size(); ++k) os << (k ? " " : "") << cyc[k] + 1;
    os << ")";
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

RationalFunction parse_cover_poly(const std::string& spec, int& n, FieldPtr& field) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    fail(ErrorKind::SchemaError, "cover spec must look like n:c0,c1,...");
  n = std::stoi(spec.substr(0, colon));
  std::vector<FieldElement> coeffs;
  std::string rest = spec.substr(colon + 1);
  std::istringstream is(rest);
  std::string tok;
  while (std::getline(is, tok, ','))
    coeffs.push_back(FieldElement::from_rational(field, rational_from_string(tok)));
  return RationalFunction(Polynomial(std::move(coeffs)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"belyi: exact toolkit for genus-1 Belyi maps built by composition"};
  app.require_subcommand(1);

  bool json_out = false;
  app.add_flag("--json", json_out, "emit JSON reports");

  VerifyOptions opts;
  opts.precision_bits = env_precision();

  std::string entry_path, out_path, genus0_path, cover_spec, filter, dir_path;
  int samples = 10;
  int precision = opts.precision_bits;
  double tol = 1e-9;
  bool numeric = false;

  auto* cmd_verify = app.add_subcommand("verify", "verify one catalog entry");
  cmd_verify->add_option("entry", entry_path)->required();
  cmd_verify->add_flag("--numeric", numeric, "add numeric monodromy cross-checks");
  cmd_verify->add_option("--precision", precision, "numeric precision in bits");
  cmd_verify->add_option("--tol", tol, "cluster tolerance");

  auto* cmd_passport = app.add_subcommand("passport", "print the computed passport");
  cmd_passport->add_option("entry", entry_path)->required();

  auto* cmd_compose = app.add_subcommand("compose", "compose a genus-0 map with a cover");
  cmd_compose->add_option("--genus0", genus0_path)->required();
  cmd_compose->add_option("--cover", cover_spec, "n:c0,c1,... ascending coefficients")
      ->required();
  cmd_compose->add_option("-o,--output", out_path, "write a catalog entry");

  auto* cmd_j = app.add_subcommand("j", "print the j-invariant of a curve entry");
  cmd_j->add_option("entry", entry_path)->required();

  auto* cmd_iso = app.add_subcommand("iso-verify", "verify an isogeny entry");
  cmd_iso->add_option("entry", entry_path)->required();

  auto* cmd_mono = app.add_subcommand("monodromy", "numeric permutation triple");
  cmd_mono->add_option("entry", entry_path)->required();
  cmd_mono->add_option("--precision", precision);
  cmd_mono->add_option("--tol", tol);

  auto* cmd_hpg = app.add_subcommand("hpg-check", "hypergeometric identity residuals");
  cmd_hpg->add_option("--samples", samples);

  auto* cmd_catalog = app.add_subcommand("catalog", "catalog operations");
  auto* cmd_run = cmd_catalog->add_subcommand("run", "verify every entry in a directory");
  cmd_run->add_option("dir", dir_path)->required();
  cmd_run->add_flag("--numeric", numeric);
  cmd_run->add_option("--filter", filter, "k=v with k in {kind, degree, name}");
  cmd_run->add_option("--precision", precision);

  CLI11_PARSE(app, argc, argv);
  opts.numeric = numeric;
  opts.precision_bits = precision;
  opts.cluster_tol = tol;

  try {
    if (*cmd_verify || *cmd_passport || *cmd_j || *cmd_iso || *cmd_mono) {
      auto [dir, name] = split_entry_path(entry_path);
      Catalog cat(dir);
      if (*cmd_verify) {
        auto rep = cat.verify(name, opts);
        std::vector<VerificationReport> reports{rep};
        if (json_out) std::cout << reports_to_json(reports).dump(2) << "\n";
        else std::cout << summarize(reports);
        return exit_code_for(reports);
      }
      const CatalogEntry& e = cat.load(name);
      if (*cmd_passport) {
        BranchingPassport p = e.kind == "genus0" ? cat.genus0_of(e).passport
                                                 : cat.genus1_of(e).passport;
        std::cout << p.str() << "\n";
        return 0;
      }
      if (*cmd_j) {
        SuperellipticCurve c = parse_curve(
            e.raw.contains("curve") ? e.raw.at("curve") : e.raw.at("cover"), e.field);
        std::cout << j_invariant(c).to_string() << "\n";
        return 0;
      }
      if (*cmd_iso) {
        IsogenyMap iso = cat.isogeny_of(e);
        auto rep = cat.verify(name, opts);
        std::vector<VerificationReport> reports{rep};
        if (json_out) std::cout << reports_to_json(reports).dump(2) << "\n";
        else std::cout << summarize(reports);
        return exit_code_for(reports);
      }
      if (*cmd_mono) {
        NumericSettings settings;
        settings.precision_bits = precision;
        settings.cluster_tol = tol;
        settings.embedding_index = e.raw.value("embedding", 0);
        PermutationTriple t;
        if (e.kind == "genus0") t = permutation_triple(cat.genus0_of(e).map, settings);
        else t = permutation_triple(cat.genus1_of(e), settings);
        std::cout << "sigma0   = " << cycles(t.sigma0) << "\n"
                  << "sigma1   = " << cycles(t.sigma1) << "\n"
                  << "sigmaInf = " << cycles(t.sigma_inf) << "\n"
                  << "passport = " << passport_of_triple(t).str() << "\n"
                  << "genus    = " << genus_from_triple(t) << "\n";
        return 0;
      }
    }
    if (*cmd_compose) {
      auto [dir, name] = split_entry_path(genus0_path);
      Catalog cat(dir);
      const CatalogEntry& e = cat.load(name);
      Genus0BelyiMap g0 = cat.genus0_of(e);
      int n = 2;
      FieldPtr field = e.field;
      RationalFunction cover_poly = parse_cover_poly(cover_spec, n, field);
      SuperellipticCurve cover = make_curve(n, cover_poly.num());
      Genus1BelyiMap m = compose_with_cover(g0, cover);
      std::cout << "degree " << m.degree() << ", passport " << m.passport.str() << "\n";
      if (!out_path.empty()) {
        Json out{{"kind", "genus1-cover"},
                 {"genus0", name + ".json"},
                 {"cover", Json{{"n", n}, {"f", poly_to_json(cover.f)}}},
                 {"expected_passport", m.passport.str()},
                 {"degree", m.degree()}};
        std::ofstream of(out_path);
        of << out.dump(2) << "\n";
      }
      return 0;
    }
    if (*cmd_hpg) {
      std::vector<HC> zs = default_identity_samples();
      if (samples < static_cast<int>(zs.size()))
        zs.resize(static_cast<size_t>(samples));
      IdentityCheckResult r = verify_isogeny_identity_deg5(zs);
      std::cout << "sample            |transformed|   residual\n";
      for (const auto& s : r.samples) {
        std::ostringstream zs_str;
        zs_str << "(" << static_cast<double>(s.z.real()) << ","
               << static_cast<double>(s.z.imag()) << ")";
        std::cout << zs_str.str() << "  " << static_cast<double>(abs(s.transformed))
                  << "  "
                  << (s.accepted ? std::to_string(s.residual) : std::string("rejected"))
                  << "\n";
      }
      std::cout << "max residual: " << r.max_residual << " over " << r.accepted
                << " accepted samples\n";
      return r.max_residual < 1e-10 ? 0 : 1;
    }
    if (*cmd_run) {
      Catalog cat(dir_path);
      auto reports = cat.run(filter, opts);
      if (json_out) std::cout << reports_to_json(reports).dump(2) << "\n";
      else std::cout << summarize(reports);
      return exit_code_for(reports);
    }
  } catch (const Error& e) {
    std::cerr << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    if (e.kind() == ErrorKind::SchemaError) return 2;
    if (e.kind() == ErrorKind::PrecisionError) return 3;
    return 1;
  }
  return 0;
}
