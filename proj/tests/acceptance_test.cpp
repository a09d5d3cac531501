// Acceptance gate: one line per criterion, exact arithmetic throughout.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ga/dirac.hpp"
#include "ga/rng.hpp"
#include "ga/suites.hpp"
#include "ga/textio.hpp"

using namespace ga;

namespace {

const Signature kSta(1, 3);
int g_failures = 0;

void report_line(int number, const std::string& label, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s — %s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
              detail.c_str());
  if (!ok) ++g_failures;
}

// 1. Regenerate every printed splitting-table row by brute force; at least
// 90% must match the stored fixtures and all rows must be self-consistent.
void criterion_tables() {
  int printed = 0, matched = 0, pairs = 0;
  bool consistent = true;
  int expected_misprints = 0;
  for (const auto& table : tables::generate_all()) {
    consistent = consistent && table.all_self_consistent;
    matched += table.matched;
    printed += table.matched + table.mismatched;
    pairs += table.pair_total;
    for (const auto& row : table.rows) {
      if (!row.in_paper || row.matches_paper) continue;
      bool known = (table.kind == tables::Kind::bivectorial && row.psi_pattern == "e0ij" &&
                    row.phi_pattern == "eij") ||
                   (table.kind == tables::Kind::trivectorial && row.psi_pattern == "e0ij" &&
                    row.phi_pattern == "e0ik") ||
                   (table.kind == tables::Kind::trivectorial && row.psi_pattern == "e123" &&
                    row.phi_pattern == "e0ij");
      if (known) ++expected_misprints;
      std::printf("    mismatch %s | psi %s phi %s: sweep (%s, %s, %s) vs printed (%s, %s, %s)\n",
                  tables::kind_name(table.kind), row.psi_pattern.c_str(), row.phi_pattern.c_str(),
                  tables::cell_text(row.oracle_alpha, row.psi_pattern).c_str(),
                  tables::cell_text(row.oracle_par, row.psi_pattern).c_str(),
                  tables::cell_text(row.oracle_perp, row.psi_pattern).c_str(),
                  row.paper_alpha_text.empty()
                      ? tables::cell_text(row.paper_alpha, row.psi_pattern).c_str()
                      : row.paper_alpha_text.c_str(),
                  tables::cell_text(row.paper_par, row.psi_pattern).c_str(),
                  tables::cell_text(row.paper_perp, row.psi_pattern).c_str());
    }
  }
  bool rate = 10 * matched >= 9 * printed;
  std::ostringstream os;
  os << matched << "/" << printed << " printed rows reproduced over " << pairs
     << " blade pairs, all self-consistent: " << (consistent ? "yes" : "no") << ", "
     << expected_misprints << " known misprints flagged";
  report_line(1, "splitting-table reproduction", rate && consistent && expected_misprints == 3,
              os.str());
}

// 2. Projector algebra over four signatures, 500 multivectors x 5 splitters.
void criterion_projectors() {
  bool ok = true;
  long checked = 0;
  for (Signature sig : {Signature(1, 3), Signature(3, 0), Signature(2, 2), Signature(0, 3)}) {
    Rng rng(0xA11CE5 + std::uint64_t(sig.p * 16 + sig.q));
    std::vector<Grading<Rational>> gradings;
    std::vector<Multivector<Rational>> splitters;
    for (int i = 0; i < 5; ++i) {
      splitters.push_back(rng.unit_vector(sig));
      gradings.push_back(Grading<Rational>::vector(splitters.back()));
    }
    for (int t = 0; t < 500 && ok; ++t) {
      Multivector<Rational> psi = rng.multivector(sig);
      for (int i = 0; i < 5 && ok; ++i) {
        auto parts = gradings[std::size_t(i)].project(psi);
        ok = ok && parts.parallel + parts.orthogonal == psi;
        ok = ok && gradings[std::size_t(i)].project(parts.parallel).parallel == parts.parallel;
        ok = ok && gradings[std::size_t(i)].project(parts.parallel).orthogonal.is_zero();
        ok = ok && gradings[std::size_t(i)].project(parts.orthogonal).parallel.is_zero();
        auto cf = project_contraction_form(splitters[std::size_t(i)], psi);
        ok = ok && cf.parallel == parts.parallel && cf.orthogonal == parts.orthogonal;
        ++checked;
      }
    }
  }
  std::ostringstream os;
  os << checked << " (multivector, splitter) pairs across Cl(1,3), Cl(3,0), Cl(2,2), Cl(0,3)";
  report_line(2, "projector algebra, exact", ok && checked >= 4 * 500 * 5, os.str());
}

// 3. Product-splitting laws on 500 random pairs.
void criterion_products() {
  SuiteConfig cfg;
  cfg.suite = "products";
  cfg.trials = 500;
  cfg.seed = 0xB0057;
  Report r = run_suite(cfg);
  report_line(3, "product-splitting laws, exact", r.ok(),
              std::to_string(r.trials) + " random pairs, " + std::to_string(r.count(CheckStatus::pass)) +
                  " checks clean");
}

// 4. Metric split on at least 20 unit timelike splitters.
void criterion_metric() {
  SuiteConfig cfg;
  cfg.suite = "metric";
  cfg.trials = 20;
  cfg.seed = 0x3E7;
  Report r = run_suite(cfg);
  report_line(4, "metric split h = g - n(x)n, exact", r.ok(), "20 rational unit timelike splitters");
}

// 5. The two forms of the splitting automorphism agree on every basis blade
// for five unit splitters, and their Dirac images agree on 100 homogeneous
// polynomial fields.
void criterion_dual_equivalence() {
  bool blades_ok = true;
  Rng rng(0xD0A1);
  for (int i = 0; i < 5; ++i) {
    Multivector<Rational> n = i == 0 ? parse_multivector("e0", kSta) : rng.unit_vector(kSta);
    auto o = Orientation<Rational>::from_unit_vector(n);
    auto g = Grading<Rational>::vector(n);
    for (Blade b = 0; b < kSta.blade_count(); ++b) {
      Multivector<Rational> psi = Multivector<Rational>::blade(kSta, b);
      blades_ok = blades_ok && dual_alpha(psi, o) == g.alpha(psi);
    }
  }

  bool fields_ok = true;
  SplittingField constant = SplittingField::constant(parse_multivector("e0", kSta));
  SplittingField boost = SplittingField::rational_boost(kSta, 1, 1);
  long field_runs = 0;
  for (int t = 0; t < 100; ++t) {
    const SplittingField& s = t % 4 == 3 ? boost : constant;
    int grade = int(rng.range(0, 4));
    FieldMv psi = rng.homogeneous_field(kSta, grade, t % 4 == 3 ? 1 : 2, 2);
    auto o = Orientation<RationalFunction>::from_unit_vector(s.n());
    FieldMv a_n = s.alpha(psi);
    FieldMv a_tau = dual_alpha(psi, o);
    fields_ok = fields_ok && a_n == a_tau && dirac(a_n) == dirac(a_tau);
    ++field_runs;
  }
  std::ostringstream os;
  os << "80 blade checks and " << field_runs << " homogeneous fields, both routes identical";
  report_line(5, "dual form of the splitting automorphism, exact", blades_ok && fields_ok, os.str());
}

// 6. Calculus identities on 210 fields (70 per splitter family), plus the
// sign-ledger artifact with the collapsed-formula constant pinned.
void criterion_calculus() {
  SuiteConfig cfg;
  cfg.suite = "calculus";
  cfg.trials = 210;
  cfg.seed = 0xCA1C;
  Report r = run_suite(cfg);
  std::ofstream("calculus_report.json") << r.to_json();

  SuiteConfig dual_cfg;
  dual_cfg.suite = "dual";
  dual_cfg.trials = 500;
  dual_cfg.seed = 0xD0A2;
  Report ledger = run_suite(dual_cfg);
  std::ofstream("dual_sign_ledger.json") << ledger.to_json();

  bool zaka_ok = false;
  for (const auto& rec : ledger.records)
    if (rec.id == "dual_zaka_family_constant" && rec.status == CheckStatus::pass &&
        rec.residual.find("constant +1") != std::string::npos)
      zaka_ok = true;
  bool ledger_written = std::ifstream("dual_sign_ledger.json").good();

  std::ostringstream os;
  os << "210 fields per identity over three splitter families; ledger at dual_sign_ledger.json "
        "with the collapsed-formula constant verified as +1 on its family";
  report_line(6, "exterior-calculus splitting identities, exact", r.ok() && ledger.ok() && zaka_ok &&
                  ledger_written,
              os.str());
}

// 7. The Dirac sector: double-quaternion table, sigma admissibility, and the
// two-route residual relation on 100 spinor fields.
void criterion_dirac() {
  std::vector<AdaptedBasis> frames;
  frames.push_back(AdaptedBasis::standard());
  frames.push_back(
      AdaptedBasis::from_versor(Versor<Rational>(parse_multivector("5/4 + 3/4*e01", kSta))));
  frames.push_back(
      AdaptedBasis::from_versor(Versor<Rational>(parse_multivector("3/5 + 4/5*e12", kSta))));

  bool table_ok = true;
  for (const auto& frame : frames)
    for (const auto& check : quaternion_isomorphism_check(frame)) table_ok = table_ok && check.ok;

  AdaptedBasis std_frame = AdaptedBasis::standard();
  bool sigma_ok = sigma_validate(make_sigma(Rational(3, 5), Rational(4, 5), 0, std_frame), std_frame) &&
                  !sigma_validate(make_sigma(1, 1, 0, std_frame), std_frame);

  Rng rng(0xD17AC);
  bool residual_ok = true;
  long runs = 0;
  for (int t = 0; t < 100; ++t) {
    const AdaptedBasis& frame = frames[std::size_t(t % 3)];
    SplittingField s = frame.splitting();
    Multivector<Rational> sigma = make_sigma(Rational(3, 5), Rational(4, 5), 0, frame);
    FieldMv psi = s.project(rng.field(kSta, 2, 2)).parallel;
    auto r = general_dirac_residual(psi, sigma, frame, Rational(3, 2));
    residual_ok = residual_ok && r.relation.is_zero();
    ++runs;
  }
  std::ostringstream os;
  os << "64-product table exact in 3 frames, sigma gate exact, " << runs
     << " spinor fields with matching two-route residuals";
  report_line(7, "Dirac sector, exact", table_ok && sigma_ok && residual_ok, os.str());
}

// 8. Identical seeds produce byte-identical reports, in process and through
// the installed binary when its path is provided.
void criterion_determinism() {
  SuiteConfig cfg;
  cfg.suite = "all";
  cfg.trials = 20;
  cfg.seed = 20250811;
  std::string first = run_suite(cfg).to_json();
  std::string second = run_suite(cfg).to_json();
  bool in_process = first == second && !first.empty();

  bool through_cli = true;
  std::string detail = "two in-process runs byte-identical";
  const char* cli = std::getenv("GA_CLI");
  if (cli != nullptr && *cli != '\0') {
    std::string base = std::string(cli) + " verify --suite all --trials 12 --seed 99 --out ";
    through_cli = std::system((base + "det_a.json").c_str()) == 0 &&
                  std::system((base + "det_b.json").c_str()) == 0;
    if (through_cli) {
      std::ifstream fa("det_a.json", std::ios::binary), fb("det_b.json", std::ios::binary);
      std::stringstream sa, sb;
      sa << fa.rdbuf();
      sb << fb.rdbuf();
      through_cli = sa.str() == sb.str() && !sa.str().empty();
      detail += "; two CLI runs byte-identical";
    }
  }
  report_line(8, "deterministic reports", in_process && through_cli, detail);
}

}  // namespace

int main() {
  criterion_tables();
  criterion_projectors();
  criterion_products();
  criterion_metric();
  criterion_dual_equivalence();
  criterion_calculus();
  criterion_dirac();
  criterion_determinism();
  if (g_failures == 0) {
    std::printf("acceptance: all 8 criteria hold\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
