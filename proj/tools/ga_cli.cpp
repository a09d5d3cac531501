#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ga/grading.hpp"
#include "ga/suites.hpp"
#include "ga/textio.hpp"

namespace {

bool parse_signature(const std::string& text, ga::Signature& out) {
  auto comma = text.find(',');
  if (comma == std::string::npos) return false;
  try {
    int p = std::stoi(text.substr(0, comma));
    int q = std::stoi(text.substr(comma + 1));
    out = ga::Signature(p, q);
  } catch (...) {
    return false;
  }
  return true;
}

int cmd_tables(const std::string& kind, const std::string& format) {
  std::vector<ga::tables::Table> tables;
  if (kind == "all") {
    tables = ga::tables::generate_all();
  } else {
    ga::tables::Kind k{};
    if (!ga::tables::kind_from_name(kind, k)) return 2;
    tables.push_back(ga::tables::generate(k));
  }
  bool consistent = true;
  int mismatched = 0;
  for (const auto& t : tables) {
    consistent = consistent && t.all_self_consistent;
    mismatched += t.mismatched;
    std::cout << (format == "json" ? ga::table_to_json(t) : ga::table_to_markdown(t));
    if (format != "json") std::cout << "\n";
  }
  if (mismatched > 0)
    std::cerr << "note: " << mismatched
              << " printed row(s) disagree with the sweep; see the matches_paper column\n";
  return consistent ? 0 : 1;
}

int cmd_verify(const ga::SuiteConfig& config, const std::string& out_path,
               const std::string& format) {
  ga::Report report = ga::run_suite(config);
  std::string text = format == "markdown" ? report.to_markdown() : report.to_json();
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
    out << text;
  }
  return report.ok() ? 0 : 1;
}

int cmd_split(const std::string& expr, const std::string& splitter, const ga::Signature& sig) {
  ga::Multivector<ga::Rational> psi = ga::parse_multivector(expr, sig);
  ga::Multivector<ga::Rational> n = ga::parse_multivector(splitter, sig);
  auto g = n.is_homogeneous() && !n.is_zero() && n.grade() == 1
               ? ga::Grading<ga::Rational>::vector(n)
               : ga::Grading<ga::Rational>::general(n, ga::SignMode::hat_sandwich);
  auto parts = g.project(psi);
  std::cout << "parallel:   " << ga::to_text(parts.parallel) << "\n";
  std::cout << "orthogonal: " << ga::to_text(parts.orthogonal) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for inner-automorphism spacetime splittings of Clifford algebras"};
  app.require_subcommand(1);

  auto* tables_cmd = app.add_subcommand("tables", "recompute the k-vectorial splitting tables");
  std::string kind = "all";
  std::string tables_format = "markdown";
  tables_cmd->add_option("--kind", kind, "bivectorial|trivectorial|tetravectorial|all")
      ->check(CLI::IsMember({"bivectorial", "trivectorial", "tetravectorial", "all"}));
  tables_cmd->add_option("--format", tables_format, "markdown|json")
      ->check(CLI::IsMember({"markdown", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "run an identity suite against brute-force oracles");
  ga::SuiteConfig config;
  std::string signature_text = "1,3";
  std::string out_path;
  std::string verify_format = "json";
  verify_cmd->add_option("--suite", config.suite,
                         "projectors|products|metric|hodge|calculus|dual|dirac|all")
      ->check(CLI::IsMember({"projectors", "products", "metric", "hodge", "calculus", "dual",
                             "dirac", "all"}));
  verify_cmd->add_option("--trials", config.trials, "independent random draws per check")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", config.seed, "generator seed; identical seeds give identical bytes");
  verify_cmd->add_option("--degree", config.degree, "maximum polynomial degree of random fields")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--signature", signature_text,
                         "metric signature as p,q (suites needing a timelike direction or the full "
                         "field machinery run over 1,3)");
  verify_cmd->add_option("--out", out_path, "write the report here instead of stdout");
  verify_cmd->add_option("--format", verify_format, "json|markdown")
      ->check(CLI::IsMember({"json", "markdown"}));

  auto* split_cmd = app.add_subcommand("split", "split a multivector into parallel and orthogonal parts");
  std::string expr, splitter = "e0", split_signature_text = "1,3";
  split_cmd->add_option("expr", expr, "multivector in canonical text form")->required();
  split_cmd->add_option("--n", splitter, "splitting element (1-form or inline multivector)");
  split_cmd->add_option("--signature", split_signature_text, "metric signature as p,q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (tables_cmd->parsed()) return cmd_tables(kind, tables_format);
    if (verify_cmd->parsed()) {
      if (!parse_signature(signature_text, config.signature)) {
        std::cerr << "bad --signature, expected p,q\n";
        return 2;
      }
      return cmd_verify(config, out_path, verify_format);
    }
    if (split_cmd->parsed()) {
      ga::Signature sig(1, 3);
      if (!parse_signature(split_signature_text, sig)) {
        std::cerr << "bad --signature, expected p,q\n";
        return 2;
      }
      return cmd_split(expr, splitter, sig);
    }
  } catch (const ga::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ga::ErrorCode::ParseError ? 2 : 1;
  }
  return 2;
}
