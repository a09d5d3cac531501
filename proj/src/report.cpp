#include "ga/report.hpp"

#include <sstream>

#include "json.hpp"

namespace ga {

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::paper_mismatch: return "paper_mismatch";
  }
  return "?";
}

}  // namespace

int Report::count(CheckStatus s) const {
  int c = 0;
  for (const auto& r : records)
    if (r.status == s) ++c;
  return c;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["signature"] = {signature.p, signature.q};
  j["seed"] = seed;
  j["trials"] = trials;
  j["degree"] = degree;
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json rec;
    rec["check_id"] = r.id;
    rec["paper_ref"] = r.paper_ref;
    rec["status"] = status_name(r.status);
    rec["residual"] = r.residual;
    rec["witness"] = r.witness;
    j["records"].push_back(rec);
  }
  j["summary"] = {{"pass", count(CheckStatus::pass)},
                  {"fail", count(CheckStatus::fail)},
                  {"paper_mismatch", count(CheckStatus::paper_mismatch)}};
  return j.dump(2) + "\n";
}

std::string Report::to_markdown() const {
  std::ostringstream os;
  os << "# suite " << suite << "\n\n";
  os << "signature (" << signature.p << "," << signature.q << "), seed " << seed << ", trials "
     << trials << ", degree " << degree << "\n\n";
  os << "| check | status | residual | witness |\n|---|---|---|---|\n";
  for (const auto& r : records)
    os << "| " << r.id << " | " << status_name(r.status) << " | " << r.residual << " | " << r.witness
       << " |\n";
  os << "\npass " << count(CheckStatus::pass) << ", fail " << count(CheckStatus::fail)
     << ", paper_mismatch " << count(CheckStatus::paper_mismatch) << "\n";
  return os.str();
}

std::string table_to_json(const tables::Table& table) {
  nlohmann::ordered_json j;
  j["kind"] = tables::kind_name(table.kind);
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : table.rows) {
    nlohmann::ordered_json row;
    row["psi"] = r.psi_pattern;
    row["phi"] = r.phi_pattern;
    row["alpha"] = tables::cell_text(r.oracle_alpha, r.psi_pattern);
    row["parallel"] = tables::cell_text(r.oracle_par, r.psi_pattern);
    row["orthogonal"] = tables::cell_text(r.oracle_perp, r.psi_pattern);
    row["in_paper"] = r.in_paper;
    if (r.in_paper) {
      row["paper_alpha"] = r.paper_alpha_text.empty()
                               ? tables::cell_text(r.paper_alpha, r.psi_pattern)
                               : r.paper_alpha_text;
      row["paper_parallel"] = tables::cell_text(r.paper_par, r.psi_pattern);
      row["paper_orthogonal"] = tables::cell_text(r.paper_perp, r.psi_pattern);
      row["matches_paper"] = r.matches_paper;
    }
    row["pairs_swept"] = r.pair_count;
    row["self_consistent"] = r.self_consistent;
    j["rows"].push_back(row);
  }
  j["summary"] = {{"matched", table.matched},
                  {"mismatched", table.mismatched},
                  {"not_printed", table.extra},
                  {"pairs", table.pair_total},
                  {"self_consistent", table.all_self_consistent}};
  return j.dump(2) + "\n";
}

std::string table_to_markdown(const tables::Table& table) {
  std::ostringstream os;
  os << "# " << tables::kind_name(table.kind) << " inner automorphisms of Cl(1,3)\n\n";
  os << "| psi | phi | alpha(psi) | parallel | orthogonal | matches_paper |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const auto& r : table.rows) {
    os << "| " << r.psi_pattern << " | " << r.phi_pattern << " | "
       << tables::cell_text(r.oracle_alpha, r.psi_pattern) << " | "
       << tables::cell_text(r.oracle_par, r.psi_pattern) << " | "
       << tables::cell_text(r.oracle_perp, r.psi_pattern) << " | ";
    if (!r.in_paper)
      os << "not printed";
    else if (r.matches_paper)
      os << "yes";
    else
      os << "no (paper: " << (r.paper_alpha_text.empty()
                                  ? tables::cell_text(r.paper_alpha, r.psi_pattern)
                                  : r.paper_alpha_text)
         << ", " << tables::cell_text(r.paper_par, r.psi_pattern) << ", "
         << tables::cell_text(r.paper_perp, r.psi_pattern) << ")";
    os << " |\n";
  }
  os << "\nrows matched " << table.matched << ", mismatched " << table.mismatched
     << ", unprinted families " << table.extra << ", blade pairs swept " << table.pair_total
     << ", self-consistent " << (table.all_self_consistent ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace ga
