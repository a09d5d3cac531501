#include "ga/tables.hpp"

#include <functional>
#include <map>

#include "ga/grading.hpp"
#include "ga/textio.hpp"

namespace ga::tables {

namespace {

const Signature kSta(1, 3);

bool has0(Blade b) { return (b & 1u) != 0; }
int spatial_overlap(Blade a, Blade b) { return grade_of(Blade(a & b & ~1u)); }

struct RowSpec {
  const char* psi_pattern;
  const char* phi_pattern;
  std::function<bool(Blade, Blade)> match;
  bool in_paper;
  int alpha;  // printed cell, as +1/-1 multiple of psi; 0 for the stray text cell
  const char* alpha_text;
  int par;
  int perp;
};

std::vector<RowSpec> bivectorial_rows() {
  auto ov = spatial_overlap;
  return {
      // psi grade 1
      {"e0", "e0j", [](Blade p, Blade f) { return p == 1 && has0(f); }, true, -1, "", 0, +1},
      {"e0", "eij", [](Blade p, Blade f) { return p == 1 && !has0(f); }, true, +1, "", +1, 0},
      {"ei", "e0j",
       [ov](Blade p, Blade f) { return grade_of(p) == 1 && !has0(p) && has0(f) && ov(p, f) == 0; },
       true, +1, "", +1, 0},
      {"ei", "eik",
       [ov](Blade p, Blade f) { return grade_of(p) == 1 && !has0(p) && !has0(f) && ov(p, f) == 1; },
       true, -1, "", 0, +1},
      {"ei", "e0i",
       [ov](Blade p, Blade f) { return grade_of(p) == 1 && !has0(p) && has0(f) && ov(p, f) == 1; },
       true, -1, "", 0, +1},
      {"ei", "ejk",
       [ov](Blade p, Blade f) { return grade_of(p) == 1 && !has0(p) && !has0(f) && ov(p, f) == 0; },
       true, +1, "", +1, 0},
      // psi grade 2
      {"e0i", "e0j",
       [ov](Blade p, Blade f) { return grade_of(p) == 2 && has0(p) && has0(f) && ov(p, f) == 0; },
       true, -1, "", 0, +1},
      {"e0i", "eij",
       [ov](Blade p, Blade f) { return grade_of(p) == 2 && has0(p) && !has0(f) && ov(p, f) == 1; },
       true, -1, "", 0, +1},
      {"e0i", "ejk",
       [ov](Blade p, Blade f) { return grade_of(p) == 2 && has0(p) && !has0(f) && ov(p, f) == 0; },
       true, +1, "", +1, 0},
      {"eij", "e0i",
       [ov](Blade p, Blade f) { return grade_of(p) == 2 && !has0(p) && has0(f) && ov(p, f) == 1; },
       true, -1, "", 0, +1},
      {"eij", "e0k",
       [ov](Blade p, Blade f) { return grade_of(p) == 2 && !has0(p) && has0(f) && ov(p, f) == 0; },
       true, +1, "", +1, 0},
      {"eij", "eik",
       [ov](Blade p, Blade f) { return grade_of(p) == 2 && !has0(p) && !has0(f) && ov(p, f) == 1; },
       true, -1, "", 0, +1},
      // psi grade 3
      {"e0ij", "e0j",
       [ov](Blade p, Blade f) { return grade_of(p) == 3 && has0(p) && has0(f) && ov(p, f) == 1; },
       true, +1, "", +1, 0},
      // The printed alpha cell drops a grade here; the projections match +psi.
      {"e0ij", "eij",
       [ov](Blade p, Blade f) { return grade_of(p) == 3 && has0(p) && !has0(f) && ov(p, f) == 2; },
       true, 0, "e0i", +1, 0},
      {"e0ij", "ejk",
       [ov](Blade p, Blade f) { return grade_of(p) == 3 && has0(p) && !has0(f) && ov(p, f) == 1; },
       true, -1, "", 0, +1},
      {"e123", "e0i", [](Blade p, Blade f) { return p == 0b1110 && has0(f); }, true, -1, "", 0, +1},
      {"e123", "eij", [](Blade p, Blade f) { return p == 0b1110 && !has0(f); }, true, +1, "", +1, 0},
      // Family the published table omits.
      {"e0ij", "e0k",
       [ov](Blade p, Blade f) { return grade_of(p) == 3 && has0(p) && has0(f) && ov(p, f) == 0; },
       false, 0, "", 0, 0},
      // psi grade 4
      {"e0123", "emunu", [](Blade p, Blade) { return p == 0b1111; }, true, +1, "", +1, 0},
  };
}

std::vector<RowSpec> trivectorial_rows() {
  auto ov = spatial_overlap;
  const Blade spatial3 = 0b1110;
  return {
      // psi grade 1
      {"e0", "e0ij", [](Blade p, Blade f) { return p == 1 && has0(f); }, true, +1, "", +1, 0},
      {"e0", "e123", [spatial3](Blade p, Blade f) { return p == 1 && f == spatial3; }, true, -1, "", 0,
       +1},
      {"ei", "e0ij",
       [ov](Blade p, Blade f) { return grade_of(p) == 1 && !has0(p) && has0(f) && ov(p, f) == 1; },
       true, +1, "", +1, 0},
      {"ei", "e0jk",
       [ov](Blade p, Blade f) { return grade_of(p) == 1 && !has0(p) && has0(f) && ov(p, f) == 0; },
       true, -1, "", 0, +1},
      {"ei", "e123",
       [spatial3](Blade p, Blade f) { return grade_of(p) == 1 && !has0(p) && f == spatial3; }, true,
       +1, "", +1, 0},
      // psi grade 2
      {"e0i", "e0ij",
       [ov](Blade p, Blade f) { return grade_of(p) == 2 && has0(p) && has0(f) && ov(p, f) == 1; },
       true, +1, "", +1, 0},
      {"e0i", "e123",
       [spatial3](Blade p, Blade f) { return grade_of(p) == 2 && has0(p) && f == spatial3; }, true,
       -1, "", 0, +1},
      {"eij", "e0ij",
       [ov](Blade p, Blade f) { return grade_of(p) == 2 && !has0(p) && has0(f) && ov(p, f) == 2; },
       true, +1, "", +1, 0},
      {"eij", "e0ik",
       [ov](Blade p, Blade f) { return grade_of(p) == 2 && !has0(p) && has0(f) && ov(p, f) == 1; },
       true, -1, "", 0, +1},
      {"eij", "e123",
       [spatial3](Blade p, Blade f) { return grade_of(p) == 2 && !has0(p) && f == spatial3; }, true,
       +1, "", +1, 0},
      // Family the published table omits.
      {"e0i", "e0jk",
       [ov](Blade p, Blade f) { return grade_of(p) == 2 && has0(p) && has0(f) && ov(p, f) == 0; },
       false, 0, "", 0, 0},
      // psi grade 3; the first row's printed cells disagree with the sweep.
      {"e0ij", "e0ik",
       [](Blade p, Blade f) { return grade_of(p) == 3 && has0(p) && has0(f); }, true, +1, "", +1, 0},
      {"e0ij", "e123",
       [spatial3](Blade p, Blade f) { return grade_of(p) == 3 && has0(p) && f == spatial3; }, true,
       -1, "", 0, +1},
      // The printed orthogonal cell carries a stray minus sign.
      {"e123", "e0ij", [spatial3](Blade p, Blade f) { return p == spatial3 && has0(f); }, true, -1,
       "", 0, -1},
      // psi grade 4
      {"e0123", "emunusigma", [](Blade p, Blade) { return p == 0b1111; }, true, -1, "", 0, +1},
  };
}

std::vector<RowSpec> tetravectorial_rows() {
  return {
      {"emu", "e0123", [](Blade p, Blade) { return grade_of(p) == 1; }, true, -1, "", 0, +1},
      {"emunu", "e0123", [](Blade p, Blade) { return grade_of(p) == 2; }, true, +1, "", +1, 0},
      {"emunusigma", "e0123", [](Blade p, Blade) { return grade_of(p) == 3; }, true, -1, "", 0, +1},
  };
}

}  // namespace

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::bivectorial: return "bivectorial";
    case Kind::trivectorial: return "trivectorial";
    case Kind::tetravectorial: return "tetravectorial";
  }
  return "?";
}

bool kind_from_name(const std::string& name, Kind& out) {
  if (name == "bivectorial") out = Kind::bivectorial;
  else if (name == "trivectorial") out = Kind::trivectorial;
  else if (name == "tetravectorial") out = Kind::tetravectorial;
  else return false;
  return true;
}

std::string cell_text(int value, const std::string& psi_pattern) {
  if (value == 0) return "0";
  return (value < 0 ? "-" : "") + psi_pattern;
}

Table generate(Kind kind) {
  int splitter_grade = kind == Kind::bivectorial ? 2 : kind == Kind::trivectorial ? 3 : 4;
  std::vector<RowSpec> specs = kind == Kind::bivectorial    ? bivectorial_rows()
                               : kind == Kind::trivectorial ? trivectorial_rows()
                                                            : tetravectorial_rows();

  Table table;
  table.kind = kind;
  std::vector<RowResult> rows(specs.size());
  std::vector<bool> seen(specs.size(), false);

  for (Blade phi = 0; phi < kSta.blade_count(); ++phi) {
    if (grade_of(phi) != splitter_grade) continue;
    Multivector<Rational> phi_mv = Multivector<Rational>::blade(kSta, phi);
    auto g = Grading<Rational>::k_form(phi_mv);
    for (Blade psi = 1; psi < kSta.blade_count(); ++psi) {
      if (grade_of(psi) == 0 || psi == phi) continue;  // trivial sandwiches
      Multivector<Rational> psi_mv = Multivector<Rational>::blade(kSta, psi);
      Multivector<Rational> alpha = g.alpha(psi_mv);
      auto parts = g.project(psi_mv);

      int oa = alpha == psi_mv ? +1 : alpha == -psi_mv ? -1 : 0;
      int opar = parts.parallel == psi_mv ? +1 : parts.parallel.is_zero() ? 0 : 2;
      int operp = parts.orthogonal == psi_mv ? +1 : parts.orthogonal.is_zero() ? 0 : 2;
      bool consistent = oa != 0 && opar != 2 && operp != 2 &&
                        parts.parallel + parts.orthogonal == psi_mv &&
                        g.alpha(alpha) == psi_mv;

      std::size_t row_idx = specs.size();
      for (std::size_t r = 0; r < specs.size(); ++r) {
        if (specs[r].match(psi, phi)) {
          row_idx = r;
          break;
        }
      }
      if (row_idx == specs.size())
        fail(ErrorCode::BadIndex, "unclassified blade pair " + blade_name(psi) + ", " + blade_name(phi));

      RowResult& row = rows[row_idx];
      if (!seen[row_idx]) {
        const RowSpec& s = specs[row_idx];
        row.psi_pattern = s.psi_pattern;
        row.phi_pattern = s.phi_pattern;
        row.in_paper = s.in_paper;
        row.paper_alpha = s.alpha;
        row.paper_alpha_text = s.alpha_text;
        row.paper_par = s.par;
        row.paper_perp = s.perp;
        row.oracle_alpha = oa;
        row.oracle_par = opar;
        row.oracle_perp = operp;
        row.self_consistent = consistent;
        row.witness = "psi=" + blade_name(psi) + ", phi=" + blade_name(phi);
        seen[row_idx] = true;
      } else {
        // Every concrete pair of a schematic family must behave identically.
        if (row.oracle_alpha != oa || row.oracle_par != opar || row.oracle_perp != operp)
          fail(ErrorCode::BadIndex, "family is not uniform at " + blade_name(psi));
        row.self_consistent = row.self_consistent && consistent;
      }
      row.pair_count += 1;
    }
  }

  for (RowResult& row : rows) {
    if (row.pair_count == 0) continue;
    row.matches_paper = row.in_paper && row.paper_alpha == row.oracle_alpha &&
                        row.paper_alpha_text.empty() && row.paper_par == row.oracle_par &&
                        row.paper_perp == row.oracle_perp;
    table.pair_total += row.pair_count;
    table.all_self_consistent = table.all_self_consistent && row.self_consistent;
    if (!row.in_paper)
      table.extra += 1;
    else if (row.matches_paper)
      table.matched += 1;
    else
      table.mismatched += 1;
    table.rows.push_back(row);
  }
  return table;
}

std::vector<Table> generate_all() {
  return {generate(Kind::bivectorial), generate(Kind::trivectorial), generate(Kind::tetravectorial)};
}

}  // namespace ga::tables
