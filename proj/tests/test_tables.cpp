#include "doctest.h"
#include "ga/tables.hpp"
#include "ga/textio.hpp"
#include "oracles.hpp"

using namespace ga;

namespace {

const Signature kSta(1, 3);

// Independent route: phi psi phi^-1 = (-1)^{|phi||psi| - |phi ∩ psi|} psi for
// basis blades with invertible phi.
int parity_sign(Blade psi, Blade phi) {
  int e = grade_of(phi) * grade_of(psi) - grade_of(Blade(phi & psi));
  return e % 2 == 0 ? +1 : -1;
}

}  // namespace

namespace {

Blade blade_from_name(const std::string& name) {
  Blade b = 0;
  for (char c : name.substr(1)) b = Blade(b | (1u << (c - '0')));
  return b;
}

// witness strings look like "psi=e01, phi=e23"
std::pair<Blade, Blade> witness_blades(const std::string& w) {
  auto comma = w.find(',');
  std::string p = w.substr(4, comma - 4);
  std::string f = w.substr(w.find("phi=") + 4);
  return {blade_from_name(p), blade_from_name(f)};
}

}  // namespace

TEST_CASE("table sweeps agree with the commutation-parity oracle") {
  for (auto kind :
       {tables::Kind::bivectorial, tables::Kind::trivectorial, tables::Kind::tetravectorial}) {
    tables::Table t = tables::generate(kind);
    CHECK(t.all_self_consistent);
    for (const auto& row : t.rows) {
      auto [psi, phi] = witness_blades(row.witness);
      int expect = parity_sign(psi, phi);
      CAPTURE(row.witness);
      CHECK(row.oracle_alpha == expect);
      CHECK(row.oracle_par == (expect > 0 ? 1 : 0));
      CHECK(row.oracle_perp == (expect < 0 ? 1 : 0));
      // The bubble-sort product oracle confirms the parity shortcut.
      auto [s1, i1] = oracle::blade_product_bubble(oracle::blade_indices(phi),
                                                   oracle::blade_indices(psi), kSta);
      auto [s2, i2] = oracle::blade_product_bubble(oracle::blade_indices(psi),
                                                   oracle::blade_indices(phi), kSta);
      CHECK(i1 == i2);
      CHECK(s1 * s2 == expect);
    }
  }
}

TEST_CASE("bivectorial table: counts and the known misprint") {
  tables::Table t = tables::generate(tables::Kind::bivectorial);
  int printed = 0, mismatched = 0, extra = 0, pairs = 0;
  const tables::RowResult* misprint = nullptr;
  for (const auto& row : t.rows) {
    pairs += row.pair_count;
    if (!row.in_paper) {
      ++extra;
      continue;
    }
    ++printed;
    if (!row.matches_paper) {
      ++mismatched;
      misprint = &row;
    }
  }
  CHECK(printed == 18);
  CHECK(extra == 1);
  CHECK(mismatched == 1);
  CHECK(pairs == 84);  // 15 non-scalar psi x 6 splitters, minus the 6 psi == phi pairs
  REQUIRE(misprint != nullptr);
  CHECK(misprint->psi_pattern == "e0ij");
  CHECK(misprint->phi_pattern == "eij");
  CHECK(misprint->paper_alpha_text == "e0i");
  CHECK(misprint->oracle_alpha == +1);
  CHECK(misprint->oracle_par == +1);
}

TEST_CASE("trivectorial table: two defective printed rows") {
  tables::Table t = tables::generate(tables::Kind::trivectorial);
  CHECK(t.mismatched == 2);
  for (const auto& row : t.rows) {
    if (row.psi_pattern == "e0ij" && row.phi_pattern == "e0ik") {
      CHECK(!row.matches_paper);
      CHECK(row.paper_alpha == +1);
      CHECK(row.oracle_alpha == -1);
      CHECK(row.oracle_perp == +1);
    }
    if (row.psi_pattern == "e123" && row.phi_pattern == "e0ij") {
      CHECK(!row.matches_paper);
      CHECK(row.paper_perp == -1);
      CHECK(row.oracle_alpha == -1);
      CHECK(row.oracle_perp == +1);
    }
  }
}

TEST_CASE("tetravectorial table is the grade involution") {
  tables::Table t = tables::generate(tables::Kind::tetravectorial);
  CHECK(t.rows.size() == 3);
  CHECK(t.matched == 3);
  CHECK(t.mismatched == 0);
  CHECK(t.extra == 0);
  for (const auto& row : t.rows) {
    int g = row.psi_pattern == "emu" ? 1 : row.psi_pattern == "emunu" ? 2 : 3;
    CHECK(row.oracle_alpha == (g % 2 == 0 ? +1 : -1));
  }
}

TEST_CASE("overall reproduction rate is at least 90 percent") {
  int printed = 0, matched = 0;
  for (const auto& t : tables::generate_all()) {
    matched += t.matched;
    printed += t.matched + t.mismatched;
    CHECK(t.all_self_consistent);
  }
  CHECK(printed == 35);
  CHECK(matched == 32);
  CHECK(10 * matched >= 9 * printed);
}
