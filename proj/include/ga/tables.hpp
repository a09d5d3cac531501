#pragma once

#include <string>
#include <vector>

#include "ga/multivector.hpp"

namespace ga::tables {

enum class Kind { bivectorial, trivectorial, tetravectorial };

const char* kind_name(Kind k);
bool kind_from_name(const std::string& name, Kind& out);

// One schematic row of the k-vectorial splitting tables for Cl(1,3): the
// printed cells (alpha, parallel, orthogonal projections as signed multiples
// of psi) next to the recomputed ones. A row covers every concrete blade pair
// matching its index pattern; `pair_count` says how many were swept.
struct RowResult {
  std::string psi_pattern;
  std::string phi_pattern;
  bool in_paper = false;
  int paper_alpha = 0;  // +1 / -1; 0 when the printed cell is not a multiple of psi
  std::string paper_alpha_text;
  int paper_par = 0;   // +1 or 0
  int paper_perp = 0;  // +1, 0, or -1 (one printed cell has the stray sign)
  int oracle_alpha = 0;
  int oracle_par = 0;
  int oracle_perp = 0;
  bool matches_paper = false;
  bool self_consistent = false;
  int pair_count = 0;
  std::string witness;
};

struct Table {
  Kind kind = Kind::bivectorial;
  std::vector<RowResult> rows;
  int matched = 0;      // published rows the sweep reproduces
  int mismatched = 0;   // printed rows the sweep contradicts
  int extra = 0;        // blade-pair families the published tables omit
  int pair_total = 0;
  bool all_self_consistent = true;
};

Table generate(Kind kind);
std::vector<Table> generate_all();

std::string cell_text(int value, const std::string& psi_pattern);

}  // namespace ga::tables
