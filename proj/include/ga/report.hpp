#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ga/signature.hpp"
#include "ga/tables.hpp"

namespace ga {

enum class CheckStatus { pass, fail, paper_mismatch };

struct CheckRecord {
  std::string id;
  std::string paper_ref;
  CheckStatus status = CheckStatus::pass;
  std::string residual;  // "0" for clean passes, otherwise what the sweep saw
  std::string witness;
};

struct Report {
  std::string suite;
  Signature signature{1, 3};
  std::uint64_t seed = 0;
  long trials = 0;
  int degree = 3;
  std::vector<CheckRecord> records;

  int count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::fail) == 0; }

  std::string to_json() const;
  std::string to_markdown() const;
};

std::string table_to_json(const tables::Table& table);
std::string table_to_markdown(const tables::Table& table);

}  // namespace ga
