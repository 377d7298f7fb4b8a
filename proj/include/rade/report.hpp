#pragma once

#include <string>
#include <vector>

#include "rade/rational.hpp"

namespace rade {

/// One plateau of the step function inf P(|X| >= y): its interval, the
/// exact value, the equal-weight vector witnessing the upper bound, and
/// the verification outcomes.
struct PlateauRow {
  std::string interval;
  Rat value;
  std::string witness;      // weight vector, human-readable
  Rat witness_tail;         // exact two-sided tail of the witness
  bool witness_ok = false;  // witness_tail == value
  std::vector<std::string> cases;  // certificate ids backing the lower bound
};

/// Checks the six witness vectors against the exact tail oracle; pure
/// computation, no inputs required.
std::vector<PlateauRow> verify_plateau_witnesses();

struct SummaryReport {
  std::vector<PlateauRow> rows;
  std::vector<std::pair<std::string, bool>> case_status;  // id -> passed
  bool all_passed = false;
  std::string text() const;
};

/// Consolidates case report files "<id>.json" from case_dir with the
/// witness checks. Throws std::runtime_error listing every missing case
/// file by name.
SummaryReport build_summary(const std::string& case_dir);

}  // namespace rade
