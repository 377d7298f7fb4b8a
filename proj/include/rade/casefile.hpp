#pragma once

#include <string>
#include <vector>

#include "rade/box_search.hpp"
#include "rade/rational.hpp"
#include "rade/surd.hpp"

namespace rade {

/// Declarative search case: threshold/target/depth plus certified
/// constraints, coordinate priors, and the envelope the run is expected
/// to land inside. Line-oriented text format, one directive per line:
///
///   threshold 1/sqrt(7)
///   target 1/4
///   depth 7
///   grid 10 20 40
///   constraint 1 0 0 0 0 0 0 < 1/sqrt(7) @a1-threshold
///   prior 1 0.2 0.5
///   expect-envelope 1 0.327 0.428
///
/// '#' starts a comment; blank lines are ignored.
struct CaseSpec {
  Surd threshold;  // s
  Rat target;      // p
  int depth = 0;   // k
  std::vector<int> grid_schedule;
  std::vector<LinearConstraint> constraints;
  std::vector<CoordBounds> priors;           // per coordinate, default [0,1]
  std::vector<CoordBounds> expect_envelope;  // per coordinate, default [0,1]
};

struct case_parse_error : std::runtime_error {
  case_parse_error(const std::string& msg, int line);
  int line;
};

CaseSpec parse_case_text(const std::string& text);
CaseSpec load_case_file(const std::string& path);

}  // namespace rade
