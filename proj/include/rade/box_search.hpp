#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rade/dp_table.hpp"

namespace rade {

/// Axis-aligned box of candidate leading weights: intervals [a_i-, a_i+]
/// for the r largest weights of a unit-variance Rademacher sum. Weights
/// are non-increasing, so descent clips each child interval below the
/// parent's upper endpoint.
struct Box {
  std::vector<std::pair<double, double>> iv;
  int depth() const { return static_cast<int>(iv.size()); }
};

/// Certified linear side condition sum(lambda_i * a_i) < c over the first
/// k weights; lambda_i in {-1, 0, +1}. `provenance` names the certificate
/// that established it.
struct LinearConstraint {
  std::vector<int> lambda;
  double c = 0.0;
  std::string provenance;
};

struct CoordBounds {
  double lo = 0.0, hi = 1.0;
};

struct SearchConfig {
  double s = 0.0;           // tail threshold
  double p = 0.0;           // probability to contradict: hunt P(X >= s) < p
  int k = 1;                // number of leading weights explored
  int d = 10;               // cells per unit interval at the first round
  std::uint64_t box_budget = 20'000'000;  // max test_box evaluations
};

struct SearchStats {
  std::uint64_t tested = 0;
  std::uint64_t discarded = 0;
  std::uint64_t pruned_constraint = 0;
  std::uint64_t pruned_variance = 0;
  std::uint64_t survived = 0;
};

struct SearchResult {
  std::vector<Box> boxes;             // surviving depth-k boxes
  std::vector<CoordBounds> envelope;  // coordinate hull; empty if no boxes
  SearchStats stats;
  bool conclusive = true;  // false once the box budget runs out
};

/// max over the box of sum(zeta_i * z_i): picks a_i+ where zeta_i = +1 and
/// -a_i- where zeta_i = -1.
double h_max(const std::vector<int>& signs, const Box& box);

/// Conservative elimination test: returns true (discard) only when the
/// table certifies P(X >= s) >= p for every unit-variance weight vector
/// whose leading weights lie in the box.
bool test_box(const Box& box, const DPGrid& table, double s, double p);

SearchResult search(const SearchConfig& config, const DPGrid& table,
                    const std::vector<LinearConstraint>& constraints = {},
                    const std::vector<CoordBounds>& prior = {});

/// Repeats search, feeding each round's envelope back as the prior and
/// doubling d. Envelopes are non-expanding across rounds.
SearchResult feedback_iterate(const SearchConfig& config, const DPGrid& table, int rounds,
                              const std::vector<LinearConstraint>& constraints = {},
                              const std::vector<CoordBounds>& prior = {});

}  // namespace rade
