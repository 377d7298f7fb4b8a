#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rade/prawitz.hpp"

namespace rade {

struct checksum_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct version_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DPGridSpec {
  int beta_den = 200;  // granularity beta = 1/beta_den
  int x_min = -3;
  int x_max = 3;
  std::size_t memory_budget_values = 200'000'000;
};

struct PrawitzSeedConfig {
  std::vector<double> T_grid_base = {2, 4, 6, 8, 16, 32};  // scaled by (1 + |x|) per cell
  std::vector<double> q_grid = {0.05, 0.1, 0.2, 0.3, 0.5, 0.7};
  int subdivisions = 64;
};

/// Grid of lower bounds D(a, x) on G~(a, x) = inf P(X >= x) over unit
/// variance Rademacher sums with largest weight <= a. Stored values are
/// conservative (never above the truth), non-increasing in both a and x.
class DPGrid {
 public:
  DPGrid() = default;
  DPGrid(const DPGridSpec& spec, std::vector<double> values, int iterations);

  double beta() const { return 1.0 / spec_.beta_den; }
  int beta_den() const { return spec_.beta_den; }
  int a_points() const { return a_points_; }
  int x_points() const { return x_points_; }
  double x_min() const { return spec_.x_min; }
  double x_max() const { return spec_.x_max; }
  int iterations_done() const { return iterations_; }
  const DPGridSpec& spec() const { return spec_; }
  const std::vector<double>& values() const { return v_; }

  double at(int ia, int ix) const { return v_[static_cast<std::size_t>(ia) * x_points_ + ix]; }

  /// Lower bound on G~(a, x): a and x round UP to the grid, x above range
  /// reads as 0, x below range clamps to x_min. Throws for a > 1.
  double query(double a, double x) const;

  /// query with the a-argument already resolved to a grid index.
  double query_at_index(int ia, double x) const;

  int a_index_round_up(double a) const;  // throws domain_error for a > 1

  bool operator==(const DPGrid& o) const;

 private:
  friend DPGrid build_initial(const DPGridSpec&, const PrawitzSeedConfig&);
  friend DPGrid refine_once(const DPGrid&);
  DPGridSpec spec_;
  int a_points_ = 0, x_points_ = 0, iterations_ = 0;
  std::vector<double> v_;
};

/// D_0: Prawitz seed at every grid point, clamped to [0,1], then the
/// monotonicity sweeps (which only lower values, preserving soundness).
DPGrid build_initial(const DPGridSpec& spec, const PrawitzSeedConfig& cfg = {});

/// One elimination-recursion pass. Every candidate bucket for the largest
/// weight is evaluated with all argument roundings upward, so the result
/// stays a certified lower bound and is pointwise >= the input.
DPGrid refine_once(const DPGrid& grid);

struct RefineStats {
  int iterations = 0;
  double last_gain = 0.0;
};

/// Iterates refine_once up to `iterations` times, stopping early once the
/// max pointwise gain drops below `epsilon`.
RefineStats refine(DPGrid& grid, int iterations, double epsilon = 1e-9);

void persist(const DPGrid& grid, const std::string& path);
DPGrid load(const std::string& path, int expected_beta_den = 0);

/// Desk-scale build (beta = 1/200, 50 iterations); paper preset is
/// beta = 1/2000 with 1000 iterations.
DPGrid build_desk_table();

}  // namespace rade
