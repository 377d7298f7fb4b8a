#pragma once

#include <span>
#include <vector>

namespace rade {

struct PrawitzParams {
  double T = 4.0;       // frequency cutoff, > 0
  double q = 0.5;       // split point in [0,1]
  int subdivisions = 64;  // quadrature panels per integral, >= 1
};

/// Bracket around the unique root of exp(-t^2/2) + cos(t) on [0, pi].
struct ThetaConstant {
  double value = 0.0;
  double radius = 0.0;
  double lo() const { return value - radius; }
  double hi() const { return value + radius; }
};

/// Bisection with a certified sign change at both bracket ends.
ThetaConstant solve_theta(double tolerance);

/// k(u,x,T) = (1-u) sin(pi*u + T*u*x)/sin(pi*u) + sin(T*u*x)/pi, with the
/// analytic limits at the removable singularities u = 0 and u = 1.
double kernel_k(double u, double x, double T);

/// Smoothing envelopes of the characteristic-function bound. h uses the
/// theta bracket conservatively: inside the bracket both branches are
/// evaluated and the larger kept, so the result upper-bounds the envelope.
double envelope_g(double v, double a);
double envelope_h(double v, double a);

/// Certified lower bound on F(a,x,T,q): each integral is bounded above by
/// per-panel suprema (monotone envelope pieces, sampled kernel plus a
/// derivative-bound remainder), then a directed-rounding guard is taken off.
/// May be negative; probabilities clamp at 0 downstream.
double prawitz_lower_bound(double a, double x, const PrawitzParams& params);

/// Max of prawitz_lower_bound over the (T, q) grid, clamped to [0, 1].
double optimize_prawitz(double a, double x, std::span<const double> T_grid,
                        std::span<const double> q_grid, int subdivisions);

/// Default grids: T in {1..8} scaled by (1+|x|), q in {0.05..0.95}.
std::vector<double> default_T_grid(double x);
std::vector<double> default_q_grid();

}  // namespace rade
