#include "rade/prawitz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rade {

namespace {

constexpr double kPi = 3.14159265358979323846;

double theta_fn(double t) { return std::exp(-t * t / 2) + std::cos(t); }

const ThetaConstant& cached_theta() {
  static const ThetaConstant th = solve_theta(1e-12);
  return th;
}

// exp(ln(base)/a^2) with a domain guard; 0 when base <= 0.
double fractional_pow(double base, double a) {
  if (base <= 0.0) return 0.0;
  return std::exp(std::log(base) / (a * a));
}

// Global Lipschitz bound for u -> k(u,x,T) on [0,1], via the
// decomposition k = (1-u) sin(w*u)/sin(pi*u) + sin(b*u)/pi with
// b = T*x, w = pi + b.  The first factor is bounded on each half of
// [0,1] using t/sin(t) <= pi/2 and |d/dt t/sin t| <= 1 on [0, pi/2],
// |sinc'| <= 1/2.
double kernel_lipschitz(double x, double T) {
  double b = std::abs(T * x);
  double w = std::abs(kPi + T * x);
  double low_half = 1.5 * w + 0.25 * w * w;
  double high_half = 1.0 + 0.5 * w;
  return std::max(low_half, high_half) + b / kPi;
}

double kernel_abs_max(double x, double T) {
  double w = std::abs(kPi + T * x);
  return std::max(w / 2, 0.5) + 1.0 / kPi;
}

// Supremum over a panel by 3-point sampling plus Lipschitz remainder;
// every point of the panel is within width/4 of a sample.
template <class F>
double panel_sup(F&& f, double u0, double u1, double lipschitz) {
  double m = std::max({f(u0), f(0.5 * (u0 + u1)), f(u1)});
  return m + lipschitz * (u1 - u0) / 4;
}

// Upper bound for g(T*u, a) over v in [v0, v1] (v = T*u). Both branch
// pieces are monotone in the directions used, so endpoint evaluation is
// a true supremum; panels crossing a*v = pi/2 take the dominant branch.
double g_sup(double v0, double v1, double a) {
  double decay = std::exp(-v0 * v0 / 2);
  if (a * v1 <= kPi / 2) {
    double c = std::cos(a * v1);
    return decay - fractional_pow(c, a);
  }
  return decay + 1.0;
}

// Upper bound for h(T*u, a) over v in [v0, v1]; continuous at both branch
// boundaries, the uncertain theta zone takes the max of both branches.
double h_sup(double v0, double v1, double a) {
  const ThetaConstant& th = cached_theta();
  double sup = 0.0;
  if (a * v0 < th.hi()) sup = std::max(sup, std::exp(-v0 * v0 / 2));
  double right = std::min(a * v1, kPi);
  if (right >= th.lo()) sup = std::max(sup, fractional_pow(-std::cos(right), a));
  if (a * v1 > kPi) sup = std::max(sup, 1.0);
  return sup;
}

// Shaves a few ulps so float rounding cannot push an "upper bound of an
// integral" below its true value once subtracted from 1/2.
double pad_up(double v, double scale) { return v + 1e-12 * (1.0 + std::abs(v) + scale); }

}  // namespace

ThetaConstant solve_theta(double tolerance) {
  if (!(tolerance > 0)) throw std::invalid_argument("solve_theta: tolerance must be positive");
  double lo = 0.0, hi = kPi;
  if (!(theta_fn(lo) > 0) || !(theta_fn(hi) < 0))
    throw std::logic_error("solve_theta: sign-change certificate failed");
  while (hi - lo > tolerance) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // hit float resolution
    (theta_fn(mid) > 0 ? lo : hi) = mid;
  }
  return ThetaConstant{0.5 * (lo + hi), 0.5 * (hi - lo)};
}

double kernel_k(double u, double x, double T) {
  if (u <= 0.0) return 1.0 + T * x / kPi;
  if (u >= 1.0) return 0.0;
  double c = T * u * x;
  return (1.0 - u) * std::sin(kPi * u + c) / std::sin(kPi * u) + std::sin(c) / kPi;
}

double envelope_g(double v, double a) {
  if (a <= 0) throw std::invalid_argument("envelope_g: a must be positive");
  double decay = std::exp(-v * v / 2);
  if (a * v <= kPi / 2) return decay - fractional_pow(std::cos(a * v), a);
  return decay + 1.0;
}

double envelope_h(double v, double a) {
  if (a <= 0) throw std::invalid_argument("envelope_h: a must be positive");
  const ThetaConstant& th = cached_theta();
  double av = a * v;
  if (av > kPi) return 1.0;
  double from_exp = std::exp(-v * v / 2);
  double from_cos = fractional_pow(-std::cos(av), a);
  if (av <= th.lo()) return from_exp;
  if (av >= th.hi()) return from_cos;
  return std::max(from_exp, from_cos);  // inside the theta bracket
}

double prawitz_lower_bound(double a, double x, const PrawitzParams& params) {
  if (!(a > 0.0 && a <= 1.0)) throw std::invalid_argument("prawitz_lower_bound: a in (0,1]");
  if (!(params.T > 0) || params.q < 0 || params.q > 1 || params.subdivisions < 1)
    throw std::invalid_argument("prawitz_lower_bound: invalid params");
  const double T = params.T, q = params.q;
  const int M = params.subdivisions;
  const double Lk = kernel_lipschitz(x, T);
  const double Kmax = kernel_abs_max(x, T);
  auto abs_k = [&](double u) { return std::abs(kernel_k(u, x, T)); };

  // integral of |k| g over [0, q]
  double upper1 = 0.0;
  for (int i = 0; i < M; ++i) {
    double u0 = q * i / M, u1 = q * (i + 1) / M;
    upper1 += (u1 - u0) * panel_sup(abs_k, u0, u1, Lk) * g_sup(T * u0, T * u1, a);
  }
  // integral of |k| h over [q, 1]
  double upper2 = 0.0;
  for (int i = 0; i < M; ++i) {
    double u0 = q + (1 - q) * i / M, u1 = q + (1 - q) * (i + 1) / M;
    upper2 += (u1 - u0) * panel_sup(abs_k, u0, u1, Lk) * h_sup(T * u0, T * u1, a);
  }
  // integral of k exp(-(Tu)^2/2) over [0, q]; signed, so bound the product
  double upper3 = 0.0;
  double Lprod = Lk + Kmax * 0.6066 * T;
  auto damped_k = [&](double u) { return kernel_k(u, x, T) * std::exp(-(T * u) * (T * u) / 2); };
  for (int i = 0; i < M; ++i) {
    double u0 = q * i / M, u1 = q * (i + 1) / M;
    upper3 += (u1 - u0) * panel_sup(damped_k, u0, u1, Lprod);
  }
  double total = pad_up(upper1, 0) + pad_up(upper2, 0) + pad_up(upper3, 0);
  return 0.5 - pad_up(total, 1.0);
}

double optimize_prawitz(double a, double x, std::span<const double> T_grid,
                        std::span<const double> q_grid, int subdivisions) {
  if (T_grid.empty() || q_grid.empty()) throw std::invalid_argument("optimize_prawitz: empty grid");
  double best = -1.0;
  for (double T : T_grid)
    for (double q : q_grid)
      best = std::max(best, prawitz_lower_bound(a, x, PrawitzParams{T, q, subdivisions}));
  return std::clamp(best, 0.0, 1.0);
}

std::vector<double> default_T_grid(double x) {
  std::vector<double> g;
  for (int i = 1; i <= 8; ++i) g.push_back(i * (1.0 + std::abs(x)));
  return g;
}

std::vector<double> default_q_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 19; ++i) g.push_back(0.05 * i);
  return g;
}

}  // namespace rade
