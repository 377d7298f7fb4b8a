#include "rade/dp_table.hpp"

#include "rade/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

namespace rade {

namespace {

constexpr char kMagic[8] = {'R', 'A', 'D', 'E', 'D', 'P', 'T', '1'};
constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t fnv1a(const unsigned char* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (std::size_t i = 0; i < n; ++i) {
    h ^= data[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

// Directed-rounding guard: keeps computed bounds strictly on the
// conservative side of float rounding.
double guard_down(double v) { return v - (1e-14 + 1e-14 * std::abs(v)); }

// Lowering sweep that enforces the double monotonicity (non-increasing in
// a and in x). Only ever lowers values.
void enforce_monotone(std::vector<double>& v, int a_points, int x_points) {
  for (int ia = 1; ia < a_points; ++ia)
    for (int ix = 0; ix < x_points; ++ix) {
      double& cur = v[static_cast<std::size_t>(ia) * x_points + ix];
      cur = std::min(cur, v[static_cast<std::size_t>(ia - 1) * x_points + ix]);
    }
  for (int ia = 0; ia < a_points; ++ia)
    for (int ix = 1; ix < x_points; ++ix) {
      double& cur = v[static_cast<std::size_t>(ia) * x_points + ix];
      cur = std::min(cur, v[static_cast<std::size_t>(ia) * x_points + ix - 1]);
    }
}

// Exact floor on P(X >= x), valid for every unit-variance Rademacher sum X:
//  - x <= 0: P(X >= x) >= 1/2 by symmetry of X.
//  - x <  0: P(X >= x) = 1 - P(X > |x|) and the upper-tail mass obeys both
//    P(X > |x|) <= 1/(2x^2) (two-sided Chebyshev, halved by symmetry) and
//    P(X > |x|) <= exp(-x^2/2) (Hoeffding).
double tail_floor(double x) {
  if (x > 0.0) return 0.0;
  double f = 0.5;
  if (x < 0.0) {
    f = std::max(f, 1.0 - std::exp(-0.5 * x * x));
    if (x < -1.0) f = std::max(f, 1.0 - 0.5 / (x * x));
  }
  return guard_down(f);
}

}  // namespace

DPGrid::DPGrid(const DPGridSpec& spec, std::vector<double> values, int iterations)
    : spec_(spec),
      a_points_(spec.beta_den + 1),
      x_points_((spec.x_max - spec.x_min) * spec.beta_den + 1),
      iterations_(iterations),
      v_(std::move(values)) {
  if (v_.size() != static_cast<std::size_t>(a_points_) * x_points_)
    throw std::invalid_argument("DPGrid: value count does not match grid");
}

int DPGrid::a_index_round_up(double a) const {
  if (a > 1.0) throw std::domain_error("DPGrid::query: a > 1");
  if (a <= 0.0) return 0;
  int ia = static_cast<int>(std::ceil(a * spec_.beta_den));
  return std::min(ia, a_points_ - 1);
}

double DPGrid::query_at_index(int ia, double x) const {
  if (x > spec_.x_max) return 0.0;
  int ix;
  if (x <= spec_.x_min) {
    ix = 0;
  } else {
    ix = static_cast<int>(std::ceil((x - spec_.x_min) * spec_.beta_den));
    ix = std::min(ix, x_points_ - 1);
  }
  // The stored value at x_min understates the bound for arguments far below
  // the grid; the exact tail floor recovers it (and never hurts elsewhere).
  return std::max(at(ia, ix), tail_floor(x));
}

double DPGrid::query(double a, double x) const { return query_at_index(a_index_round_up(a), x); }

bool DPGrid::operator==(const DPGrid& o) const {
  return spec_.beta_den == o.spec_.beta_den && spec_.x_min == o.spec_.x_min &&
         spec_.x_max == o.spec_.x_max && iterations_ == o.iterations_ &&
         std::memcmp(v_.data(), o.v_.data(), v_.size() * sizeof(double)) == 0 &&
         v_.size() == o.v_.size();
}

DPGrid build_initial(const DPGridSpec& spec, const PrawitzSeedConfig& cfg) {
  if (spec.beta_den < 1 || spec.x_min >= spec.x_max)
    throw std::invalid_argument("build_initial: bad grid spec");
  const int a_points = spec.beta_den + 1;
  const int x_points = (spec.x_max - spec.x_min) * spec.beta_den + 1;
  if (static_cast<std::size_t>(a_points) * x_points > spec.memory_budget_values)
    throw resource_error("DP grid exceeds memory budget");
  const double beta = 1.0 / spec.beta_den;
  std::vector<double> v(static_cast<std::size_t>(a_points) * x_points);

  std::vector<double> T_grid(cfg.T_grid_base.size());
  for (int ix = 0; ix < x_points; ++ix) {
    double x = spec.x_min + static_cast<double>(ix) / spec.beta_den;
    for (std::size_t i = 0; i < cfg.T_grid_base.size(); ++i)
      T_grid[i] = cfg.T_grid_base[i] * (1.0 + std::abs(x));
    for (int ia = 0; ia < a_points; ++ia) {
      // a = 0 is seeded from a = beta: G~ is non-increasing in a, so the
      // bound for the slightly larger class is still valid.
      double a = std::max(ia, 1) * beta;
      double b = optimize_prawitz(a, x, T_grid, cfg.q_grid, cfg.subdivisions);
      v[static_cast<std::size_t>(ia) * x_points + ix] = std::max(b, tail_floor(x));
    }
  }
  enforce_monotone(v, a_points, x_points);
  return DPGrid(spec, std::move(v), 0);
}

namespace {

struct Candidate {
  int u_idx;   // rounded-up index of a / sqrt(1 - a^2)
  double a;    // grid multiple of beta
  double inv;  // 1/sqrt(1-a^2) (inf at a=1)
  bool top;    // a == 1
};

std::vector<Candidate> make_candidates(const DPGrid& g) {
  const int den = g.beta_den();
  std::vector<Candidate> cs(den + 1);
  for (int j = 1; j <= den; ++j) {
    Candidate& c = cs[j];
    c.a = static_cast<double>(j) / den;
    c.top = j == den;
    c.inv = c.top ? kInf : 1.0 / std::sqrt(1.0 - c.a * c.a);
    if (c.top) {
      c.u_idx = den;
    } else {
      double u = c.a * c.inv;
      c.u_idx = u >= 1.0 ? den : g.a_index_round_up(u);
    }
  }
  return cs;
}

// (x - a)/sqrt(1-a^2); at a = 1 the limit is -inf for x < 1 and +inf for
// x > 1 (the eliminated weight exhausts the variance).
double arg_minus(const Candidate& c, double x) {
  if (c.top) {
    if (x > 1.0) return kInf;
    return x == 1.0 ? 0.0 : -kInf;
  }
  return (x - c.a) * c.inv;
}

// (x + a)/sqrt(1-a^2); limits at a = 1 as above with the sign flipped.
double arg_plus(const Candidate& c, double x) {
  if (c.top) {
    if (x > -1.0) return kInf;
    return x == -1.0 ? 0.0 : -kInf;
  }
  return (x + c.a) * c.inv;
}

}  // namespace

DPGrid refine_once(const DPGrid& grid) {
  const int den = grid.beta_den();
  const int x_points = grid.x_points();
  const std::vector<Candidate> cs = make_candidates(grid);
  std::vector<double> out(grid.values());
  std::vector<double> prefix(den + 1);

  for (int ix = 0; ix < x_points; ++ix) {
    double x = grid.x_min() + static_cast<double>(ix) / den;
    prefix[0] = kInf;
    for (int j = 1; j <= den; ++j) {
      const Candidate& c = cs[j];
      double term = grid.query_at_index(c.u_idx, arg_minus(c, x)) +
                    grid.query_at_index(c.u_idx, arg_plus(c, x));
      prefix[j] = std::min(prefix[j - 1], term);
    }
    for (int ia = 1; ia <= den; ++ia) {
      double& cur = out[static_cast<std::size_t>(ia) * x_points + ix];
      double candidate = guard_down(0.5 * prefix[ia]);
      if (candidate > cur) cur = candidate;
    }
    // The a = 0 row has no candidate weight of its own; the bound for the
    // class with largest weight <= beta also covers it.
    double& row0 = out[ix];
    row0 = std::max(row0, out[static_cast<std::size_t>(x_points) + ix]);
  }
  return DPGrid(grid.spec(), std::move(out), grid.iterations_done() + 1);
}

RefineStats refine(DPGrid& grid, int iterations, double epsilon) {
  RefineStats stats;
  for (int i = 0; i < iterations; ++i) {
    DPGrid next = refine_once(grid);
    double gain = 0.0;
    for (std::size_t k = 0; k < next.values().size(); ++k)
      gain = std::max(gain, next.values()[k] - grid.values()[k]);
    grid = std::move(next);
    ++stats.iterations;
    stats.last_gain = gain;
    if (gain < epsilon) break;
  }
  return stats;
}

void persist(const DPGrid& grid, const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("persist: cannot open " + path);
  std::vector<unsigned char> buf;
  auto put = [&buf](const void* p, std::size_t n) {
    const unsigned char* b = static_cast<const unsigned char*>(p);
    buf.insert(buf.end(), b, b + n);
  };
  put(kMagic, sizeof(kMagic));
  std::int32_t header[6] = {grid.beta_den(), static_cast<std::int32_t>(grid.x_min()),
                            static_cast<std::int32_t>(grid.x_max()), grid.a_points(),
                            grid.x_points(), grid.iterations_done()};
  put(header, sizeof(header));
  put(grid.values().data(), grid.values().size() * sizeof(double));
  std::uint64_t sum = fnv1a(buf.data(), buf.size());
  put(&sum, sizeof(sum));
  f.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!f) throw std::runtime_error("persist: write failed on " + path);
}

DPGrid load(const std::string& path, int expected_beta_den) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("load: cannot open " + path);
  std::vector<unsigned char> buf((std::istreambuf_iterator<char>(f)),
                                 std::istreambuf_iterator<char>());
  if (buf.size() < sizeof(kMagic) + 6 * sizeof(std::int32_t) + sizeof(std::uint64_t))
    throw checksum_error("load: file truncated");
  if (std::memcmp(buf.data(), kMagic, sizeof(kMagic)) != 0)
    throw version_error("load: bad magic (not a DP table or wrong version)");
  std::size_t body = buf.size() - sizeof(std::uint64_t);
  std::uint64_t stored;
  std::memcpy(&stored, buf.data() + body, sizeof(stored));
  if (fnv1a(buf.data(), body) != stored) throw checksum_error("load: checksum mismatch");
  std::int32_t header[6];
  std::memcpy(header, buf.data() + sizeof(kMagic), sizeof(header));
  DPGridSpec spec;
  spec.beta_den = header[0];
  spec.x_min = header[1];
  spec.x_max = header[2];
  if (expected_beta_den != 0 && spec.beta_den != expected_beta_den)
    throw version_error("load: table granularity does not match requested grid");
  std::size_t count = static_cast<std::size_t>(header[3]) * header[4];
  std::size_t need = sizeof(kMagic) + sizeof(header) + count * sizeof(double);
  if (body != need) throw checksum_error("load: payload size mismatch");
  std::vector<double> values(count);
  std::memcpy(values.data(), buf.data() + sizeof(kMagic) + sizeof(header),
              count * sizeof(double));
  return DPGrid(spec, std::move(values), header[5]);
}

DPGrid build_desk_table() {
  DPGridSpec spec;
  spec.beta_den = 200;
  DPGrid g = build_initial(spec);
  refine(g, 50);
  return g;
}

}  // namespace rade
