#include "rade/box_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rade {

double h_max(const std::vector<int>& signs, const Box& box) {
  if (signs.size() != box.iv.size()) throw std::invalid_argument("h_max: length mismatch");
  double h = 0.0;
  for (std::size_t i = 0; i < signs.size(); ++i)
    h += signs[i] > 0 ? box.iv[i].second : -box.iv[i].first;
  return h;
}

bool test_box(const Box& box, const DPGrid& table, double s, double p) {
  const int r = box.depth();
  double sum_lo2 = 0.0, sum_hi2 = 0.0;
  for (const auto& [lo, hi] : box.iv) {
    sum_lo2 += lo * lo;
    sum_hi2 += hi * hi;
  }
  // No unit-variance vector fits: even the smallest corner spends more
  // than the whole variance on the leading weights.
  if (sum_lo2 > 1.0) return true;

  const double sig_plus = std::sqrt(std::max(0.0, 1.0 - sum_lo2));
  const bool degenerate = sum_hi2 > 1.0;
  const double sig_minus = degenerate ? 0.0 : std::sqrt(1.0 - sum_hi2);
  const double a_top = box.iv[r - 1].second;
  const int a_idx =
      degenerate || a_top >= sig_minus ? table.beta_den()
                                       : table.a_index_round_up(a_top / sig_minus);

  // For each sign pattern on the leading weights, lower-bound the
  // conditional tail with the table entry at the worst point of the box:
  // numerator maximized, denominator chosen to maximize the argument.
  double total = 0.0;
  const std::uint64_t patterns = 1ull << r;
  std::vector<int> signs(r, -1);
  for (std::uint64_t bits = 0; bits < patterns; ++bits) {
    for (int i = 0; i < r; ++i) signs[i] = (bits >> i) & 1 ? 1 : -1;
    double v = s + h_max(signs, box);
    if (degenerate) {
      // All variance may be spent inside the box; only patterns whose sum
      // already clears the threshold on the whole box contribute, via the
      // unconstrained-largest-weight row.
      if (v < 0.0) total += table.query_at_index(table.beta_den(), sig_plus > 0.0
                                                                       ? v / sig_plus
                                                                       : -std::numeric_limits<double>::infinity());
      continue;
    }
    double x_arg = v >= 0.0 ? (sig_minus > 0.0 ? v / sig_minus
                                               : std::numeric_limits<double>::infinity())
                            : v / sig_plus;
    total += table.query_at_index(a_idx, x_arg);
  }
  return total >= p * static_cast<double>(patterns);
}

namespace {

// min over the box (plus free tail coordinates) of sum(lambda_i a_i).
// Coordinates beyond the current depth range over [0, a_{r,+}] by the
// ordering, so they contribute 0 or -a_{r,+}.
double constraint_min(const LinearConstraint& c, const Box& box, int k) {
  const int r = box.depth();
  double m = 0.0;
  for (int i = 0; i < k && i < static_cast<int>(c.lambda.size()); ++i) {
    int l = c.lambda[i];
    if (l == 0) continue;
    if (i < r)
      m += l > 0 ? c.lambda[i] * box.iv[i].first : c.lambda[i] * box.iv[i].second;
    else if (l < 0)
      m -= box.iv[r - 1].second;
  }
  return m;
}

struct Driver {
  const SearchConfig& cfg;
  const DPGrid& table;
  const std::vector<LinearConstraint>& constraints;
  std::vector<CoordBounds> prior;  // size k
  SearchResult out;

  // Extends a partial box with the loosest consistent tail intervals;
  // used when the budget runs out, so survivors still cover everything.
  void keep(Box box) {
    for (int i = box.depth(); i < cfg.k; ++i) {
      double hi = std::min(prior[i].hi, box.iv.empty() ? 1.0 : box.iv.back().second);
      box.iv.emplace_back(std::min(prior[i].lo, hi), hi);
    }
    ++out.stats.survived;
    out.boxes.push_back(std::move(box));
  }

  void descend(const Box& parent) {
    const int r = parent.depth();  // splitting coordinate r (0-based)
    const double cap = std::min(prior[r].hi, r == 0 ? 1.0 : parent.iv[r - 1].second);
    if (cap < prior[r].lo) return;  // empty candidate range: vacuous
    const int d = cfg.d;
    int j_lo = std::max(0, static_cast<int>(std::floor(prior[r].lo * d)));
    int j_hi = std::min(d - 1, static_cast<int>(std::ceil(cap * d)) - 1);
    for (int j = j_hi; j >= j_lo; --j) {  // larger weights first
      double lo = std::max(static_cast<double>(j) / d, prior[r].lo);
      double hi = std::min(static_cast<double>(j + 1) / d, cap);
      if (lo > hi) continue;
      Box child = parent;
      child.iv.emplace_back(lo, hi);
      if (!out.conclusive) {
        keep(std::move(child));
        continue;
      }
      bool pruned = false;
      for (const auto& c : constraints)
        if (constraint_min(c, child, cfg.k) >= c.c) {
          ++out.stats.pruned_constraint;
          pruned = true;
          break;
        }
      if (pruned) continue;
      if (out.stats.tested >= cfg.box_budget) {
        out.conclusive = false;
        keep(std::move(child));
        continue;
      }
      ++out.stats.tested;
      if (test_box(child, table, cfg.s, cfg.p)) {
        ++out.stats.discarded;
        continue;
      }
      if (child.depth() == cfg.k)
        keep(std::move(child));
      else
        descend(child);
    }
  }
};

std::vector<CoordBounds> hull(const std::vector<Box>& boxes, int k) {
  if (boxes.empty()) return {};
  std::vector<CoordBounds> env(k, {std::numeric_limits<double>::infinity(),
                                   -std::numeric_limits<double>::infinity()});
  for (const Box& b : boxes)
    for (int i = 0; i < k; ++i) {
      env[i].lo = std::min(env[i].lo, b.iv[i].first);
      env[i].hi = std::max(env[i].hi, b.iv[i].second);
    }
  return env;
}

}  // namespace

SearchResult search(const SearchConfig& config, const DPGrid& table,
                    const std::vector<LinearConstraint>& constraints,
                    const std::vector<CoordBounds>& prior) {
  if (config.k < 1 || config.d < 1) throw std::invalid_argument("search: k and d must be >= 1");
  Driver drv{config, table, constraints, {}, {}};
  drv.prior.assign(config.k, CoordBounds{});
  for (std::size_t i = 0; i < prior.size() && i < drv.prior.size(); ++i) drv.prior[i] = prior[i];
  for (auto& b : drv.prior) {
    b.lo = std::max(b.lo, 0.0);
    b.hi = std::min(b.hi, 1.0);
  }
  // A side condition with only nonnegative coefficients caps every weight
  // it mentions: the weights are nonnegative, so sum(lambda_i * a_i) < c
  // forces a_i < c whenever lambda_i == +1. Shrinking the prior this way
  // only removes points that violate the condition.
  for (const LinearConstraint& c : constraints) {
    bool has_negative = false;
    for (int l : c.lambda) has_negative = has_negative || l < 0;
    if (has_negative) continue;
    for (std::size_t i = 0; i < c.lambda.size() && i < drv.prior.size(); ++i)
      if (c.lambda[i] > 0) drv.prior[i].hi = std::min(drv.prior[i].hi, c.c);
  }
  drv.descend(Box{});
  drv.out.envelope = hull(drv.out.boxes, config.k);
  return drv.out;
}

SearchResult feedback_iterate(const SearchConfig& config, const DPGrid& table, int rounds,
                              const std::vector<LinearConstraint>& constraints,
                              const std::vector<CoordBounds>& prior) {
  if (rounds < 1) throw std::invalid_argument("feedback_iterate: rounds must be >= 1");
  SearchConfig cfg = config;
  std::vector<CoordBounds> cur = prior;
  SearchResult res;
  for (int round = 0; round < rounds; ++round) {
    res = search(cfg, table, constraints, cur);
    if (res.boxes.empty() || !res.conclusive) return res;
    cur = res.envelope;
    cfg.d *= 2;
  }
  return res;
}

}  // namespace rade
