#include <cmath>
#include <random>

#include "doctest.h"
#include "rade/box_search.hpp"
#include "rade/oracle.hpp"

using namespace rade;

namespace {

DPGrid& table() {
  static DPGrid g = [] {
    DPGridSpec spec;
    spec.beta_den = 40;
    DPGrid grid = build_initial(spec);
    refine(grid, 20);
    return grid;
  }();
  return g;
}

bool contains_point(const Box& box, const std::vector<double>& pt) {
  for (int i = 0; i < box.depth(); ++i)
    if (pt[i] < box.iv[i].first - 1e-12 || pt[i] > box.iv[i].second + 1e-12) return false;
  return true;
}

bool any_box_contains(const std::vector<Box>& boxes, const std::vector<double>& pt) {
  for (const Box& b : boxes)
    if (contains_point(b, pt)) return true;
  return false;
}

}  // namespace

TEST_CASE("h_max picks the extreme corner per sign") {
  Box box{{{0.4, 0.5}, {0.2, 0.3}}};
  CHECK(h_max({1, -1}, box) == doctest::Approx(0.5 - 0.2));
  CHECK(h_max({1, 1}, box) == doctest::Approx(0.8));
  CHECK(h_max({-1, -1}, box) == doctest::Approx(-0.6));
  CHECK(h_max({-1, 1}, box) == doctest::Approx(-0.1));
}

TEST_CASE("boxes with excess squared mass are discarded") {
  // Lower endpoints alone exceed unit variance: no normalized vector fits.
  Box box{{{0.9, 1.0}, {0.9, 1.0}}};
  CHECK(test_box(box, table(), 0.0, 1e-9));
}

TEST_CASE("p = 0 discards everything: tails are never negative") {
  Box box{{{0.3, 0.4}, {0.2, 0.3}}};
  CHECK(test_box(box, table(), 0.5, 0.0));
}

TEST_CASE("test_box never discards a box holding a genuine counterexample") {
  // Plant exact witnesses: integer vectors w with P(X >= s_w) < p, then
  // check the box around the normalized prefix survives.
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> weight(1, 4);
  std::uniform_int_distribution<int> length(3, 8);
  int planted = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int n = length(rng);
    std::vector<Rat> w(n);
    for (auto& wi : w) wi = weight(rng);
    std::sort(w.begin(), w.end(), std::greater<Rat>());
    WeightVector wv(std::move(w));
    Rat var = wv.variance();
    double sd = std::sqrt(to_double(var));

    // Threshold between lattice atoms so the exact tail is easy to beat.
    Surd s_exact = Surd::sqrt_of(var * Rat(1, 4));  // s = 1/2 in normalized units
    Rat tail = tail_probability(wv, s_exact);
    double p = to_double(tail) + 0.01;  // wv *is* a counterexample to "tail >= p"
    if (p >= 1.0) continue;

    int depth = std::min<int>(3, static_cast<int>(wv.size()));
    Box box;
    for (int i = 0; i < depth; ++i) {
      double ai = to_double(wv[i]) / sd;
      box.iv.push_back({std::max(0.0, ai - 0.01), std::min(1.0, ai + 0.01)});
    }
    CAPTURE(trial);
    CHECK(!test_box(box, table(), 0.5, p));
    ++planted;
  }
  CHECK(planted >= 100);
}

TEST_CASE("search is deterministic and its envelope covers survivors") {
  SearchConfig cfg;
  cfg.s = 1.0;
  cfg.p = 7.0 / 64;
  cfg.k = 2;
  cfg.d = 8;
  SearchResult r1 = search(cfg, table());
  SearchResult r2 = search(cfg, table());
  CHECK(r1.conclusive);
  CHECK(r1.stats.tested == r2.stats.tested);
  CHECK(r1.boxes.size() == r2.boxes.size());
  REQUIRE(!r1.boxes.empty());
  REQUIRE(r1.envelope.size() == static_cast<std::size_t>(cfg.k));
  for (const Box& b : r1.boxes) {
    REQUIRE(b.depth() == cfg.k);
    for (int i = 0; i < cfg.k; ++i) {
      CHECK(b.iv[i].first >= r1.envelope[i].lo - 1e-12);
      CHECK(b.iv[i].second <= r1.envelope[i].hi + 1e-12);
    }
  }
  // The known counterexample prefix (1/2, 1/2) must survive.
  CHECK(any_box_contains(r1.boxes, {0.5, 0.5}));
}

TEST_CASE("constraints prune without losing conforming candidates") {
  SearchConfig cfg;
  cfg.s = 1.0;
  cfg.p = 7.0 / 64;
  cfg.k = 2;
  cfg.d = 8;
  LinearConstraint lc;
  lc.lambda = {1, 1};
  lc.c = 0.9;
  lc.provenance = "synthetic";
  SearchResult constrained = search(cfg, table(), {lc});
  SearchResult free_run = search(cfg, table());
  CHECK(constrained.stats.pruned_constraint > 0);
  CHECK(constrained.boxes.size() <= free_run.boxes.size());
  // Survivors of the free run that satisfy the constraint strictly must
  // still be covered after pruning.
  for (const Box& b : free_run.boxes) {
    double lo_sum = b.iv[0].first + b.iv[1].first;
    if (lo_sum < 0.9 - 0.25) {  // entire box strictly conforming
      std::vector<double> mid{(b.iv[0].first + b.iv[0].second) / 2,
                              (b.iv[1].first + b.iv[1].second) / 2};
      if (mid[0] + mid[1] < 0.65) CHECK(any_box_contains(constrained.boxes, mid));
    }
  }
}

TEST_CASE("feedback rounds only shrink the envelope") {
  SearchConfig cfg;
  cfg.s = 1.0;
  cfg.p = 7.0 / 64;
  cfg.k = 2;
  cfg.d = 4;
  SearchResult once = search(cfg, table());
  SearchResult iterated = feedback_iterate(cfg, table(), 3);
  CHECK(iterated.conclusive);
  REQUIRE(iterated.envelope.size() == once.envelope.size());
  for (std::size_t i = 0; i < once.envelope.size(); ++i) {
    CHECK(iterated.envelope[i].lo >= once.envelope[i].lo - 1e-12);
    CHECK(iterated.envelope[i].hi <= once.envelope[i].hi + 1e-12);
  }
  CHECK(any_box_contains(iterated.boxes, {0.5, 0.5}));
}

TEST_CASE("an empty prior leaves no boxes") {
  SearchConfig cfg;
  cfg.s = 1.0;
  cfg.p = 7.0 / 64;
  cfg.k = 2;
  cfg.d = 8;
  std::vector<CoordBounds> prior{{0.9, 1.0}, {0.8, 0.9}};  // forces a1^2+a2^2 > 1
  SearchResult r = search(cfg, table(), {}, prior);
  CHECK(r.boxes.empty());
  CHECK(r.envelope.empty());
}

TEST_CASE("budget exhaustion is flagged and keeps untested candidates") {
  SearchConfig cfg;
  cfg.s = 1.0;
  cfg.p = 7.0 / 64;
  cfg.k = 3;
  cfg.d = 10;
  cfg.box_budget = 25;
  SearchResult r = search(cfg, table());
  CHECK(!r.conclusive);
  CHECK(r.stats.tested <= cfg.box_budget);
  // The hard prefix must still be covered even though testing stopped early.
  CHECK(any_box_contains(r.boxes, {0.5, 0.5, 0.5}));
}
