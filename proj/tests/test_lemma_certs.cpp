#include <algorithm>
#include <random>

#include "doctest.h"
#include "rade/lemma_certs.hpp"

using namespace rade;

namespace {

std::vector<Surd> rational_weights(std::initializer_list<Rat> v) {
  std::vector<Surd> out;
  for (const Rat& r : v) out.emplace_back(r);
  return out;
}

std::vector<Rat> repeat_rat(const Rat& v, int n) { return std::vector<Rat>(static_cast<std::size_t>(n), v); }

}  // namespace

TEST_CASE("exact point probabilities on the half-integer lattice") {
  // Y = sum of +-1/2 (3 times) and +-1/4 (4 times): same lattice as the
  // variance-1 near-optimizer; windows of radius 0.035 isolate points.
  std::vector<Surd> c = rational_weights({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 4), Rat(1, 4),
                                          Rat(1, 4), Rat(1, 4)});
  std::vector<Surd> targets{Surd(Rat(1)), Surd(Rat(3, 2)), Surd(Rat(2)), Surd(Rat(5, 2))};
  std::vector<Rat> probs = exact_point_probs(c, targets, Rat(7, 200) /* 0.035 */);
  REQUIRE(probs.size() == 4);
  CHECK(probs[0] == Rat(16, 128));
  CHECK(probs[1] == Rat(9, 128));
  CHECK(probs[2] == Rat(4, 128));
  CHECK(probs[3] == Rat(1, 128));

  // Radius half the lattice gap or more must be rejected.
  CHECK_THROWS_AS(exact_point_probs(c, targets, Rat(1, 2)), std::invalid_argument);
}

TEST_CASE("structured interval probabilities match hand counts") {
  // Four half weights, s = 1, d = 1: windows at 0, 1, 2 and the r >= 2 tail.
  std::vector<Surd> c = rational_weights({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)});
  IntervalProbs pr = structured_interval_probs(c, Surd(Rat(1)), Surd(Rat(1)), Rat(1, 50));
  CHECK(pr.p_minus1 == Rat(6, 16));
  CHECK(pr.p0 == Rat(4, 16));
  CHECK(pr.p1 == Rat(1, 16));
  CHECK(pr.t == 0);

  // Nine third weights, s = 1, d = 2/3.
  std::vector<Surd> c9(9, Surd(Rat(1, 3)));
  IntervalProbs pr9 = structured_interval_probs(c9, Surd(Rat(1)), Surd(Rat(2, 3)), Rat(1, 100));
  CHECK(pr9.p_minus1 == Rat(63, 256));
  CHECK(pr9.p0 == Rat(21, 128));
  CHECK(pr9.p1 == Rat(9, 128));
  CHECK(pr9.t == Rat(5, 256));

  // Window radius must stay below half the spacing.
  CHECK_THROWS(structured_interval_probs(c9, Surd(Rat(1)), Surd(Rat(2, 3)), Rat(1, 2)));
}

TEST_CASE("large-variance conclusion composes the pieces") {
  LargeVarianceCert cert;
  cert.c = rational_weights({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)});
  cert.s = Surd(Rat(1));
  cert.d = Surd(Rat(1));
  cert.gamma_coef = 4;
  cert.var_lin = Surd(Rat(1));
  cert.var_quad_abs = 3;
  cert.delta_max = Rat(74, 10000);
  cert.delta_used = Rat(5, 1000);
  LargeVarianceOutcome out = large_variance_conclusion(cert);
  CHECK(out.bound == Rat(7, 64));  // 4/64 + 3/64 + 0
  CHECK(out.threshold_sharp);

  SUBCASE("hypothesis violations are named") {
    LargeVarianceCert bad = cert;
    bad.delta_used = Rat(1, 10);
    CHECK_THROWS_AS(large_variance_conclusion(bad), std::runtime_error);
    bad = cert;
    bad.delta_max = Rat(1, 10);  // variance inequality fails this far out
    CHECK_THROWS_AS(large_variance_conclusion(bad), std::runtime_error);
  }
}

TEST_CASE("variance polynomial is a genuine lower bound (sampled)") {
  // Perturbed weights a_i = 1/2 + delta_i, delta sorted non-increasing with
  // delta_1 + delta_2 <= 0 and Delta = -delta_4. The residual variance
  // 1 - sum a_i^2 = -sum delta_i - sum delta_i^2 must dominate the
  // certified polynomial Delta - 3*Delta^2.
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> du(-1.0, 1.0);
  int sampled = 0;
  for (int trial = 0; trial < 20000 && sampled < 2000; ++trial) {
    double Delta = 0.0074 * std::abs(du(rng));
    std::vector<double> d{Delta * du(rng), Delta * du(rng), Delta * du(rng), -Delta};
    std::sort(d.begin(), d.end(), std::greater<double>());
    if (d[0] + d[1] > 0) continue;
    double residual = 1.0;
    for (double di : d) residual -= (0.5 + di) * (0.5 + di);
    CHECK(residual + 1e-15 >= Delta - 3 * Delta * Delta);
    ++sampled;
  }
  CHECK(sampled == 2000);
}

TEST_CASE("small-sum certificates reproduce the recorded counts") {
  struct Row {
    std::vector<Rat> c;
    std::vector<int> idx, lam;
    Rat s, p, delta;
    long long S, R, T;
  };
  std::vector<Row> rows = {
      // Nine thirds, a1+a2+a3 < 1: S/R/T = 84/20/46.
      {repeat_rat(Rat(1, 3), 9), {0, 1, 2}, {1, 1, 1}, Rat(1), Rat(7, 64), Rat(7, 100), 84, 20, 46},
      // Sixteen quarters: 8008/924/6885.
      {repeat_rat(Rat(1, 4), 16), {0, 1, 2, 3}, {1, 1, 1, 1}, Rat(1), Rat(7, 64), Rat(3, 100), 8008, 924, 6885},
      // Half plus twelve quarters: two overlapping certificates.
      {[] { auto v = repeat_rat(Rat(1, 4), 13); v[0] = Rat(1, 2); return v; }(), {0, 1, 2}, {1, 1, 1}, Rat(1), Rat(7, 64), Rat(3, 100), 1012, 252, 873},
      {[] { auto v = repeat_rat(Rat(1, 4), 13); v[0] = Rat(1, 2); return v; }(), {1, 2, 3, 4}, {1, 1, 1, 1}, Rat(1), Rat(7, 64), Rat(3, 100), 1012, 112, 873},
      // Two halves plus eight quarters: three certificates at delta 1/20.
      {[] { auto v = repeat_rat(Rat(1, 4), 10); v[0] = v[1] = Rat(1, 2); return v; }(), {1, 2, 3}, {1, 1, 1}, Rat(1), Rat(7, 64), Rat(1, 20), 127, 30, 111},
      {[] { auto v = repeat_rat(Rat(1, 4), 10); v[0] = v[1] = Rat(1, 2); return v; }(), {2, 3, 4, 5}, {1, 1, 1, 1}, Rat(1), Rat(7, 64), Rat(1, 20), 127, 14, 111},
      {[] { auto v = repeat_rat(Rat(1, 4), 10); v[0] = v[1] = Rat(1, 2); return v; }(), {0, 1, 2, 3, 4, 5}, {1, -1, 1, 1, 1, 1}, Rat(1), Rat(7, 64), Rat(1, 20), 127, 6, 111},
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(i);
    const Row& r = rows[i];
    SmallSumCert cert = small_sum_certificate(r.c, r.idx, r.lam, r.s, r.p, r.delta);
    CHECK(cert.S_count == r.S);
    CHECK(cert.R_count == r.R);
    CHECK(cert.T_count == r.T);
    CHECK(cert.certified);
  }
}

TEST_CASE("small-sum certificate fails when delta is too coarse") {
  SmallSumCert cert = small_sum_certificate(repeat_rat(Rat(1, 3), 9), {0, 1, 2}, {1, 1, 1},
                                            Rat(1), Rat(7, 64), Rat(1, 2));
  CHECK(!cert.certified);
}

TEST_CASE("pairing certificates") {
  // Seven coordinates: A = {sum >= 3}, B = {sum = 1}; |A| = 29, |B| = 35.
  auto sum_of = [](const std::vector<int>& z) {
    int s = 0;
    for (int zi : z) s += zi;
    return s;
  };
  PairingCert c7 = pairing_certificate(
      7, [&](const std::vector<int>& z) { return sum_of(z) >= 3; },
      [&](const std::vector<int>& z) { return sum_of(z) == 1; }, Surd(parse_rational("0.95")),
      Surd(parse_rational("0.175")), Surd::sqrt_of(Rat(1, 5)));
  CHECK(c7.A_count == 29);
  CHECK(c7.B_count == 35);
  CHECK(c7.certified);
  CHECK(c7.probability == Rat(29, 128));

  // Five coordinates: A = {sum >= 3}, B = {sum = 1}; |A| = 6, |B| = 10.
  PairingCert c5 = pairing_certificate(
      5, [&](const std::vector<int>& z) { return sum_of(z) >= 3; },
      [&](const std::vector<int>& z) { return sum_of(z) == 1; }, Surd(parse_rational("1.04")),
      Surd(parse_rational("0.23")), Surd::sqrt_of(Rat(1, 3)));
  CHECK(c5.A_count == 6);
  CHECK(c5.B_count == 10);
  CHECK(c5.certified);
  CHECK(c5.probability == Rat(6, 32));

  SUBCASE("overlapping classes are rejected") {
    CHECK_THROWS(pairing_certificate(
        3, [&](const std::vector<int>& z) { return sum_of(z) >= 1; },
        [&](const std::vector<int>& z) { return sum_of(z) >= 1; }, Surd(Rat(1)), Surd(Rat(1)),
        Surd(Rat(1))));
  }
  SUBCASE("A larger than B is rejected") {
    CHECK_THROWS(pairing_certificate(
        3, [&](const std::vector<int>& z) { return sum_of(z) >= -1; },
        [&](const std::vector<int>& z) { return sum_of(z) == 3; }, Surd(Rat(0)), Surd(Rat(3)),
        Surd(Rat(1))));
  }
  SUBCASE("insufficient bounds fail the check") {
    PairingCert weak = pairing_certificate(
        5, [&](const std::vector<int>& z) { return sum_of(z) >= 3; },
        [&](const std::vector<int>& z) { return sum_of(z) == 1; }, Surd(parse_rational("0.3")),
        Surd(parse_rational("0.1")), Surd::sqrt_of(Rat(1, 3)));
    CHECK(!weak.certified);
  }
}

TEST_CASE("sum of squares bound") {
  CHECK(sum_squares_bound(2, Rat(1), Rat(1, 10)) == Rat(1, 2) + Rat(2, 100));
  CHECK(sum_squares_bound(4, Rat(1), Rat(0)) == Rat(1, 4));
  CHECK(sum_squares_bound(1, Rat(3), Rat(0)) == Rat(9));
}

TEST_CASE("every scripted case verifies") {
  for (const std::string& id : all_case_ids()) {
    CAPTURE(id);
    CaseReport rep = run_case(id);
    CHECK(rep.passed);
    CHECK(!rep.steps.empty());
    for (const CaseStep& st : rep.steps) {
      CAPTURE(st.name);
      CHECK(st.ok);
    }
    CHECK(rep.json().find("\"passed\":true") != std::string::npos);
  }
  CHECK(!run_case("nonexistent").passed);
}
