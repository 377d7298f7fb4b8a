#include "doctest.h"
#include "rade/oracle.hpp"

using namespace rade;

namespace {
WeightVector ones(std::size_t n) { return WeightVector(std::vector<Rat>(n, Rat(1))); }
}  // namespace

TEST_CASE("exact tails match hand counts") {
  // P(eps >= 1) = 1/2, P(eps > 1) = 0, P(|eps| >= 1) = 1, P(eps >= 0) = 1/2.
  WeightVector w1 = ones(1);
  CHECK(tail_probability(w1, Surd(Rat(1))) == Rat(1, 2));
  CHECK(tail_probability(w1, Surd(Rat(1)), /*strict=*/true) == 0);
  CHECK(tail_probability(w1, Surd(Rat(1)), false, /*two_sided=*/true) == 1);
  CHECK(tail_probability(w1, Surd(Rat(0))) == Rat(1, 2));

  // P(|S_6| >= sqrt(6)) = 2*(C(6,0)+C(6,1))/64 = 7/32.
  CHECK(tail_probability(ones(6), Surd::sqrt_of(Rat(6)), false, true) == Rat(7, 32));

  // P(|S_7| >= sqrt(7/5)): odd sums with |S| >= 2 are {3,5,7},
  // 2*(1+7+21)/128 = 29/64.
  CHECK(tail_probability(ones(7), Surd::sqrt_of(Rat(7, 5)), false, true) == Rat(29, 64));

  // P(|S_3| >= sqrt(2)) keeps only |S| = 3: 2/8 = 1/4.
  CHECK(tail_probability(ones(3), Surd::sqrt_of(Rat(2)), false, true) == Rat(1, 4));

  // Unit-variance copy of (2,2,2,1,1,1,1)/4 at threshold 1, strict.
  WeightVector u = WeightVector::parse("2,2,2,1,1,1,1");
  CHECK(tail_probability(u, Surd(Rat(4)), /*strict=*/true) == Rat(7, 64));
}

TEST_CASE("strict/weak complement symmetry") {
  WeightVector w = WeightVector::parse("1/2,1/3,1/6");
  for (int num : {-2, -1, 0, 1, 2}) {
    Surd x(Rat(num, 3));
    Rat weak = tail_probability(w, x);                       // P(X >= x)
    Rat below = tail_probability(w, -x, /*strict=*/true);    // P(-X > -x) = P(X < x)
    CHECK(weak + below == 1);
  }
}

TEST_CASE("two-sided doubles the one-sided tail for positive thresholds") {
  WeightVector w = WeightVector::parse("3,2,1,1");
  Surd x(Rat(5, 2));
  CHECK(tail_probability(w, x, false, true) == 2 * tail_probability(w, x));
}

TEST_CASE("scaling invariance") {
  WeightVector a = WeightVector::parse("1/2,1/3,1/6");
  WeightVector b = WeightVector::parse("3,2,1");  // same vector times 6
  CHECK(tail_probability(a, Surd(Rat(1, 2))) == tail_probability(b, Surd(Rat(3))));
  CHECK(tail_probability(a, Surd::sqrt_of(Rat(1, 4))) == tail_probability(b, Surd::sqrt_of(Rat(9))));
}

TEST_CASE("elimination identity") {
  WeightVector w = WeightVector::parse("1/2,1/3,1/4,1/5,1/6");
  Surd s(Rat(1, 2));
  unsigned k = 2;
  std::vector<Surd> residuals = eliminate(w, k, s);
  REQUIRE(residuals.size() == 4);
  WeightVector z = w.tail(k);
  Rat acc = 0;
  for (const Surd& r : residuals) acc += tail_probability(z, r);
  CHECK(acc / 4 == tail_probability(w, s));
}

TEST_CASE("anti-concentration bound values") {
  CHECK(erdos_anticoncentration_bound(1, 1) == Rat(1, 2));
  CHECK(erdos_anticoncentration_bound(2, 2) == Rat(3, 4));
  CHECK(erdos_anticoncentration_bound(5, 3) == Rat(25, 32));
}

TEST_CASE("structural constraints") {
  // a1 < 1/sqrt(7) under P(X >= 1/sqrt(7)) < 1/4: bound (1-1/2)/2 = 1/4 >= 1/4.
  Surd s7(Rat(0), Rat(1, 7), Int(7));
  StructuralResult r = check_structural_constraint(s7, Rat(1, 4), ConstraintKind::A1VsThreshold);
  CHECK(r.proven);
  CHECK(r.witness == Rat(1, 2));
  CHECK(r.k == 1);

  // a1 + a2 < 2/sqrt(6) under p = 1/8: (1 - 3/4)/2 = 1/8 >= 1/8.
  Surd s6(Rat(0), Rat(2, 6), Int(6));
  StructuralResult r2 = check_structural_constraint(s6, Rat(1, 8), ConstraintKind::A1PlusA2);
  CHECK(r2.proven);
  CHECK(r2.witness == Rat(3, 4));

  // a3 + a4 + a5: (1 - 25/32)/2 = 7/64.
  StructuralResult r3 =
      check_structural_constraint(Surd(Rat(1)), Rat(7, 64), ConstraintKind::A3PlusA4PlusA5);
  CHECK(r3.proven);
  CHECK(r3.witness == Rat(25, 32));

  // Asking for more than the bound gives proven = false.
  StructuralResult r4 = check_structural_constraint(s7, Rat(1, 3), ConstraintKind::A1VsThreshold);
  CHECK(!r4.proven);
}

TEST_CASE("enumeration cap raises resource_error") {
  WeightVector big = ones(30);
  TailQuery q;
  q.enumeration_cap = 24;
  CHECK_THROWS_AS(tail_probability(big, Surd(Rat(1)), q), resource_error);
}

TEST_CASE("meet-in-the-middle agrees with direct enumeration") {
  // 22 weights forces the split path; compare against a hand-computable value.
  WeightVector w = ones(22);
  // P(S_22 >= 22) = 1/2^22; P(S_22 >= 21) the same (sums are even).
  CHECK(tail_probability(w, Surd(Rat(22))) == Rat(1, pow2(22)));
  CHECK(tail_probability(w, Surd(Rat(21))) == Rat(1, pow2(22)));
  // P(S_22 >= 0) = (1 + C(22,11)/2^22) / 2 ... equivalently:
  Rat middle = Rat(binomial(22, 11), pow2(22));
  CHECK(tail_probability(w, Surd(Rat(0))) == (1 + middle) / 2);
}
