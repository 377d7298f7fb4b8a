#include "doctest.h"
#include "rade/weights.hpp"

using namespace rade;

TEST_CASE("parse accepts commas and spaces") {
  WeightVector w = WeightVector::parse("1/2, 1/2 1/4");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Rat(1, 2));
  CHECK(w[2] == Rat(1, 4));
}

TEST_CASE("constructor validates input") {
  CHECK_THROWS(WeightVector({}));
  CHECK_THROWS(WeightVector({Rat(1), Rat(0)}));
  CHECK_THROWS(WeightVector({Rat(1), Rat(-1, 2)}));
  CHECK_THROWS(WeightVector({Rat(1, 4), Rat(1, 2)}));  // must be non-increasing
  CHECK_NOTHROW(WeightVector({Rat(1, 2), Rat(1, 2)}));
}

TEST_CASE("variance and normalization") {
  WeightVector w({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)});
  CHECK(w.variance() == 1);
  CHECK(w.normalized());

  WeightVector u = WeightVector::parse("2,2,2,1,1,1,1");
  CHECK(u.variance() == 16);
  CHECK(!u.normalized());
}

TEST_CASE("tail drops a prefix") {
  WeightVector w = WeightVector::parse("1/2,1/3,1/4,1/5");
  WeightVector t = w.tail(2);
  REQUIRE(t.size() == 2);
  CHECK(t[0] == Rat(1, 4));
  CHECK(t.variance() == Rat(1, 16) + Rat(1, 25));
  CHECK_THROWS_AS(w.tail(4), std::out_of_range);
}
