#pragma once

#include <vector>

#include "rade/rational.hpp"

namespace rade {

/// Sorted positive rational weights of a finite Rademacher sum
/// X = sum_i w_i * eps_i. Normalized vectors have sum of squares exactly 1;
/// unnormalized vectors are accepted for oracle queries only.
class WeightVector {
 public:
  explicit WeightVector(std::vector<Rat> weights);

  /// Parses a comma- or space-separated list of rationals ("1/2,1/2,1/4").
  static WeightVector parse(std::string_view text);

  const std::vector<Rat>& weights() const { return w_; }
  std::size_t size() const { return w_.size(); }
  const Rat& operator[](std::size_t i) const { return w_[i]; }

  Rat variance() const;
  bool normalized() const { return variance() == 1; }

  /// Weights from index k onward (the tail Z_k).
  WeightVector tail(std::size_t k) const;

 private:
  std::vector<Rat> w_;
};

}  // namespace rade
