#include "rade/weights.hpp"

#include <algorithm>

namespace rade {

WeightVector::WeightVector(std::vector<Rat> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw std::invalid_argument("WeightVector: empty");
  for (const Rat& x : w_)
    if (x <= 0) throw std::invalid_argument("WeightVector: weights must be positive");
  if (!std::is_sorted(w_.begin(), w_.end(), std::greater<Rat>()))
    throw std::invalid_argument("WeightVector: weights must be non-increasing");
}

WeightVector WeightVector::parse(std::string_view text) {
  std::vector<Rat> w;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = i;
    while (j < text.size() && text[j] != ',' && !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    if (j > i) w.push_back(parse_rational(text.substr(i, j - i)));
    i = j;
    while (i < text.size() && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))))
      ++i;
  }
  return WeightVector(std::move(w));
}

Rat WeightVector::variance() const {
  Rat v = 0;
  for (const Rat& x : w_) v += x * x;
  return v;
}

WeightVector WeightVector::tail(std::size_t k) const {
  if (k >= w_.size()) throw std::out_of_range("WeightVector::tail");
  return WeightVector(std::vector<Rat>(w_.begin() + static_cast<long>(k), w_.end()));
}

}  // namespace rade
