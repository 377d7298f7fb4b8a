#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rade {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int pow2(unsigned k);
Int binomial(unsigned n, unsigned k);

/// Sum of the k largest binomial coefficients C(t, i).
Int largest_binomials_sum(unsigned t, unsigned k);

/// Parses "a/b", an integer, or a decimal like "0.0074".
Rat parse_rational(std::string_view text);

std::string to_string(const Rat& r);
double to_double(const Rat& r);

inline int sign_of(const Rat& r) { return r.sign(); }

struct parse_error : std::runtime_error {
  parse_error(const std::string& what, std::size_t pos)
      : std::runtime_error(what), position(pos) {}
  std::size_t position;
};

}  // namespace rade
