#include "rade/rational.hpp"

#include <cctype>

namespace rade {

Int pow2(unsigned k) { return Int(1) << k; }

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Int largest_binomials_sum(unsigned t, unsigned k) {
  if (k == 0 || k > t + 1) throw std::invalid_argument("largest_binomials_sum: k out of range");
  // Row t of Pascal's triangle is unimodal with peak at t/2; walk outward.
  unsigned mid = t / 2;
  Int sum = binomial(t, mid);
  unsigned lo = mid, hi = mid;
  for (unsigned taken = 1; taken < k; ++taken) {
    Int left = lo > 0 ? binomial(t, lo - 1) : Int(-1);
    Int right = hi < t ? binomial(t, hi + 1) : Int(-1);
    if (left >= right) {
      sum += left;
      --lo;
    } else {
      sum += right;
      ++hi;
    }
  }
  return sum;
}

Rat parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&](const char* msg) -> Rat { throw parse_error(msg, i); };
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t start = i;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  Int num = 0;
  bool any = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    num = num * 10 + (text[i] - '0');
    any = true;
    ++i;
  }
  Int den = 1;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      num = num * 10 + (text[i] - '0');
      den *= 10;
      any = true;
      ++i;
    }
  } else if (i < text.size() && text[i] == '/') {
    ++i;
    den = 0;
    bool dany = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      den = den * 10 + (text[i] - '0');
      dany = true;
      ++i;
    }
    if (!dany || den == 0) return fail("expected nonzero denominator");
  }
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (!any || i != text.size()) {
    i = any ? i : start;
    return fail("malformed rational");
  }
  Rat r(num, den);
  return neg ? -r : r;
}

std::string to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace rade
