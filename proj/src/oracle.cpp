#include "rade/oracle.hpp"

#include <algorithm>
#include <limits>

namespace rade {

namespace {

// Scales rational weights to a common integer lattice; sums of signed
// weights become integers, so tail counting is exact integer work.
struct Lattice {
  std::vector<Int> scaled;
  Int denominator;  // weight i equals scaled[i] / denominator
};

Lattice to_lattice(const WeightVector& w) {
  Int den = 1;
  for (const Rat& x : w.weights()) den = boost::multiprecision::lcm(den, denominator(x));
  Lattice lat;
  lat.denominator = den;
  lat.scaled.reserve(w.size());
  for (const Rat& x : w.weights()) lat.scaled.push_back(numerator(x) * (den / denominator(x)));
  return lat;
}

// Smallest integer c with: integer sum S satisfies the tail condition
// iff S >= c.  For irrational thresholds strict and non-strict agree.
Int lattice_cutoff(const Surd& x_scaled, bool strict) {
  if (x_scaled.is_rational() && denominator(x_scaled.as_rational()) == 1) {
    Int v = numerator(x_scaled.as_rational());
    return strict ? v + 1 : v;
  }
  return x_scaled.floor() + 1;
}

bool fits_i64(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min() / 2;
  static const Int hi = std::numeric_limits<long long>::max() / 2;
  return v > lo && v < hi;
}

// Number of sign patterns with sum >= cutoff, by plain scan (gray-code
// order so each step flips one sign).
unsigned long long count_scan(const std::vector<long long>& v, long long cutoff) {
  const unsigned n = static_cast<unsigned>(v.size());
  long long sum = 0;
  for (long long x : v) sum -= x;  // start from all -1
  unsigned long long count = sum >= cutoff ? 1 : 0;
  const unsigned long long total = 1ull << n;
  unsigned long long gray = 0;
  std::vector<int> sign(n, -1);
  for (unsigned long long i = 1; i < total; ++i) {
    unsigned bit = static_cast<unsigned>(__builtin_ctzll(i));
    gray ^= 1ull << bit;
    sign[bit] = -sign[bit];
    sum += 2 * sign[bit] * v[bit];
    if (sum >= cutoff) ++count;
  }
  return count;
}

std::vector<long long> half_sums(const std::vector<long long>& v) {
  std::vector<long long> sums(1, 0);
  sums.reserve(1ull << v.size());
  for (long long x : v) {
    std::size_t sz = sums.size();
    sums.reserve(sz * 2);
    for (std::size_t i = 0; i < sz; ++i) sums.push_back(sums[i] - x);
    for (std::size_t i = 0; i < sz; ++i) sums[i] += x;
  }
  return sums;
}

unsigned long long count_meet_in_middle(const std::vector<long long>& v, long long cutoff) {
  std::size_t h = v.size() / 2;
  std::vector<long long> a = half_sums({v.begin(), v.begin() + static_cast<long>(h)});
  std::vector<long long> b = half_sums({v.begin() + static_cast<long>(h), v.end()});
  std::sort(b.begin(), b.end());
  unsigned long long count = 0;
  for (long long s : a) {
    auto it = std::lower_bound(b.begin(), b.end(), cutoff - s);
    count += static_cast<unsigned long long>(b.end() - it);
  }
  return count;
}

Rat one_sided_tail(const WeightVector& w, const Surd& x, bool strict, unsigned cap) {
  const unsigned n = static_cast<unsigned>(w.size());
  if (n > cap) throw resource_error("tail_probability: enumeration cap exceeded (n=" +
                                    std::to_string(n) + ", cap=" + std::to_string(cap) + ")");
  Lattice lat = to_lattice(w);
  Int cutoff_big = lattice_cutoff(x * Surd(Rat(lat.denominator)), strict);
  Int abs_sum = 0;
  for (const Int& s : lat.scaled) abs_sum += boost::multiprecision::abs(s);
  if (cutoff_big > abs_sum) return Rat(0);
  if (cutoff_big <= -abs_sum) return Rat(1);
  if (!fits_i64(abs_sum) || !fits_i64(cutoff_big))
    throw resource_error("tail_probability: lattice magnitude exceeds 64-bit budget");
  std::vector<long long> v;
  v.reserve(n);
  for (const Int& s : lat.scaled) v.push_back(s.convert_to<long long>());
  long long cutoff = cutoff_big.convert_to<long long>();
  unsigned long long count = n > 20 ? count_meet_in_middle(v, cutoff) : count_scan(v, cutoff);
  return Rat(Int(count), pow2(n));
}

}  // namespace

Rat tail_probability(const WeightVector& w, const Surd& x, const TailQuery& q) {
  if (!q.two_sided) return one_sided_tail(w, x, q.strict, q.enumeration_cap);
  if (x.sign() <= 0) return Rat(1);
  // X is symmetric and x > 0, so P(|X| >= x) = 2 P(X >= x).
  return 2 * one_sided_tail(w, x, q.strict, q.enumeration_cap);
}

std::vector<Surd> eliminate(const WeightVector& w, unsigned k, const Surd& s) {
  if (k < 1 || k > w.size()) throw std::out_of_range("eliminate: k out of range");
  std::vector<Surd> residuals;
  residuals.reserve(1ull << k);
  for (unsigned long long mask = 0; mask < (1ull << k); ++mask) {
    Rat signed_sum = 0;
    for (unsigned i = 0; i < k; ++i)
      signed_sum += (mask >> i) & 1 ? w[i] : -w[i];
    residuals.push_back(s - Surd(signed_sum));
  }
  return residuals;
}

Rat erdos_anticoncentration_bound(unsigned t, unsigned k) {
  if (k == 0 || k > t) throw std::out_of_range("erdos_anticoncentration_bound: need 0 < k <= t");
  return Rat(largest_binomials_sum(t, k), pow2(t));
}

StructuralResult check_structural_constraint(const Surd& s, const Rat& p, ConstraintKind kind) {
  unsigned k = 0, t = 0;
  std::string sum_text;
  switch (kind) {
    case ConstraintKind::A1PlusA2:
    case ConstraintKind::A1PlusA2VsThreshold:
      k = 2; t = 2; sum_text = "a1+a2"; break;
    case ConstraintKind::A3PlusA4PlusA5:
      k = 3; t = 5; sum_text = "a3+a4+a5"; break;
    case ConstraintKind::A1VsThreshold:
      k = 1; t = 1; sum_text = "a1"; break;
  }
  StructuralResult res;
  res.k = k;
  res.t = t;
  res.witness = erdos_anticoncentration_bound(t, k);
  // If the sum were >= s, the interval (-s, s) would carry mass at most
  // f(k,t)/2^t, forcing P(X >= s) >= (1 - f(k,t)/2^t)/2 by symmetry.
  Rat implied = (1 - res.witness) / 2;
  res.proven = implied >= p;
  res.inequality = sum_text + " < " + s.str();
  return res;
}

}  // namespace rade
