#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rade/surd.hpp"
#include "rade/weights.hpp"

namespace rade {

struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TailQuery {
  bool strict = false;     // P(X > x) instead of P(X >= x)
  bool two_sided = false;  // P(|X| >= x)
  unsigned enumeration_cap = 24;
};

/// Exact P(X >= x) (or >, or |X|) by signed-subset enumeration on the
/// common-denominator lattice. Meet-in-the-middle above 20 weights.
Rat tail_probability(const WeightVector& w, const Surd& x, const TailQuery& q = {});

inline Rat tail_probability(const WeightVector& w, const Surd& x, bool strict,
                            bool two_sided = false) {
  return tail_probability(w, x, TailQuery{strict, two_sided, 24});
}

/// Residual thresholds {s - sum_i a_i*z_i : z in {-1,+1}^k} of the
/// elimination identity P(X >= s) = 2^-k sum_z P(Z_k >= residual).
std::vector<Surd> eliminate(const WeightVector& w, unsigned k, const Surd& s);

/// f(k,t)/2^t where f(k,t) is the sum of the k largest binomial
/// coefficients C(t,i); an upper bound on P(sum of t signs lands in an
/// interval of radius alpha once the k smallest weights sum to >= alpha).
Rat erdos_anticoncentration_bound(unsigned t, unsigned k);

enum class ConstraintKind {
  A1PlusA2,            // a1 + a2 < s
  A3PlusA4PlusA5,      // a3 + a4 + a5 < s
  A1VsThreshold,       // a1 < s
  A1PlusA2VsThreshold  // a1 + a2 < s
};

struct StructuralResult {
  bool proven = false;
  Rat witness;  // f(k,t)/2^t used in the certificate
  unsigned k = 0, t = 0;
  std::string inequality;  // human-readable certified statement
};

/// Certifies "sum < s" under the counterexample hypothesis P(X >= s) < p:
/// if the sum were >= s the anti-concentration bound would force
/// P(X >= s) >= (1 - f(k,t)/2^t)/2 >= p. Returns proven=false when the
/// bound does not reach p.
StructuralResult check_structural_constraint(const Surd& s, const Rat& p, ConstraintKind kind);

}  // namespace rade
