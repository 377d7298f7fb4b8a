#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rade/rational.hpp"
#include "rade/surd.hpp"

namespace rade {

/// Probabilities of a lattice variable Y = sum(+-c_i) landing in the
/// windows [s + r*d - gamma, s + r*d + gamma] for r = -1, 0, 1, and the
/// combined mass t of all windows r >= 2. Exact; requires the windows to
/// isolate single lattice points (checked).
struct IntervalProbs {
  Rat p_minus1, p0, p1, t;
};

/// Exact P(Y = target_j) for each target, where Y = sum(+-c_i), plus the
/// guarantee that widening each target to a window of radius gamma_bound
/// captures no additional sign pattern. Throws std::invalid_argument when
/// some pattern sum comes within gamma_bound of a target without hitting
/// it exactly.
std::vector<Rat> exact_point_probs(const std::vector<Surd>& c, const std::vector<Surd>& targets,
                                   const Rat& gamma_bound);

/// Windows centered at s + r*d; requires gamma_bound < d/2.
IntervalProbs structured_interval_probs(const std::vector<Surd>& c, const Surd& s, const Surd& d,
                                        const Rat& gamma_bound);

/// Inputs for the split-variance conclusion P(X >= s) >= p0/4 + 3p1/4 + t,
/// valid once the residual variance is at least (817/100)*gamma^2. The
/// variance lower bound is supplied as var_lin*Delta - var_quad_abs*Delta^2
/// with gamma = gamma_coef*Delta, certified for Delta <= delta_max; the
/// run uses the available bound delta_used <= delta_max.
struct LargeVarianceCert {
  std::vector<Surd> c;
  Surd s, d;
  Rat gamma_coef;
  Surd var_lin;
  Rat var_quad_abs;
  Rat delta_max;
  Rat delta_used;
};

struct LargeVarianceOutcome {
  IntervalProbs probs;
  Rat bound;             // p0/4 + 3*p1/4 + t
  bool threshold_sharp;  // the variance inequality fails at 1.1*delta_max
};

/// Checks every hypothesis exactly (delta_used <= delta_max, p_-1 >= t,
/// p0 >= p1, var_lin >= (var_quad_abs + 817*gamma_coef^2/100)*delta_max)
/// and returns the certified probability bound. Throws std::runtime_error
/// naming the failed hypothesis otherwise.
LargeVarianceOutcome large_variance_conclusion(const LargeVarianceCert& cert);

/// Certificate that sum over I of lambda_i*a_i < s, given a counterexample
/// hypothesis P(X >= s) < p and |a_i - c_i| <= delta. S counts sign
/// patterns with sum(c_i z_i) = s, T those exceeding s, R the patterns of
/// S agreeing with lambda on I; d is the lattice gap above s.
struct SmallSumCert {
  long long S_count = 0, R_count = 0, T_count = 0;
  Rat d;
  Rat score;  // min(|S|-|T|, |R|)/2 + |T|
  bool certified = false;
};

/// indices is 0-based into c; lambda aligned with indices, entries +-1.
/// Requires sum(lambda_i c_i) = s exactly.
SmallSumCert small_sum_certificate(const std::vector<Rat>& c, const std::vector<int>& indices,
                                   const std::vector<int>& lambda, const Rat& s, const Rat& p,
                                   const Rat& delta);

using SignPredicate = std::function<bool(const std::vector<int>&)>;

/// Certificate that P(X >= s) >= |A|/2^k from an injection A -> B: checks
/// A, B disjoint, |A| <= |B|, and bound_A + bound_B >= 2s, where bound_A
/// (bound_B) lower-bounds sum(zeta_i a_i) over all zeta in A (B).
struct PairingCert {
  long long A_count = 0, B_count = 0;
  Rat probability;
  bool certified = false;
};

PairingCert pairing_certificate(int k, const SignPredicate& in_A, const SignPredicate& in_B,
                                const Surd& bound_A, const Surd& bound_B, const Surd& s);

/// b^2/k + k*eps^2, an upper bound on sum(a_i^2) for k weights within eps
/// of a common value whose total is at most b.
Rat sum_squares_bound(int k, const Rat& b, const Rat& eps);

struct CaseStep {
  std::string name;
  std::string expected;  // reference value, empty when none is recorded
  std::string computed;
  bool ok = false;
};

struct CaseReport {
  std::string case_id;
  std::vector<CaseStep> steps;
  bool passed = false;
  std::string text() const;
  std::string json() const;
};

/// Scripted verification of one case of the main theorem's case analysis;
/// ids: A..H (threshold 1), sqrt7, sqrt5, sqrt3, 2sqrt6.
CaseReport run_case(const std::string& case_id);

const std::vector<std::string>& all_case_ids();

}  // namespace rade
