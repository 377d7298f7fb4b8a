#pragma once

#include "rade/rational.hpp"

namespace rade {

/// Exact number of the form p + q*sqrt(m) with p, q rational and m a
/// non-negative integer. All thresholds in this project (1, 1/sqrt(7),
/// 2/sqrt(6), ...) live in a single quadratic field, so closed-form
/// arithmetic and exact sign tests suffice; no floating point is involved
/// in comparisons.
class Surd {
 public:
  Surd() : p_(0), q_(0), m_(0) {}
  Surd(Rat p) : p_(std::move(p)), q_(0), m_(0) {}  // NOLINT: implicit by design
  Surd(Rat p, Rat q, Int m);

  /// Exact sqrt(v) for rational v >= 0, as (1/den)*sqrt(num*den).
  static Surd sqrt_of(const Rat& v);

  const Rat& rational_part() const { return p_; }
  const Rat& surd_coeff() const { return q_; }
  const Int& radicand() const { return m_; }
  bool is_rational() const { return q_ == 0; }
  /// Valid only when is_rational().
  const Rat& as_rational() const;

  Surd operator-() const;
  Surd operator+(const Surd& o) const;
  Surd operator-(const Surd& o) const;
  Surd operator*(const Surd& o) const;
  Surd& operator+=(const Surd& o) { return *this = *this + o; }
  Surd& operator-=(const Surd& o) { return *this = *this - o; }

  int sign() const;
  bool operator<(const Surd& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const Surd& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const Surd& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const Surd& o) const { return (*this - o).sign() >= 0; }
  bool operator==(const Surd& o) const { return (*this - o).sign() == 0; }

  Int floor() const;
  double to_double() const;
  std::string str() const;

 private:
  Rat p_, q_;
  Int m_;  // zero when the value is rational
};

/// Accepts "R", "sqrt(R)", "R*sqrt(M)" and "R/sqrt(M)" with R, M rational.
Surd parse_surd(std::string_view text);

}  // namespace rade
