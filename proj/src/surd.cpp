#include "rade/surd.hpp"

#include <cmath>

namespace rade {

namespace {

// floor(sqrt(n)) for n >= 0.
Int isqrt_floor(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  if (n == 0) return 0;
  Int x = boost::multiprecision::sqrt(n);
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

}  // namespace

Surd::Surd(Rat p, Rat q, Int m) : p_(std::move(p)), q_(std::move(q)), m_(std::move(m)) {
  if (m_ < 0) throw std::domain_error("Surd: negative radicand");
  if (m_ == 0 || q_ == 0) {
    q_ = 0;
    m_ = 0;
    return;
  }
  Int r = isqrt_floor(m_);
  if (r * r == m_) {  // perfect square collapses to a rational
    p_ += q_ * r;
    q_ = 0;
    m_ = 0;
  }
}

Surd Surd::sqrt_of(const Rat& v) {
  if (v < 0) throw std::domain_error("sqrt_of: negative");
  Int num = numerator(v), den = denominator(v);
  return Surd(Rat(0), Rat(1, den), num * den);
}

const Rat& Surd::as_rational() const {
  if (!is_rational()) throw std::domain_error("Surd: irrational value");
  return p_;
}

Surd Surd::operator-() const { return Surd(-p_, -q_, m_); }

Surd Surd::operator+(const Surd& o) const {
  if (q_ == 0) return Surd(p_ + o.p_, o.q_, o.m_);
  if (o.q_ == 0) return Surd(p_ + o.p_, q_, m_);
  if (m_ != o.m_) throw std::domain_error("Surd: mixed radicands");
  return Surd(p_ + o.p_, q_ + o.q_, m_);
}

Surd Surd::operator-(const Surd& o) const { return *this + (-o); }

Surd Surd::operator*(const Surd& o) const {
  if (q_ == 0) return Surd(p_ * o.p_, p_ * o.q_, o.m_);
  if (o.q_ == 0) return Surd(p_ * o.p_, q_ * o.p_, m_);
  if (m_ != o.m_) throw std::domain_error("Surd: mixed radicands");
  return Surd(p_ * o.p_ + q_ * o.q_ * m_, p_ * o.q_ + q_ * o.p_, m_);
}

int Surd::sign() const {
  if (q_ == 0) return p_.sign();
  if (p_ == 0) return q_.sign();
  int sp = p_.sign(), sq = q_.sign();
  if (sp == sq) return sp;
  // Opposite signs: compare p^2 against q^2*m.
  Rat lhs = p_ * p_, rhs = q_ * q_ * m_;
  if (lhs == rhs) return 0;
  return (lhs > rhs) ? sp : sq;
}

Int Surd::floor() const {
  // Double estimate, then exact fix-up by comparing against integers.
  double est = to_double();
  Int f(static_cast<long long>(std::floor(est)));
  while ((*this - Surd(Rat(f))).sign() < 0) --f;
  while ((*this - Surd(Rat(f + 1))).sign() >= 0) ++f;
  return f;
}

double Surd::to_double() const {
  double v = rade::to_double(p_);
  if (q_ != 0) v += rade::to_double(q_) * std::sqrt(m_.convert_to<double>());
  return v;
}

std::string Surd::str() const {
  if (q_ == 0) return to_string(p_);
  std::string s;
  if (p_ != 0) s = to_string(p_) + (q_ > 0 ? "+" : "");
  s += to_string(q_) + "*sqrt(" + m_.str() + ")";
  return s;
}

Surd parse_surd(std::string_view text) {
  auto strip = [](std::string_view t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    return t;
  };
  text = strip(text);
  bool neg = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    neg = text.front() == '-';
    text = strip(text.substr(1));
  }
  auto sqrt_arg = [&](std::string_view t) -> Rat {
    // t is "sqrt(<rational>)"
    if (t.size() < 7 || t.substr(0, 5) != "sqrt(" || t.back() != ')')
      throw parse_error("expected sqrt(<rational>)", 0);
    return parse_rational(t.substr(5, t.size() - 6));
  };
  Surd result;
  std::size_t star = text.find('*');
  std::size_t sq = text.find("sqrt(");
  if (sq == std::string_view::npos) {
    result = Surd(parse_rational(text));
  } else if (sq == 0) {
    result = Surd::sqrt_of(sqrt_arg(text));
  } else if (star != std::string_view::npos && star < sq) {
    Rat r = parse_rational(text.substr(0, star));
    result = Surd(r) * Surd::sqrt_of(sqrt_arg(strip(text.substr(star + 1))));
  } else {
    std::size_t slash = text.rfind('/', sq);
    if (slash == std::string_view::npos) throw parse_error("malformed surd", sq);
    Rat r = parse_rational(text.substr(0, slash));
    Rat m = sqrt_arg(strip(text.substr(slash + 1)));
    if (m == 0) throw parse_error("division by sqrt(0)", slash);
    // r / sqrt(m) == (r/m) * sqrt(m)
    result = Surd(r / m) * Surd::sqrt_of(m);
  }
  return neg ? -result : result;
}

}  // namespace rade
