#ifndef GYQS_RATIONAL_HPP
#define GYQS_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace gyqs {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator. Thin value wrapper around GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : v_(mpz_from(value)) {}  // NOLINT(implicit)
  Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(mpz_from(num), mpz_from(den));
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  /// Parses "p/q" or "p".
  static Rational parse(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0 || v.get_den() == 0)
      throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    v.canonicalize();
    return Rational(std::move(v));
  }

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  double to_double() const { return v_.get_d(); }

  /// Always "p/q", including integers ("3/1") so CSV columns stay uniform.
  std::string str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static mpz_class mpz_from(long long value) {
    static_assert(sizeof(long) == sizeof(long long), "LP64 platform expected");
    return mpz_class(static_cast<long>(value));
  }

  mpq_class v_{0};
};

inline mpz_class binomial_z(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// binom(n, k) with the vanishing convention for k < 0, k > n or n < 0.
inline Rational binomial(long long n, long long k) { return Rational(binomial_z(n, k)); }

inline Rational factorial(long long n) {
  if (n < 0) throw std::domain_error("factorial of negative number");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

/// x^(rising m) = x (x+1) ... (x+m-1)
inline Rational rising_factorial(const Rational& x, long long m) {
  Rational r(1);
  for (long long i = 0; i < m; ++i) r *= x + Rational(i);
  return r;
}

/// x^(falling m) = x (x-1) ... (x-m+1)
inline Rational falling_factorial(const Rational& x, long long m) {
  Rational r(1);
  for (long long i = 0; i < m; ++i) r *= x - Rational(i);
  return r;
}

}  // namespace gyqs

#endif  // GYQS_RATIONAL_HPP
