#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hopfcqt {

// Element of Q(zeta_N), stored as a polynomial in zeta_N of degree < phi(N)
// reduced modulo Phi_N. Rational values always carry order 1, and orders
// congruent to 2 mod 4 are never used (Q(zeta_2m) = Q(zeta_m) for odd m).
class Scalar {
 public:
  Scalar();
  Scalar(long n);  // NOLINT
  Scalar(const mpq_class& q);  // NOLINT
  static Scalar rational(long p, long q);
  static Scalar root_of_unity(long n, long j);
  static Scalar parse(std::string_view text);

  unsigned order() const { return order_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return order_ == 1; }
  const mpq_class& rational_value() const { return c_[0]; }

  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(long e) const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  Scalar(unsigned order, std::vector<mpq_class> c);
  void normalize();
  std::vector<mpq_class> embedded(unsigned m) const;

  unsigned order_ = 1;
  std::vector<mpq_class> c_;
};

// (M, j) with gcd(j, M) = 1 and x = zeta_M^j, if x is a root of unity.
std::optional<std::pair<unsigned, unsigned>> root_of_unity_exponent(const Scalar& x);
Scalar sqrt_root_of_unity(const Scalar& x);
std::vector<Scalar> nth_roots(const Scalar& x, unsigned n);

}  // namespace hopfcqt
