#pragma once

#include <span>
#include <string>
#include <vector>

#include "equidouble/rational.hpp"

namespace equidouble {

/// Euler's totient.
int totient(int n);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int n);

/// Element of the cyclotomic field Q(zeta_n), stored in the power basis
/// 1, z, ..., z^(phi(n)-1) and reduced modulo the n-th cyclotomic polynomial.
///
/// Zero has conductor 1 and no coefficients. Elements whose only nonzero
/// coefficient is the constant term are stored with conductor 1, so rational
/// arithmetic never touches the polynomial machinery. Operands with different
/// conductors are promoted to the lcm before combining.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// Builds from power-basis coefficients of conductor n (length <= phi(n)
  /// is not required; higher powers are reduced).
  Cyclotomic(int conductor, std::vector<Rational> coeffs);

  /// zeta_n^k.
  static Cyclotomic root_of_unity(int n, long k = 1);

  int conductor() const { return conductor_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return conductor_ == 1; }
  bool is_one() const;
  /// Value of a rational element; throws ArithmeticError otherwise.
  Rational to_rational() const;

  /// Same element written over conductor m (a multiple of conductor()).
  Cyclotomic promoted(int m) const;

  /// Galois automorphism zeta_n -> zeta_n^k, gcd(k, n) = 1.
  Cyclotomic galois(long k) const;
  /// Complex conjugation, i.e. galois(-1).
  Cyclotomic conjugate() const { return galois(-1); }

  /// Multiplicative inverse; throws ArithmeticError for zero.
  Cyclotomic inverse() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// "c0 + c1*z(n)^1 + ..." listing nonzero terms only; "0" for zero.
  std::string to_string() const;

 private:
  void normalize();

  int conductor_ = 1;
  std::vector<Rational> coeffs_;
};

/// Cyclotomic conjugate as a free function (complex conjugation).
inline Cyclotomic cyclotomic_conjugate(const Cyclotomic& x) { return x.conjugate(); }

}  // namespace equidouble
