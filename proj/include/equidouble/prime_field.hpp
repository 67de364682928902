#pragma once

#include <cstdint>

namespace equidouble {

bool is_prime(std::int64_t n);

/// Element of F_p for a word-sized prime p (p < 2^31 so products fit).
class PrimeFieldElement {
 public:
  PrimeFieldElement(std::int64_t modulus, std::int64_t value);

  std::int64_t modulus() const { return p_; }
  std::int64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  PrimeFieldElement operator+(const PrimeFieldElement& o) const { return {p_, v_ + o.v_}; }
  PrimeFieldElement operator-(const PrimeFieldElement& o) const { return {p_, v_ - o.v_}; }
  PrimeFieldElement operator*(const PrimeFieldElement& o) const { return {p_, v_ * o.v_}; }
  PrimeFieldElement operator-() const { return {p_, -v_}; }
  PrimeFieldElement pow(std::int64_t e) const;
  /// Throws ArithmeticError on zero.
  PrimeFieldElement inverse() const;
  bool operator==(const PrimeFieldElement& o) const = default;

 private:
  std::int64_t p_;
  std::int64_t v_;
};

/// Smallest prime p = 1 + k*e with p > lower_bound, searched up to search_limit.
/// Throws ResourceError when none exists below the limit.
std::int64_t prime_congruent_one(std::int64_t e, std::int64_t lower_bound, std::int64_t search_limit);

/// An element of exact multiplicative order e in F_p (requires e | p-1).
std::int64_t primitive_root_of_unity(std::int64_t p, std::int64_t e);

}  // namespace equidouble
