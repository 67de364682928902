#include "equidouble/prime_field.hpp"

#include <string>
#include <vector>

#include "equidouble/errors.hpp"

namespace equidouble {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeFieldElement::PrimeFieldElement(std::int64_t modulus, std::int64_t value) : p_(modulus), v_(value % modulus) {
  if (v_ < 0) v_ += p_;
}

PrimeFieldElement PrimeFieldElement::pow(std::int64_t e) const {
  std::int64_t base = v_;
  std::int64_t acc = 1;
  e %= (p_ - 1);
  if (e < 0) e += p_ - 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return {p_, acc};
}

PrimeFieldElement PrimeFieldElement::inverse() const {
  if (v_ == 0) throw ArithmeticError("inverse of zero in F_" + std::to_string(p_));
  return pow(p_ - 2);
}

std::int64_t prime_congruent_one(std::int64_t e, std::int64_t lower_bound, std::int64_t search_limit) {
  for (std::int64_t p = e + 1; p <= search_limit; p += e) {
    if (p > lower_bound && is_prime(p)) return p;
  }
  throw ResourceError("no prime p = 1 mod " + std::to_string(e) + " above " + std::to_string(lower_bound) +
                      " within search bound " + std::to_string(search_limit));
}

std::int64_t primitive_root_of_unity(std::int64_t p, std::int64_t e) {
  if ((p - 1) % e != 0) throw ArithmeticError("e does not divide p-1");
  std::vector<std::int64_t> prime_divisors;
  std::int64_t m = e;
  for (std::int64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      prime_divisors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) prime_divisors.push_back(m);
  for (std::int64_t a = 1; a < p; ++a) {
    PrimeFieldElement z = PrimeFieldElement(p, a).pow((p - 1) / e);
    bool ok = true;
    for (auto q : prime_divisors) {
      if (z.pow(e / q).value() == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return z.value();
  }
  throw ArithmeticError("no primitive root of unity found");
}

}  // namespace equidouble
