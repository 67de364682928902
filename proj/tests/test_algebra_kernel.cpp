#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "equidouble/cyclotomic.hpp"
#include "equidouble/errors.hpp"
#include "equidouble/matrix.hpp"
#include "equidouble/prime_field.hpp"

using namespace equidouble;

namespace {

Cyclotomic random_cyclotomic(std::mt19937_64& rng, int conductor) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> c(conductor);
  for (auto& x : c) x = make_rational(num(rng), den(rng));
  return Cyclotomic(conductor, std::move(c));
}

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int conductor) {
  ExactMatrix m(n, n);
  std::uniform_int_distribution<int> zero(0, 3);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (zero(rng) != 0) m(r, c) = random_cyclotomic(rng, conductor);
    }
  }
  return m;
}

// Cofactor expansion: independent of the elimination code.
Cyclotomic laplace_det(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Cyclotomic(1);
  if (n == 1) return m(0, 0);
  Cyclotomic total;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    ExactMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, cc++) = m(r, k);
      }
    }
    Cyclotomic term = m(0, c) * laplace_det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace

TEST_CASE("cyclotomic conjugate examples") {
  CHECK(cyclotomic_conjugate(Cyclotomic(make_rational(3, 7))) == Cyclotomic(make_rational(3, 7)));
  CHECK(cyclotomic_conjugate(Cyclotomic::root_of_unity(4)) == -Cyclotomic::root_of_unity(4));
  CHECK(cyclotomic_conjugate(Cyclotomic::root_of_unity(3)) == Cyclotomic(-1) - Cyclotomic::root_of_unity(3));
  for (int n : {5, 8, 12}) {
    CHECK(cyclotomic_conjugate(Cyclotomic::root_of_unity(n)) == Cyclotomic::root_of_unity(n, n - 1));
  }
}

TEST_CASE("cyclotomic reduction and normal forms") {
  auto z3 = Cyclotomic::root_of_unity(3);
  CHECK(z3 * z3 == Cyclotomic(-1) - z3);
  CHECK((z3 * z3 * z3).is_one());
  CHECK((Cyclotomic(1) + z3 + z3 * z3).is_zero());
  // sqrt(-3) = 1 + 2 z3 lies in both Q(zeta_3) and Q(zeta_12)
  auto z12 = Cyclotomic::root_of_unity(12);
  CHECK(z12 * z12 * z12 * z12 == z3);
  CHECK((z12 * z12 * z12).promoted(12) == Cyclotomic::root_of_unity(4).promoted(12));
  CHECK(Cyclotomic::root_of_unity(4) * Cyclotomic::root_of_unity(4) == Cyclotomic(-1));
  CHECK((Cyclotomic::root_of_unity(4) * Cyclotomic::root_of_unity(4)).is_rational());
  CHECK(Cyclotomic::root_of_unity(6, 3) == Cyclotomic(-1));
  CHECK(Cyclotomic(make_rational(1, 2)).to_string() == "1/2");
  CHECK(z3.to_string() == "1*z(3)^1");
  CHECK(parse_rational("-4/6") == make_rational(-2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), ConstructionError);
  CHECK_THROWS_AS(Cyclotomic().inverse(), ArithmeticError);
}

TEST_CASE("cyclotomic field axioms on random samples") {
  std::mt19937_64 rng(7);
  for (int conductor : {1, 3, 4, 5, 8, 12}) {
    for (int trial = 0; trial < 8; ++trial) {
      auto a = random_cyclotomic(rng, conductor);
      auto b = random_cyclotomic(rng, conductor);
      auto c = random_cyclotomic(rng, conductor == 1 ? 1 : 3);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      CHECK(cyclotomic_conjugate(a * b) == cyclotomic_conjugate(a) * cyclotomic_conjugate(b));
      CHECK(cyclotomic_conjugate(cyclotomic_conjugate(a)) == a);
    }
  }
}

TEST_CASE("rank det kernel examples") {
  auto id = mat_rank_det_kernel(ExactMatrix::identity(2));
  CHECK(id.rank == 2);
  CHECK(id.det.value().is_one());
  CHECK(id.kernel_basis.empty());
  auto zero = mat_rank_det_kernel(ExactMatrix(2, 2));
  CHECK(zero.rank == 0);
  CHECK(zero.det.value().is_zero());
  CHECK(zero.kernel_basis.size() == 2);
  CHECK_THROWS_AS(det(ExactMatrix(2, 3)), DimensionError);
  CHECK_FALSE(mat_rank_det_kernel(ExactMatrix(2, 3)).det.has_value());
}

TEST_CASE("determinant multiplicativity and kernel vectors") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    const int conductor = (n % 2) ? 3 : 4;
    auto a = random_matrix(rng, n, conductor);
    auto b = random_matrix(rng, n, conductor);
    CHECK(det(a * b) == det(a) * det(b));
    if (n <= 5) CHECK(det(a) == laplace_det(a));
    // rank-deficient matrix: last column = first + second
    ExactMatrix m(n + 1, n + 1);
    for (std::size_t r = 0; r <= n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = random_cyclotomic(rng, conductor);
      m(r, n) = m(r, 0) + (n > 1 ? m(r, 1) : Cyclotomic());
    }
    auto res = mat_rank_det_kernel(m);
    CHECK(res.rank + res.kernel_basis.size() == m.cols());
    CHECK(res.det.value().is_zero() == (res.rank < m.rows()));
    CHECK_FALSE(res.kernel_basis.empty());
    for (const auto& v : res.kernel_basis) CHECK((m * v).is_zero());
  }
}

TEST_CASE("inverse and solve") {
  std::mt19937_64 rng(3);
  auto a = random_matrix(rng, 4, 5);
  if (!det(a).is_zero()) {
    CHECK(a * inverse(a) == ExactMatrix::identity(4));
    auto b = random_matrix(rng, 4, 5);
    CHECK(a * solve(a, b) == b);
  }
  CHECK_THROWS_AS(inverse(ExactMatrix(3, 3)), ArithmeticError);
}

TEST_CASE("prime field helpers") {
  CHECK(prime_congruent_one(6, 4, 1000) == 7);
  CHECK(prime_congruent_one(4, 5, 1000) == 13);
  CHECK_THROWS_AS(prime_congruent_one(6, 1000, 100), ResourceError);
  const std::int64_t p = 13;
  const std::int64_t z = primitive_root_of_unity(p, 12);
  PrimeFieldElement w(p, z);
  CHECK(w.pow(12).value() == 1);
  for (int k = 1; k < 12; ++k) CHECK(w.pow(k).value() != 1);
  CHECK((w * w.inverse()).value() == 1);
}
