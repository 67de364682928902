#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equidouble/catalogue.hpp"
#include "equidouble/doubles.hpp"
#include "equidouble/errors.hpp"
#include "equidouble/hopf.hpp"

using namespace equidouble;

namespace {

AxiomStatus status_of(const AxiomReport& r, const std::string& name) {
  for (auto& a : r) {
    if (a.axiom == name) return a.status;
  }
  FAIL("missing axiom " << name);
  return AxiomStatus::fail;
}

// Sweedler dual of K[G]: functions on G. An independent Hopf algebra with
// nontrivial coproduct and commutative product.
HopfData function_algebra(const FiniteGroup& g) {
  const int n = g.order();
  HopfStructure s;
  s.mult.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    s.labels.push_back("d" + g.label(a));
    s.mult[a * n + a] = basis_vector(a);
    s.unit.emplace(a, 1);
    Tensor2 t;
    for (int b = 0; b < n; ++b) t.emplace(std::make_pair(Index(b), Index(g.mul(g.inv(b), a))), 1);
    s.comult.push_back(t);
    s.counit.emplace_back(a == 0 ? 1 : 0);
    s.antipode.push_back(basis_vector(g.inv(a)));
  }
  return HopfData(std::move(s));
}

}  // namespace

TEST_CASE("sparse vector helpers") {
  Vec a{{0, Cyclotomic(1)}, {2, Cyclotomic(3)}};
  Vec b{{0, Cyclotomic(-1)}, {1, Cyclotomic(2)}};
  Vec s = add(a, b);
  CHECK(s.count(0) == 0);
  CHECK(s.at(1) == Cyclotomic(2));
  CHECK(scale(a, Cyclotomic(0)).empty());
  Tensor2 t = tensor(a, b);
  CHECK(t.size() == 4);
  CHECK(flip(t).at({1, 2}) == Cyclotomic(6));
  LinearMap swap{basis_vector(1), basis_vector(0), basis_vector(2)};
  CHECK(apply_map(swap, a) == Vec{{1, Cyclotomic(1)}, {2, Cyclotomic(3)}});
  Vec z;
  add_term(z, 4, Cyclotomic(1));
  add_term(z, 4, Cyclotomic(-1));
  CHECK(z.empty());
}

TEST_CASE("group algebras and function algebras satisfy the Hopf axioms") {
  for (auto name : {"Z1", "Z2", "Z4", "S3", "Q8", "A4"}) {
    auto g = catalogue::group(name);
    CAPTURE(name);
    CHECK(all_pass(check_hopf_axioms(group_algebra(*g))));
    CHECK(all_pass(check_hopf_axioms(function_algebra(*g))));
    CHECK(all_pass(check_jhopf_axioms(group_algebra(*g), trivial_decoration(group_algebra(*g)))));
  }
}

TEST_CASE("corrupted structure constants are detected") {
  auto g = catalogue::group("S3");
  SUBCASE("antipode") {
    auto s = group_algebra(*g).structure();
    s.antipode[3] = basis_vector(3);  // 3 has order 3, so S(3) should be 4
    auto r = check_hopf_axioms(HopfData(s));
    CHECK(status_of(r, "antipode") == AxiomStatus::fail);
    REQUIRE(first_failure(r) != nullptr);
    CHECK_FALSE(first_failure(r)->witness.empty());
  }
  SUBCASE("product") {
    auto s = group_algebra(*g).structure();
    s.mult[1 * 6 + 2] = basis_vector(0);
    CHECK(status_of(check_hopf_axioms(HopfData(s)), "associativity") == AxiomStatus::fail);
  }
  SUBCASE("coproduct") {
    auto s = group_algebra(*g).structure();
    s.comult[2] = Tensor2{{{2, 0}, Cyclotomic(1)}};
    auto r = check_hopf_axioms(HopfData(s));
    CHECK(status_of(r, "counit") == AxiomStatus::fail);
  }
  SUBCASE("counit") {
    auto s = group_algebra(*g).structure();
    s.counit[5] = Cyclotomic(2);
    CHECK_FALSE(all_pass(check_hopf_axioms(HopfData(s))));
  }
}

TEST_CASE("shape errors are rejected at construction") {
  auto s = group_algebra(*catalogue::group("Z2")).structure();
  s.mult.pop_back();
  CHECK_THROWS_AS(HopfData{s}, ConstructionError);
  auto t = group_algebra(*catalogue::group("Z2")).structure();
  t.antipode[0] = basis_vector(7);
  CHECK_THROWS_AS(HopfData{t}, ConstructionError);
}

TEST_CASE("inverse and left multiplication") {
  auto g = catalogue::group("S3");
  auto d = drinfeld_double(*g);
  CHECK(d.hopf.inverse(d.ribbon.theta) == d.ribbon.theta_inv);
  CHECK(d.hopf.multiply(d.ribbon.theta, d.ribbon.theta_inv) == d.hopf.unit());
  CHECK_THROWS_AS(d.hopf.inverse(basis_vector(0)), ArithmeticError);
  Tensor2 rinv = d.hopf.inverse(d.ribbon.R);
  CHECK(d.hopf.multiply(rinv, d.ribbon.R) == tensor(d.hopf.unit(), d.hopf.unit()));
  auto k = group_algebra(*g);
  CHECK(k.left_multiplication(k.unit()) == ExactMatrix::identity(6));
  CHECK(rank(k.left_multiplication(basis_vector(3))) == 6);
}

TEST_CASE("Drinfeld doubles are ribbon Hopf algebras") {
  for (auto name : {"Z1", "Z2", "Z3", "Z2xZ2", "S3", "Q8", "D4"}) {
    CAPTURE(name);
    auto d = drinfeld_double(*catalogue::group(name));
    CHECK(all_pass(check_hopf_axioms(d.hopf)));
    CHECK(all_pass(check_ribbon_axioms(d.hopf, d.ribbon)));
  }
}

TEST_CASE("double antipode corruption is detected") {
  auto d = drinfeld_double(*catalogue::group("S3"));
  auto s = d.hopf.structure();
  s.antipode[double_index(*catalogue::group("S3"), 1, 3)] = basis_vector(double_index(*catalogue::group("S3"), 1, 3));
  CHECK(status_of(check_hopf_axioms(HopfData(s)), "antipode") == AxiomStatus::fail);
}

TEST_CASE("wrong ribbon data fails") {
  auto g = catalogue::group("S3");
  auto d = drinfeld_double(*g);
  SUBCASE("flipped R") {
    RibbonDecoration bad = d.ribbon;
    bad.R = flip(d.ribbon.R);
    CHECK_FALSE(all_pass(check_ribbon_axioms(d.hopf, bad)));
  }
  SUBCASE("theta replaced by its inverse") {
    RibbonDecoration bad = d.ribbon;
    std::swap(bad.theta, bad.theta_inv);
    auto r = check_ribbon_axioms(d.hopf, bad);
    CHECK(status_of(r, "twist_coproduct") == AxiomStatus::fail);
    CHECK(status_of(r, "rmatrix_intertwines_coproduct") == AxiomStatus::pass);
  }
}

TEST_CASE("non group-like coherence element fails") {
  auto g = catalogue::group("S3");
  auto k = group_algebra(*g);
  JHopfDecoration dec = trivial_decoration(k);
  dec.c[0] = add(k.unit(), basis_vector(3));
  auto r = check_jhopf_axioms(k, dec);
  CHECK(status_of(r, "coherence_grouplike") == AxiomStatus::fail);
}

TEST_CASE("phi that is not an algebra map fails") {
  auto ext = catalogue::extension("A3-S3");
  auto jd = equivariant_double(ext);
  JHopfDecoration dec = jd.decoration;
  dec.phi[1][jdouble_index(ext, 0, 1)] = scale(dec.phi[1][jdouble_index(ext, 0, 1)], Cyclotomic(2));
  CHECK(status_of(check_jhopf_axioms(jd.hopf, dec), "phi_algebra_map") == AxiomStatus::fail);
}

TEST_CASE("sampled checking") {
  auto d = drinfeld_double(*catalogue::group("S3"));
  CheckOptions opt;
  opt.sampled = true;
  opt.samples = 64;
  auto r = check_hopf_axioms(d.hopf, opt);
  CHECK(status_of(r, "associativity") == AxiomStatus::sampled);
  CHECK(all_pass(r));
  auto r2 = check_hopf_axioms(d.hopf, opt);
  for (std::size_t i = 0; i < r.size(); ++i) CHECK(r[i].status == r2[i].status);
  opt.samples = 1u << 20;
  CHECK(status_of(check_hopf_axioms(d.hopf, opt), "associativity") == AxiomStatus::pass);
}

TEST_CASE("restriction to a sub-Hopf algebra") {
  auto g = catalogue::group("S3");
  auto k = group_algebra(*g);
  auto a3 = restrict_to_basis(k, {0, 3, 4});
  CHECK(a3.dim() == 3);
  CHECK(all_pass(check_hopf_axioms(a3)));
  CHECK_THROWS_AS(restrict_to_basis(k, {0, 1, 3}), ConstructionError);
}
