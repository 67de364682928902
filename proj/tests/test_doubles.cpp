#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "equidouble/catalogue.hpp"
#include "equidouble/doubles.hpp"
#include "equidouble/errors.hpp"

using namespace equidouble;

namespace {

std::vector<Index> degree_basis(const EquivariantDouble& d, int j) {
  std::vector<Index> out;
  for (Index a = 0; a < d.hopf.dim(); ++a) {
    if (d.decoration.grading[a] == j) out.push_back(a);
  }
  return out;
}

Index position(const std::vector<Index>& v, Index a) {
  auto it = std::find(v.begin(), v.end(), a);
  REQUIRE(it != v.end());
  return static_cast<Index>(it - v.begin());
}

}  // namespace

TEST_CASE("D(H) on a small example") {
  auto g = catalogue::group("S3");
  auto d = drinfeld_double(*g);
  CHECK(d.hopf.dim() == 36);
  // (delta_1 (x) x)(delta_y (x) z) is nonzero only when 1 = x y x^{-1}
  CHECK(d.hopf.mult(double_index(*g, 0, 3), double_index(*g, 0, 4)) == basis_vector(double_index(*g, 0, 0)));
  CHECK(d.hopf.mult(double_index(*g, 0, 3), double_index(*g, 1, 0)).empty());
  CHECK(d.hopf.counit(double_index(*g, 0, 5)) == Cyclotomic(1));
  CHECK(d.hopf.counit(double_index(*g, 2, 0)) == Cyclotomic(0));
  CHECK(d.hopf.comult(double_index(*g, 3, 1)).size() == 6);
  CHECK(d.ribbon.R.size() == 36);
}

TEST_CASE("D^J(G) is a J-Hopf algebra for every catalogue extension") {
  for (const auto& name : catalogue::extension_names()) {
    CAPTURE(name);
    auto ext = catalogue::extension(name);
    auto d = equivariant_double(ext);
    CHECK(d.hopf.dim() == static_cast<std::size_t>(ext.H()->order() * ext.G()->order()));
    CheckOptions opt;
    opt.sampled = d.hopf.dim() > 150;
    auto hopf = check_hopf_axioms(d.hopf, opt);
    CHECK(all_pass(hopf));
    auto jr = check_jhopf_axioms(d.hopf, d.decoration, opt);
    if (!all_pass(jr)) FAIL_CHECK(first_failure(jr)->axiom);
    CHECK(restriction_check(ext));
  }
}

TEST_CASE("graded R and twist components invert within their degree") {
  for (auto name : {"A3-S3", "Z2-Z4", "Z4-D4", "Z4-Q8", "Z2-Q8", "Z3-Z6", "V4-A4"}) {
    CAPTURE(name);
    auto ext = catalogue::extension(name);
    auto d = equivariant_double(ext);
    const int nj = ext.J()->order();
    for (int i = 0; i < nj; ++i) {
      const Vec one_i = jdouble_degree_unit(ext, i);
      CHECK(d.hopf.multiply(jdouble_theta_component(ext, i), jdouble_theta_inv_component(ext, i)) == one_i);
      CHECK(d.hopf.multiply(jdouble_theta_inv_component(ext, i), jdouble_theta_component(ext, i)) == one_i);
      for (int j = 0; j < nj; ++j) {
        const Tensor2 unit_ij = tensor(one_i, jdouble_degree_unit(ext, j));
        const Tensor2 r = jdouble_r_component(ext, i, j);
        const Tensor2 rinv = jdouble_r_component_inverse(ext, i, j);
        CHECK(d.hopf.multiply(r, rinv) == unit_ij);
        CHECK(d.hopf.multiply(rinv, r) == unit_ij);
      }
    }
  }
}

TEST_CASE("degree-one part is the Drinfeld double of G") {
  for (auto name : {"A3-S3", "Z2-Z4", "Z4-D4", "Z2-Q8"}) {
    CAPTURE(name);
    auto ext = catalogue::extension(name);
    auto d = equivariant_double(ext);
    auto basis = degree_basis(d, 0);
    auto a1 = restrict_to_basis(d.hopf, basis, true);
    CHECK(a1.dim() == static_cast<std::size_t>(ext.G()->order() * ext.G()->order()));
    CHECK(all_pass(check_hopf_axioms(a1)));
    RibbonDecoration rib;
    for (auto& [k, c] : jdouble_r_component(ext, 0, 0)) rib.R.emplace(std::make_pair(position(basis, k.first), position(basis, k.second)), c);
    for (auto& [k, c] : jdouble_theta_component(ext, 0)) rib.theta.emplace(position(basis, k), c);
    for (auto& [k, c] : jdouble_theta_inv_component(ext, 0)) rib.theta_inv.emplace(position(basis, k), c);
    auto r = check_ribbon_axioms(a1, rib);
    if (!all_pass(r)) FAIL_CHECK(first_failure(r)->axiom);
  }
}

TEST_CASE("trivial J recovers D(G) exactly") {
  for (auto name : {"S3", "Q8", "Z4"}) {
    CAPTURE(name);
    auto g = catalogue::group(name);
    auto d = drinfeld_double(*g);
    auto e = equivariant_double(catalogue::trivial_extension(g));
    CHECK(e.hopf.structure().mult == d.hopf.structure().mult);
    CHECK(e.hopf.structure().comult == d.hopf.structure().comult);
    CHECK(e.hopf.structure().antipode == d.hopf.structure().antipode);
    CHECK(e.ribbon.R == d.ribbon.R);
    CHECK(e.ribbon.theta == d.ribbon.theta);
    CHECK(e.ribbon.theta_inv == d.ribbon.theta_inv);
    CHECK(all_pass(check_ribbon_axioms(e.hopf, e.ribbon)));
  }
}

TEST_CASE("coherence elements are nontrivial for a non-split extension") {
  auto ext = catalogue::extension("Z2-Z4");
  auto d = equivariant_double(ext);
  const Vec& c11 = d.decoration.coherence(1, 1);
  CHECK(c11 != d.hopf.unit());
  CHECK(d.hopf.multiply(c11, c11) == d.hopf.unit());
  CHECK(d.decoration.coherence(0, 1) == d.hopf.unit());
}

TEST_CASE("changing the section gives another valid J-Hopf algebra") {
  auto ext = catalogue::extension("A3-S3");
  auto other = ext.with_section({0, 2});
  auto d = equivariant_double(other);
  CHECK(all_pass(check_jhopf_axioms(d.hopf, d.decoration)));
  CHECK(restriction_check(other));
}

TEST_CASE("degree-one span is not a subcoalgebra without projection") {
  auto ext = catalogue::extension("A3-S3");
  auto d = equivariant_double(ext);
  CHECK(degree_basis(d, 0).size() == 9);
  CHECK(degree_basis(d, 1).size() == 9);
  CHECK_THROWS_AS(restrict_to_basis(d.hopf, degree_basis(d, 0)), ConstructionError);
}
