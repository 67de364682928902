#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "equidouble/catalogue.hpp"
#include "equidouble/errors.hpp"
#include "equidouble/modular_cat.hpp"

using namespace equidouble;

namespace {

ExtensionPtr ext_ptr(const std::string& name) {
  return std::make_shared<const GroupExtension>(catalogue::extension(name));
}

// G-orbits on pairs (h, g) with g h g^{-1} = h, by union-find
int inertia_orbit_count(const GroupExtension& ext) {
  const FiniteGroup& H = *ext.H();
  const FiniteGroup& G = *ext.G();
  std::vector<std::pair<int, int>> objs;
  for (int h = 0; h < H.order(); ++h) {
    for (int g = 0; g < G.order(); ++g) {
      if (H.conj(ext.to_H(g), h) == h) objs.emplace_back(h, g);
    }
  }
  std::vector<int> parent(objs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t a = 0; a < objs.size(); ++a) {
    for (int x = 0; x < G.order(); ++x) {
      const int xh = ext.to_H(x);
      std::pair<int, int> img{H.conj(xh, objs[a].first), ext.kernel_index(H.conj(xh, ext.to_H(objs[a].second)))};
      for (std::size_t b = 0; b < objs.size(); ++b) {
        if (objs[b] == img) parent[find(static_cast<int>(a))] = find(static_cast<int>(b));
      }
    }
  }
  std::set<int> roots;
  for (std::size_t a = 0; a < objs.size(); ++a) roots.insert(find(static_cast<int>(a)));
  return static_cast<int>(roots.size());
}

bool isomorphic(const GradedModule& a, const GradedModule& b) {
  if (a.dim() != b.dim()) return false;
  for (const auto& m : hom_space(a, b)) {
    if (rank(m) == a.dim()) return true;
  }
  return false;
}

const GradedModule& twisted(const std::vector<GradedModule>& s) {
  for (auto& m : s) {
    if (*m.degree() != 0) return m;
  }
  FAIL("no twisted-sector simple");
  return s[0];
}

std::vector<GradedModule> pick(const std::vector<GradedModule>& all, const std::vector<int>& idx) {
  std::vector<GradedModule> out;
  for (int i : idx) out.push_back(all[i]);
  return out;
}

}  // namespace

TEST_CASE("simples of doubles") {
  SUBCASE("D(Z2)") {
    auto s = simples_of_double(catalogue::group("Z2"));
    CHECK(s.size() == 4);
    for (auto& m : s) CHECK(m.dim() == 1);
  }
  SUBCASE("D(S3)") {
    auto s = simples_of_double(catalogue::group("S3"));
    CHECK(s.size() == 8);
    std::size_t sq = 0;
    for (auto& m : s) sq += m.dim() * m.dim();
    CHECK(sq == 36);
  }
  SUBCASE("catalogue extensions") {
    for (const auto& name : catalogue::extension_names()) {
      CAPTURE(name);
      auto e = ext_ptr(name);
      auto s = simples_of_double(e);
      CHECK(static_cast<int>(s.size()) == inertia_orbit_count(*e));
      std::size_t sq = 0;
      for (auto& m : s) {
        CHECK_NOTHROW(check_graded_module(m));
        REQUIRE(m.degree().has_value());
        sq += m.dim() * m.dim();
      }
      // sum of d^2 over simples = dim D^J(G) = |H||G|
      CHECK(sq == static_cast<std::size_t>(e->H()->order() * e->G()->order()));
    }
  }
  SUBCASE("A3 < S3 sectors") {
    auto e = ext_ptr("A3-S3");
    auto s = simples_of_double(e);
    REQUIRE(s.size() == 10);
    int neutral = 0, twisted = 0;
    for (auto& m : s) {
      if (*m.degree() == 0) {
        ++neutral;
        CHECK(m.dim() == 1);
      } else {
        ++twisted;
        CHECK(m.dim() == 3);
      }
    }
    CHECK(neutral == 9);
    CHECK(twisted == 1);
  }
}

TEST_CASE("simples are pairwise non-isomorphic and absolutely simple") {
  auto e = ext_ptr("A3-S3");
  auto s = simples_of_double(e);
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < s.size(); ++b) CHECK(hom_space(s[a], s[b]).size() == (a == b ? 1u : 0u));
  }
}

TEST_CASE("fusion") {
  auto e = ext_ptr("A3-S3");
  auto s = simples_of_double(e);
  auto u = unit_module(e);
  for (auto& v : s) {
    auto f = fuse(u, v);
    CHECK(f.grade == v.grade);
    CHECK(f.action == v.action);
  }
  const GradedModule& tw = twisted(s);
  REQUIRE(*tw.degree() == 1);
  auto tt = fuse(tw, tw);
  CHECK(tt.dim() == 9);
  CHECK(*tt.degree() == 0);
  CHECK_NOTHROW(check_graded_module(tt));
  std::size_t total = 0;
  for (auto& m : s) total += hom_space(m, tt).size() * m.dim();
  CHECK(total == 9);
  // block dims are the convolution of the grading dims
  auto d = simples_of_double(catalogue::group("S3"));
  auto f = fuse(d[2], d[5]);
  const FiniteGroup& H = *d[2].ext->H();
  for (int h = 0; h < H.order(); ++h) {
    int expect = 0;
    for (int a = 0; a < H.order(); ++a) expect += d[2].block_dim(a) * d[5].block_dim(H.mul(H.inv(a), h));
    CHECK(f.block_dim(h) == expect);
  }
  CHECK_THROWS_AS(fuse(s[0], d[0]), UsageError);
}

TEST_CASE("J-action and compositors") {
  auto e = ext_ptr("A3-S3");
  auto s = simples_of_double(e);
  for (auto& v : s) {
    auto one = j_act(0, v);
    CHECK(one.grade == v.grade);
    CHECK(one.action == v.action);
    CHECK_NOTHROW(check_graded_module(j_act(1, v)));
    CHECK(*j_act(1, v).degree() == *v.degree());
  }
  // on the neutral sector at h = 1 the transposition swaps the two
  // nontrivial A3 characters
  std::vector<int> at_one;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k].grade == std::vector<int>{0}) at_one.push_back(static_cast<int>(k));
  }
  REQUIRE(at_one.size() == 3);
  CHECK(isomorphic(j_act(1, s[at_one[0]]), s[at_one[0]]));
  CHECK(isomorphic(j_act(1, s[at_one[1]]), s[at_one[2]]));
  CHECK_FALSE(isomorphic(j_act(1, s[at_one[1]]), s[at_one[1]]));
  for (auto name : {"A3-S3", "Z2-Z4", "V4-A4", "Z4-Q8"}) {
    CAPTURE(name);
    auto ex = ext_ptr(name);
    const FiniteGroup& J = *ex->J();
    for (auto& v : simples_of_double(ex)) {
      for (int i = 0; i < J.order(); ++i) {
        for (int j = 0; j < J.order(); ++j) {
          CHECK(is_module_map(j_act(i, j_act(j, v)), j_act(J.mul(i, j), v), compositor(i, j, v)));
        }
      }
    }
  }
}

TEST_CASE("duals") {
  auto e = ext_ptr("V4-A4");
  for (auto& v : simples_of_double(e)) {
    auto d = dual(v);
    CHECK_NOTHROW(check_graded_module(d));
    CHECK(dual(d).action == v.action);
    CHECK(dual(d).grade == v.grade);
    for (int j = 0; j < e->J()->order(); ++j) {
      auto a = j_act(j, d);
      auto b = dual(j_act(j, v));
      CHECK(a.grade == b.grade);
      CHECK(a.action == b.action);
    }
  }
}

TEST_CASE("braiding matches the R-matrix and the twist matches the inverse twist element") {
  for (auto name : {"A3-S3", "Z2-Z4", "V4-A4", "Z2-Q8"}) {
    CAPTURE(name);
    auto e = ext_ptr(name);
    auto jd = equivariant_double(*e);
    auto s = simples_of_double(e);
    if (s.size() > 12) s = pick(s, {0, 1, 5, static_cast<int>(s.size()) - 2, static_cast<int>(s.size()) - 1});
    for (auto& v : s) {
      // the algebra really acts
      for (Index a = 0; a < jd.hopf.dim(); a += 3) {
        for (Index b = 0; b < jd.hopf.dim(); b += 5) {
          CHECK(double_action(v, basis_vector(a)) * double_action(v, basis_vector(b)) ==
                double_action(v, jd.hopf.mult(a, b)));
        }
      }
      CHECK(twist(v) == double_action(v, jd.ribbon.theta_inv));
      for (auto& w : s) CHECK(braid(v, w) == flip_after_action(v, w, jd.ribbon.R));
    }
  }
}

TEST_CASE("unconjugated delta factor does not realize the twist") {
  auto e = ext_ptr("A3-S3");
  const FiniteGroup& H = *e->H();
  auto s = simples_of_double(e);
  const GradedModule& tw = twisted(s);
  const int sigma = e->s(e->J()->inv(1));
  Vec literal;
  for (int h : e->coset(1)) literal.emplace(jdouble_index(*e, h, e->kernel_index(H.mul(sigma, h))), 1);
  CHECK(double_action(tw, literal) != twist(tw));
  CHECK(rank(double_action(tw, literal)) < tw.dim());
}

TEST_CASE("twist values") {
  auto z2 = simples_of_double(catalogue::group("Z2"));
  // labels (class, irrep): (1, sign) is the last one
  REQUIRE(z2.size() == 4);
  CHECK(twist(z2[3]) == ExactMatrix::identity(1).scaled(Cyclotomic(-1)));
  CHECK(twist(z2[0]) == ExactMatrix::identity(1));
  auto e = ext_ptr("A3-S3");
  CHECK(twist(unit_module(e)) == ExactMatrix::identity(1));
  const GradedModule tw = twisted(simples_of_double(e));
  ExactMatrix t = twist(tw);
  // monomial with root-of-unity entries
  for (std::size_t c = 0; c < t.cols(); ++c) {
    int nonzero = 0;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (t(r, c).is_zero()) continue;
      ++nonzero;
      Cyclotomic p = t(r, c);
      Cyclotomic x = p;
      int k = 1;
      while (x != Cyclotomic(1) && k < 12) {
        x = x * p;
        ++k;
      }
      CHECK(x == Cyclotomic(1));
    }
    CHECK(nonzero == 1);
  }
  CHECK_THROWS_AS(twist(direct_sum(simples_of_double(e)[0], tw)), UsageError);
  CHECK_THROWS_AS(braid(direct_sum(simples_of_double(e)[0], tw), tw), UsageError);
}

TEST_CASE("splitting by degree") {
  auto e = ext_ptr("A3-S3");
  auto s = simples_of_double(e);
  auto mixed = direct_sum(s[0], twisted(s));
  CHECK_FALSE(mixed.degree().has_value());
  auto parts = split_by_degree(mixed);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == 0);
  CHECK(parts[0].second.grade == s[0].grade);
  CHECK(parts[1].second.action == twisted(s).action);
}

TEST_CASE("equivariant diagrams on all simples") {
  SUBCASE("A3 < S3") {
    auto e = ext_ptr("A3-S3");
    auto rep = check_equivariant_diagrams(*e, simples_of_double(e));
    for (auto d : {"braid_module_map", "twist_module_map", "compositor_module_map", "hexagon_left", "hexagon_right",
                   "action_braiding", "twist_braiding", "twist_duality", "twist_action"}) {
      CAPTURE(d);
      auto [n, bad] = rep.tally(d);
      CHECK(n > 0);
      CHECK(bad == 0);
    }
  }
  SUBCASE("trivial J, D(S3)") {
    auto g = catalogue::group("S3");
    auto s = simples_of_double(g);
    auto rep = check_equivariant_diagrams(*s[0].ext, s);
    CHECK(rep.all_pass());
  }
  SUBCASE("non-split Z2 < Z4") {
    auto e = ext_ptr("Z2-Z4");
    CHECK(check_equivariant_diagrams(*e, simples_of_double(e)).all_pass());
  }
  SUBCASE("J = Z3: V4 < A4") {
    auto e = ext_ptr("V4-A4");
    auto s = simples_of_double(e);
    REQUIRE(s.size() == 18);
    auto rep = check_equivariant_diagrams(*e, s);
    for (auto& r : rep.results) {
      if (!r.pass) FAIL_CHECK(r.diagram);
    }
  }
  SUBCASE("J = Z3 with a section that does not commute with inversion") {
    auto base = catalogue::extension("V4-A4");
    const FiniteGroup& H = *base.H();
    int alt = -1;
    for (int x : base.coset(2)) {
      if (x != H.inv(base.s(1))) alt = x;
    }
    auto e = std::make_shared<const GroupExtension>(base.with_section({0, base.s(1), alt}));
    CHECK(check_equivariant_diagrams(*e, simples_of_double(e)).all_pass());
  }
  SUBCASE("Z4 < Q8") {
    auto e = ext_ptr("Z4-Q8");
    CHECK(check_equivariant_diagrams(*e, simples_of_double(e)).all_pass());
  }
}

TEST_CASE("wrong braiding is caught") {
  SUBCASE("J = Z3") {
    // needs s(j)^{-1} != s(j^{-1}), otherwise the variant coincides with the braiding
    auto base = catalogue::extension("V4-A4");
    const FiniteGroup& H = *base.H();
    int alt = -1;
    for (int x : base.coset(2)) {
      if (x != H.inv(base.s(1))) alt = x;
    }
    auto e = std::make_shared<const GroupExtension>(base.with_section({0, base.s(1), alt}));
    auto rep = check_equivariant_diagrams(*e, simples_of_double(e), BraidVariant::uninverted_section);
    CHECK(rep.tally("action_braiding").second > 0);
    REQUIRE(rep.first_failure("action_braiding") != nullptr);
    CHECK(rep.first_failure("action_braiding")->tuple.size() == 3);
  }
  SUBCASE("non-split Z2 < Z4") {
    auto e = ext_ptr("Z2-Z4");
    auto rep = check_equivariant_diagrams(*e, simples_of_double(e), BraidVariant::uninverted_section);
    CHECK_FALSE(rep.all_pass());
    CHECK(rep.tally("twist_braiding").second > 0);
  }
}

TEST_CASE("braiding is natural") {
  auto e = ext_ptr("A3-S3");
  auto s = simples_of_double(e);
  const GradedModule& tw = twisted(s);
  auto x = direct_sum(s[1], s[1]);
  auto y = direct_sum(s[1], direct_sum(s[2], s[1]));
  auto homs = hom_space(x, y);
  CHECK(homs.size() == 4);
  for (auto& f : homs) {
    REQUIRE(is_module_map(x, y, f));
    for (const GradedModule* w : std::vector<const GradedModule*>{&tw, &s[0], &s[4]}) {
      const std::size_t dw = w->dim();
      // naturality in the first slot
      CHECK(braid(y, *w) * kron(f, ExactMatrix::identity(dw)) == kron(ExactMatrix::identity(dw), f) * braid(x, *w));
      // and in the second, for a braiding object of nontrivial degree
      CHECK(braid(tw, y) * kron(ExactMatrix::identity(tw.dim()), f) ==
            kron(f, ExactMatrix::identity(tw.dim())) * braid(tw, x));
    }
  }
}

TEST_CASE("S-matrices") {
  SUBCASE("trivial group") {
    auto s = s_matrix(catalogue::group("Z1"));
    CHECK(s.entries == ExactMatrix::identity(1));
  }
  for (auto name : {"Z2", "Z3", "Z4", "S3", "Z2xZ2", "Q8", "D4"}) {
    CAPTURE(name);
    auto g = catalogue::group(name);
    auto s = s_matrix(g);
    auto oracle = s_matrix_from_characters(g);
    CHECK(s.labels == oracle.labels);
    CHECK(s.entries == oracle.entries);
    CHECK(s.entries == s.entries.transposed());
    CHECK_FALSE(det(s.entries).is_zero());
    // unit row lists dimensions
    auto simples = simples_of_double(g);
    for (std::size_t k = 0; k < simples.size(); ++k) CHECK(s.entries(0, k) == Cyclotomic(static_cast<long>(simples[k].dim())));
    // S^2 is |H|^2 times the charge conjugation permutation
    ExactMatrix sq = s.entries * s.entries;
    for (std::size_t r = 0; r < sq.rows(); ++r) {
      int nonzero = 0;
      for (std::size_t c = 0; c < sq.cols(); ++c) {
        if (sq(r, c).is_zero()) continue;
        ++nonzero;
        CHECK(sq(r, c) == Cyclotomic(static_cast<long>(g->order() * g->order())));
      }
      CHECK(nonzero == 1);
    }
  }
  CHECK(s_matrix(catalogue::group("S3")).entries.rows() == 8);
  CHECK_THROWS_AS(s_matrix(catalogue::group("S4"), 12), ResourceError);
}

TEST_CASE("modularity verdicts") {
  for (auto name : {"A3-S3", "Z2-Z4", "S3-S3"}) {
    CAPTURE(name);
    auto v = modularity_verdict(catalogue::extension(name));
    CHECK(v.psi_isomorphism);
    CHECK(v.s_invertible);
    CHECK(v.orbifold_modular);
    CHECK(v.j_modular_claim);
  }
  CHECK(modularity_verdict(catalogue::extension("Z2-Z4")).simples == 16);
  CHECK(modularity_verdict(catalogue::extension("A3-S3")).simples == 8);
}
