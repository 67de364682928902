#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "equidouble/catalogue.hpp"
#include "equidouble/errors.hpp"
#include "equidouble/groups.hpp"

using namespace equidouble;

namespace {

// brute-force class sizes, sorted
std::vector<int> class_sizes_brute(const FiniteGroup& g) {
  std::set<std::set<int>> classes;
  for (int a = 0; a < g.order(); ++a) {
    std::set<int> cls;
    for (int x = 0; x < g.order(); ++x) cls.insert(g.mul(g.mul(x, a), g.inv(x)));
    classes.insert(cls);
  }
  std::vector<int> sizes;
  for (const auto& c : classes) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool is_isomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& f) {
  if (a.order() != b.order() || static_cast<int>(f.size()) != a.order()) return false;
  std::set<int> image(f.begin(), f.end());
  if (static_cast<int>(image.size()) != b.order()) return false;
  for (int x = 0; x < a.order(); ++x) {
    for (int y = 0; y < a.order(); ++y) {
      if (f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
    }
  }
  return true;
}

std::multiset<int> order_profile(const FiniteGroup& g) {
  std::multiset<int> out;
  for (int x = 0; x < g.order(); ++x) out.insert(g.element_order(x));
  return out;
}

void check_weak_action_iso(const WeakAction& a, const WeakAction& b, const WeakActionIso& w) {
  const auto& G = *a.G();
  const auto& J = *a.J();
  for (int j = 0; j < J.order(); ++j) {
    for (int g = 0; g < G.order(); ++g) CHECK(b.rho(j, g) == G.conj(w.h[j], a.rho(j, g)));
  }
  for (int i = 0; i < J.order(); ++i) {
    for (int j = 0; j < J.order(); ++j) {
      const int lhs = G.mul(b.c(i, j), w.h[J.mul(i, j)]);
      const int rhs = G.mul(G.mul(w.h[i], a.rho(i, w.h[j])), a.c(i, j));
      CHECK(lhs == rhs);
    }
  }
}

}  // namespace

TEST_CASE("group construction rejects bad tables") {
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), ConstructionError);
  CHECK_THROWS_AS(FiniteGroup({{1, 0}, {0, 1}}), ConstructionError);
  CHECK_THROWS_AS(FiniteGroup(std::vector<std::vector<int>>{}), ConstructionError);
  CHECK_NOTHROW(FiniteGroup(std::vector<std::vector<int>>{{0}}));
}

TEST_CASE("conjugacy data examples") {
  auto s3 = catalogue::group("S3");
  const auto& cd = s3->conjugacy();
  std::vector<std::pair<int, int>> sc;
  for (std::size_t c = 0; c < cd.classes.size(); ++c) {
    sc.emplace_back(cd.classes[c].size(), cd.centralizers[c].size());
  }
  std::sort(sc.begin(), sc.end());
  CHECK(sc == std::vector<std::pair<int, int>>{{1, 6}, {2, 3}, {3, 2}});
  CHECK(catalogue::group("Q8")->num_classes() == 5);
  CHECK(catalogue::group("Z6")->num_classes() == 6);
  CHECK(catalogue::group("Z2xZ2")->num_classes() == 4);
}

TEST_CASE("conjugacy data matches brute force on the catalogue") {
  for (const auto& name : catalogue::group_names()) {
    auto g = catalogue::group(name);
    CAPTURE(name);
    const auto& cd = g->conjugacy();
    std::vector<int> sizes;
    std::vector<int> seen(g->order(), 0);
    for (std::size_t c = 0; c < cd.classes.size(); ++c) {
      sizes.push_back(static_cast<int>(cd.classes[c].size()));
      CHECK(cd.classes[c].size() * cd.centralizers[c].size() == static_cast<std::size_t>(g->order()));
      for (int x : cd.classes[c]) ++seen[x];
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == class_sizes_brute(*g));
    if (g->is_abelian()) CHECK(g->num_classes() == g->order());
  }
}

TEST_CASE("extension to weak action examples") {
  SUBCASE("split A3 in S3 with homomorphic section is strict") {
    auto ext = catalogue::extension("A3-S3");
    // the smallest transposition is an involution, so the default section is a homomorphism
    auto wa = extension_to_weak_action(ext);
    CHECK(wa.is_strict());
  }
  SUBCASE("Z2 in Z4") {
    auto ext = catalogue::extension("Z2-Z4");
    CHECK(ext.s(1) == 1);
    auto wa = extension_to_weak_action(ext);
    CHECK(wa.c(1, 1) == ext.kernel_index(2));
    CHECK(wa.c(1, 1) == 1);
  }
  SUBCASE("trivial extension") {
    auto ext = catalogue::trivial_extension(catalogue::group("S3"));
    auto wa = extension_to_weak_action(ext);
    CHECK(wa.J()->order() == 1);
    for (int g = 0; g < 6; ++g) CHECK(wa.rho(0, g) == g);
  }
  SUBCASE("direct product G x J") {
    auto s3 = catalogue::group("S3");
    auto prod = direct_product(*s3, *catalogue::group("Z2"), "S3xZ2");
    std::vector<int> kernel;
    for (int a = 0; a < 6; ++a) kernel.push_back(2 * a);
    GroupExtension ext(prod, kernel);
    auto wa = extension_to_weak_action(ext);
    CHECK(wa.is_strict());
    for (int g = 0; g < 6; ++g) CHECK(wa.rho(1, g) == g);
  }
  SUBCASE("non-normalized section rejected") {
    auto ext = catalogue::extension("Z2-Z4");
    CHECK_THROWS_AS(ext.with_section({2, 1}), ConstructionError);
  }
}

TEST_CASE("weak action to extension examples") {
  auto s3 = catalogue::group("S3");
  auto h = weak_action_to_extension(catalogue::weak_action("Z2-on-Z3-inversion"));
  auto f = find_group_isomorphism(*h.H(), *s3);
  REQUIRE(f.has_value());
  CHECK(is_isomorphism(*h.H(), *s3, *f));

  auto triv = weak_action_to_extension(catalogue::weak_action("Z2-on-Z3-trivial"));
  CHECK(triv.H()->is_abelian());
  CHECK(find_group_isomorphism(*triv.H(), *catalogue::group("Z6")).has_value());

  auto z4 = weak_action_to_extension(catalogue::weak_action("Z2-on-Z2-nonsplit"));
  auto orders = order_profile(*z4.H());
  CHECK(orders.count(4) == 2);
  CHECK(find_group_isomorphism(*z4.H(), *catalogue::group("Z4")).has_value());
  CHECK_FALSE(find_group_isomorphism(*z4.H(), *catalogue::group("Z2xZ2")).has_value());

  for (int j = 0; j < z4.J()->order(); ++j) CHECK(z4.s(j) == z4.G()->order() * j);
}

TEST_CASE("weak action validation") {
  auto z2 = catalogue::group("Z2");
  auto z3 = catalogue::group("Z3");
  // rho_1 not an automorphism
  CHECK_THROWS_AS(WeakAction(z2, z3, {{0, 1, 2}, {0, 1, 1}}, {0, 0, 0, 0}), ConstructionError);
  // rho_1^2 = id but c_{1,1} must then be central; c(0,0) != 1
  CHECK_THROWS_AS(WeakAction(z2, z3, {{0, 1, 2}, {0, 2, 1}}, {1, 0, 0, 0}), ConstructionError);
  // inversion squared is identity, so c_{1,1} = 1 is forced up to centre; 1 in Z3 breaks the cocycle
  CHECK_THROWS_AS(WeakAction(z2, z3, {{0, 1, 2}, {0, 2, 1}}, {0, 0, 0, 1}), ConstructionError);
}

TEST_CASE("weak action isomorphism examples") {
  auto inv = catalogue::weak_action("Z2-on-Z3-inversion");
  auto self = weak_actions_isomorphic(inv, inv);
  REQUIRE(self.has_value());
  CHECK(std::all_of(self->h.begin(), self->h.end(), [](int x) { return x == 0; }));
  CHECK_FALSE(weak_actions_isomorphic(inv, catalogue::weak_action("Z2-on-Z3-trivial")).has_value());

  auto ext = catalogue::extension("A3-S3");
  const int t = ext.coset(1)[2];
  auto other = ext.with_section({0, t});
  auto w1 = extension_to_weak_action(ext);
  auto w2 = extension_to_weak_action(other);
  auto iso = weak_actions_isomorphic(w1, w2);
  REQUIRE(iso.has_value());
  check_weak_action_iso(w1, w2, *iso);
}

TEST_CASE("section changes give isomorphic weak actions") {
  for (const auto& name : catalogue::extension_names()) {
    auto ext = catalogue::extension(name);
    if (ext.H()->order() > 12) continue;
    CAPTURE(name);
    auto base = extension_to_weak_action(ext);
    // largest element of every non-identity coset
    std::vector<int> sec{0};
    for (int j = 1; j < ext.J()->order(); ++j) sec.push_back(ext.coset(j).back());
    auto alt = extension_to_weak_action(ext.with_section(sec));
    auto iso = weak_actions_isomorphic(base, alt);
    REQUIRE(iso.has_value());
    check_weak_action_iso(base, alt, *iso);
  }
}

TEST_CASE("Schreier round trip A over the extension catalogue") {
  for (const auto& name : catalogue::extension_names()) {
    auto ext = catalogue::extension(name);
    CAPTURE(name);
    auto wa = extension_to_weak_action(ext);
    auto back = weak_action_to_extension(wa);
    CHECK(order_profile(*back.H()) == order_profile(*ext.H()));
    auto f = find_group_isomorphism(*back.H(), *ext.H());
    REQUIRE(f.has_value());
    CHECK(is_isomorphism(*back.H(), *ext.H(), *f));
  }
}

TEST_CASE("Schreier round trip B over catalogue weak actions") {
  for (const auto& name : catalogue::weak_action_names()) {
    auto wa = catalogue::weak_action(name);
    CAPTURE(name);
    auto again = extension_to_weak_action(weak_action_to_extension(wa));
    auto iso = weak_actions_isomorphic(wa, again);
    REQUIRE(iso.has_value());
    check_weak_action_iso(wa, again, *iso);
  }
}

TEST_CASE("extension structure") {
  for (const auto& name : catalogue::extension_names()) {
    auto ext = catalogue::extension(name);
    CAPTURE(name);
    const auto& H = *ext.H();
    CHECK(ext.G()->order() * ext.J()->order() == H.order());
    CHECK(ext.s(0) == 0);
    for (int j = 0; j < ext.J()->order(); ++j) CHECK(ext.pi(ext.s(j)) == j);
    for (int g = 0; g < ext.G()->order(); ++g) CHECK(ext.pi(ext.to_H(g)) == 0);
    for (int h = 0; h < H.order(); ++h) CHECK((ext.kernel_index(h) >= 0) == (ext.pi(h) == 0));
  }
  CHECK_THROWS_AS(GroupExtension(catalogue::group("S3"), {0, 1}), ConstructionError);
  CHECK_THROWS_AS(catalogue::extension("nope"), UsageError);
  CHECK_THROWS_AS(catalogue::group("nope"), UsageError);
}

TEST_CASE("group isomorphism search") {
  CHECK_FALSE(find_group_isomorphism(*catalogue::group("D4"), *catalogue::group("Q8")).has_value());
  auto f = find_group_isomorphism(*catalogue::group("Z6"), *direct_product(*catalogue::group("Z2"), *catalogue::group("Z3")));
  REQUIRE(f.has_value());
  CHECK(is_isomorphism(*catalogue::group("Z6"), *direct_product(*catalogue::group("Z2"), *catalogue::group("Z3")), *f));
  CHECK_FALSE(find_group_isomorphism(*catalogue::group("Z6"), *catalogue::group("S3")).has_value());
}
