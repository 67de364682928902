#include "equidouble/catalogue.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "equidouble/errors.hpp"

namespace equidouble::catalogue {

namespace {

GroupPtr quaternion_group() {
  // index 2u + s: unit u in {1, i, j, k}, s = 1 for the negative sign
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2;
      const int ub = b / 2;
      const int s = (a % 2) ^ (b % 2) ^ unit_sign[ua][ub];
      t[a][b] = 2 * unit_prod[ua][ub] + s;
    }
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::vector<std::string>{"1", "-1", "i", "-i", "j", "-j", "k", "-k"},
                                       "Q8");
}

int smallest_of_order(const FiniteGroup& g, int order) {
  for (int x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == order) return x;
  }
  throw ConstructionError("no element of the requested order");
}

const std::map<std::string, GroupPtr>& groups() {
  static const std::map<std::string, GroupPtr> table = [] {
    std::map<std::string, GroupPtr> m;
    for (int n : {1, 2, 3, 4, 6}) m["Z" + std::to_string(n)] = cyclic_group(n);
    auto z2 = cyclic_group(2);
    m["Z2xZ2"] = direct_product(*z2, *z2, "Z2xZ2");
    m["S3"] = permutation_group({{1, 0, 2}, {1, 2, 0}}, "S3");
    m["D4"] = permutation_group({{1, 2, 3, 0}, {0, 3, 2, 1}}, "D4");
    m["Q8"] = quaternion_group();
    m["A4"] = permutation_group({{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4");
    m["S4"] = permutation_group({{1, 0, 2, 3}, {1, 2, 3, 0}}, "S4");
    return m;
  }();
  return table;
}

}  // namespace

std::vector<int> commutator_subgroup(const FiniteGroup& g) {
  std::vector<int> comms;
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) comms.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  }
  return g.generated_subgroup(comms);
}

GroupExtension trivial_extension(const GroupPtr& g) {
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return GroupExtension(g, all, {}, g->name() + "-" + g->name());
}

std::vector<std::string> group_names() {
  return {"Z1", "Z2", "Z3", "Z4", "Z6", "Z2xZ2", "S3", "D4", "Q8", "A4", "S4"};
}

std::vector<std::string> extension_names() {
  return {"A3-S3", "Z2-Z4", "Z4-D4", "Z4-Q8", "Z2-Q8", "A4-S4", "V4-A4", "Z3-Z6", "Z2-Z2xZ2", "Z2-D4", "S3-S3"};
}

std::vector<std::string> presentation_names() { return {"S3sphere", "S2xS1", "T2", "T3", "Sigma_g", "circle"}; }

std::vector<std::string> nerve_names() { return {"circle3", "point"}; }

std::vector<std::string> weak_action_names() {
  return {"Z2-on-Z3-inversion", "Z2-on-Z3-trivial", "Z2-on-Z2-nonsplit", "Z2-on-Z2xZ2-swap"};
}

GroupPtr group(const std::string& name) {
  auto it = groups().find(name);
  if (it == groups().end()) throw UsageError("unknown group '" + name + "'");
  return it->second;
}

GroupExtension extension(const std::string& name) {
  auto make = [&](const std::string& h, std::vector<int> kernel) { return GroupExtension(group(h), std::move(kernel), {}, name); };
  if (name == "A3-S3") return make("S3", commutator_subgroup(*group("S3")));
  if (name == "Z2-Z4") return make("Z4", {0, 2});
  if (name == "Z4-D4") {
    auto d4 = group("D4");
    return make("D4", d4->generated_subgroup({smallest_of_order(*d4, 4)}));
  }
  if (name == "Z4-Q8") return make("Q8", {0, 1, 2, 3});
  if (name == "Z2-Q8") return make("Q8", {0, 1});
  if (name == "A4-S4") return make("S4", commutator_subgroup(*group("S4")));
  if (name == "V4-A4") return make("A4", commutator_subgroup(*group("A4")));
  if (name == "Z3-Z6") return make("Z6", {0, 2, 4});
  if (name == "Z2-Z2xZ2") return make("Z2xZ2", {0, 1});
  if (name == "Z2-D4") return make("D4", commutator_subgroup(*group("D4")));
  if (name == "S3-S3") return trivial_extension(group("S3"));
  throw UsageError("unknown extension '" + name + "'");
}

Presentation presentation(const std::string& name, int parameter) {
  if (name == "S3sphere") return sphere_presentation();
  if (name == "S2xS1") return s2xs1_presentation();
  if (name == "T2") return torus_presentation();
  if (name == "T3") return three_torus_presentation();
  if (name == "Sigma_g") return surface_presentation(parameter);
  if (name == "circle") return circle_presentation();
  throw UsageError("unknown presentation '" + name + "'");
}

CoverNerve nerve(const std::string& name, int parameter) {
  if (name == "circle3") return circle_nerve(parameter);
  if (name == "point") return point_nerve();
  throw UsageError("unknown nerve '" + name + "'");
}

WeakAction weak_action(const std::string& name) {
  auto z2 = group("Z2");
  auto z3 = group("Z3");
  if (name == "Z2-on-Z3-inversion") return WeakAction(z2, z3, {{0, 1, 2}, {0, 2, 1}}, {0, 0, 0, 0});
  if (name == "Z2-on-Z3-trivial") return WeakAction(z2, z3, {{0, 1, 2}, {0, 1, 2}}, {0, 0, 0, 0});
  if (name == "Z2-on-Z2-nonsplit") return WeakAction(z2, z2, {{0, 1}, {0, 1}}, {0, 0, 0, 1});
  if (name == "Z2-on-Z2xZ2-swap") return WeakAction(z2, group("Z2xZ2"), {{0, 1, 2, 3}, {0, 2, 1, 3}}, {0, 0, 0, 0});
  throw UsageError("unknown weak action '" + name + "'");
}

}  // namespace equidouble::catalogue
