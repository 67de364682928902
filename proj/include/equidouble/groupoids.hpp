#pragma once

#include <utility>
#include <vector>

#include "equidouble/character_table.hpp"
#include "equidouble/groups.hpp"
#include "equidouble/matrix.hpp"

namespace equidouble {

/// Finite G-set M viewed as the action groupoid M//G. action[g][m] = g.m.
class ActionGroupoid {
 public:
  ActionGroupoid(int points, GroupPtr group, std::vector<std::vector<int>> action);

  int points() const { return points_; }
  const GroupPtr& group() const { return group_; }
  int act(int g, int m) const { return action_[g][m]; }
  const std::vector<std::vector<int>>& action() const { return action_; }

 private:
  int points_;
  GroupPtr group_;
  std::vector<std::vector<int>> action_;
};

/// G acting on itself by conjugation.
ActionGroupoid conjugation_groupoid(const GroupPtr& g);
/// Single point with trivial action.
ActionGroupoid point_groupoid(const GroupPtr& g);
/// Subset of H (closed under G-conjugation) with G <= H acting by conjugation;
/// points are indexed in the order given.
ActionGroupoid conjugation_groupoid(const GroupPtr& h, const std::vector<int>& h_elements, const GroupPtr& g,
                                    const std::vector<int>& g_to_h);

struct Orbit {
  std::vector<int> points;      // sorted, points[0] is the representative
  std::vector<int> stabilizer;  // group elements fixing the representative, sorted
  /// coset_rep[i]: smallest g with g.points[0] = points[i]
  std::vector<int> coset_rep;
};

/// Orbits ordered by smallest point.
std::vector<Orbit> orbits(const ActionGroupoid& gamma);

/// Sum over orbits of 1/|stabilizer|; cross-checked against |M|/|G|.
Rational groupoid_cardinality(const ActionGroupoid& gamma);

struct InertiaGroupoid {
  ActionGroupoid groupoid;
  std::vector<std::pair<int, int>> objects;  // (m, g) with g.m = m, lexicographic
};

/// Objects (m,g) with g.m = m, h.(m,g) = (h.m, h g h^{-1}).
InertiaGroupoid inertia_groupoid(const ActionGroupoid& gamma);

/// Representation of M//G: a vector space V_m per point and, for each g, a
/// block matrix mapping V_m to V_{g.m}. The total space is the direct sum in
/// point order.
struct GroupoidRep {
  std::vector<int> dims;
  std::vector<int> offsets;  // offsets[m] = sum of dims below m
  std::vector<ExactMatrix> action;
  int orbit = -1;  // labels for simple objects
  int irrep = -1;

  int total_dim() const { return offsets.empty() ? 0 : offsets.back() + dims.back(); }
};

/// Validates unit, multiplicativity and block support against gamma.
void check_groupoid_rep(const ActionGroupoid& gamma, const GroupoidRep& rep);

/// Induced from orbit representative stabilizer irreps:
/// rho(g) sends V_m to V_{g.m} by rho_S(x_{g.m}^{-1} g x_m). Ordered by orbit,
/// then by character-table row of the stabilizer.
std::vector<GroupoidRep> simple_objects(const ActionGroupoid& gamma);

/// K(M) (x) K[G]: basis (n, h) lying in V_{h.n}, g.(n,h) = (n, gh).
GroupoidRep regular_rep(const ActionGroupoid& gamma);

/// values[m][g]; zero unless g.m = m.
struct ClassFunction {
  std::vector<std::vector<Cyclotomic>> values;
};

/// chi(m,g) = Tr(rho(g) P(m)).
ClassFunction character(const ActionGroupoid& gamma, const GroupoidRep& rep);

/// <f,f'> = 1/|G| sum_{g,m} f(m,g^{-1}) f'(m,g).
Cyclotomic pairing(const ActionGroupoid& gamma, const ClassFunction& f, const ClassFunction& fp);

}  // namespace equidouble
