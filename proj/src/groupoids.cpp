#include "equidouble/groupoids.hpp"

#include <algorithm>
#include <map>

#include "equidouble/errors.hpp"

namespace equidouble {

ActionGroupoid::ActionGroupoid(int points, GroupPtr group, std::vector<std::vector<int>> action)
    : points_(points), group_(std::move(group)), action_(std::move(action)) {
  const FiniteGroup& G = *group_;
  if (points_ < 0) throw ConstructionError("negative point count");
  if (static_cast<int>(action_.size()) != G.order()) throw ConstructionError("action needs one row per group element");
  for (const auto& row : action_) {
    if (static_cast<int>(row.size()) != points_) throw ConstructionError("action row has the wrong length");
    for (int m : row) {
      if (m < 0 || m >= points_) throw ConstructionError("action image out of range");
    }
  }
  for (int m = 0; m < points_; ++m) {
    if (action_[0][m] != m) throw ConstructionError("identity does not act trivially");
  }
  for (int g = 0; g < G.order(); ++g) {
    for (int h = 0; h < G.order(); ++h) {
      for (int m = 0; m < points_; ++m) {
        if (action_[G.mul(g, h)][m] != action_[g][action_[h][m]]) {
          throw ConstructionError("action is not compatible with the group law");
        }
      }
    }
  }
}

ActionGroupoid conjugation_groupoid(const GroupPtr& g) {
  const int n = g->order();
  std::vector<std::vector<int>> act(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int m = 0; m < n; ++m) act[x][m] = g->conj(x, m);
  }
  return ActionGroupoid(n, g, std::move(act));
}

ActionGroupoid point_groupoid(const GroupPtr& g) {
  return ActionGroupoid(1, g, std::vector<std::vector<int>>(g->order(), std::vector<int>{0}));
}

ActionGroupoid conjugation_groupoid(const GroupPtr& h, const std::vector<int>& h_elements, const GroupPtr& g,
                                    const std::vector<int>& g_to_h) {
  std::map<int, int> index;
  for (std::size_t i = 0; i < h_elements.size(); ++i) index[h_elements[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> act(g->order(), std::vector<int>(h_elements.size()));
  for (int x = 0; x < g->order(); ++x) {
    for (std::size_t m = 0; m < h_elements.size(); ++m) {
      auto it = index.find(h->conj(g_to_h[x], h_elements[m]));
      if (it == index.end()) throw ConstructionError("element subset is not closed under conjugation");
      act[x][m] = it->second;
    }
  }
  return ActionGroupoid(static_cast<int>(h_elements.size()), g, std::move(act));
}

std::vector<Orbit> orbits(const ActionGroupoid& gamma) {
  const FiniteGroup& G = *gamma.group();
  std::vector<int> seen(gamma.points(), -1);
  std::vector<Orbit> out;
  for (int m0 = 0; m0 < gamma.points(); ++m0) {
    if (seen[m0] >= 0) continue;
    Orbit o;
    std::map<int, int> rep;
    for (int g = 0; g < G.order(); ++g) {
      int m = gamma.act(g, m0);
      if (!rep.count(m)) rep[m] = g;
      if (m == m0) o.stabilizer.push_back(g);
    }
    for (auto [m, g] : rep) {
      seen[m] = static_cast<int>(out.size());
      o.points.push_back(m);
      o.coset_rep.push_back(g);
    }
    out.push_back(std::move(o));
  }
  return out;
}

Rational groupoid_cardinality(const ActionGroupoid& gamma) {
  Rational total = 0;
  for (const auto& o : orbits(gamma)) total += make_rational(1, static_cast<long>(o.stabilizer.size()));
  const Rational check = make_rational(gamma.points(), gamma.group()->order());
  if (total != check) throw ArithmeticError("orbit-stabilizer cross-check failed for groupoid cardinality");
  return total;
}

InertiaGroupoid inertia_groupoid(const ActionGroupoid& gamma) {
  const FiniteGroup& G = *gamma.group();
  std::vector<std::pair<int, int>> objects;
  for (int m = 0; m < gamma.points(); ++m) {
    for (int g = 0; g < G.order(); ++g) {
      if (gamma.act(g, m) == m) objects.emplace_back(m, g);
    }
  }
  std::map<std::pair<int, int>, int> index;
  for (std::size_t i = 0; i < objects.size(); ++i) index[objects[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> act(G.order(), std::vector<int>(objects.size()));
  for (int h = 0; h < G.order(); ++h) {
    for (std::size_t i = 0; i < objects.size(); ++i) {
      auto [m, g] = objects[i];
      act[h][i] = index.at({gamma.act(h, m), G.conj(h, g)});
    }
  }
  return InertiaGroupoid{ActionGroupoid(static_cast<int>(objects.size()), gamma.group(), std::move(act)),
                         std::move(objects)};
}

namespace {

void fill_offsets(GroupoidRep& rep) {
  rep.offsets.assign(rep.dims.size(), 0);
  for (std::size_t m = 1; m < rep.dims.size(); ++m) rep.offsets[m] = rep.offsets[m - 1] + rep.dims[m - 1];
}

}  // namespace

void check_groupoid_rep(const ActionGroupoid& gamma, const GroupoidRep& rep) {
  const FiniteGroup& G = *gamma.group();
  if (static_cast<int>(rep.dims.size()) != gamma.points()) throw ConstructionError("rep needs one dimension per point");
  const std::size_t n = rep.total_dim();
  if (static_cast<int>(rep.action.size()) != G.order()) throw ConstructionError("rep needs one matrix per element");
  for (const auto& a : rep.action) {
    if (a.rows() != n || a.cols() != n) throw DimensionError("rep action matrix has the wrong shape");
  }
  if (!(rep.action[0] == ExactMatrix::identity(n))) throw ConstructionError("rho(1) is not the identity");
  for (int g = 0; g < G.order(); ++g) {
    for (int m = 0; m < gamma.points(); ++m) {
      const int gm = gamma.act(g, m);
      for (int c = rep.offsets[m]; c < rep.offsets[m] + rep.dims[m]; ++c) {
        for (std::size_t r = 0; r < n; ++r) {
          const bool inside = static_cast<int>(r) >= rep.offsets[gm] && static_cast<int>(r) < rep.offsets[gm] + rep.dims[gm];
          if (!inside && !rep.action[g](r, c).is_zero()) throw ConstructionError("rho(g) leaves the block V_{g.m}");
        }
      }
    }
    for (int h = 0; h < G.order(); ++h) {
      if (!(rep.action[g] * rep.action[h] == rep.action[G.mul(g, h)])) {
        throw ConstructionError("rho(g) rho(h) != rho(gh)");
      }
    }
  }
}

std::vector<GroupoidRep> simple_objects(const ActionGroupoid& gamma) {
  const FiniteGroup& G = *gamma.group();
  const auto orbs = orbits(gamma);
  std::vector<int> orbit_of(gamma.points());
  std::vector<int> pos_in_orbit(gamma.points());
  for (std::size_t o = 0; o < orbs.size(); ++o) {
    for (std::size_t i = 0; i < orbs[o].points.size(); ++i) {
      orbit_of[orbs[o].points[i]] = static_cast<int>(o);
      pos_in_orbit[orbs[o].points[i]] = static_cast<int>(i);
    }
  }
  std::vector<GroupoidRep> out;
  for (std::size_t o = 0; o < orbs.size(); ++o) {
    const Orbit& orb = orbs[o];
    const Subgroup stab = make_subgroup(G, orb.stabilizer);
    const CharacterTable table = character_table(stab.group);
    for (int r = 0; r < table.size(); ++r) {
      const auto mats = irrep_matrices(table, r);
      const int d = table.degrees[r];
      GroupoidRep rep;
      rep.orbit = static_cast<int>(o);
      rep.irrep = r;
      rep.dims.assign(gamma.points(), 0);
      for (int m : orb.points) rep.dims[m] = d;
      fill_offsets(rep);
      const std::size_t n = rep.total_dim();
      for (int g = 0; g < G.order(); ++g) {
        ExactMatrix a(n, n);
        for (std::size_t i = 0; i < orb.points.size(); ++i) {
          const int m = orb.points[i];
          const int gm = gamma.act(g, m);
          const int xm = orb.coset_rep[i];
          const int xgm = orb.coset_rep[pos_in_orbit[gm]];
          const int s = stab.from_parent(G.mul(G.mul(G.inv(xgm), g), xm));
          if (s < 0) throw ArithmeticError("coset representative bookkeeping failed");
          const ExactMatrix& block = mats[s];
          for (int rr = 0; rr < d; ++rr) {
            for (int cc = 0; cc < d; ++cc) a(rep.offsets[gm] + rr, rep.offsets[m] + cc) = block(rr, cc);
          }
        }
        rep.action.push_back(std::move(a));
      }
      out.push_back(std::move(rep));
    }
  }
  return out;
}

GroupoidRep regular_rep(const ActionGroupoid& gamma) {
  const FiniteGroup& G = *gamma.group();
  const int ng = G.order();
  const int np = gamma.points();
  GroupoidRep rep;
  rep.dims.assign(np, ng);
  fill_offsets(rep);
  // position of basis vector (n,h) inside V_{h.n}: index by h
  const std::size_t total = static_cast<std::size_t>(np) * ng;
  auto slot = [&](int n, int h) { return rep.offsets[gamma.act(h, n)] + h; };
  for (int g = 0; g < ng; ++g) {
    ExactMatrix a(total, total);
    for (int n = 0; n < np; ++n) {
      for (int h = 0; h < ng; ++h) a(slot(n, G.mul(g, h)), slot(n, h)) = 1;
    }
    rep.action.push_back(std::move(a));
  }
  return rep;
}

ClassFunction character(const ActionGroupoid& gamma, const GroupoidRep& rep) {
  const FiniteGroup& G = *gamma.group();
  ClassFunction f;
  f.values.assign(gamma.points(), std::vector<Cyclotomic>(G.order()));
  for (int m = 0; m < gamma.points(); ++m) {
    for (int g = 0; g < G.order(); ++g) {
      if (gamma.act(g, m) != m) continue;
      Cyclotomic t;
      for (int i = rep.offsets[m]; i < rep.offsets[m] + rep.dims[m]; ++i) t += rep.action[g](i, i);
      f.values[m][g] = t;
    }
  }
  return f;
}

Cyclotomic pairing(const ActionGroupoid& gamma, const ClassFunction& f, const ClassFunction& fp) {
  const FiniteGroup& G = *gamma.group();
  Cyclotomic total;
  for (int m = 0; m < gamma.points(); ++m) {
    for (int g = 0; g < G.order(); ++g) {
      const Cyclotomic& a = f.values[m][G.inv(g)];
      const Cyclotomic& b = fp.values[m][g];
      if (!a.is_zero() && !b.is_zero()) total += a * b;
    }
  }
  return total / Cyclotomic(G.order());
}

}  // namespace equidouble
