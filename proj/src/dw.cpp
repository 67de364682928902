#include "equidouble/dw.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "equidouble/errors.hpp"

namespace equidouble {

void validate(const Presentation& p) {
  if (p.generators < 0) throw ConstructionError("negative generator count");
  for (const auto& word : p.relations) {
    for (int letter : word) {
      if (letter == 0 || std::abs(letter) > p.generators) {
        throw ConstructionError("relation letter " + std::to_string(letter) + " out of range");
      }
    }
  }
}

namespace {

int eval_word(const std::vector<int>& word, const std::vector<int>& images, const FiniteGroup& g) {
  int acc = 0;
  for (int letter : word) {
    int x = images[std::abs(letter) - 1];
    acc = g.mul(acc, letter > 0 ? x : g.inv(x));
  }
  return acc;
}

std::uint64_t checked_product(const std::vector<std::uint64_t>& factors, std::uint64_t budget, const char* what) {
  std::uint64_t total = 1;
  for (auto f : factors) {
    if (f != 0 && total > budget / f) {
      throw ResourceError(std::string(what) + ": candidate count exceeds budget " + std::to_string(budget));
    }
    total *= f;
  }
  if (total > budget) {
    throw ResourceError(std::string(what) + ": candidate count " + std::to_string(total) + " exceeds budget " +
                        std::to_string(budget));
  }
  return total;
}

}  // namespace

std::vector<std::vector<int>> enumerate_homs(const Presentation& p, const FiniteGroup& g, std::uint64_t budget,
                                             const std::vector<std::vector<int>>& allowed) {
  validate(p);
  const int r = p.generators;
  std::vector<std::vector<int>> choices(r);
  std::vector<std::uint64_t> sizes;
  for (int k = 0; k < r; ++k) {
    if (!allowed.empty() && !allowed[k].empty()) {
      choices[k] = allowed[k];
    } else {
      for (int x = 0; x < g.order(); ++x) choices[k].push_back(x);
    }
    sizes.push_back(choices[k].size());
  }
  checked_product(sizes, budget, "Hom enumeration (|G|^r)");

  // relations become checkable once their largest generator is assigned
  std::vector<std::vector<int>> due(r + 1);
  for (std::size_t w = 0; w < p.relations.size(); ++w) {
    int top = 0;
    for (int letter : p.relations[w]) top = std::max(top, std::abs(letter));
    due[top].push_back(static_cast<int>(w));
  }
  std::vector<std::vector<int>> out;
  for (int w : due[0]) {
    if (eval_word(p.relations[w], {}, g) != 0) return out;
  }
  std::vector<int> images(r);
  std::function<void(int)> dfs = [&](int k) {
    if (k == r) {
      out.push_back(images);
      return;
    }
    for (int x : choices[k]) {
      images[k] = x;
      bool ok = true;
      for (int w : due[k + 1]) {
        if (eval_word(p.relations[w], images, g) != 0) {
          ok = false;
          break;
        }
      }
      if (ok) dfs(k + 1);
    }
  };
  dfs(0);
  return out;
}

std::uint64_t count_homs(const Presentation& p, const FiniteGroup& g, std::uint64_t budget) {
  return enumerate_homs(p, g, budget).size();
}

Rational dw_invariant(const Presentation& p, const FiniteGroup& g, std::uint64_t budget) {
  return make_rational(static_cast<long>(count_homs(p, g, budget)), g.order());
}

namespace {

ActionGroupoid conjugation_on_tuples(const std::vector<std::vector<int>>& tuples, const GroupPtr& acting,
                                     const FiniteGroup& ambient, const std::function<int(int)>& embed) {
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < tuples.size(); ++i) index[tuples[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> act(acting->order(), std::vector<int>(tuples.size()));
  for (int x = 0; x < acting->order(); ++x) {
    const int hx = embed(x);
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      std::vector<int> t = tuples[i];
      for (auto& y : t) y = ambient.conj(hx, y);
      auto it = index.find(t);
      if (it == index.end()) throw ArithmeticError("conjugation left the tuple set");
      act[x][i] = it->second;
    }
  }
  return ActionGroupoid(static_cast<int>(tuples.size()), acting, std::move(act));
}

}  // namespace

ActionGroupoid hom_groupoid(const Presentation& p, const GroupPtr& g, std::uint64_t budget) {
  auto homs = enumerate_homs(p, *g, budget);
  return conjugation_on_tuples(homs, g, *g, [](int x) { return x; });
}

std::uint64_t surface_state_dim(int genus, const GroupPtr& g, std::uint64_t budget) {
  return orbits(hom_groupoid(surface_presentation(genus), g, budget)).size();
}

TwistHom make_twist_hom(const Presentation& p, const FiniteGroup& j, std::vector<int> images) {
  validate(p);
  if (static_cast<int>(images.size()) != p.generators) throw ConstructionError("twist needs one J-element per generator");
  for (int x : images) {
    if (x < 0 || x >= j.order()) throw ConstructionError("twist image out of range");
  }
  for (const auto& w : p.relations) {
    if (eval_word(w, images, j) != 0) throw ConstructionError("twist does not respect a relation");
  }
  return TwistHom{std::move(images)};
}

TwistedBundleGroupoid twisted_bundle_groupoid(const Presentation& p, const GroupExtension& ext, const TwistHom& omega,
                                              std::uint64_t budget) {
  if (static_cast<int>(omega.images.size()) != p.generators) throw UsageError("twist does not match the presentation");
  std::vector<std::vector<int>> allowed;
  for (int j : omega.images) allowed.push_back(ext.coset(j));
  auto lifts = enumerate_homs(p, *ext.H(), budget, allowed);
  auto groupoid = conjugation_on_tuples(lifts, ext.G(), *ext.H(), [&](int x) { return ext.to_H(x); });
  return TwistedBundleGroupoid{std::move(groupoid), std::move(lifts)};
}

void validate(const CoverNerve& nerve, const FiniteGroup& j) {
  std::map<std::pair<int, int>, int> label;
  for (const auto& e : nerve.edges) {
    if (e.from < 0 || e.from >= nerve.vertices || e.to < 0 || e.to >= nerve.vertices) {
      throw ConstructionError("nerve edge endpoint out of range");
    }
    if (e.j < 0 || e.j >= j.order()) throw ConstructionError("nerve edge label out of range");
    if (e.from == e.to && e.j != 0) throw ConstructionError("j_aa must be 1");
    if (!label.emplace(std::make_pair(e.from, e.to), e.j).second) throw ConstructionError("duplicate nerve edge");
  }
  for (const auto& t : nerve.triangles) {
    auto ab = label.find({t[0], t[1]});
    auto bc = label.find({t[1], t[2]});
    auto ac = label.find({t[0], t[2]});
    if (ab == label.end() || bc == label.end() || ac == label.end()) {
      throw ConstructionError("triangle refers to a missing edge");
    }
    if (j.mul(ab->second, bc->second) != ac->second) throw ConstructionError("J-cocycle condition fails on a triangle");
  }
}

CechResult twisted_cech_h1(const CoverNerve& nerve, const WeakAction& wa, std::uint64_t budget) {
  const FiniteGroup& G = *wa.G();
  validate(nerve, *wa.J());
  const std::size_t ne = nerve.edges.size();
  checked_product(std::vector<std::uint64_t>(ne, G.order()), budget, "Cech cocycle enumeration (|G|^edges)");

  std::map<std::pair<int, int>, int> edge_index;
  for (std::size_t e = 0; e < ne; ++e) edge_index[{nerve.edges[e].from, nerve.edges[e].to}] = static_cast<int>(e);
  struct TriangleCheck {
    int ab, bc, ac;
  };
  std::vector<std::vector<TriangleCheck>> due(ne);
  for (const auto& t : nerve.triangles) {
    TriangleCheck tc{edge_index.at({t[0], t[1]}), edge_index.at({t[1], t[2]}), edge_index.at({t[0], t[2]})};
    due[std::max({tc.ab, tc.bc, tc.ac})].push_back(tc);
  }
  auto holds = [&](const std::vector<int>& g, const TriangleCheck& tc) {
    const int jab = nerve.edges[tc.ab].j;
    const int jbc = nerve.edges[tc.bc].j;
    return G.mul(G.mul(g[tc.ab], wa.rho(jab, g[tc.bc])), wa.c(jab, jbc)) == g[tc.ac];
  };

  std::vector<std::vector<int>> cocycles;
  std::vector<int> g(ne);
  std::function<void(std::size_t)> dfs = [&](std::size_t e) {
    if (e == ne) {
      cocycles.push_back(g);
      return;
    }
    for (int x = 0; x < G.order(); ++x) {
      g[e] = x;
      bool ok = true;
      for (const auto& tc : due[e]) {
        if (!holds(g, tc)) {
          ok = false;
          break;
        }
      }
      if (ok) dfs(e + 1);
    }
  };
  dfs(0);

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < cocycles.size(); ++i) index[cocycles[i]] = static_cast<int>(i);
  const std::vector<int> gens = G.generators();
  // gauge move by k at vertex a
  auto move = [&](const std::vector<int>& cur, int a, int k) {
    std::vector<int> next = cur;
    for (std::size_t e = 0; e < ne; ++e) {
      const auto& ed = nerve.edges[e];
      int x = next[e];
      if (ed.from == a) x = G.mul(k, x);
      if (ed.to == a) x = G.mul(x, G.inv(wa.rho(ed.j, k)));
      next[e] = x;
    }
    return next;
  };
  CechResult result;
  result.cocycles = cocycles.size();
  std::vector<bool> seen(cocycles.size(), false);
  for (std::size_t start = 0; start < cocycles.size(); ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    std::vector<int> queue{static_cast<int>(start)};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (int a = 0; a < nerve.vertices; ++a) {
        for (int k : gens) {
          auto it = index.find(move(cocycles[queue[q]], a, k));
          if (it == index.end()) throw ArithmeticError("coboundary action left the cocycle set");
          if (!seen[it->second]) {
            seen[it->second] = true;
            queue.push_back(it->second);
          }
        }
      }
    }
    // enumeration order is lexicographic, so the orbit's first member is its minimum
    result.classes.push_back(cocycles[start]);
  }
  result.count = result.classes.size();
  return result;
}

CoverNerve circle_nerve(int monodromy) {
  CoverNerve n;
  n.vertices = 3;
  n.edges = {{0, 1, 0}, {1, 2, 0}, {2, 0, monodromy}};
  return n;
}

CoverNerve point_nerve() {
  CoverNerve n;
  n.vertices = 1;
  return n;
}

Presentation sphere_presentation() { return {}; }

Presentation s2xs1_presentation() { return {1, {}}; }

Presentation torus_presentation() { return {2, {{1, 2, -1, -2}}}; }

Presentation three_torus_presentation() { return {3, {{1, 2, -1, -2}, {1, 3, -1, -3}, {2, 3, -2, -3}}}; }

Presentation surface_presentation(int genus) {
  if (genus < 0) throw ConstructionError("genus must be non-negative");
  Presentation p;
  p.generators = 2 * genus;
  if (genus > 0) {
    std::vector<int> word;
    for (int i = 0; i < genus; ++i) {
      int a = 2 * i + 1;
      int b = 2 * i + 2;
      word.insert(word.end(), {a, b, -a, -b});
    }
    p.relations.push_back(std::move(word));
  }
  return p;
}

Presentation circle_presentation() { return {1, {}}; }

}  // namespace equidouble
