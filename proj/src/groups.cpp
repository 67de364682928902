#include "equidouble/groups.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "equidouble/errors.hpp"

namespace equidouble {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels, std::string name)
    : table_(std::move(table)), labels_(std::move(labels)), name_(std::move(name)) {
  const int n = order();
  if (n == 0) throw ConstructionError("group table is empty");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw ConstructionError("group table is not square");
    for (int x : row) {
      if (x < 0 || x >= n) throw ConstructionError("group table entry out of range");
    }
  }
  for (int a = 0; a < n; ++a) {
    if (table_[0][a] != a || table_[a][0] != a) throw ConstructionError("element 0 is not the identity");
  }
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] == 0) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0 || table_[inv_[a]][a] != 0) throw ConstructionError("element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = table_[a][b];
      for (int c = 0; c < n; ++c) {
        if (table_[ab][c] != table_[a][table_[b][c]]) {
          throw ConstructionError("table is not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                  std::to_string(c) + ")");
        }
      }
    }
  }
  if (labels_.empty()) {
    for (int a = 0; a < n; ++a) labels_.push_back(std::to_string(a));
  }
  if (static_cast<int>(labels_.size()) != n) throw ConstructionError("label count does not match group order");

  orders_.assign(n, 1);
  for (int a = 0; a < n; ++a) {
    int x = a;
    while (x != 0) {
      x = table_[x][a];
      ++orders_[a];
    }
    exponent_ = std::lcm(exponent_, orders_[a]);
  }
  conj_ = conjugacy_data(*this);
}

int FiniteGroup::power(int g, long k) const {
  long m = element_order(g);
  long e = ((k % m) + m) % m;
  int r = 0;
  for (long i = 0; i < e; ++i) r = mul(r, g);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a) {
    for (int b = a + 1; b < order(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& gens) const {
  std::vector<bool> in(order(), false);
  std::vector<int> members{0};
  in[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int g : gens) {
      int x = mul(members[i], g);
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> FiniteGroup::generators() const {
  std::vector<int> gens;
  std::vector<int> span{0};
  while (static_cast<int>(span.size()) < order()) {
    int next = 0;
    while (std::binary_search(span.begin(), span.end(), next)) ++next;
    gens.push_back(next);
    span = generated_subgroup(gens);
  }
  return gens;
}

ConjugacyData conjugacy_data(const FiniteGroup& g) {
  ConjugacyData d;
  const int n = g.order();
  d.class_of.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (d.class_of[a] >= 0) continue;
    const int c = static_cast<int>(d.classes.size());
    std::vector<int> cls;
    for (int x = 0; x < n; ++x) {
      int y = g.conj(x, a);
      if (d.class_of[y] < 0) {
        d.class_of[y] = c;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    std::vector<int> cent;
    for (int x = 0; x < n; ++x) {
      if (g.mul(x, a) == g.mul(a, x)) cent.push_back(x);
    }
    d.classes.push_back(std::move(cls));
    d.centralizers.push_back(std::move(cent));
  }
  return d;
}

bool same_table(const FiniteGroup& a, const FiniteGroup& b) { return a.table() == b.table(); }

GroupPtr cyclic_group(int n, std::string name) {
  if (n < 1) throw ConstructionError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  if (name.empty()) name = "Z" + std::to_string(n);
  return std::make_shared<FiniteGroup>(std::move(t), std::vector<std::string>{}, std::move(name));
}

GroupPtr permutation_group(const std::vector<std::vector<int>>& generators, std::string name) {
  if (generators.empty()) throw ConstructionError("permutation group needs a generator");
  const std::size_t deg = generators.front().size();
  std::vector<int> id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> seen{{id, 0}};
  // compose(p, q) = p after q
  auto compose = [](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& gen : generators) {
      if (gen.size() != deg) throw ConstructionError("permutation degree mismatch");
      auto x = compose(elems[i], gen);
      if (!seen.count(x)) {
        seen.emplace(x, 0);
        elems.push_back(std::move(x));
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  for (std::size_t i = 0; i < elems.size(); ++i) seen[elems[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = seen.at(compose(elems[a], elems[b]));
    std::string s = "[";
    for (std::size_t i = 0; i < deg; ++i) s += (i ? " " : "") + std::to_string(elems[a][i]);
    labels.push_back(s + "]");
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(labels), std::move(name));
}

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string name) {
  const int na = a.order();
  const int nb = b.order();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  std::vector<std::string> labels;
  for (int x = 0; x < na * nb; ++x) {
    for (int y = 0; y < na * nb; ++y) t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    labels.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(labels), std::move(name));
}

int Subgroup::from_parent(int h) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), h);
  if (it == to_parent.end() || *it != h) return -1;
  return static_cast<int>(it - to_parent.begin());
}

Subgroup make_subgroup(const FiniteGroup& parent, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != 0) throw ConstructionError("subgroup must contain the identity");
  Subgroup s;
  s.to_parent = elements;
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int idx = s.from_parent(parent.mul(elements[a], elements[b]));
      if (idx < 0) throw ConstructionError("element set is not closed under multiplication");
      t[a][b] = idx;
    }
    labels.push_back(parent.label(elements[a]));
  }
  s.group = std::make_shared<FiniteGroup>(std::move(t), std::move(labels));
  return s;
}

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<int> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  const int n = source_->order();
  if (static_cast<int>(images_.size()) != n) throw ConstructionError("homomorphism image count mismatch");
  for (int x : images_) {
    if (x < 0 || x >= target_->order()) throw ConstructionError("homomorphism image out of range");
  }
  if (images_[0] != 0) throw ConstructionError("homomorphism does not preserve the identity");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (images_[source_->mul(a, b)] != target_->mul(images_[a], images_[b])) {
        throw ConstructionError("map is not a homomorphism");
      }
    }
  }
}

GroupExtension::GroupExtension(GroupPtr h, std::vector<int> kernel, std::vector<int> section, std::string name)
    : H_(std::move(h)), name_(std::move(name)) {
  const FiniteGroup& H = *H_;
  Subgroup sub = make_subgroup(H, std::move(kernel));
  for (int x = 0; x < H.order(); ++x) {
    for (int k : sub.to_parent) {
      if (sub.from_parent(H.conj(x, k)) < 0) throw ConstructionError("kernel is not a normal subgroup");
    }
  }
  G_ = sub.group;
  kernel_index_.assign(H.order(), -1);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) kernel_index_[sub.to_parent[i]] = static_cast<int>(i);

  // cosets x G, ordered by smallest element
  std::vector<int> coset_of(H.order(), -1);
  for (int x = 0; x < H.order(); ++x) {
    if (coset_of[x] >= 0) continue;
    std::vector<int> cs;
    for (int k : sub.to_parent) cs.push_back(H.mul(x, k));
    std::sort(cs.begin(), cs.end());
    for (int y : cs) coset_of[y] = static_cast<int>(cosets_.size());
    cosets_.push_back(std::move(cs));
  }
  const int nj = static_cast<int>(cosets_.size());
  std::vector<std::vector<int>> jt(nj, std::vector<int>(nj));
  std::vector<std::string> jlabels;
  for (int a = 0; a < nj; ++a) {
    for (int b = 0; b < nj; ++b) jt[a][b] = coset_of[H.mul(cosets_[a][0], cosets_[b][0])];
    jlabels.push_back("[" + H.label(cosets_[a][0]) + "]");
  }
  J_ = std::make_shared<FiniteGroup>(std::move(jt), std::move(jlabels));
  incl_ = std::make_shared<GroupHom>(G_, H_, sub.to_parent);
  proj_ = std::make_shared<GroupHom>(H_, J_, coset_of);

  if (section.empty()) {
    for (const auto& cs : cosets_) section.push_back(cs[0]);
  }
  if (static_cast<int>(section.size()) != nj) throw ConstructionError("section length does not match |J|");
  for (int j = 0; j < nj; ++j) {
    if (section[j] < 0 || section[j] >= H.order() || coset_of[section[j]] != j) {
      throw ConstructionError("section is not a section of the projection at j = " + std::to_string(j));
    }
  }
  if (section[0] != 0) throw ConstructionError("section is not normalized: s(1) != 1");
  section_ = std::move(section);
}

GroupExtension GroupExtension::with_section(std::vector<int> section) const {
  return GroupExtension(H_, incl_->images(), std::move(section), name_);
}

WeakAction::WeakAction(GroupPtr j, GroupPtr g, std::vector<std::vector<int>> rho, std::vector<int> coherence)
    : J_(std::move(j)), G_(std::move(g)), rho_(std::move(rho)), c_(std::move(coherence)) {
  const FiniteGroup& J = *J_;
  const FiniteGroup& G = *G_;
  const int nj = J.order();
  const int ng = G.order();
  if (static_cast<int>(rho_.size()) != nj || static_cast<int>(c_.size()) != nj * nj) {
    throw ConstructionError("weak action data has the wrong size");
  }
  for (int x = 0; x < nj; ++x) {
    GroupHom check(G_, G_, rho_[x]);
    std::vector<int> sorted = rho_[x];
    std::sort(sorted.begin(), sorted.end());
    for (int a = 0; a < ng; ++a) {
      if (sorted[a] != a) throw ConstructionError("rho_j is not bijective");
    }
  }
  for (int v : c_) {
    if (v < 0 || v >= ng) throw ConstructionError("coherence element out of range");
  }
  if (c(0, 0) != 0) throw ConstructionError("c_{1,1} != 1");
  for (int a = 0; a < nj; ++a) {
    for (int b = 0; b < nj; ++b) {
      const int cab = c(a, b);
      const int ab = J.mul(a, b);
      for (int x = 0; x < ng; ++x) {
        if (rho_[a][rho_[b][x]] != G.conj(cab, rho_[ab][x])) {
          throw ConstructionError("rho_i rho_j != Inn_{c_ij} rho_ij");
        }
      }
      for (int k = 0; k < nj; ++k) {
        int lhs = G.mul(rho_[a][c(b, k)], c(a, J.mul(b, k)));
        int rhs = G.mul(cab, c(ab, k));
        if (lhs != rhs) throw ConstructionError("coherence cocycle condition fails");
      }
    }
  }
}

bool WeakAction::is_strict() const {
  return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
}

WeakAction extension_to_weak_action(const GroupExtension& ext) {
  const FiniteGroup& H = *ext.H();
  const FiniteGroup& J = *ext.J();
  const int nj = J.order();
  const int ng = ext.G()->order();
  if (ext.s(0) != 0) throw ConstructionError("section is not normalized: s(1) != 1");
  std::vector<std::vector<int>> rho(nj, std::vector<int>(ng));
  std::vector<int> c(nj * nj);
  for (int j = 0; j < nj; ++j) {
    for (int g = 0; g < ng; ++g) rho[j][g] = ext.kernel_index(H.conj(ext.s(j), ext.to_H(g)));
  }
  for (int a = 0; a < nj; ++a) {
    for (int b = 0; b < nj; ++b) {
      int x = H.mul(H.mul(ext.s(a), ext.s(b)), H.inv(ext.s(J.mul(a, b))));
      c[a * nj + b] = ext.kernel_index(x);
    }
  }
  return WeakAction(ext.J(), ext.G(), std::move(rho), std::move(c));
}

GroupExtension weak_action_to_extension(const WeakAction& wa) {
  const FiniteGroup& G = *wa.G();
  const FiniteGroup& J = *wa.J();
  const int ng = G.order();
  const int nj = J.order();
  const int n = ng * nj;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    const int g = x % ng;
    const int i = x / ng;
    for (int y = 0; y < n; ++y) {
      const int g2 = y % ng;
      const int j = y / ng;
      int prod = G.mul(G.mul(g, wa.rho(i, g2)), wa.c(i, j));
      t[x][y] = prod + ng * J.mul(i, j);
    }
    labels.push_back("(" + G.label(g) + "," + J.label(i) + ")");
  }
  GroupPtr h;
  try {
    h = std::make_shared<FiniteGroup>(std::move(t), std::move(labels));
  } catch (const ConstructionError& e) {
    throw ConstructionError(std::string("weak action yields no group law: ") + e.what());
  }
  std::vector<int> kernel(ng);
  std::iota(kernel.begin(), kernel.end(), 0);
  std::vector<int> section(nj);
  for (int j = 0; j < nj; ++j) section[j] = ng * j;
  return GroupExtension(h, std::move(kernel), std::move(section));
}

std::optional<WeakActionIso> weak_actions_isomorphic(const WeakAction& wa1, const WeakAction& wa2) {
  if (!same_table(*wa1.G(), *wa2.G()) || !same_table(*wa1.J(), *wa2.J())) return std::nullopt;
  const FiniteGroup& G = *wa1.G();
  const FiniteGroup& J = *wa1.J();
  const int ng = G.order();
  const int nj = J.order();
  // candidates[j]: all h with rho'_j = Inn_h rho_j
  std::vector<std::vector<int>> candidates(nj);
  for (int j = 0; j < nj; ++j) {
    for (int h = 0; h < ng; ++h) {
      bool ok = true;
      for (int x = 0; x < ng && ok; ++x) ok = wa2.rho(j, x) == G.conj(h, wa1.rho(j, x));
      if (ok) candidates[j].push_back(h);
    }
    if (candidates[j].empty()) return std::nullopt;
  }
  // h_1 = 1 is forced by the c_{1,1} relation
  if (std::find(candidates[0].begin(), candidates[0].end(), 0) == candidates[0].end()) return std::nullopt;
  candidates[0] = {0};

  std::vector<int> h(nj, -1);
  // c'_{ab} h_{ab} = h_a rho_a(h_b) c_{ab}, checked once all three are assigned
  std::function<bool(int)> consistent = [&](int upto) {
    for (int a = 0; a <= upto; ++a) {
      for (int b = 0; b <= upto; ++b) {
        int ab = J.mul(a, b);
        if (ab > upto) continue;
        if (a != upto && b != upto && ab != upto) continue;
        int lhs = G.mul(wa2.c(a, b), h[ab]);
        int rhs = G.mul(G.mul(h[a], wa1.rho(a, h[b])), wa1.c(a, b));
        if (lhs != rhs) return false;
      }
    }
    return true;
  };
  std::function<bool(int)> search = [&](int j) {
    if (j == nj) return true;
    for (int cand : candidates[j]) {
      h[j] = cand;
      if (consistent(j) && search(j + 1)) return true;
    }
    h[j] = -1;
    return false;
  };
  if (!search(0)) return std::nullopt;
  return WeakActionIso{h};
}

std::optional<std::vector<int>> find_group_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  const int n = a.order();
  {
    std::vector<int> oa, ob;
    for (int x = 0; x < n; ++x) {
      oa.push_back(a.element_order(x));
      ob.push_back(b.element_order(x));
    }
    std::sort(oa.begin(), oa.end());
    std::sort(ob.begin(), ob.end());
    if (oa != ob) return std::nullopt;
  }
  const std::vector<int> gens = a.generators();
  std::vector<int> images(gens.size(), -1);

  // Extends a generator assignment to a map by breadth-first words; fails on
  // any inconsistency or non-injectivity.
  auto extend = [&]() -> std::optional<std::vector<int>> {
    std::vector<int> phi(n, -1);
    std::vector<bool> used(n, false);
    phi[0] = 0;
    used[0] = true;
    std::vector<int> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int x = queue[q];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        int y = a.mul(x, gens[k]);
        int img = b.mul(phi[x], images[k]);
        if (phi[y] < 0) {
          if (used[img]) return std::nullopt;
          phi[y] = img;
          used[img] = true;
          queue.push_back(y);
        } else if (phi[y] != img) {
          return std::nullopt;
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return std::nullopt;
      }
    }
    return phi;
  };

  std::function<std::optional<std::vector<int>>(std::size_t)> search =
      [&](std::size_t k) -> std::optional<std::vector<int>> {
    if (k == gens.size()) return extend();
    for (int y = 0; y < n; ++y) {
      if (b.element_order(y) != a.element_order(gens[k])) continue;
      images[k] = y;
      if (auto r = search(k + 1)) return r;
    }
    return std::nullopt;
  };
  return search(0);
}

}  // namespace equidouble
