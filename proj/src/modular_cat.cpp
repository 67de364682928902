#include "equidouble/modular_cat.hpp"

#include <algorithm>
#include <numeric>

#include "equidouble/character_table.hpp"
#include "equidouble/errors.hpp"
#include "equidouble/groupoids.hpp"
#include "equidouble/orbifold.hpp"
#include "equidouble/parallel.hpp"

namespace equidouble {

int GradedModule::block_dim(int h) const {
  return static_cast<int>(std::count(grade.begin(), grade.end(), h));
}

std::optional<int> GradedModule::degree() const {
  if (grade.empty()) return 0;
  const int j = ext->pi(grade[0]);
  for (int h : grade) {
    if (ext->pi(h) != j) return std::nullopt;
  }
  return j;
}

void check_graded_module(const GradedModule& v) {
  const GroupExtension& ext = *v.ext;
  const FiniteGroup& G = *ext.G();
  const FiniteGroup& H = *ext.H();
  const std::size_t n = v.dim();
  if (v.action.size() != static_cast<std::size_t>(G.order())) throw ConstructionError("one action matrix per element of G expected");
  for (const auto& m : v.action) {
    if (m.rows() != n || m.cols() != n) throw ConstructionError("action matrix has the wrong shape");
  }
  for (int h : v.grade) {
    if (h < 0 || h >= H.order()) throw ConstructionError("grade outside H");
  }
  if (v.action[0] != ExactMatrix::identity(n)) throw ConstructionError("identity does not act trivially");
  for (int a = 0; a < G.order(); ++a) {
    for (int b = 0; b < G.order(); ++b) {
      if (v.action[a] * v.action[b] != v.action[G.mul(a, b)]) throw ConstructionError("action is not multiplicative");
    }
    const int ah = ext.to_H(a);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (!v.action[a](r, c).is_zero() && v.grade[r] != H.conj(ah, v.grade[c]))
          throw ConstructionError("action does not map V_h into V_{ghg^-1}");
      }
    }
  }
}

bool is_module_map(const GradedModule& source, const GradedModule& target, const ExactMatrix& m) {
  if (m.rows() != target.dim() || m.cols() != source.dim()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero() && target.grade[r] != source.grade[c]) return false;
    }
  }
  for (std::size_t g = 0; g < source.action.size(); ++g) {
    if (m * source.action[g] != target.action[g] * m) return false;
  }
  return true;
}

std::vector<ExactMatrix> hom_space(const GradedModule& v, const GradedModule& w) {
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t r = 0; r < w.dim(); ++r) {
    for (std::size_t c = 0; c < v.dim(); ++c) {
      if (w.grade[r] == v.grade[c]) unknowns.emplace_back(r, c);
    }
  }
  const std::size_t ng = v.action.size();
  const std::size_t block = w.dim() * v.dim();
  ExactMatrix eq(ng * block, unknowns.size());
  // (M rho_V(g) - rho_W(g) M)_{r,c}
  for (std::size_t g = 0; g < ng; ++g) {
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      const auto [r0, c0] = unknowns[u];
      for (std::size_t c = 0; c < v.dim(); ++c) {
        const Cyclotomic& x = v.action[g](c0, c);
        if (!x.is_zero()) eq(g * block + r0 * v.dim() + c, u) += x;
      }
      for (std::size_t r = 0; r < w.dim(); ++r) {
        const Cyclotomic& x = w.action[g](r, r0);
        if (!x.is_zero()) eq(g * block + r * v.dim() + c0, u) -= x;
      }
    }
  }
  std::vector<ExactMatrix> out;
  for (const auto& k : kernel_basis(eq)) {
    ExactMatrix m(w.dim(), v.dim());
    for (std::size_t u = 0; u < unknowns.size(); ++u) m(unknowns[u].first, unknowns[u].second) = k(u, 0);
    out.push_back(std::move(m));
  }
  return out;
}

GradedModule unit_module(const ExtensionPtr& ext) {
  GradedModule u;
  u.ext = ext;
  u.grade = {0};
  u.action.assign(ext->G()->order(), ExactMatrix::identity(1));
  u.label = "1";
  return u;
}

namespace {

void require_same(const GradedModule& v, const GradedModule& w) {
  if (v.ext != w.ext && !(v.ext && w.ext && same_table(*v.ext->H(), *w.ext->H()) &&
                          v.ext->G()->order() == w.ext->G()->order()))
    throw UsageError("modules over different extensions");
}

ExactMatrix identity(std::size_t n) { return ExactMatrix::identity(n); }

// element of G (as a G-index) for an H-element in the kernel
int g_index(const GroupExtension& ext, int h) {
  const int g = ext.kernel_index(h);
  if (g < 0) throw ArithmeticError("element expected in G lies outside the kernel");
  return g;
}

// matrix taking basis index a dW + b of V (x) W to b dV + a of W (x) V
ExactMatrix flip_matrix(std::size_t dv, std::size_t dw) {
  ExactMatrix p(dv * dw, dv * dw);
  for (std::size_t a = 0; a < dv; ++a) {
    for (std::size_t b = 0; b < dw; ++b) p(b * dv + a, a * dw + b) = Cyclotomic(1);
  }
  return p;
}

int require_degree(const GradedModule& v) {
  auto d = v.degree();
  if (!d) throw UsageError("module '" + v.label + "' is not homogeneous");
  return *d;
}

}  // namespace

GradedModule direct_sum(const GradedModule& v, const GradedModule& w) {
  require_same(v, w);
  GradedModule s;
  s.ext = v.ext;
  s.grade = v.grade;
  s.grade.insert(s.grade.end(), w.grade.begin(), w.grade.end());
  for (std::size_t g = 0; g < v.action.size(); ++g) s.action.push_back(equidouble::direct_sum(v.action[g], w.action[g]));
  s.label = v.label + "+" + w.label;
  return s;
}

GradedModule fuse(const GradedModule& v, const GradedModule& w) {
  require_same(v, w);
  const FiniteGroup& H = *v.ext->H();
  GradedModule f;
  f.ext = v.ext;
  for (int a : v.grade) {
    for (int b : w.grade) f.grade.push_back(H.mul(a, b));
  }
  for (std::size_t g = 0; g < v.action.size(); ++g) f.action.push_back(kron(v.action[g], w.action[g]));
  f.label = v.label + "*" + w.label;
  return f;
}

GradedModule j_act(int x, const GradedModule& v) {
  const GroupExtension& ext = *v.ext;
  const FiniteGroup& H = *ext.H();
  const FiniteGroup& G = *ext.G();
  const int s = ext.s(ext.J()->inv(x));
  const int si = H.inv(s);
  GradedModule out;
  out.ext = v.ext;
  out.orbit = v.orbit;
  out.irrep = v.irrep;
  for (int h : v.grade) out.grade.push_back(H.conj(si, h));
  for (int g = 0; g < G.order(); ++g) out.action.push_back(v.action[g_index(ext, H.conj(s, ext.to_H(g)))]);
  out.label = x == 0 ? v.label : "^" + ext.J()->label(x) + "(" + v.label + ")";
  return out;
}

GradedModule dual(const GradedModule& v) {
  const FiniteGroup& H = *v.ext->H();
  const FiniteGroup& G = *v.ext->G();
  GradedModule out;
  out.ext = v.ext;
  for (int h : v.grade) out.grade.push_back(H.inv(h));
  for (int g = 0; g < G.order(); ++g) out.action.push_back(v.action[G.inv(g)].transposed());
  out.label = v.label + "^v";
  return out;
}

std::vector<std::pair<int, GradedModule>> split_by_degree(const GradedModule& v) {
  const GroupExtension& ext = *v.ext;
  std::vector<std::pair<int, GradedModule>> out;
  for (int j = 0; j < ext.J()->order(); ++j) {
    std::vector<std::size_t> keep;
    for (std::size_t b = 0; b < v.dim(); ++b) {
      if (ext.pi(v.grade[b]) == j) keep.push_back(b);
    }
    if (keep.empty()) continue;
    GradedModule part;
    part.ext = v.ext;
    part.label = v.label + "_" + ext.J()->label(j);
    for (std::size_t b : keep) part.grade.push_back(v.grade[b]);
    for (const auto& m : v.action) {
      ExactMatrix r(keep.size(), keep.size());
      for (std::size_t a = 0; a < keep.size(); ++a) {
        for (std::size_t b = 0; b < keep.size(); ++b) r(a, b) = m(keep[a], keep[b]);
      }
      part.action.push_back(std::move(r));
    }
    out.emplace_back(j, std::move(part));
  }
  return out;
}

ExactMatrix compositor(int i, int j, const GradedModule& v) {
  const GroupExtension& ext = *v.ext;
  const FiniteGroup& H = *ext.H();
  const FiniteGroup& J = *ext.J();
  const int si = ext.s(J.inv(i));
  const int sj = ext.s(J.inv(j));
  const int sij = ext.s(J.inv(J.mul(i, j)));
  const int x = H.mul(sij, H.inv(H.mul(sj, si)));
  return v.action[g_index(ext, x)];
}

ExactMatrix braid(const GradedModule& v, const GradedModule& w, BraidVariant variant) {
  require_same(v, w);
  const GroupExtension& ext = *v.ext;
  const FiniteGroup& H = *ext.H();
  const int j = require_degree(v);
  const int sigma = variant == BraidVariant::standard ? ext.s(ext.J()->inv(j)) : H.inv(ext.s(j));
  const std::size_t dv = v.dim(), dw = w.dim();
  ExactMatrix out(dw * dv, dv * dw);
  for (std::size_t a = 0; a < dv; ++a) {
    const ExactMatrix& rho = w.action[g_index(ext, H.mul(sigma, v.grade[a]))];
    for (std::size_t b = 0; b < dw; ++b) {
      for (std::size_t b2 = 0; b2 < dw; ++b2) {
        if (!rho(b2, b).is_zero()) out(b2 * dv + a, a * dw + b) = rho(b2, b);
      }
    }
  }
  return out;
}

ExactMatrix twist(const GradedModule& v) {
  const GroupExtension& ext = *v.ext;
  const FiniteGroup& H = *ext.H();
  const int j = require_degree(v);
  const int sigma = ext.s(ext.J()->inv(j));
  const std::size_t n = v.dim();
  ExactMatrix out(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const ExactMatrix& rho = v.action[g_index(ext, H.mul(sigma, v.grade[c]))];
    for (std::size_t r = 0; r < n; ++r) out(r, c) = rho(r, c);
  }
  return out;
}

ExactMatrix double_action(const GradedModule& v, const Vec& element) {
  const int ng = v.ext->G()->order();
  const std::size_t n = v.dim();
  ExactMatrix out(n, n);
  for (const auto& [idx, coef] : element) {
    const int h = static_cast<int>(idx) / ng;
    const int g = static_cast<int>(idx) % ng;
    for (std::size_t r = 0; r < n; ++r) {
      if (v.grade[r] != h) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!v.action[g](r, c).is_zero()) out(r, c) += coef * v.action[g](r, c);
      }
    }
  }
  return out;
}

ExactMatrix flip_after_action(const GradedModule& v, const GradedModule& w, const Tensor2& t) {
  ExactMatrix sum(v.dim() * w.dim(), v.dim() * w.dim());
  std::map<Index, ExactMatrix> cache_v, cache_w;
  auto get = [](std::map<Index, ExactMatrix>& cache, const GradedModule& m, Index a) -> const ExactMatrix& {
    auto it = cache.find(a);
    if (it == cache.end()) it = cache.emplace(a, double_action(m, basis_vector(a))).first;
    return it->second;
  };
  for (const auto& [k, c] : t) {
    const ExactMatrix& a = get(cache_v, v, k.first);
    const ExactMatrix& b = get(cache_w, w, k.second);
    if (a.is_zero() || b.is_zero()) continue;
    sum += kron(a, b).scaled(c);
  }
  return flip_matrix(v.dim(), w.dim()) * sum;
}

std::vector<GradedModule> simples_of_double(const ExtensionPtr& ext) {
  const GroupPtr& H = ext->H();
  std::vector<int> all(H->order());
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> g_to_h(ext->G()->order());
  for (int g = 0; g < ext->G()->order(); ++g) g_to_h[g] = ext->to_H(g);
  const ActionGroupoid gamma = conjugation_groupoid(H, all, ext->G(), g_to_h);
  const auto orbs = orbits(gamma);
  std::vector<GradedModule> out;
  for (const auto& rep : simple_objects(gamma)) {
    GradedModule m;
    m.ext = ext;
    for (int p = 0; p < gamma.points(); ++p) m.grade.insert(m.grade.end(), rep.dims[p], p);
    m.action = rep.action;
    m.orbit = rep.orbit;
    m.irrep = rep.irrep;
    m.label = "(" + H->label(orbs[rep.orbit].points[0]) + "," + std::to_string(rep.irrep) + ")";
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<GradedModule> simples_of_double(const GroupPtr& h) {
  std::vector<int> all(h->order());
  std::iota(all.begin(), all.end(), 0);
  return simples_of_double(std::make_shared<const GroupExtension>(h, all, std::vector<int>{}, h->name() + "-" + h->name()));
}

bool DiagramReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const DiagramResult& r) { return r.pass; });
}

std::pair<std::size_t, std::size_t> DiagramReport::tally(const std::string& diagram) const {
  std::size_t n = 0, bad = 0;
  for (const auto& r : results) {
    if (r.diagram != diagram) continue;
    ++n;
    if (!r.pass) ++bad;
  }
  return {n, bad};
}

const DiagramResult* DiagramReport::first_failure(const std::string& diagram) const {
  for (const auto& r : results) {
    if (r.diagram == diagram && !r.pass) return &r;
  }
  return nullptr;
}

DiagramReport check_equivariant_diagrams(const GroupExtension& ext, const std::vector<GradedModule>& sample,
                                         BraidVariant variant) {
  const FiniteGroup& J = *ext.J();
  const int nj = J.order();
  const int n = static_cast<int>(sample.size());
  std::vector<int> deg(n);
  for (int a = 0; a < n; ++a) deg[a] = require_degree(sample[a]);
  const auto c = [variant](const GradedModule& x, const GradedModule& y) { return braid(x, y, variant); };

  std::vector<DiagramResult> tasks;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      tasks.push_back({"braid_module_map", {a, b}, true});
      tasks.push_back({"twist_braiding", {a, b}, true});
      for (int i = 0; i < nj; ++i) tasks.push_back({"action_braiding", {a, b, i}, true});
      for (int e = 0; e < n; ++e) {
        tasks.push_back({"hexagon_left", {a, b, e}, true});
        tasks.push_back({"hexagon_right", {a, b, e}, true});
      }
    }
    tasks.push_back({"twist_module_map", {a}, true});
    tasks.push_back({"twist_duality", {a}, true});
    for (int i = 0; i < nj; ++i) {
      tasks.push_back({"twist_action", {a, i}, true});
      for (int j = 0; j < nj; ++j) tasks.push_back({"compositor_module_map", {a, i, j}, true});
    }
  }

  parallel_for(tasks.size(), [&](std::size_t t) {
    DiagramResult& task = tasks[t];
    const auto& tp = task.tuple;
    const std::string& d = task.diagram;
    if (d == "braid_module_map") {
      const GradedModule& u = sample[tp[0]];
      const GradedModule& v = sample[tp[1]];
      task.pass = is_module_map(fuse(u, v), fuse(j_act(deg[tp[0]], v), u), c(u, v));
    } else if (d == "twist_module_map") {
      const GradedModule& u = sample[tp[0]];
      task.pass = is_module_map(u, j_act(deg[tp[0]], u), twist(u));
    } else if (d == "compositor_module_map") {
      const GradedModule& v = sample[tp[0]];
      const int i = tp[1], j = tp[2];
      task.pass = is_module_map(j_act(i, j_act(j, v)), j_act(J.mul(i, j), v), compositor(i, j, v));
    } else if (d == "hexagon_left") {
      const GradedModule& u = sample[tp[0]];
      const GradedModule& v = sample[tp[1]];
      const GradedModule& w = sample[tp[2]];
      const ExactMatrix lhs = c(u, fuse(v, w));
      const ExactMatrix rhs = kron(identity(v.dim()), c(u, w)) * kron(c(u, v), identity(w.dim()));
      task.pass = lhs == rhs;
    } else if (d == "hexagon_right") {
      const GradedModule& u = sample[tp[0]];
      const GradedModule& v = sample[tp[1]];
      const GradedModule& w = sample[tp[2]];
      const int i = deg[tp[0]], j = deg[tp[1]];
      const ExactMatrix lhs = c(fuse(u, v), w);
      const ExactMatrix rhs = kron(compositor(i, j, w), identity(u.dim() * v.dim())) *
                              kron(c(u, j_act(j, w)), identity(v.dim())) * kron(identity(u.dim()), c(v, w));
      task.pass = lhs == rhs;
    } else if (d == "action_braiding") {
      const GradedModule& u = sample[tp[0]];
      const GradedModule& v = sample[tp[1]];
      const int j = deg[tp[0]], i = tp[2];
      const int iji = J.mul(J.mul(i, j), J.inv(i));
      const ExactMatrix lhs = kron(compositor(i, j, v), identity(u.dim())) * c(u, v);
      const ExactMatrix rhs = kron(compositor(iji, i, v), identity(u.dim())) * c(j_act(i, u), j_act(i, v));
      task.pass = lhs == rhs;
    } else if (d == "twist_braiding") {
      const GradedModule& u = sample[tp[0]];
      const GradedModule& v = sample[tp[1]];
      const int i = deg[tp[0]], j = deg[tp[1]];
      const int ij = J.mul(i, j);
      const int iji = J.mul(ij, J.inv(i));
      const GradedModule iu = j_act(i, u);
      const ExactMatrix lhs = twist(fuse(u, v));
      const ExactMatrix rhs = kron(compositor(iji, i, u), identity(v.dim())) * c(j_act(ij, v), iu) *
                              kron(compositor(i, j, v), identity(u.dim())) * c(iu, j_act(j, v)) *
                              kron(twist(u), twist(v));
      task.pass = lhs == rhs;
    } else if (d == "twist_duality") {
      const GradedModule& v = sample[tp[0]];
      const int j = deg[tp[0]];
      const GradedModule jdual = j_act(j, dual(v));
      const ExactMatrix rhs = compositor(J.inv(j), j, dual(v)) * twist(jdual);
      task.pass = twist(v).transposed() == rhs;
    } else if (d == "twist_action") {
      const GradedModule& v = sample[tp[0]];
      const int j = deg[tp[0]], i = tp[1];
      const int iji = J.mul(J.mul(i, j), J.inv(i));
      task.pass = compositor(i, j, v) * twist(v) == compositor(iji, i, v) * twist(j_act(i, v));
    }
  });
  DiagramReport rep;
  rep.results = std::move(tasks);
  return rep;
}

SMatrix s_matrix(const GroupPtr& h, int bound) {
  if (h->order() > bound) throw ResourceError("group order " + std::to_string(h->order()) + " exceeds S-matrix bound " + std::to_string(bound));
  const auto simples = simples_of_double(h);
  const std::size_t n = simples.size();
  SMatrix s;
  s.group_order = h->order();
  for (const auto& m : simples) s.labels.push_back(m.label);
  s.entries = ExactMatrix(n, n);
  std::vector<Cyclotomic> cells(n * n);
  parallel_for(n * n, [&](std::size_t k) {
    const GradedModule& x = simples[k / n];
    const GradedModule& y = simples[k % n];
    cells[k] = (braid(y, x) * braid(x, y)).trace();
  });
  for (std::size_t k = 0; k < n * n; ++k) s.entries(k / n, k % n) = cells[k];
  return s;
}

SMatrix s_matrix_from_characters(const GroupPtr& h, int bound) {
  if (h->order() > bound) throw ResourceError("group order " + std::to_string(h->order()) + " exceeds S-matrix bound " + std::to_string(bound));
  const FiniteGroup& H = *h;
  const ActionGroupoid gamma = conjugation_groupoid(h);
  const auto orbs = orbits(gamma);
  struct Label {
    int orbit;
    int irrep;
  };
  std::vector<Subgroup> stabs;
  std::vector<CharacterTable> tables;
  std::vector<Label> labels;
  SMatrix s;
  s.group_order = H.order();
  for (std::size_t o = 0; o < orbs.size(); ++o) {
    stabs.push_back(make_subgroup(H, orbs[o].stabilizer));
    tables.push_back(character_table(stabs.back().group));
    for (int r = 0; r < tables.back().size(); ++r) {
      labels.push_back({static_cast<int>(o), r});
      s.labels.push_back("(" + H.label(orbs[o].points[0]) + "," + std::to_string(r) + ")");
    }
  }
  // chi of orbit o, row r, at the H-element y, which must commute with
  // the point orbs[o].points[p]; conjugated back to the representative
  const auto chi = [&](int o, int r, std::size_t p, int y) {
    const int x = orbs[o].coset_rep[p];
    return tables[o].value(r, stabs[o].from_parent(H.mul(H.mul(H.inv(x), y), x)));
  };
  const std::size_t n = labels.size();
  s.entries = ExactMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Label& la = labels[a];
      const Label& lb = labels[b];
      Cyclotomic sum;
      for (std::size_t p = 0; p < orbs[la.orbit].points.size(); ++p) {
        const int g = orbs[la.orbit].points[p];
        for (std::size_t q = 0; q < orbs[lb.orbit].points.size(); ++q) {
          const int k = orbs[lb.orbit].points[q];
          if (H.mul(g, k) != H.mul(k, g)) continue;
          sum += chi(la.orbit, la.irrep, p, k) * chi(lb.orbit, lb.irrep, q, g);
        }
      }
      s.entries(a, b) = sum;
    }
  }
  return s;
}

ModularityVerdict modularity_verdict(const GroupExtension& ext, int bound) {
  ModularityVerdict v;
  v.psi_isomorphism = all_pass(psi_check(ext));
  const SMatrix s = s_matrix(ext.H(), bound);
  v.simples = s.labels.size();
  v.s_determinant = det(s.entries);
  v.s_invertible = !v.s_determinant.is_zero();
  v.orbifold_modular = v.psi_isomorphism && v.s_invertible;
  v.j_modular_claim = v.orbifold_modular;
  return v;
}

}  // namespace equidouble
