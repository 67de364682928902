#include "equidouble/orbifold.hpp"

#include <map>
#include <set>

#include "equidouble/errors.hpp"
#include "equidouble/parallel.hpp"

namespace equidouble {

Index orbifold_index(const JHopfDecoration& dec, Index a, int j) {
  return static_cast<Index>(a * dec.J->order() + j);
}

namespace {

// v (x) j for v in A
Vec lift(const JHopfDecoration& dec, const Vec& v, int j) {
  Vec r;
  for (const auto& [a, c] : v) r.emplace(orbifold_index(dec, a, j), c);
  return r;
}

Vec degree_part(const JHopfDecoration& dec, const Vec& v, int j) {
  Vec r;
  for (const auto& [a, c] : v) {
    if (dec.grading[a] == j) r.emplace(a, c);
  }
  return r;
}

ExactMatrix act(const AlgebraModule& m, const Vec& v) {
  ExactMatrix r(m.dim, m.dim);
  for (const auto& [a, c] : v) r += m.action[a].scaled(c);
  return r;
}

}  // namespace

HopfData orbifold_algebra(const HopfData& h, const JHopfDecoration& dec) {
  const FiniteGroup& J = *dec.J;
  const int nj = J.order();
  const std::size_t da = h.dim();
  const std::size_t d = da * nj;
  std::vector<Vec> c_inv(nj);
  for (int j = 0; j < nj; ++j) {
    try {
      c_inv[j] = h.inverse(dec.coherence(J.inv(j), j));
    } catch (const ArithmeticError&) {
      throw ConstructionError("coherence element c(j^-1, j) is not invertible for j = " + J.label(j));
    }
  }
  HopfStructure s;
  s.labels.resize(d);
  s.mult.resize(d * d);
  s.comult.resize(d);
  s.counit.resize(d);
  s.antipode.resize(d);
  parallel_for(d, [&](std::size_t x) {
    const Index a = static_cast<Index>(x / nj);
    const int i = static_cast<int>(x % nj);
    s.labels[x] = h.label(a) + "@" + J.label(i);
    for (Index b = 0; b < da; ++b) {
      const Vec left = h.multiply(basis_vector(a), dec.phi[i][b]);
      for (int j = 0; j < nj; ++j) {
        s.mult[x * d + orbifold_index(dec, b, j)] = lift(dec, h.multiply(left, dec.coherence(i, j)), J.mul(i, j));
      }
    }
    Tensor2 t;
    for (const auto& [k, c] : h.comult(a)) t.emplace(std::make_pair(orbifold_index(dec, k.first, i), orbifold_index(dec, k.second, i)), c);
    s.comult[x] = std::move(t);
    s.counit[x] = h.counit(a);
    const int ii = J.inv(i);
    s.antipode[x] = lift(dec, h.multiply(c_inv[i], apply_map(dec.phi[ii], h.antipode(a))), ii);
  });
  s.unit = lift(dec, h.unit(), 0);
  return HopfData(std::move(s));
}

RibbonDecoration orbifold_ribbon(const HopfData& h, const JHopfDecoration& dec, const RibbonDecoration& rib,
                                 const HopfData& orbifold) {
  const FiniteGroup& J = *dec.J;
  const int nj = J.order();
  // (1 (x) k)^{-1}
  std::vector<Vec> one_inv(nj);
  for (int k = 0; k < nj; ++k) one_inv[k] = orbifold.inverse(lift(dec, h.unit(), k));
  RibbonDecoration out;
  for (const auto& [k, c] : rib.R) {
    const int i = dec.grading[k.first];
    const Vec right = orbifold.multiply(one_inv[J.inv(i)], basis_vector(orbifold_index(dec, k.second, 0)));
    for (const auto& [r, rc] : right) add_term(out.R, orbifold_index(dec, k.first, 0), r, c * rc);
  }
  for (int j = 0; j < nj; ++j) {
    const Vec piece = lift(dec, degree_part(dec, rib.theta_inv, j), 0);
    out.theta_inv = add(out.theta_inv, orbifold.multiply(one_inv[J.inv(j)], piece));
  }
  out.theta = orbifold.inverse(out.theta_inv);
  return out;
}

std::vector<Index> psi_permutation(const GroupExtension& ext, const std::vector<int>& section_table) {
  const FiniteGroup& H = *ext.H();
  const int nj = ext.J()->order();
  if (static_cast<int>(section_table.size()) != nj) throw UsageError("section table needs one entry per J-element");
  std::vector<Index> perm;
  perm.reserve(static_cast<std::size_t>(H.order()) * ext.G()->order() * nj);
  for (int h = 0; h < H.order(); ++h) {
    for (int g = 0; g < ext.G()->order(); ++g) {
      for (int j = 0; j < nj; ++j) perm.push_back(double_index(H, h, H.mul(ext.to_H(g), section_table[j])));
    }
  }
  return perm;
}

AxiomReport psi_check(const GroupExtension& ext, const std::optional<std::vector<int>>& section_table) {
  std::vector<int> table = section_table.value_or(std::vector<int>{});
  if (!section_table) {
    for (int j = 0; j < ext.J()->order(); ++j) table.push_back(ext.s(j));
  }
  const auto jd = equivariant_double(ext);
  const HopfData orb = orbifold_algebra(jd.hopf, jd.decoration);
  const RibbonDecoration orib = orbifold_ribbon(jd.hopf, jd.decoration, jd.ribbon, orb);
  const Double dh = drinfeld_double(*ext.H());
  const std::vector<Index> perm = psi_permutation(ext, table);
  LinearMap psi(perm.size());
  for (std::size_t x = 0; x < perm.size(); ++x) psi[x] = basis_vector(perm[x]);
  const std::size_t d = orb.dim();
  const CheckOptions all{};

  AxiomReport rep;
  {
    std::set<Index> image(perm.begin(), perm.end());
    AxiomResult r{"bijective", AxiomStatus::pass, {}};
    if (d != dh.hopf.dim() || image.size() != d) {
      r.status = AxiomStatus::fail;
      std::vector<int> seen(dh.hopf.dim(), -1);
      for (std::size_t x = 0; x < d; ++x) {
        if (seen[perm[x]] >= 0) {
          r.witness = {seen[perm[x]], static_cast<std::int64_t>(x)};
          break;
        }
        seen[perm[x]] = static_cast<int>(x);
      }
    }
    rep.push_back(r);
  }
  {
    AxiomResult r = run_probe("product", d * d, [&](std::size_t k) -> std::optional<Witness> {
      const Index x = static_cast<Index>(k / d), y = static_cast<Index>(k % d);
      if (apply_map(psi, orb.mult(x, y)) != dh.hopf.mult(perm[x], perm[y])) return Witness{x, y};
      return std::nullopt;
    }, all);
    if (r.status == AxiomStatus::pass && apply_map(psi, orb.unit()) != dh.hopf.unit()) {
      r.status = AxiomStatus::fail;
      r.witness = {-1};
    }
    rep.push_back(r);
  }
  rep.push_back(run_probe("coproduct", d, [&](std::size_t x) -> std::optional<Witness> {
    if (apply_map(psi, psi, orb.comult(static_cast<Index>(x))) != dh.hopf.comult(perm[x]) ||
        orb.counit(static_cast<Index>(x)) != dh.hopf.counit(perm[x]))
      return Witness{static_cast<std::int64_t>(x)};
    return std::nullopt;
  }, all));
  {
    AxiomResult r{"rmatrix", AxiomStatus::pass, {}};
    const Tensor2 image = apply_map(psi, psi, orib.R);
    if (image != dh.ribbon.R) {
      r.status = AxiomStatus::fail;
      for (const auto& [k, c] : dh.ribbon.R) {
        auto it = image.find(k);
        if (it == image.end() || it->second != c) {
          r.witness = {k.first, k.second};
          break;
        }
      }
      if (r.witness.empty()) {
        for (const auto& [k, c] : image) {
          if (!dh.ribbon.R.count(k)) {
            r.witness = {k.first, k.second};
            break;
          }
        }
      }
    }
    rep.push_back(r);
  }
  {
    AxiomResult r{"twist", AxiomStatus::pass, {}};
    const Vec image = apply_map(psi, orib.theta_inv);
    if (image != dh.ribbon.theta_inv) {
      r.status = AxiomStatus::fail;
      for (const auto& [k, c] : image) {
        auto it = dh.ribbon.theta_inv.find(k);
        if (it == dh.ribbon.theta_inv.end() || it->second != c) {
          r.witness = {k};
          break;
        }
      }
      if (r.witness.empty()) r.witness = {dh.ribbon.theta_inv.begin()->first};
    }
    rep.push_back(r);
  }
  return rep;
}

AxiomReport check_hopf_map(const HopfData& a, const HopfData& b, const LinearMap& f, const std::string& name) {
  const std::size_t d = a.dim();
  const CheckOptions all{};
  AxiomReport rep;
  rep.push_back(run_probe(name + "_product", d * d, [&](std::size_t k) -> std::optional<Witness> {
    const Index x = static_cast<Index>(k / d), y = static_cast<Index>(k % d);
    if (apply_map(f, a.mult(x, y)) != b.multiply(f[x], f[y])) return Witness{x, y};
    return std::nullopt;
  }, all));
  rep.push_back(AxiomResult{name + "_unit", apply_map(f, a.unit()) == b.unit() ? AxiomStatus::pass : AxiomStatus::fail, {}});
  rep.push_back(run_probe(name + "_coalgebra", d, [&](std::size_t x) -> std::optional<Witness> {
    const Index i = static_cast<Index>(x);
    if (apply_map(f, f, a.comult(i)) != b.comultiply(f[i]) || b.counit(f[i]) != a.counit(i)) return Witness{i};
    return std::nullopt;
  }, all));
  rep.push_back(run_probe(name + "_antipode", d, [&](std::size_t x) -> std::optional<Witness> {
    const Index i = static_cast<Index>(x);
    if (apply_map(f, a.antipode(i)) != b.antipode(f[i])) return Witness{i};
    return std::nullopt;
  }, all));
  return rep;
}

AxiomReport check_exactness(const HopfData& h, const JHopfDecoration& dec, const HopfData& orbifold) {
  const int nj = dec.J->order();
  const HopfData kj = group_algebra(*dec.J);
  LinearMap incl(h.dim());
  for (Index a = 0; a < h.dim(); ++a) incl[a] = basis_vector(orbifold_index(dec, a, 0));
  LinearMap proj(orbifold.dim());
  for (Index a = 0; a < h.dim(); ++a) {
    for (int j = 0; j < nj; ++j) proj[orbifold_index(dec, a, j)] = scale(basis_vector(j), h.counit(a));
  }
  AxiomReport rep = check_hopf_map(h, orbifold, incl, "inclusion");
  for (auto& r : check_hopf_map(orbifold, kj, proj, "projection")) rep.push_back(std::move(r));
  AxiomResult comp{"composite_is_counit", AxiomStatus::pass, {}};
  for (Index a = 0; a < h.dim(); ++a) {
    if (apply_map(proj, incl[a]) != scale(kj.unit(), h.counit(a))) {
      comp = AxiomResult{"composite_is_counit", AxiomStatus::fail, {a}};
      break;
    }
  }
  rep.push_back(comp);
  return rep;
}

std::size_t center_dimension(const HopfData& h) {
  const std::size_t d = h.dim();
  ExactMatrix m(d * d, d);
  for (Index b = 0; b < d; ++b) {
    for (Index a = 0; a < d; ++a) {
      for (const auto& [k, c] : h.mult(a, b)) m(b * d + k, a) += c;
      for (const auto& [k, c] : h.mult(b, a)) m(b * d + k, a) -= c;
    }
  }
  return d - rank(m);
}

bool is_module(const HopfData& h, const AlgebraModule& m) {
  if (m.action.size() != h.dim()) return false;
  for (const auto& x : m.action) {
    if (x.rows() != m.dim || x.cols() != m.dim) return false;
  }
  if (act(m, h.unit()) != ExactMatrix::identity(m.dim)) return false;
  for (Index a = 0; a < h.dim(); ++a) {
    for (Index b = 0; b < h.dim(); ++b) {
      if (m.action[a] * m.action[b] != act(m, h.mult(a, b))) return false;
    }
  }
  return true;
}

bool is_equivariant_module(const HopfData& h, const JHopfDecoration& dec, const EquivariantModule& m) {
  const FiniteGroup& J = *dec.J;
  const int nj = J.order();
  if (!is_module(h, m.base) || static_cast<int>(m.psi.size()) != nj) return false;
  std::vector<ExactMatrix> psi_inv(nj);
  for (int j = 0; j < nj; ++j) {
    try {
      psi_inv[j] = inverse(m.psi[j]);
    } catch (const ArithmeticError&) {
      return false;
    }
  }
  for (int j = 0; j < nj; ++j) {
    for (Index a = 0; a < h.dim(); ++a) {
      if (m.psi[j] * act(m.base, dec.phi[J.inv(j)][a]) != m.base.action[a] * m.psi[j]) return false;
    }
  }
  for (int i = 0; i < nj; ++i) {
    for (int j = 0; j < nj; ++j) {
      const ExactMatrix lhs = psi_inv[J.inv(i)] * psi_inv[J.inv(j)];
      if (lhs != act(m.base, dec.coherence(i, j)) * psi_inv[J.inv(J.mul(i, j))]) return false;
    }
  }
  return true;
}

AlgebraModule to_orbifold_module(const HopfData& h, const JHopfDecoration& dec, const EquivariantModule& m) {
  const FiniteGroup& J = *dec.J;
  const int nj = J.order();
  std::vector<ExactMatrix> psi_inv(nj);
  for (int j = 0; j < nj; ++j) psi_inv[j] = inverse(m.psi[j]);
  AlgebraModule out;
  out.dim = m.base.dim;
  out.action.resize(h.dim() * nj);
  for (Index a = 0; a < h.dim(); ++a) {
    for (int j = 0; j < nj; ++j) out.action[orbifold_index(dec, a, j)] = m.base.action[a] * psi_inv[J.inv(j)];
  }
  return out;
}

EquivariantModule from_orbifold_module(const HopfData& h, const JHopfDecoration& dec, const AlgebraModule& m) {
  const FiniteGroup& J = *dec.J;
  EquivariantModule out;
  out.base.dim = m.dim;
  for (Index a = 0; a < h.dim(); ++a) out.base.action.push_back(m.action[orbifold_index(dec, a, 0)]);
  for (int j = 0; j < J.order(); ++j) out.psi.push_back(inverse(act(m, lift(dec, h.unit(), J.inv(j)))));
  return out;
}

AlgebraModule cyclic_module(const HopfData& h, const Vec& v) {
  const std::size_t d = h.dim();
  std::vector<Vec> span;
  ExactMatrix basis;
  std::size_t r = 0;
  for (Index a = 0; a < d; ++a) {
    Vec w = h.multiply(basis_vector(a), v);
    ExactMatrix trial(d, r + 1);
    for (std::size_t c = 0; c < r; ++c) {
      for (std::size_t row = 0; row < d; ++row) trial(row, c) = basis(row, c);
    }
    for (const auto& [k, c] : w) trial(k, r) = c;
    if (rank(trial) == r + 1) {
      basis = trial;
      ++r;
    }
  }
  AlgebraModule m;
  m.dim = r;
  for (Index a = 0; a < d; ++a) m.action.push_back(solve(basis, h.left_multiplication(basis_vector(a)) * basis));
  return m;
}

SplittingSearch search_splitting(const HopfData& h, const JHopfDecoration& dec, const std::vector<Vec>& candidates,
                                 std::size_t budget) {
  const FiniteGroup& J = *dec.J;
  const int nj = J.order();
  const HopfData orb = orbifold_algebra(h, dec);
  std::vector<int> grouplike;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const Vec& u = candidates[k];
    if (h.comultiply(u) == tensor(u, u) && h.counit(u) == Cyclotomic(1)) grouplike.push_back(static_cast<int>(k));
  }
  SplittingSearch res{SplittingSearch::Outcome::none_among_candidates, {}, 0};
  int unit_pos = -1;
  for (int k : grouplike) {
    if (candidates[k] == h.unit()) unit_pos = k;
  }
  if (unit_pos < 0 || (grouplike.empty() && nj > 1)) return res;
  std::vector<std::size_t> odo(nj, 0);
  while (true) {
    if (res.tried >= budget) {
      res.outcome = SplittingSearch::Outcome::budget_exhausted;
      return res;
    }
    ++res.tried;
    std::vector<Vec> img(nj);
    img[0] = lift(dec, h.unit(), 0);
    for (int j = 1; j < nj; ++j) img[j] = lift(dec, candidates[grouplike[odo[j]]], j);
    bool ok = true;
    for (int i = 1; i < nj && ok; ++i) {
      for (int j = 1; j < nj && ok; ++j) ok = orb.multiply(img[i], img[j]) == img[J.mul(i, j)];
    }
    if (ok) {
      res.outcome = SplittingSearch::Outcome::found;
      res.choice.assign(nj, unit_pos);
      for (int j = 1; j < nj; ++j) res.choice[j] = grouplike[odo[j]];
      return res;
    }
    int pos = 1;
    while (pos < nj && ++odo[pos] == grouplike.size()) odo[pos++] = 0;
    if (pos >= nj) return res;
  }
}

const char* to_string(SplittingSearch::Outcome o) {
  switch (o) {
    case SplittingSearch::Outcome::found:
      return "found";
    case SplittingSearch::Outcome::none_among_candidates:
      return "none_among_candidates";
    case SplittingSearch::Outcome::budget_exhausted:
      return "budget_exhausted";
  }
  return "?";
}

std::vector<Vec> kernel_grouplikes(const GroupExtension& ext) {
  std::vector<Vec> out;
  for (int g = 0; g < ext.G()->order(); ++g) {
    Vec v;
    for (int h = 0; h < ext.H()->order(); ++h) v.emplace(jdouble_index(ext, h, g), 1);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace equidouble
