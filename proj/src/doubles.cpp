#include "equidouble/doubles.hpp"

#include "equidouble/errors.hpp"

namespace equidouble {

HopfData group_algebra(const FiniteGroup& g) {
  const int n = g.order();
  HopfStructure s;
  s.mult.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    s.labels.push_back(g.label(a));
    for (int b = 0; b < n; ++b) s.mult[a * n + b] = basis_vector(g.mul(a, b));
    s.comult.push_back(Tensor2{{{a, a}, Cyclotomic(1)}});
    s.counit.emplace_back(1);
    s.antipode.push_back(basis_vector(g.inv(a)));
  }
  s.unit = basis_vector(0);
  return HopfData(std::move(s));
}

Index double_index(const FiniteGroup& h, int g, int x) { return static_cast<Index>(g * h.order() + x); }

Double drinfeld_double(const FiniteGroup& H) {
  const int n = H.order();
  const auto idx = [&](int g, int x) { return double_index(H, g, x); };
  HopfStructure s;
  const std::size_t d = static_cast<std::size_t>(n) * n;
  s.mult.resize(d * d);
  for (int g = 0; g < n; ++g) {
    for (int x = 0; x < n; ++x) {
      s.labels.push_back("d" + H.label(g) + "*" + H.label(x));
      for (int g2 = 0; g2 < n; ++g2) {
        for (int x2 = 0; x2 < n; ++x2) {
          if (g == H.conj(x, g2)) s.mult[idx(g, x) * d + idx(g2, x2)] = basis_vector(idx(g, H.mul(x, x2)));
        }
      }
      Tensor2 t;
      for (int g1 = 0; g1 < n; ++g1) t.emplace(std::make_pair(idx(g1, x), idx(H.mul(H.inv(g1), g), x)), 1);
      s.comult.push_back(std::move(t));
      s.counit.emplace_back(g == 0 ? 1 : 0);
      const int xi = H.inv(x);
      s.antipode.push_back(basis_vector(idx(H.conj(xi, H.inv(g)), xi)));
    }
  }
  for (int g = 0; g < n; ++g) s.unit.emplace(idx(g, 0), 1);
  HopfData hopf(std::move(s));

  RibbonDecoration rib;
  for (int g = 0; g < n; ++g) {
    for (int x = 0; x < n; ++x) rib.R.emplace(std::make_pair(idx(g, 0), idx(x, g)), 1);
    rib.theta.emplace(idx(g, H.inv(g)), 1);
    rib.theta_inv.emplace(idx(g, g), 1);
  }
  return Double{std::move(hopf), std::move(rib)};
}

Index jdouble_index(const GroupExtension& ext, int h, int g) {
  return static_cast<Index>(h * ext.G()->order() + g);
}

namespace {

// G-index of an H-element known to lie in the kernel
int in_G(const GroupExtension& ext, int h) {
  const int g = ext.kernel_index(h);
  if (g < 0) throw ConstructionError("element expected in G lies outside the kernel; extension data is corrupted");
  return g;
}

}  // namespace

Tensor2 jdouble_r_component(const GroupExtension& ext, int i, int j) {
  const FiniteGroup& H = *ext.H();
  const int sigma = ext.s(ext.J()->inv(i));
  Tensor2 r;
  for (int h1 : ext.coset(i)) {
    const int g = in_G(ext, H.mul(sigma, h1));
    for (int h2 : ext.coset(j)) r.emplace(std::make_pair(jdouble_index(ext, h1, 0), jdouble_index(ext, h2, g)), 1);
  }
  return r;
}

Tensor2 jdouble_r_component_inverse(const GroupExtension& ext, int i, int j) {
  const FiniteGroup& H = *ext.H();
  const int sigma = ext.s(ext.J()->inv(i));
  Tensor2 r;
  for (int h1 : ext.coset(i)) {
    const int g = in_G(ext, H.mul(H.inv(h1), H.inv(sigma)));
    for (int h2 : ext.coset(j)) r.emplace(std::make_pair(jdouble_index(ext, h1, 0), jdouble_index(ext, h2, g)), 1);
  }
  return r;
}

Vec jdouble_theta_inv_component(const GroupExtension& ext, int j) {
  const FiniteGroup& H = *ext.H();
  const int sigma = ext.s(ext.J()->inv(j));
  Vec v;
  for (int h : ext.coset(j)) v.emplace(jdouble_index(ext, H.conj(sigma, h), in_G(ext, H.mul(sigma, h))), 1);
  return v;
}

Vec jdouble_theta_component(const GroupExtension& ext, int j) {
  const FiniteGroup& H = *ext.H();
  const int sigma = ext.s(ext.J()->inv(j));
  Vec v;
  for (int h : ext.coset(j)) v.emplace(jdouble_index(ext, h, in_G(ext, H.inv(H.mul(sigma, h)))), 1);
  return v;
}

Vec jdouble_degree_unit(const GroupExtension& ext, int j) {
  Vec v;
  for (int h : ext.coset(j)) v.emplace(jdouble_index(ext, h, 0), 1);
  return v;
}

EquivariantDouble equivariant_double(const GroupExtension& ext) {
  const FiniteGroup& H = *ext.H();
  const FiniteGroup& G = *ext.G();
  const FiniteGroup& J = *ext.J();
  const int nh = H.order();
  const int ng = G.order();
  const int nj = J.order();
  const auto idx = [&](int h, int g) { return jdouble_index(ext, h, g); };
  const std::size_t d = static_cast<std::size_t>(nh) * ng;

  HopfStructure s;
  s.mult.resize(d * d);
  for (int h = 0; h < nh; ++h) {
    for (int g = 0; g < ng; ++g) {
      const int gh = ext.to_H(g);
      s.labels.push_back("d" + H.label(h) + "*" + H.label(gh));
      for (int h2 = 0; h2 < nh; ++h2) {
        if (h != H.conj(gh, h2)) continue;
        for (int g2 = 0; g2 < ng; ++g2) s.mult[idx(h, g) * d + idx(h2, g2)] = basis_vector(idx(h, G.mul(g, g2)));
      }
      Tensor2 t;
      for (int h1 = 0; h1 < nh; ++h1) t.emplace(std::make_pair(idx(h1, g), idx(H.mul(H.inv(h1), h), g)), 1);
      s.comult.push_back(std::move(t));
      s.counit.emplace_back(h == 0 ? 1 : 0);
      const int gi = G.inv(g);
      s.antipode.push_back(basis_vector(idx(H.conj(ext.to_H(gi), H.inv(h)), gi)));
    }
  }
  for (int h = 0; h < nh; ++h) s.unit.emplace(idx(h, 0), 1);
  HopfData hopf(std::move(s));

  JHopfDecoration dec;
  dec.J = ext.J();
  dec.grading.resize(d);
  for (int h = 0; h < nh; ++h) {
    for (int g = 0; g < ng; ++g) dec.grading[idx(h, g)] = ext.pi(h);
  }
  auto wa = extension_to_weak_action(ext);
  dec.phi.assign(nj, LinearMap(d));
  for (int j = 0; j < nj; ++j) {
    const int sj = ext.s(j);
    for (int h = 0; h < nh; ++h) {
      for (int g = 0; g < ng; ++g) dec.phi[j][idx(h, g)] = basis_vector(idx(H.conj(sj, h), wa.rho(j, g)));
    }
  }
  for (int i = 0; i < nj; ++i) {
    for (int j = 0; j < nj; ++j) {
      Vec c;
      for (int h = 0; h < nh; ++h) c.emplace(idx(h, wa.c(i, j)), 1);
      dec.c.push_back(std::move(c));
    }
  }

  RibbonDecoration rib;
  for (int i = 0; i < nj; ++i) {
    for (int j = 0; j < nj; ++j) {
      for (auto& [k, c] : jdouble_r_component(ext, i, j)) rib.R.emplace(k, c);
    }
    for (auto& [k, c] : jdouble_theta_component(ext, i)) rib.theta.emplace(k, c);
    for (auto& [k, c] : jdouble_theta_inv_component(ext, i)) rib.theta_inv.emplace(k, c);
  }
  return EquivariantDouble{std::move(hopf), std::move(dec), std::move(rib)};
}

bool restriction_check(const GroupExtension& ext) {
  const FiniteGroup& H = *ext.H();
  const int nh = H.order();
  const int ng = ext.G()->order();
  auto dh = drinfeld_double(H).hopf;
  auto dj = equivariant_double(ext).hopf;
  LinearMap embed(dj.dim());
  for (int h = 0; h < nh; ++h) {
    for (int g = 0; g < ng; ++g) embed[jdouble_index(ext, h, g)] = basis_vector(double_index(H, h, ext.to_H(g)));
  }
  if (apply_map(embed, dj.unit()) != dh.unit()) return false;
  for (Index a = 0; a < dj.dim(); ++a) {
    const Vec ea = apply_map(embed, basis_vector(a));
    const Index ia = ea.begin()->first;
    for (Index b = 0; b < dj.dim(); ++b) {
      const Index ib = apply_map(embed, basis_vector(b)).begin()->first;
      if (apply_map(embed, dj.mult(a, b)) != dh.mult(ia, ib)) return false;
    }
    if (apply_map(embed, embed, dj.comult(a)) != dh.comult(ia)) return false;
    if (dj.counit(a) != dh.counit(ia)) return false;
    if (apply_map(embed, dj.antipode(a)) != dh.antipode(ia)) return false;
  }
  return true;
}

}  // namespace equidouble
