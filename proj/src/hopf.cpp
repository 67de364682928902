#include "equidouble/hopf.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "equidouble/errors.hpp"
#include "equidouble/parallel.hpp"

namespace equidouble {

Vec basis_vector(Index i) { return Vec{{i, Cyclotomic(1)}}; }

namespace {

template <class Map, class Key>
void accumulate(Map& m, const Key& k, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

}  // namespace

void add_term(Vec& v, Index i, const Cyclotomic& c) { accumulate(v, i, c); }
void add_term(Tensor2& t, Index a, Index b, const Cyclotomic& c) { accumulate(t, std::make_pair(a, b), c); }
void add_term(Tensor3& t, const std::array<Index, 3>& k, const Cyclotomic& c) { accumulate(t, k, c); }

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (const auto& [i, c] : b) add_term(r, i, c);
  return r;
}

Vec scale(const Vec& a, const Cyclotomic& s) {
  Vec r;
  if (s.is_zero()) return r;
  for (const auto& [i, c] : a) r.emplace(i, c * s);
  return r;
}

Tensor2 tensor(const Vec& a, const Vec& b) {
  Tensor2 t;
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) t.emplace(std::make_pair(i, j), x * y);
  }
  return t;
}

Tensor2 flip(const Tensor2& t) {
  Tensor2 r;
  for (const auto& [k, c] : t) r.emplace(std::make_pair(k.second, k.first), c);
  return r;
}

Vec apply_map(const LinearMap& f, const Vec& v) {
  Vec r;
  for (const auto& [i, c] : v) {
    for (const auto& [j, d] : f.at(i)) add_term(r, j, c * d);
  }
  return r;
}

Tensor2 apply_map(const LinearMap& f, const LinearMap& g, const Tensor2& t) {
  Tensor2 r;
  for (const auto& [k, c] : t) {
    for (const auto& [a, x] : f.at(k.first)) {
      for (const auto& [b, y] : g.at(k.second)) add_term(r, a, b, c * x * y);
    }
  }
  return r;
}

HopfData::HopfData(HopfStructure s) : s_(std::move(s)) {
  const std::size_t d = s_.labels.size();
  if (d == 0) throw ConstructionError("Hopf algebra of dimension 0");
  if (s_.mult.size() != d * d || s_.comult.size() != d || s_.counit.size() != d || s_.antipode.size() != d) {
    throw ConstructionError("structure constant tables do not match the dimension");
  }
  auto in_range = [d](Index i) { return i < d; };
  for (const auto& v : s_.mult) {
    for (const auto& [i, c] : v) {
      if (!in_range(i)) throw ConstructionError("product index out of range");
    }
  }
  for (const auto& [i, c] : s_.unit) {
    if (!in_range(i)) throw ConstructionError("unit index out of range");
  }
  for (const auto& t : s_.comult) {
    for (const auto& [k, c] : t) {
      if (!in_range(k.first) || !in_range(k.second)) throw ConstructionError("coproduct index out of range");
    }
  }
  for (const auto& v : s_.antipode) {
    for (const auto& [i, c] : v) {
      if (!in_range(i)) throw ConstructionError("antipode index out of range");
    }
  }
}

Vec HopfData::multiply(const Vec& a, const Vec& b) const {
  Vec r;
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) {
      const Cyclotomic xy = x * y;
      for (const auto& [k, z] : mult(i, j)) add_term(r, k, xy * z);
    }
  }
  return r;
}

Tensor2 HopfData::multiply(const Tensor2& a, const Tensor2& b) const {
  Tensor2 r;
  for (const auto& [ka, x] : a) {
    for (const auto& [kb, y] : b) {
      const auto& p = mult(ka.first, kb.first);
      if (p.empty()) continue;
      const auto& q = mult(ka.second, kb.second);
      if (q.empty()) continue;
      const Cyclotomic xy = x * y;
      for (const auto& [i, u] : p) {
        for (const auto& [j, v] : q) add_term(r, i, j, xy * u * v);
      }
    }
  }
  return r;
}

Tensor3 HopfData::multiply(const Tensor3& a, const Tensor3& b) const {
  Tensor3 r;
  for (const auto& [ka, x] : a) {
    for (const auto& [kb, y] : b) {
      const auto& p = mult(ka[0], kb[0]);
      const auto& q = mult(ka[1], kb[1]);
      const auto& s = mult(ka[2], kb[2]);
      if (p.empty() || q.empty() || s.empty()) continue;
      const Cyclotomic xy = x * y;
      for (const auto& [i, u] : p) {
        for (const auto& [j, v] : q) {
          for (const auto& [k, w] : s) add_term(r, {i, j, k}, xy * u * v * w);
        }
      }
    }
  }
  return r;
}

Tensor2 HopfData::comultiply(const Vec& a) const {
  Tensor2 r;
  for (const auto& [i, x] : a) {
    for (const auto& [k, c] : comult(i)) add_term(r, k.first, k.second, x * c);
  }
  return r;
}

Cyclotomic HopfData::counit(const Vec& a) const {
  Cyclotomic r;
  for (const auto& [i, x] : a) r += x * counit(i);
  return r;
}

Vec HopfData::antipode(const Vec& a) const { return apply_map(s_.antipode, a); }

ExactMatrix HopfData::left_multiplication(const Vec& a) const {
  const std::size_t d = dim();
  ExactMatrix m(d, d);
  for (Index b = 0; b < d; ++b) {
    for (const auto& [k, c] : multiply(a, basis_vector(b))) m(k, b) += c;
  }
  return m;
}

Vec HopfData::inverse(const Vec& a) const {
  const std::size_t d = dim();
  ExactMatrix rhs(d, 1);
  for (const auto& [i, c] : unit()) rhs(i, 0) = c;
  ExactMatrix x;
  try {
    x = solve(left_multiplication(a), rhs);
  } catch (const ArithmeticError&) {
    throw ArithmeticError("element has no right inverse (singular left-multiplication system)");
  }
  Vec r;
  for (Index i = 0; i < d; ++i) add_term(r, i, x(i, 0));
  if (multiply(r, a) != unit()) throw ArithmeticError("right inverse is not a left inverse");
  return r;
}

Tensor2 HopfData::inverse(const Tensor2& t) const {
  const std::size_t d = dim();
  const std::size_t dd = d * d;
  ExactMatrix m(dd, dd);
  for (Index a = 0; a < d; ++a) {
    for (Index b = 0; b < d; ++b) {
      Tensor2 e{{{a, b}, Cyclotomic(1)}};
      for (const auto& [k, c] : multiply(t, e)) m(k.first * d + k.second, a * d + b) += c;
    }
  }
  ExactMatrix rhs(dd, 1);
  for (const auto& [i, x] : unit()) {
    for (const auto& [j, y] : unit()) rhs(i * d + j, 0) += x * y;
  }
  ExactMatrix x;
  try {
    x = solve(m, rhs);
  } catch (const ArithmeticError&) {
    throw ArithmeticError("tensor has no inverse");
  }
  Tensor2 r;
  for (std::size_t k = 0; k < dd; ++k) add_term(r, static_cast<Index>(k / d), static_cast<Index>(k % d), x(k, 0));
  if (multiply(r, t) != tensor(unit(), unit())) throw ArithmeticError("tensor right inverse is not a left inverse");
  return r;
}

Tensor3 HopfData::comultiply_left(const Tensor2& t) const {
  Tensor3 r;
  for (const auto& [k, c] : t) {
    for (const auto& [p, x] : comult(k.first)) add_term(r, {p.first, p.second, k.second}, c * x);
  }
  return r;
}

Tensor3 HopfData::comultiply_right(const Tensor2& t) const {
  Tensor3 r;
  for (const auto& [k, c] : t) {
    for (const auto& [p, x] : comult(k.second)) add_term(r, {k.first, p.first, p.second}, c * x);
  }
  return r;
}

const char* to_string(AxiomStatus s) {
  switch (s) {
    case AxiomStatus::pass:
      return "pass";
    case AxiomStatus::fail:
      return "fail";
    case AxiomStatus::sampled:
      return "sampled";
  }
  return "?";
}

bool all_pass(const AxiomReport& r) {
  return std::none_of(r.begin(), r.end(), [](const AxiomResult& a) { return a.status == AxiomStatus::fail; });
}

const AxiomResult* first_failure(const AxiomReport& r) {
  for (const auto& a : r) {
    if (a.status == AxiomStatus::fail) return &a;
  }
  return nullptr;
}

AxiomResult run_probe(const std::string& name, std::size_t n, const Probe& probe, const CheckOptions& opt,
                      bool sampleable) {
  AxiomResult res{name, AxiomStatus::pass, {}};
  std::vector<std::size_t> points;
  const bool sampling = opt.sampled && sampleable && n > opt.samples;
  if (sampling) {
    std::mt19937_64 rng(opt.seed ^ std::hash<std::string>{}(name));
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < opt.samples; ++i) points.push_back(pick(rng));
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
  } else {
    points.resize(n);
    for (std::size_t i = 0; i < n; ++i) points[i] = i;
  }
  std::vector<std::optional<Witness>> found(points.size());
  parallel_for(points.size(), [&](std::size_t k) { found[k] = probe(points[k]); });
  for (auto& f : found) {
    if (f) {
      res.status = AxiomStatus::fail;
      res.witness = std::move(*f);
      return res;
    }
  }
  if (sampling) res.status = AxiomStatus::sampled;
  return res;
}

namespace {

AxiomResult single(const std::string& name, const std::optional<Witness>& w) {
  return w ? AxiomResult{name, AxiomStatus::fail, *w} : AxiomResult{name, AxiomStatus::pass, {}};
}

Tensor2 unit2(const HopfData& h) { return tensor(h.unit(), h.unit()); }

}  // namespace

AxiomReport check_hopf_axioms(const HopfData& h, const CheckOptions& opt) {
  const std::size_t d = h.dim();
  AxiomReport rep;
  const auto I = [](std::size_t x) { return static_cast<Index>(x); };

  rep.push_back(run_probe("associativity", d * d * d, [&](std::size_t k) -> std::optional<Witness> {
    const Index a = I(k / (d * d)), b = I(k / d % d), c = I(k % d);
    if (h.multiply(h.mult(a, b), basis_vector(c)) != h.multiply(basis_vector(a), h.mult(b, c))) return Witness{a, b, c};
    return std::nullopt;
  }, opt));
  rep.push_back(run_probe("unit", d, [&](std::size_t a) -> std::optional<Witness> {
    const Vec e = basis_vector(I(a));
    if (h.multiply(h.unit(), e) != e || h.multiply(e, h.unit()) != e) return Witness{static_cast<std::int64_t>(a)};
    return std::nullopt;
  }, opt, false));
  rep.push_back(run_probe("coassociativity", d, [&](std::size_t a) -> std::optional<Witness> {
    const auto& t = h.comult(I(a));
    if (h.comultiply_left(t) != h.comultiply_right(t)) return Witness{static_cast<std::int64_t>(a)};
    return std::nullopt;
  }, opt, false));
  rep.push_back(run_probe("counit", d, [&](std::size_t a) -> std::optional<Witness> {
    Vec left, right;
    for (const auto& [k, c] : h.comult(I(a))) {
      add_term(left, k.second, c * h.counit(k.first));
      add_term(right, k.first, c * h.counit(k.second));
    }
    const Vec e = basis_vector(I(a));
    if (left != e || right != e) return Witness{static_cast<std::int64_t>(a)};
    return std::nullopt;
  }, opt, false));
  rep.push_back(run_probe("comultiplication_multiplicative", d * d, [&](std::size_t k) -> std::optional<Witness> {
    const Index a = I(k / d), b = I(k % d);
    if (h.comultiply(h.mult(a, b)) != h.multiply(h.comult(a), h.comult(b))) return Witness{a, b};
    return std::nullopt;
  }, opt));
  rep.push_back(run_probe("counit_multiplicative", d * d, [&](std::size_t k) -> std::optional<Witness> {
    const Index a = I(k / d), b = I(k % d);
    if (h.counit(h.mult(a, b)) != h.counit(a) * h.counit(b)) return Witness{a, b};
    return std::nullopt;
  }, opt));
  rep.push_back(single("comultiplication_unit",
                       h.comultiply(h.unit()) == unit2(h) ? std::nullopt : std::optional<Witness>(Witness{})));
  rep.push_back(single("counit_unit", h.counit(h.unit()).is_one() ? std::nullopt : std::optional<Witness>(Witness{})));
  rep.push_back(run_probe("antipode", d, [&](std::size_t a) -> std::optional<Witness> {
    Vec left, right;
    for (const auto& [k, c] : h.comult(I(a))) {
      left = add(left, scale(h.multiply(h.antipode(k.first), basis_vector(k.second)), c));
      right = add(right, scale(h.multiply(basis_vector(k.first), h.antipode(k.second)), c));
    }
    const Vec expected = scale(h.unit(), h.counit(I(a)));
    if (left != expected || right != expected) return Witness{static_cast<std::int64_t>(a)};
    return std::nullopt;
  }, opt, false));
  rep.push_back(run_probe("antipode_antihomomorphism", d * d, [&](std::size_t k) -> std::optional<Witness> {
    const Index a = I(k / d), b = I(k % d);
    if (h.antipode(h.mult(a, b)) != h.multiply(h.antipode(b), h.antipode(a))) return Witness{a, b};
    return std::nullopt;
  }, opt));
  return rep;
}

JHopfDecoration trivial_decoration(const HopfData& h) {
  JHopfDecoration dec;
  dec.J = cyclic_group(1, "Z1");
  dec.grading.assign(h.dim(), 0);
  LinearMap id(h.dim());
  for (Index i = 0; i < h.dim(); ++i) id[i] = basis_vector(i);
  dec.phi = {id};
  dec.c = {h.unit()};
  return dec;
}

namespace {

std::optional<int> degree_of(const JHopfDecoration& dec, const Vec& v) {
  std::optional<int> deg;
  for (const auto& [i, c] : v) {
    if (deg && *deg != dec.grading[i]) return -1;
    deg = dec.grading[i];
  }
  return deg;
}

}  // namespace

AxiomReport check_jhopf_axioms(const HopfData& h, const JHopfDecoration& dec, const CheckOptions& opt) {
  const std::size_t d = h.dim();
  const FiniteGroup& J = *dec.J;
  const int nj = J.order();
  const auto I = [](std::size_t x) { return static_cast<Index>(x); };
  if (dec.grading.size() != d || static_cast<int>(dec.phi.size()) != nj ||
      dec.c.size() != static_cast<std::size_t>(nj) * nj) {
    throw ConstructionError("J-decoration does not match the algebra or J");
  }
  for (const auto& f : dec.phi) {
    if (f.size() != d) throw ConstructionError("phi_j has the wrong size");
  }
  AxiomReport rep;
  const auto deg_ok = [&](const Vec& v, int expected) {
    auto dg = degree_of(dec, v);
    return !dg || *dg == expected;
  };

  rep.push_back(run_probe("grading_direct_sum_of_algebras", d * d, [&](std::size_t k) -> std::optional<Witness> {
    const Index a = I(k / d), b = I(k % d);
    const int da = dec.grading[a], db = dec.grading[b];
    const Vec& p = h.mult(a, b);
    if (da != db ? !p.empty() : !deg_ok(p, da)) return Witness{a, b};
    return std::nullopt;
  }, opt));
  rep.push_back(run_probe("grading_coproduct", d, [&](std::size_t a) -> std::optional<Witness> {
    for (const auto& [k, c] : h.comult(I(a))) {
      if (J.mul(dec.grading[k.first], dec.grading[k.second]) != dec.grading[a]) {
        return Witness{static_cast<std::int64_t>(a), k.first, k.second};
      }
    }
    return std::nullopt;
  }, opt, false));
  rep.push_back(run_probe("phi_grading", static_cast<std::size_t>(nj) * d, [&](std::size_t k) -> std::optional<Witness> {
    const int i = static_cast<int>(k / d);
    const Index a = I(k % d);
    const int target = J.mul(J.mul(i, dec.grading[a]), J.inv(i));
    if (!deg_ok(dec.phi[i][a], target)) return Witness{i, a};
    return std::nullopt;
  }, opt, false));
  rep.push_back(run_probe("phi_algebra_map", static_cast<std::size_t>(nj) * d * d, [&](std::size_t k) -> std::optional<Witness> {
    const int i = static_cast<int>(k / (d * d));
    const Index a = I(k / d % d), b = I(k % d);
    const auto& f = dec.phi[i];
    if (apply_map(f, h.mult(a, b)) != h.multiply(f[a], f[b])) return Witness{i, a, b};
    return std::nullopt;
  }, opt));
  rep.push_back(run_probe("phi_unit", nj, [&](std::size_t i) -> std::optional<Witness> {
    if (apply_map(dec.phi[i], h.unit()) != h.unit()) return Witness{static_cast<std::int64_t>(i)};
    return std::nullopt;
  }, opt, false));
  rep.push_back(run_probe("phi_coalgebra_map", static_cast<std::size_t>(nj) * d, [&](std::size_t k) -> std::optional<Witness> {
    const int i = static_cast<int>(k / d);
    const Index a = I(k % d);
    const auto& f = dec.phi[i];
    if (h.comultiply(f[a]) != apply_map(f, f, h.comult(a)) || h.counit(f[a]) != h.counit(a)) return Witness{i, a};
    if (h.antipode(f[a]) != apply_map(f, h.antipode(a))) return Witness{i, a};
    return std::nullopt;
  }, opt, false));
  rep.push_back(run_probe("phi_bijective", nj, [&](std::size_t i) -> std::optional<Witness> {
    ExactMatrix m(d, d);
    for (Index a = 0; a < d; ++a) {
      for (const auto& [b, c] : dec.phi[i][a]) m(b, a) = c;
    }
    if (rank(m) != d) return Witness{static_cast<std::int64_t>(i)};
    return std::nullopt;
  }, opt, false));
  rep.push_back(single("coherence_unit", dec.coherence(0, 0) == h.unit() ? std::nullopt : std::optional<Witness>(Witness{0, 0})));
  rep.push_back(run_probe("coherence_grouplike", static_cast<std::size_t>(nj) * nj, [&](std::size_t k) -> std::optional<Witness> {
    const Vec& c = dec.c[k];
    if (h.comultiply(c) != tensor(c, c) || !h.counit(c).is_one()) {
      return Witness{static_cast<std::int64_t>(k / nj), static_cast<std::int64_t>(k % nj)};
    }
    return std::nullopt;
  }, opt, false));
  rep.push_back(run_probe("phi_composition", static_cast<std::size_t>(nj) * nj * d, [&](std::size_t k) -> std::optional<Witness> {
    const int i = static_cast<int>(k / (nj * d));
    const int j = static_cast<int>(k / d % nj);
    const Index a = I(k % d);
    const Vec& c = dec.coherence(i, j);
    const Vec lhs = h.multiply(apply_map(dec.phi[i], dec.phi[j][a]), c);
    const Vec rhs = h.multiply(c, dec.phi[J.mul(i, j)][a]);
    if (lhs != rhs) return Witness{i, j, a};
    return std::nullopt;
  }, opt));
  rep.push_back(run_probe("coherence_cocycle", static_cast<std::size_t>(nj) * nj * nj, [&](std::size_t k) -> std::optional<Witness> {
    const int i = static_cast<int>(k / (nj * nj));
    const int j = static_cast<int>(k / nj % nj);
    const int l = static_cast<int>(k % nj);
    const Vec lhs = h.multiply(apply_map(dec.phi[i], dec.coherence(j, l)), dec.coherence(i, J.mul(j, l)));
    const Vec rhs = h.multiply(dec.coherence(i, j), dec.coherence(J.mul(i, j), l));
    if (lhs != rhs) return Witness{i, j, l};
    return std::nullopt;
  }, opt, false));
  rep.push_back(run_probe("counit_vanishes_off_degree_one", d, [&](std::size_t a) -> std::optional<Witness> {
    if (dec.grading[a] != 0 && !h.counit(I(a)).is_zero()) return Witness{static_cast<std::int64_t>(a)};
    return std::nullopt;
  }, opt, false));
  rep.push_back(run_probe("antipode_inverts_degree", d, [&](std::size_t a) -> std::optional<Witness> {
    if (!deg_ok(h.antipode(I(a)), J.inv(dec.grading[a]))) return Witness{static_cast<std::int64_t>(a)};
    return std::nullopt;
  }, opt, false));
  return rep;
}

AxiomReport check_ribbon_axioms(const HopfData& h, const RibbonDecoration& rib, const CheckOptions& opt) {
  const std::size_t d = h.dim();
  AxiomReport rep;
  const Tensor2& R = rib.R;
  const Tensor2 R21 = flip(R);
  auto embed = [](const Tensor2& t, int p, int q, const Vec& unit) {
    // place t in slots p < q of a triple tensor, unit in the remaining slot
    Tensor3 r;
    for (const auto& [k, c] : t) {
      for (const auto& [u, x] : unit) {
        std::array<Index, 3> key{};
        key[p] = k.first;
        key[q] = k.second;
        key[3 - p - q] = u;
        add_term(r, key, c * x);
      }
    }
    return r;
  };
  rep.push_back(run_probe("rmatrix_intertwines_coproduct", d, [&](std::size_t a) -> std::optional<Witness> {
    const Tensor2 da = h.comult(static_cast<Index>(a));
    if (h.multiply(flip(da), R) != h.multiply(R, da)) return Witness{static_cast<std::int64_t>(a)};
    return std::nullopt;
  }, opt));
  const Tensor3 R13 = embed(R, 0, 2, h.unit());
  const Tensor3 R23 = embed(R, 1, 2, h.unit());
  const Tensor3 R12 = embed(R, 0, 1, h.unit());
  rep.push_back(single("rmatrix_left_coproduct",
                       h.comultiply_left(R) == h.multiply(R13, R23) ? std::nullopt : std::optional<Witness>(Witness{})));
  rep.push_back(single("rmatrix_right_coproduct",
                       h.comultiply_right(R) == h.multiply(R13, R12) ? std::nullopt : std::optional<Witness>(Witness{})));
  LinearMap S(d), id(d);
  for (Index i = 0; i < d; ++i) {
    S[i] = h.antipode(i);
    id[i] = basis_vector(i);
  }
  const Tensor2 Rinv = apply_map(S, id, R);
  rep.push_back(single("rmatrix_inverse",
                       h.multiply(R, Rinv) == unit2(h) && h.multiply(Rinv, R) == unit2(h) ? std::nullopt
                                                                                           : std::optional<Witness>(Witness{})));
  rep.push_back(single("twist_inverse", h.multiply(rib.theta, rib.theta_inv) == h.unit() &&
                                                h.multiply(rib.theta_inv, rib.theta) == h.unit()
                                            ? std::nullopt
                                            : std::optional<Witness>(Witness{})));
  rep.push_back(run_probe("twist_central", d, [&](std::size_t a) -> std::optional<Witness> {
    const Vec e = basis_vector(static_cast<Index>(a));
    if (h.multiply(rib.theta, e) != h.multiply(e, rib.theta)) return Witness{static_cast<std::int64_t>(a)};
    return std::nullopt;
  }, opt));
  // Delta(theta) (R21 R) = theta (x) theta
  rep.push_back(single("twist_coproduct", h.multiply(h.comultiply(rib.theta), h.multiply(R21, R)) ==
                                                  tensor(rib.theta, rib.theta)
                                              ? std::nullopt
                                              : std::optional<Witness>(Witness{})));
  rep.push_back(single("twist_counit", h.counit(rib.theta).is_one() ? std::nullopt : std::optional<Witness>(Witness{})));
  rep.push_back(single("twist_antipode", h.antipode(rib.theta) == rib.theta ? std::nullopt : std::optional<Witness>(Witness{})));
  return rep;
}

HopfData restrict_to_basis(const HopfData& h, const std::vector<Index>& subset, bool project) {
  std::map<Index, Index> pos;
  for (std::size_t k = 0; k < subset.size(); ++k) pos[subset[k]] = static_cast<Index>(k);
  auto map_vec = [&](const Vec& v, bool drop_outside) {
    Vec r;
    for (const auto& [i, c] : v) {
      auto it = pos.find(i);
      if (it == pos.end() && drop_outside) continue;
      if (it == pos.end()) throw ConstructionError("span of the basis subset is not closed");
      r.emplace(it->second, c);
    }
    return r;
  };
  HopfStructure s;
  const std::size_t n = subset.size();
  for (Index a : subset) s.labels.push_back(h.label(a));
  s.mult.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) s.mult[a * n + b] = map_vec(h.mult(subset[a], subset[b]), false);
  }
  s.unit = map_vec(h.unit(), project);
  for (Index a : subset) {
    Tensor2 t;
    for (const auto& [k, c] : h.comult(a)) {
      auto i = pos.find(k.first);
      auto j = pos.find(k.second);
      if ((i == pos.end() || j == pos.end()) && project) continue;
      if (i == pos.end() || j == pos.end()) throw ConstructionError("span of the basis subset is not a subcoalgebra");
      t.emplace(std::make_pair(i->second, j->second), c);
    }
    s.comult.push_back(std::move(t));
    s.counit.push_back(h.counit(a));
    s.antipode.push_back(map_vec(h.antipode(a), false));
  }
  return HopfData(std::move(s));
}

}  // namespace equidouble
