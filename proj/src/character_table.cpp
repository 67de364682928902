#include "equidouble/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "equidouble/errors.hpp"
#include "equidouble/prime_field.hpp"

namespace equidouble {

namespace {

using i64 = std::int64_t;
using ModMatrix = std::vector<std::vector<i64>>;  // row-major, entries in [0,p)

i64 mod(i64 a, i64 p) {
  a %= p;
  return a < 0 ? a + p : a;
}

i64 inv_mod(i64 a, i64 p) { return PrimeFieldElement(p, a).inverse().value(); }

// Basis (as columns) of the kernel of m over F_p.
ModMatrix kernel_mod(ModMatrix m, i64 p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    i64 inv = inv_mod(m[r][c], p);
    for (auto& x : m[r]) x = x * inv % p;
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || m[q][c] == 0) continue;
      i64 f = m[q][c];
      for (std::size_t j = 0; j < cols; ++j) m[q][j] = mod(m[q][j] - f * m[r][j], p);
    }
    pivots.push_back(c);
    ++r;
  }
  ModMatrix basis;  // each entry a column vector of length cols
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<i64> v(cols, 0);
    v[f] = 1;
    for (std::size_t q = 0; q < pivots.size(); ++q) v[pivots[q]] = mod(-m[q][f], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Coordinates of target (a vector in span(basis)) with respect to basis.
std::vector<i64> coordinates_mod(const ModMatrix& basis, const std::vector<i64>& target, i64 p) {
  const std::size_t m = basis.size();
  const std::size_t k = target.size();
  ModMatrix aug(k, std::vector<i64>(m + 1));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < m; ++c) aug[r][c] = basis[c][r];
    aug[r][m] = target[r];
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < m && r < k; ++c) {
    std::size_t piv = r;
    while (piv < k && aug[piv][c] == 0) ++piv;
    if (piv == k) throw ArithmeticError("dependent basis in eigenspace split");
    std::swap(aug[piv], aug[r]);
    i64 inv = inv_mod(aug[r][c], p);
    for (auto& x : aug[r]) x = x * inv % p;
    for (std::size_t q = 0; q < k; ++q) {
      if (q == r || aug[q][c] == 0) continue;
      i64 f = aug[q][c];
      for (std::size_t j = 0; j <= m; ++j) aug[q][j] = mod(aug[q][j] - f * aug[r][j], p);
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t q = r; q < k; ++q) {
    if (aug[q][m] != 0) throw ArithmeticError("subspace is not invariant");
  }
  std::vector<i64> x(m);
  for (std::size_t q = 0; q < pivots.size(); ++q) x[pivots[q]] = aug[q][m];
  return x;
}

// Sort key: coefficient tuples over a common conductor.
std::vector<Rational> value_key(const std::vector<Cyclotomic>& row, int conductor) {
  std::vector<Rational> key;
  const int phi = totient(conductor);
  for (const auto& v : row) {
    Cyclotomic pv = v.promoted(conductor);
    auto cs = pv.coeffs();
    for (int i = 0; i < phi; ++i) key.push_back(i < static_cast<int>(cs.size()) ? cs[i] : Rational(0));
  }
  return key;
}

}  // namespace

CharacterTable character_table(const GroupPtr& gp, int order_bound) {
  const FiniteGroup& G = *gp;
  const int n = G.order();
  if (n > order_bound) {
    throw ResourceError("character table requested for |G| = " + std::to_string(n) + " above bound " +
                        std::to_string(order_bound));
  }
  const auto& cd = G.conjugacy();
  const int k = G.num_classes();
  const int e = G.exponent();

  // need p > 2 sqrt(n) so that degrees are determined by d^2 mod p
  i64 lower = 2;
  while (lower * lower <= 4 * static_cast<i64>(n)) ++lower;
  const i64 p = prime_congruent_one(e, lower - 1, 1'000'000);

  // class matrices (A_i)_{j,l} = #{x in C_i : x^{-1} z_l in C_j}
  std::vector<ModMatrix> A(k, ModMatrix(k, std::vector<i64>(k, 0)));
  for (int i = 0; i < k; ++i) {
    for (int l = 0; l < k; ++l) {
      const int z = cd.classes[l][0];
      for (int x : cd.classes[i]) A[i][G.class_of(G.mul(G.inv(x), z))][l] += 1;
    }
    for (auto& row : A[i]) {
      for (auto& v : row) v %= p;
    }
  }

  // split F_p^k into simultaneous eigenspaces
  ModMatrix identity_basis(k, std::vector<i64>(k, 0));
  for (int i = 0; i < k; ++i) identity_basis[i][i] = 1;
  std::vector<ModMatrix> spaces{identity_basis};
  for (int i = 1; i < k; ++i) {
    std::vector<ModMatrix> next;
    for (auto& B : spaces) {
      const std::size_t m = B.size();
      if (m == 1) {
        next.push_back(std::move(B));
        continue;
      }
      // restricted operator M with A_i B = B M
      ModMatrix M(m, std::vector<i64>(m));
      for (std::size_t c = 0; c < m; ++c) {
        std::vector<i64> img(k, 0);
        for (int r = 0; r < k; ++r) {
          i64 acc = 0;
          for (int l = 0; l < k; ++l) acc = (acc + A[i][r][l] * B[c][l]) % p;
          img[r] = acc;
        }
        auto coords = coordinates_mod(B, img, p);
        for (std::size_t r = 0; r < m; ++r) M[r][c] = coords[r];
      }
      std::size_t found = 0;
      for (i64 lambda = 0; lambda < p && found < m; ++lambda) {
        ModMatrix shifted = M;
        for (std::size_t r = 0; r < m; ++r) shifted[r][r] = mod(shifted[r][r] - lambda, p);
        auto ker = kernel_mod(shifted, p);
        if (ker.empty()) continue;
        ModMatrix piece;
        for (const auto& v : ker) {
          std::vector<i64> w(k, 0);
          for (std::size_t c = 0; c < m; ++c) {
            if (v[c] == 0) continue;
            for (int r = 0; r < k; ++r) w[r] = (w[r] + v[c] * B[c][r]) % p;
          }
          piece.push_back(std::move(w));
        }
        found += piece.size();
        next.push_back(std::move(piece));
      }
      if (found != m) throw ArithmeticError("class matrix is not diagonalizable over F_" + std::to_string(p));
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != k) {
    throw ArithmeticError("class matrices did not separate the characters");
  }

  const i64 z = primitive_root_of_unity(p, e);
  std::vector<int> inverse_class(k);
  for (int l = 0; l < k; ++l) inverse_class[l] = G.class_of(G.inv(cd.classes[l][0]));

  struct Row {
    int degree;
    std::vector<Cyclotomic> values;
  };
  std::vector<Row> rows;
  for (const auto& space : spaces) {
    std::vector<i64> v = space[0];
    if (v[0] == 0) throw ArithmeticError("central character with zero identity entry");
    const i64 norm = inv_mod(v[0], p);
    for (auto& x : v) x = x * norm % p;
    i64 s = 0;
    for (int l = 0; l < k; ++l) {
      s = (s + v[l] * v[inverse_class[l]] % p * inv_mod(static_cast<i64>(cd.classes[l].size()) % p, p)) % p;
    }
    const i64 d2 = static_cast<i64>(n) % p * inv_mod(s, p) % p;
    int degree = 0;
    for (int d = 1; d * d <= n; ++d) {
      if (static_cast<i64>(d) * d % p == d2) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw ArithmeticError("no character degree matches d^2 mod p");
    std::vector<i64> chi_p(k);
    for (int l = 0; l < k; ++l) {
      chi_p[l] = degree * v[l] % p * inv_mod(static_cast<i64>(cd.classes[l].size()) % p, p) % p;
    }
    Row row{degree, {}};
    for (int l = 0; l < k; ++l) {
      const int g = cd.classes[l][0];
      const int o = G.element_order(g);
      const i64 zo = PrimeFieldElement(p, z).pow(e / o).value();
      std::vector<Rational> coeffs(e);
      for (int kk = 0; kk < o; ++kk) {
        i64 acc = 0;
        for (int t = 0; t < o; ++t) {
          const i64 val = chi_p[G.class_of(G.power(g, t))];
          acc = (acc + val * PrimeFieldElement(p, zo).pow(-static_cast<i64>(kk) * t).value()) % p;
        }
        const i64 mult = acc * inv_mod(o % p, p) % p;
        if (mult > degree) throw ArithmeticError("eigenvalue multiplicity out of range while lifting");
        coeffs[static_cast<std::size_t>(kk) * (e / o)] += mult;
      }
      row.values.emplace_back(e, std::move(coeffs));
    }
    rows.push_back(std::move(row));
  }

  auto is_trivial = [](const Row& r) {
    return std::all_of(r.values.begin(), r.values.end(), [](const Cyclotomic& c) { return c.is_one(); });
  };
  std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    bool ta = is_trivial(a);
    bool tb = is_trivial(b);
    if (ta != tb) return ta;
    return value_key(a.values, e) < value_key(b.values, e);
  });

  CharacterTable t;
  t.group = gp;
  t.prime = p;
  for (auto& r : rows) {
    t.degrees.push_back(r.degree);
    t.values.push_back(std::move(r.values));
  }
  return t;
}

namespace {

using GroupAlgebraElement = std::vector<Cyclotomic>;

GroupAlgebraElement ga_multiply(const FiniteGroup& G, const GroupAlgebraElement& u, const GroupAlgebraElement& v) {
  GroupAlgebraElement r(G.order());
  for (int a = 0; a < G.order(); ++a) {
    if (u[a].is_zero()) continue;
    for (int b = 0; b < G.order(); ++b) {
      if (v[b].is_zero()) continue;
      r[G.mul(a, b)] += u[a] * v[b];
    }
  }
  return r;
}

}  // namespace

std::vector<ExactMatrix> irrep_matrices(const CharacterTable& table, int irrep) {
  const FiniteGroup& G = *table.group;
  const int n = G.order();
  const int d = table.degrees.at(irrep);
  std::vector<ExactMatrix> out;
  if (d == 1) {
    for (int g = 0; g < n; ++g) out.push_back(ExactMatrix(1, 1, {table.value(irrep, g)}));
    return out;
  }

  // cyclic subgroup <c> with a linear character psi of multiplicity one in chi
  int c = -1;
  int psi_k = -1;
  for (int cand = 1; cand < n && c < 0; ++cand) {
    const int o = G.element_order(cand);
    for (int kk = 0; kk < o; ++kk) {
      Cyclotomic m;
      for (int t = 0; t < o; ++t) {
        m += table.value(irrep, G.power(cand, t)) * Cyclotomic::root_of_unity(o, -static_cast<long>(kk) * t);
      }
      m /= Cyclotomic(o);
      if (m.is_one()) {
        c = cand;
        psi_k = kk;
        break;
      }
    }
  }
  if (c < 0) throw ConstructionError("no cyclic subgroup character of multiplicity one for this irreducible");

  const int o = G.element_order(c);
  GroupAlgebraElement e_chi(n);
  for (int g = 0; g < n; ++g) {
    e_chi[g] = table.value(irrep, G.inv(g)) * Cyclotomic(make_rational(d, n));
  }
  GroupAlgebraElement e_psi(n);
  for (int t = 0; t < o; ++t) {
    e_psi[G.power(c, t)] += Cyclotomic::root_of_unity(o, -static_cast<long>(psi_k) * t) * Cyclotomic(make_rational(1, o));
  }
  const GroupAlgebraElement x = ga_multiply(G, e_chi, e_psi);

  // basis g_k . x of the left ideal, chosen greedily
  auto translate = [&](int g, const GroupAlgebraElement& y) {
    GroupAlgebraElement r(n);
    for (int h = 0; h < n; ++h) r[G.mul(g, h)] = y[h];
    return r;
  };
  std::vector<GroupAlgebraElement> basis;
  for (int g = 0; g < n && static_cast<int>(basis.size()) < d; ++g) {
    auto y = translate(g, x);
    ExactMatrix m(n, basis.size() + 1);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      for (int r = 0; r < n; ++r) m(r, b) = basis[b][r];
    }
    for (int r = 0; r < n; ++r) m(r, basis.size()) = y[r];
    if (rank(m) == basis.size() + 1) basis.push_back(std::move(y));
  }
  if (static_cast<int>(basis.size()) != d) throw ArithmeticError("left ideal has the wrong dimension");

  // pivot rows P with B_P invertible
  ExactMatrix bt(d, n);
  for (int b = 0; b < d; ++b) {
    for (int r = 0; r < n; ++r) bt(b, r) = basis[b][r];
  }
  std::vector<int> pivots;
  {
    for (int r = 0; r < n && static_cast<int>(pivots.size()) < d; ++r) {
      ExactMatrix trial(pivots.size() + 1, d);
      for (std::size_t q = 0; q < pivots.size(); ++q) {
        for (int b = 0; b < d; ++b) trial(q, b) = bt(b, pivots[q]);
      }
      for (int b = 0; b < d; ++b) trial(pivots.size(), b) = bt(b, r);
      if (rank(trial) == pivots.size() + 1) pivots.push_back(r);
    }
  }
  ExactMatrix bp(d, d);
  for (int q = 0; q < d; ++q) {
    for (int b = 0; b < d; ++b) bp(q, b) = bt(b, pivots[q]);
  }
  const ExactMatrix bp_inv = inverse(bp);
  for (int g = 0; g < n; ++g) {
    const int ginv = G.inv(g);
    ExactMatrix img(d, d);
    for (int q = 0; q < d; ++q) {
      for (int b = 0; b < d; ++b) img(q, b) = basis[b][G.mul(ginv, pivots[q])];
    }
    out.push_back(bp_inv * img);
  }
  return out;
}

}  // namespace equidouble
