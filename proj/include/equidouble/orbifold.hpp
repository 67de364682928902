#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equidouble/doubles.hpp"
#include "equidouble/hopf.hpp"
#include "equidouble/matrix.hpp"

namespace equidouble {

/// Basis a (x) j of A (x) K[J] sits at index a |J| + j.
Index orbifold_index(const JHopfDecoration& dec, Index a, int j);

/// (a(x)i)(b(x)j) = a phi_i(b) c_{ij} (x) ij, Delta(a(x)j) = sum (a_1(x)j)(x)(a_2(x)j),
/// eps(a(x)j) = eps(a), S(a(x)j) = c_{j^{-1},j}^{-1} phi_{j^{-1}}(S a) (x) j^{-1}.
/// Throws ConstructionError when some c_{j^{-1},j} is not invertible.
HopfData orbifold_algebra(const HopfData& h, const JHopfDecoration& dec);

/// R^ = sum over terms c (a (x) b) of R of c (a(x)1) (x) (1(x)i^{-1})^{-1}(b(x)1), where i is
/// the degree of a. theta^^{-1} = sum_j (1(x)j^{-1})^{-1}(theta_j^{-1} (x) 1).
RibbonDecoration orbifold_ribbon(const HopfData& h, const JHopfDecoration& dec, const RibbonDecoration& rib,
                                 const HopfData& orbifold);

/// Ordered pass/fail entries: bijective, product, coproduct, rmatrix, twist.
/// `section_table` replaces the section used inside Psi (not the one used to
/// build D^J(G)); it lists one H-element per J-element.
AxiomReport psi_check(const GroupExtension& ext, const std::optional<std::vector<int>>& section_table = std::nullopt);

/// Psi(delta_h (x) g (x) j) = delta_h (x) g s(j) as a permutation of basis indices
/// of the orbifold of D^J(G) onto those of D(H).
std::vector<Index> psi_permutation(const GroupExtension& ext, const std::vector<int>& section_table);

/// f is compatible with product, unit, coproduct, counit and antipode.
/// Entries are prefixed with `name`.
AxiomReport check_hopf_map(const HopfData& a, const HopfData& b, const LinearMap& f, const std::string& name);

/// A -> A^ -> K[J]: both maps are Hopf maps and the composite is eps(.) 1.
AxiomReport check_exactness(const HopfData& h, const JHopfDecoration& dec, const HopfData& orbifold);

/// dim Z(A) by exact linear algebra; for a semisimple algebra this is the
/// number of simple modules.
std::size_t center_dimension(const HopfData& h);

/// Module over an algebra given by basis-vector action matrices.
struct AlgebraModule {
  std::size_t dim = 0;
  std::vector<ExactMatrix> action;
};

/// A-module with isomorphisms psi_j: ^jM -> M.
struct EquivariantModule {
  AlgebraModule base;
  std::vector<ExactMatrix> psi;
};

bool is_module(const HopfData& h, const AlgebraModule& m);
/// psi_j rho(phi_{j^{-1}}(a)) = rho(a) psi_j and
/// psi_{i^{-1}}^{-1} psi_{j^{-1}}^{-1} = rho(c_{ij}) psi_{(ij)^{-1}}^{-1}.
bool is_equivariant_module(const HopfData& h, const JHopfDecoration& dec, const EquivariantModule& m);

/// rho~(a(x)j) = rho(a) (psi_{j^{-1}})^{-1}.
AlgebraModule to_orbifold_module(const HopfData& h, const JHopfDecoration& dec, const EquivariantModule& m);
/// rho(a) = rho~(a(x)1), psi_j = rho~(1(x)j^{-1})^{-1}.
EquivariantModule from_orbifold_module(const HopfData& h, const JHopfDecoration& dec, const AlgebraModule& m);

/// Submodule of the left regular module generated by v.
AlgebraModule cyclic_module(const HopfData& h, const Vec& v);

/// Looks for a Hopf inclusion K[J] -> A^ of the form j -> u_j (x) j with each
/// u_j drawn from `candidates` (u_1 must be the unit). Only a diagnostic: a
/// negative answer says nothing about other splittings.
struct SplittingSearch {
  enum class Outcome { found, none_among_candidates, budget_exhausted } outcome;
  std::vector<int> choice;  // candidate index per J-element when found
  std::size_t tried = 0;
};
SplittingSearch search_splitting(const HopfData& h, const JHopfDecoration& dec, const std::vector<Vec>& candidates,
                                 std::size_t budget);
const char* to_string(SplittingSearch::Outcome o);
/// 1 (x) g = sum_h delta_h (x) g for g in G, the obvious group-likes of D^J(G).
std::vector<Vec> kernel_grouplikes(const GroupExtension& ext);

}  // namespace equidouble
