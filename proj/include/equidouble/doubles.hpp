#pragma once

#include "equidouble/groups.hpp"
#include "equidouble/hopf.hpp"

namespace equidouble {

/// Group algebra K[G] with Delta(g) = g (x) g.
HopfData group_algebra(const FiniteGroup& g);

struct Double {
  HopfData hopf;
  RibbonDecoration ribbon;
};

/// D(H) = K(H) (x) K[H], basis delta_g (x) h at index g |H| + h.
/// R = sum (delta_g (x) 1) (x) (delta_h (x) g), theta = sum delta_g (x) g^{-1}.
Double drinfeld_double(const FiniteGroup& h);
Index double_index(const FiniteGroup& h, int g, int x);

struct EquivariantDouble {
  HopfData hopf;
  JHopfDecoration decoration;
  RibbonDecoration ribbon;
};

/// D^J(G) inside D(H): basis delta_h (x) g, h in H, g in G, at index h |G| + g.
/// Grading by pi(h); phi_j conjugates both factors by s(j); c_{ij} carries
/// s(i)s(j)s(ij)^{-1}. R is the sum of the graded components R_{i,j}; the
/// inverse twist has components sum_{h in H_j} delta_{s h s^{-1}} (x) s h,
/// s = s(j^{-1}).
EquivariantDouble equivariant_double(const GroupExtension& ext);
Index jdouble_index(const GroupExtension& ext, int h, int g);

/// Graded pieces used by tests and the orbifold construction.
Tensor2 jdouble_r_component(const GroupExtension& ext, int i, int j);
/// The stated inverse of R_{i,j}, with h_1^{-1} s(i^{-1})^{-1} in the second factor.
Tensor2 jdouble_r_component_inverse(const GroupExtension& ext, int i, int j);
Vec jdouble_theta_inv_component(const GroupExtension& ext, int j);
Vec jdouble_theta_component(const GroupExtension& ext, int j);
/// Unit of A_j: sum_{h in H_j} delta_h (x) 1.
Vec jdouble_degree_unit(const GroupExtension& ext, int j);

/// True iff product, unit, coproduct, counit and antipode of D^J(G) agree with
/// those of D(H) on the basis vectors whose second index lies in G.
bool restriction_check(const GroupExtension& ext);

}  // namespace equidouble
