#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "equidouble/groupoids.hpp"
#include "equidouble/groups.hpp"

namespace equidouble {

/// Generators x_1..x_r and relation words in signed 1-based generator indices
/// (-k stands for x_k^{-1}).
struct Presentation {
  int generators = 0;
  std::vector<std::vector<int>> relations;
};

/// Throws ConstructionError on out-of-range letters.
void validate(const Presentation& p);

/// Default cap on the number of candidate tuples in Hom enumeration.
inline constexpr std::uint64_t kDefaultHomBudget = 10'000'000;

/// All tuples in G^r satisfying the relations, lexicographic by generator
/// images. allowed[k], when nonempty, restricts the image of generator k.
/// Throws ResourceError when the candidate count exceeds the budget.
std::vector<std::vector<int>> enumerate_homs(const Presentation& p, const FiniteGroup& g,
                                             std::uint64_t budget = kDefaultHomBudget,
                                             const std::vector<std::vector<int>>& allowed = {});

std::uint64_t count_homs(const Presentation& p, const FiniteGroup& g, std::uint64_t budget = kDefaultHomBudget);

/// |Hom(pi_1, G)| / |G|.
Rational dw_invariant(const Presentation& p, const FiniteGroup& g, std::uint64_t budget = kDefaultHomBudget);

/// Hom(pi_1, G) // G under simultaneous conjugation; points in enumeration order.
ActionGroupoid hom_groupoid(const Presentation& p, const GroupPtr& g, std::uint64_t budget = kDefaultHomBudget);

/// Orbits of relation-satisfying 2g-tuples for the closed genus-g surface.
std::uint64_t surface_state_dim(int genus, const GroupPtr& g, std::uint64_t budget = kDefaultHomBudget);

/// Images in J of the generators; relations must map to 1 (checked).
struct TwistHom {
  std::vector<int> images;
};

TwistHom make_twist_hom(const Presentation& p, const FiniteGroup& j, std::vector<int> images);

/// Lifts mu: generators -> H with pi(mu(x_k)) = omega(x_k) satisfying the
/// relations, with G acting by simultaneous conjugation.
struct TwistedBundleGroupoid {
  ActionGroupoid groupoid;
  std::vector<std::vector<int>> lifts;  // H-indices per point
};

TwistedBundleGroupoid twisted_bundle_groupoid(const Presentation& p, const GroupExtension& ext, const TwistHom& omega,
                                              std::uint64_t budget = kDefaultHomBudget);

/// Cover nerve: oriented edges labelled by J-elements and explicitly listed
/// triangles (a,b,c) whose edges (a,b), (b,c), (a,c) must be present and
/// satisfy j_ab j_bc = j_ac.
struct CoverNerve {
  struct Edge {
    int from;
    int to;
    int j;
  };
  int vertices = 0;
  std::vector<Edge> edges;
  std::vector<std::array<int, 3>> triangles;
};

void validate(const CoverNerve& nerve, const FiniteGroup& j);

struct CechResult {
  std::vector<std::vector<int>> classes;  // representative cocycle per class, G-element per edge
  std::uint64_t count = 0;
  std::uint64_t cocycles = 0;
};

/// Families g_e in G on edges with g_ab rho_{j_ab}(g_bc) c_{j_ab, j_bc} = g_ac on
/// every triangle, modulo g'_ab = k_a g_ab rho_{j_ab}(k_b)^{-1}. Representatives
/// are the smallest cocycle of each class in lexicographic order.
CechResult twisted_cech_h1(const CoverNerve& nerve, const WeakAction& wa, std::uint64_t budget = kDefaultHomBudget);

/// Circle covered by three arcs: edges (0,1), (1,2), (2,0) with the monodromy
/// on the last edge, no triangles.
CoverNerve circle_nerve(int monodromy);
/// Single vertex, no edges.
CoverNerve point_nerve();

Presentation sphere_presentation();        // S^3: trivial group
Presentation s2xs1_presentation();         // Z
Presentation torus_presentation();         // Z^2
Presentation three_torus_presentation();   // Z^3
Presentation surface_presentation(int genus);
Presentation circle_presentation();        // Z, no relations

}  // namespace equidouble
