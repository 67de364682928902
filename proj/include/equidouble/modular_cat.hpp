#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "equidouble/doubles.hpp"
#include "equidouble/groups.hpp"
#include "equidouble/hopf.hpp"
#include "equidouble/matrix.hpp"

namespace equidouble {

using ExtensionPtr = std::shared_ptr<const GroupExtension>;

/// H-graded vector space with a G-action, g.V_h in V_{ghg^{-1}}. Every basis
/// vector is homogeneous: grade[b] is its H-element.
struct GradedModule {
  ExtensionPtr ext;
  std::vector<int> grade;
  std::vector<ExactMatrix> action;  // per G-element
  std::string label;
  int orbit = -1;
  int irrep = -1;

  std::size_t dim() const { return grade.size(); }
  /// dim V_h
  int block_dim(int h) const;
  /// J-degree when all grades lie in one coset (0 for the zero module).
  std::optional<int> degree() const;
};

/// Throws ConstructionError describing the first violated module invariant.
void check_graded_module(const GradedModule& v);
/// m is grading-preserving and commutes with the G-action.
bool is_module_map(const GradedModule& source, const GradedModule& target, const ExactMatrix& m);
/// Basis of Hom(V, W) in the category.
std::vector<ExactMatrix> hom_space(const GradedModule& v, const GradedModule& w);

GradedModule unit_module(const ExtensionPtr& ext);
GradedModule direct_sum(const GradedModule& v, const GradedModule& w);
/// Basis v (x) w at index v dim(W) + w; grades multiply, g acts diagonally.
GradedModule fuse(const GradedModule& v, const GradedModule& w);
/// ^xV: (^xV)_h = V_{s h s^{-1}} with action rho(s g s^{-1}), s = s(x^{-1}).
GradedModule j_act(int x, const GradedModule& v);
/// (V^vee)_h = (V_{h^{-1}})^*, action rho(g^{-1})^T.
GradedModule dual(const GradedModule& v);
/// Homogeneous components, in J order, skipping empty ones.
std::vector<std::pair<int, GradedModule>> split_by_degree(const GradedModule& v);

/// alpha_{i,j}(V): ^i(^jV) -> ^{ij}V, the action of s((ij)^{-1}) s(i^{-1})^{-1} s(j^{-1})^{-1}.
ExactMatrix compositor(int i, int j, const GradedModule& v);

enum class BraidVariant {
  standard,
  /// s(j)^{-1} in place of s(j^{-1}); a deliberately wrong braiding that
  /// differs from the standard one when s(j)^{-1} != s(j^{-1}).
  uninverted_section,
};

/// c_{V,W}: V (x) W -> ^jW (x) V, v (x) w -> (s(j^{-1})h).w (x) v for v in V_h.
/// Throws UsageError when V is not homogeneous.
ExactMatrix braid(const GradedModule& v, const GradedModule& w, BraidVariant variant = BraidVariant::standard);
/// theta_V: V -> ^jV, v -> s(j^{-1})h.v for v in V_h.
ExactMatrix twist(const GradedModule& v);

/// Action of an element of D^J(G) (basis delta_h (x) g at h |G| + g): P_h rho(g).
ExactMatrix double_action(const GradedModule& v, const Vec& element);
/// flip o (action of t on V (x) W).
ExactMatrix flip_after_action(const GradedModule& v, const GradedModule& w, const Tensor2& t);

/// Simples of H//G in the order of the groupoid simple objects.
std::vector<GradedModule> simples_of_double(const ExtensionPtr& ext);
std::vector<GradedModule> simples_of_double(const GroupPtr& h);

struct DiagramResult {
  std::string diagram;
  std::vector<int> tuple;  // sample indices, then J-elements where relevant
  bool pass = true;
};

struct DiagramReport {
  std::vector<DiagramResult> results;
  bool all_pass() const;
  /// Number of instances and failures of one diagram.
  std::pair<std::size_t, std::size_t> tally(const std::string& diagram) const;
  const DiagramResult* first_failure(const std::string& diagram) const;
};

/// Diagrams checked on every ordered tuple of homogeneous samples:
/// braid_module_map, twist_module_map, hexagon_left, hexagon_right,
/// action_braiding, twist_braiding, twist_duality, twist_action.
DiagramReport check_equivariant_diagrams(const GroupExtension& ext, const std::vector<GradedModule>& sample,
                                         BraidVariant variant = BraidVariant::standard);

struct SMatrix {
  std::vector<std::string> labels;
  ExactMatrix entries;
  int group_order = 0;  // consumers may normalize by this
};

/// s_XY = tr(c_{Y,X} c_{X,Y}) on the simples of D(H), unnormalized.
/// Throws ResourceError when |H| > bound.
SMatrix s_matrix(const GroupPtr& h, int bound = 24);
/// Same entries from centralizer characters:
/// sum over g in K_a, h in K_b with gh = hg of chi(x_g^{-1} h x_g) chi'(y_h^{-1} g y_h).
SMatrix s_matrix_from_characters(const GroupPtr& h, int bound = 24);

struct ModularityVerdict {
  bool psi_isomorphism = false;
  bool s_invertible = false;
  Cyclotomic s_determinant;
  std::size_t simples = 0;
  bool orbifold_modular = false;
  /// Rests on the equivalence between J-modularity and modularity of the orbifold.
  bool j_modular_claim = false;
};

ModularityVerdict modularity_verdict(const GroupExtension& ext, int bound = 24);

}  // namespace equidouble
