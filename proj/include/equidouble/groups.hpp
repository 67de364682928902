#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace equidouble {

struct ConjugacyData {
  /// Classes ordered by smallest element; each class sorted, so classes[c][0]
  /// is its representative.
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
  /// Centralizer of classes[c][0], sorted.
  std::vector<std::vector<int>> centralizers;
};

/// Finite group given by its full multiplication table. Element 0 is the
/// identity. The table is validated as a group law on construction.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels = {},
                       std::string name = {});

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  /// g h g^{-1}
  int conj(int g, int h) const { return table_[table_[g][h]][inv_[g]]; }
  int power(int g, long k) const;
  int element_order(int g) const { return orders_[g]; }
  int exponent() const { return exponent_; }
  bool is_abelian() const;

  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::string& label(int g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  const ConjugacyData& conjugacy() const { return conj_; }
  int num_classes() const { return static_cast<int>(conj_.classes.size()); }
  int class_of(int g) const { return conj_.class_of[g]; }

  /// Subgroup generated by the given elements, sorted.
  std::vector<int> generated_subgroup(const std::vector<int>& gens) const;
  /// Greedy generating set: repeatedly adds the smallest element outside the
  /// current span.
  std::vector<int> generators() const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::vector<int> orders_;
  int exponent_ = 1;
  std::vector<std::string> labels_;
  std::string name_;
  ConjugacyData conj_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

bool same_table(const FiniteGroup& a, const FiniteGroup& b);

GroupPtr cyclic_group(int n, std::string name = {});
/// Closure of permutations of {0..n-1}, elements sorted lexicographically.
GroupPtr permutation_group(const std::vector<std::vector<int>>& generators, std::string name = {});
/// Pair (a, b) has index a * |B| + b.
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string name = {});

ConjugacyData conjugacy_data(const FiniteGroup& g);

struct Subgroup {
  GroupPtr group;
  std::vector<int> to_parent;  // sorted ascending
  int from_parent(int h) const;  // -1 if outside
};

/// Elements must form a subgroup (checked).
Subgroup make_subgroup(const FiniteGroup& parent, std::vector<int> elements);

class GroupHom {
 public:
  GroupHom(GroupPtr source, GroupPtr target, std::vector<int> images);
  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<int> images_;
};

/// 1 -> G -> H -> J -> 1 with a set-theoretic section s, s(1) = 1.
///
/// G is the kernel listed in increasing H-index; J is the quotient H/G with
/// cosets ordered by their smallest element.
class GroupExtension {
 public:
  /// kernel: H-indices of a normal subgroup. section: H-element per coset
  /// (in quotient order); empty picks the smallest element of each coset.
  GroupExtension(GroupPtr h, std::vector<int> kernel, std::vector<int> section = {}, std::string name = {});

  const GroupPtr& G() const { return G_; }
  const GroupPtr& H() const { return H_; }
  const GroupPtr& J() const { return J_; }
  const GroupHom& incl() const { return *incl_; }
  const GroupHom& proj() const { return *proj_; }
  int s(int j) const { return section_[j]; }
  const std::vector<int>& section() const { return section_; }
  const std::string& name() const { return name_; }

  /// G-index of an H-element of the kernel, -1 otherwise.
  int kernel_index(int h) const { return kernel_index_[h]; }
  /// H-index of a G-element.
  int to_H(int g) const { return (*incl_)(g); }
  int pi(int h) const { return (*proj_)(h); }
  /// H_j = pi^{-1}(j), sorted.
  const std::vector<int>& coset(int j) const { return cosets_[j]; }

  /// Same extension with a different section.
  GroupExtension with_section(std::vector<int> section) const;

 private:
  GroupPtr G_, H_, J_;
  std::shared_ptr<GroupHom> incl_, proj_;
  std::vector<int> section_;
  std::vector<int> kernel_index_;
  std::vector<std::vector<int>> cosets_;
  std::string name_;
};

/// Automorphisms rho_j of G and coherence elements c_{i,j} with
/// rho_i rho_j = Inn_{c_{i,j}} rho_{ij}, rho_i(c_{j,k}) c_{i,jk} = c_{i,j} c_{ij,k},
/// c_{1,1} = 1. Validated on construction.
class WeakAction {
 public:
  WeakAction(GroupPtr j, GroupPtr g, std::vector<std::vector<int>> rho, std::vector<int> c);

  const GroupPtr& J() const { return J_; }
  const GroupPtr& G() const { return G_; }
  int rho(int j, int g) const { return rho_[j][g]; }
  int c(int i, int j) const { return c_[i * J_->order() + j]; }
  const std::vector<std::vector<int>>& rho_table() const { return rho_; }
  const std::vector<int>& c_table() const { return c_; }
  bool is_strict() const;

 private:
  GroupPtr J_, G_;
  std::vector<std::vector<int>> rho_;
  std::vector<int> c_;
};

struct WeakActionIso {
  std::vector<int> h;  // h[j] in G
};

/// rho_j(g) = s(j) g s(j)^{-1}, c_{i,j} = s(i) s(j) s(ij)^{-1}.
WeakAction extension_to_weak_action(const GroupExtension& ext);

/// H = G x J as a set, (g,i)(g',j) = (g rho_i(g') c_{i,j}, ij), index g + |G| j.
/// The resulting default section is s(j) = (1, j).
GroupExtension weak_action_to_extension(const WeakAction& wa);

/// Witness h with rho'_j = Inn_{h_j} rho_j and c'_{ij} h_{ij} = h_i rho_i(h_j) c_{ij},
/// found by exhaustive search; nullopt if none exists.
std::optional<WeakActionIso> weak_actions_isomorphic(const WeakAction& wa1, const WeakAction& wa2);

/// Isomorphism a -> b as an image table, by backtracking over images of a
/// generating set.
std::optional<std::vector<int>> find_group_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace equidouble
