#pragma once

#include <vector>

#include "equidouble/groups.hpp"
#include "equidouble/matrix.hpp"

namespace equidouble {

/// Irreducible characters indexed by (irrep, conjugacy class), class order as in
/// FiniteGroup::conjugacy(). Values live in Q(zeta_e), e the group exponent.
/// Rows are sorted: by degree, then by the values read as coefficient tuples
/// over conductor e, so the trivial character comes first.
struct CharacterTable {
  GroupPtr group;
  std::vector<std::vector<Cyclotomic>> values;
  std::vector<int> degrees;
  std::int64_t prime = 0;  // modulus used for the Dixon computation

  int size() const { return static_cast<int>(degrees.size()); }
  const Cyclotomic& value(int irrep, int element) const { return values[irrep][group->class_of(element)]; }
};

/// Default group order bound for character_table.
inline constexpr int kCharacterTableBound = 64;

/// Dixon's method: simultaneous eigenvectors of the class matrices over F_p,
/// p = 1 mod exponent, lifted to cyclotomics via eigenvalue multiplicities.
/// Throws ResourceError when |G| exceeds the bound or no prime is found.
CharacterTable character_table(const GroupPtr& g, int order_bound = kCharacterTableBound);

/// Matrix representation affording row `irrep` of the table, one matrix per
/// group element. Degree-1 rows give the character values directly; higher
/// degrees are cut out of the regular representation as the left ideal
/// K[G] e_chi e_psi, e_psi the idempotent of a linear character psi of a
/// cyclic subgroup occurring once in chi.
std::vector<ExactMatrix> irrep_matrices(const CharacterTable& table, int irrep);

}  // namespace equidouble
