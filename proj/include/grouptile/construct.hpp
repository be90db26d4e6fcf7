#pragma once
// Constructive complement recipes: lifting a complement from a subgroup to
// the whole group through coset representatives, the even-order two-element
// rule, and the small-subset rules for elementary abelian 2- and 3-groups.

#include "grouptile/group.hpp"
#include "grouptile/subset.hpp"

namespace grouptile {

// B = B' * B'' where B'' are right-coset representatives of h in g.
// Requires a,b' inside the subgroup h with A*B' = H uniquely; then A*B = G
// uniquely. Throws NotASubgroup / NotAFactorOfH.
Subset lift_complement(const GroupTable& g, const Subset& h, const Subset& a,
                       const Subset& b_prime);

// Complement for {e,x} when x has even order 2m: the even powers
// {e,x^2,...,x^(2m-2)} inside <x>, lifted to g. Throws OddOrder when no
// complement exists.
Subset complement_for_order2_subset(const GroupTable& g, Elem x);

// Complement for a size-4 subset of an elementary abelian 2-group. The input
// is normalized to contain the identity first; by translation invariance the
// returned complement also works for the original set.
Subset complement_for_4subset_elem2(const GroupTable& g, const Subset& a);

// Complement for a size-3 subset of an elementary abelian 3-group.
Subset complement_for_3subset_elem3(const GroupTable& g, const Subset& a);

}  // namespace grouptile
