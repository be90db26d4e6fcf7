#include "grouptile/construct.hpp"

#include <cassert>
#include <stdexcept>

namespace grouptile {

namespace {

bool all_nonidentity_orders_are(const GroupTable& g, int p) {
  for (Elem x = 1; x < g.order(); ++x)
    if (element_order(g, x) != p) return false;
  return true;
}

}  // namespace

Subset lift_complement(const GroupTable& g, const Subset& h, const Subset& a,
                       const Subset& b_prime) {
  if (!is_subgroup(g, h)) throw Error(Errc::NotASubgroup, "h must be a subgroup");
  if (!h.contains_all(a) || !h.contains_all(b_prime))
    throw Error(Errc::BadParams, "a and b' must lie inside the subgroup");
  ProductCheck pc = product_check(g, a, b_prime);
  if (!pc.unique || pc.coverage != h)
    throw Error(Errc::NotAFactorOfH, "a * b' does not uniquely cover the subgroup");
  Subset b = Subset::empty(g.order());
  for (Elem rep : left_coset_representatives(g, h))
    for (Elem bp : b_prime.elements()) b.add(g.mul(bp, rep));
  assert(b.size() == b_prime.size() * (g.order() / h.size()));
  return b;
}

Subset complement_for_order2_subset(const GroupTable& g, Elem x) {
  assert(x >= 0 && x < g.order());
  int ord = element_order(g, x);
  if (ord % 2 != 0)
    throw Error(Errc::OddOrder, "element has odd order " + std::to_string(ord) +
                                    ", so {e,x} has no complement");
  Subset h = generated_subgroup(g, Subset::of(g.order(), {x}));
  Subset b_prime = Subset::empty(g.order());
  for (int k = 0; k < ord; k += 2) b_prime.add(g.power(x, k));
  return lift_complement(g, h, Subset::of(g.order(), {0, x}), b_prime);
}

Subset complement_for_4subset_elem2(const GroupTable& g, const Subset& a_in) {
  if (!all_nonidentity_orders_are(g, 2))
    throw Error(Errc::NotElementaryAbelian2, "group has an element of order != 2");
  if (a_in.size() != 4) throw Error(Errc::WrongSize, "subset must have size 4");
  Subset a = normalize_to_identity(g, a_in);
  Subset h = generated_subgroup(g, a);
  auto nonid = a.difference(Subset::of(g.order(), {0})).elements();
  Elem x = nonid[0], y = nonid[1], z = nonid[2];
  Subset b_prime;
  if (h.size() == 4) {
    // A = H, complement {e} inside H
    b_prime = Subset::of(g.order(), {0});
  } else {
    assert(h.size() == 8);
    Elem t = g.mul(g.mul(x, y), z);
    if (t == 0) {
      // z = xy, so A is an index-2 subgroup of H
      b_prime = Subset::from_elements(g.order(), coset_representatives_within(g, a, h));
    } else {
      b_prime = Subset::of(g.order(), {0, t});
    }
  }
  return lift_complement(g, h, a, b_prime);
}

Subset complement_for_3subset_elem3(const GroupTable& g, const Subset& a_in) {
  if (!all_nonidentity_orders_are(g, 3))
    throw Error(Errc::NotElementaryAbelian3, "group has an element of order != 3");
  if (a_in.size() != 3) throw Error(Errc::WrongSize, "subset must have size 3");
  Subset a = normalize_to_identity(g, a_in);
  Subset h = generated_subgroup(g, a);
  auto nonid = a.difference(Subset::of(g.order(), {0})).elements();
  Elem x = nonid[0], y = nonid[1];
  Subset b_prime;
  if (h.size() == 3) {
    b_prime = Subset::of(g.order(), {0});
  } else {
    assert(h.size() == 9);
    Elem t = g.mul(x, y);
    b_prime = Subset::of(g.order(), {0, t, g.mul(t, t)});
  }
  return lift_complement(g, h, a, b_prime);
}

}  // namespace grouptile
