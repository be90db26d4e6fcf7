#include <doctest.h>

#include <set>

#include "grouptile/catalog.hpp"
#include "grouptile/factor.hpp"
#include "grouptile/group.hpp"
#include "grouptile/witness.hpp"

using namespace grouptile;

TEST_CASE("all_subgroups") {
  SUBCASE("C12 has subgroups of orders 1,2,3,4,6,12") {
    const GroupTable& g = catalog_group("C12");
    std::multiset<int> sizes;
    for (const Subset& h : all_subgroups(g)) sizes.insert(h.size());
    CHECK(sizes == std::multiset<int>{1, 2, 3, 4, 6, 12});
  }
  SUBCASE("A4 proper subgroups have orders 1,2,3,4 only") {
    const GroupTable& g = catalog_group("A4");
    for (const Subset& h : all_subgroups(g)) {
      CHECK(is_subgroup(g, h));
      if (h.size() < 12) CHECK(h.size() <= 4);
    }
  }
  SUBCASE("C2^4 has 67 subgroups") {
    CHECK(all_subgroups(catalog_group("C2^4")).size() == 67);
  }
}

TEST_CASE("build_main_witness on C10 matches the worked construction") {
  GroupTable g = build_cyclic(10);
  MainWitnessParams p;
  p.subgroup = generated_subgroup(g, Subset::of(10, {2}));  // {e,a^2,a^4,a^6,a^8}
  p.h0 = 2;
  p.h1 = 4;
  p.outside = 1;
  Subset a = build_main_witness(g, p);
  // (H \ {e,a^2}) u {a, a^4*a = a^5}
  CHECK(a == Subset::of(10, {1, 4, 5, 6, 8}));
  CHECK(a.size() == 5);
  FactorResult r = is_left_factor(g, a);
  CHECK(!r.is_factor);
  CHECK(r.exhausted);
}

TEST_CASE("build_main_witness on C12") {
  GroupTable g = build_cyclic(12);
  MainWitnessParams p;
  p.subgroup = generated_subgroup(g, Subset::of(12, {2}));  // order 6
  p.h0 = 2;
  p.h1 = 6;
  p.outside = 1;
  Subset a = build_main_witness(g, p);
  CHECK(a.size() == 6);
  CHECK(!is_left_factor(g, a).is_factor);
}

TEST_CASE("build_main_witness rejects bad parameters") {
  GroupTable g = build_cyclic(10);
  MainWitnessParams p;
  p.subgroup = generated_subgroup(g, Subset::of(10, {2}));
  p.h0 = 2;
  p.h1 = 8;  // = h0^-1
  p.outside = 1;
  CHECK_THROWS_AS(build_main_witness(g, p), Error);
  p.h1 = 4;
  p.outside = 2;  // inside H
  CHECK_THROWS_AS(build_main_witness(g, p), Error);
  p.outside = 1;
  p.h0 = 0;
  CHECK_THROWS_AS(build_main_witness(g, p), Error);
  // subgroup too small
  MainWitnessParams q;
  q.subgroup = generated_subgroup(g, Subset::of(10, {5}));  // order 2
  q.h0 = 5;
  q.h1 = 5;
  q.outside = 1;
  CHECK_THROWS_AS(build_main_witness(g, q), Error);
}

TEST_CASE("enumerate_main_witness_params") {
  SUBCASE("C2^3 is empty: no proper subgroup of order >= 5") {
    MainWitnessParamStream s(catalog_group("C2^3"));
    CHECK(!s.next().has_value());
  }
  SUBCASE("A4 is empty: proper subgroup orders stop at 4") {
    MainWitnessParamStream s(catalog_group("A4"));
    CHECK(!s.next().has_value());
  }
  SUBCASE("C10: one subgroup, 4 h0 choices, 2 h1 each, 5 outside elements") {
    const GroupTable& g = catalog_group("C10");
    MainWitnessParamStream s(g);
    int count = 0;
    Subset the_h = generated_subgroup(g, Subset::of(10, {2}));
    while (auto p = s.next()) {
      ++count;
      CHECK(p->subgroup == the_h);
      CHECK(p->h0 != 0);
      CHECK(the_h.contains(p->h0));
      CHECK(p->h1 != 0);
      CHECK(p->h1 != p->h0);
      CHECK(p->h1 != g.inverse(p->h0));
      CHECK(!the_h.contains(p->outside));
    }
    CHECK(count == 4 * 2 * 5);
  }
}

TEST_CASE("main witnesses are never left factors across the catalog sweep") {
  // full exhaustive sweep runs in the acceptance suite; cover two groups here
  for (const char* name : {"C10", "D5"}) {
    const GroupTable& g = catalog_group(name);
    MainWitnessParamStream s(g);
    int count = 0;
    while (auto p = s.next()) {
      ++count;
      FactorResult r = is_left_factor(g, build_main_witness(g, *p));
      CHECK(!r.is_factor);
      CHECK(r.exhausted);
    }
    CHECK(count > 0);
  }
}

TEST_CASE("build_order8_witness") {
  SUBCASE("Q8 with a = i, b = j") {
    GroupTable g = build_quaternion();
    Subset w = build_order8_witness(g, 1, 4);
    CHECK(w == Subset::of(8, {1, 2, 3, 4}));
    CHECK(!is_left_factor(g, w).is_factor);
  }
  SUBCASE("C4xC2 with generators from the two order-4 subgroups") {
    GroupTable g = parse_group_spec("C4xC2");
    // (a,e) has index 2, (a,a) has index 3
    CHECK(element_order(g, 2) == 4);
    CHECK(element_order(g, 3) == 4);
    Subset w = build_order8_witness(g, 2, 3);
    CHECK(w.size() == 4);
    CHECK(!is_left_factor(g, w).is_factor);
  }
  SUBCASE("C2^3 has no order-4 elements") {
    CHECK_THROWS_AS(build_order8_witness(catalog_group("C2^3"), 1, 2), Error);
  }
  SUBCASE("same cyclic subgroup is rejected") {
    GroupTable g = build_cyclic(8);
    CHECK_THROWS_AS(build_order8_witness(g, 2, 6), Error);  // <a^2> = <a^6>
  }
}

TEST_CASE("order8_witness_pairs") {
  CHECK(order8_witness_pairs(catalog_group("Q8")).size() == 24);
  CHECK(order8_witness_pairs(parse_group_spec("C4xC2")).size() == 8);
  CHECK(order8_witness_pairs(catalog_group("C8")).empty());
  CHECK(order8_witness_pairs(catalog_group("D4")).empty());
  CHECK(order8_witness_pairs(catalog_group("C2^3")).empty());
}

TEST_CASE("theorem_case_witness") {
  SUBCASE("D4: every candidate translate covering e meets A") {
    auto [g, a] = theorem_case_witness(TheoremCase::D4);
    CHECK(a == Subset::of(8, {1, 2, 4, 6}));
    for (Elem x : {3, 2, 4, 6}) {
      Subset t = translate_right(g, a, x);
      CHECK(t.contains(0));
      CHECK(!t.disjoint_with(a));
    }
    FactorResult r = is_left_factor(g, a);
    CHECK(!r.is_factor);
    CHECK(r.exhausted);
  }
  SUBCASE("C9: only a^5 gives a disjoint translate and the residue is stranded") {
    auto [g, a] = theorem_case_witness(TheoremCase::C9);
    CHECK(a == Subset::of(9, {1, 2, 4}));
    CHECK(translate_right(g, a, 5) == Subset::of(9, {0, 6, 7}));
    for (Elem x : {8, 7}) {  // a^-1, a^-2 both meet A
      CHECK(!translate_right(g, a, x).disjoint_with(a));
    }
    Subset residue = g.full_set().difference(a.unite(translate_right(g, a, 5)));
    CHECK(residue == Subset::of(9, {3, 5, 8}));
    for (Elem x = 0; x < 9; ++x) CHECK(translate_right(g, a, x) != residue);
    CHECK(!is_left_factor(g, a).is_factor);
  }
  SUBCASE("C8: not a left factor, search exhausted") {
    auto [g, a] = theorem_case_witness(TheoremCase::C8);
    CHECK(a == Subset::of(8, {1, 2, 3, 5}));
    FactorResult r = is_left_factor(g, a);
    CHECK(!r.is_factor);
    CHECK(r.exhausted);
  }
}
