#include <doctest.h>

#include "grouptile/catalog.hpp"
#include "grouptile/factor.hpp"
#include "grouptile/group.hpp"
#include "grouptile/witness.hpp"
#include "oracle.hpp"

using namespace grouptile;

TEST_CASE("is_left_factor basic verdicts") {
  SUBCASE("{e,a} is a factor of C4 with complement {e,a^2}") {
    GroupTable g = build_cyclic(4);
    FactorResult r = is_left_factor(g, Subset::of(4, {0, 1}));
    CHECK(r.is_factor);
    REQUIRE(r.complement.has_value());
    CHECK(*r.complement == Subset::of(4, {0, 2}));
  }
  SUBCASE("the whole group is a factor with complement {e}") {
    GroupTable g = build_dihedral(4);
    FactorResult r = is_left_factor(g, g.full_set());
    CHECK(r.is_factor);
    CHECK(*r.complement == Subset::of(8, {0}));
  }
  SUBCASE("{a,a^2,a^4} is not a left factor of C9") {
    GroupTable g = build_cyclic(9);
    FactorResult r = is_left_factor(g, Subset::of(9, {1, 2, 4}));
    CHECK(!r.is_factor);
    CHECK(r.exhausted);
    CHECK(!r.complement);
  }
  SUBCASE("size not dividing refuses without search") {
    GroupTable g = build_cyclic(9);
    FactorResult r = is_left_factor(g, Subset::of(9, {0, 1}));
    CHECK(!r.is_factor);
    CHECK(r.exhausted);
    CHECK(r.reason == "size-not-dividing");
    CHECK(r.nodes_explored == 0);
  }
}

TEST_CASE("is_right_factor") {
  SUBCASE("{e} is a right factor with complement G") {
    GroupTable g = build_dihedral(3);
    FactorResult r = is_right_factor(g, Subset::of(6, {0}));
    CHECK(r.is_factor);
    CHECK(*r.complement == g.full_set());
  }
  SUBCASE("agrees with the left check on abelian C6") {
    GroupTable g = build_cyclic(6);
    for (int d : {2, 3}) {
      LagrangeSubsetStream s(g, d);
      while (auto a = s.next()) {
        CHECK(is_right_factor(g, *a).is_factor == is_left_factor(g, *a).is_factor);
      }
    }
  }
  SUBCASE("D4 witness set is not a right factor either (oracle cross-check)") {
    GroupTable g = build_dihedral(4);
    Subset a = Subset::of(8, {1, 2, 4, 6});
    FactorResult r = is_right_factor(g, a);
    CHECK(r.is_factor == oracle::naive_is_right_factor(g, a));
    CHECK(!r.is_factor);
    CHECK(r.exhausted);
  }
}

TEST_CASE("returned complements always pass the product check") {
  for (const char* name : {"C8", "D4", "Q8", "C3^2", "C12"}) {
    const GroupTable& g = catalog_group(name);
    for (int d = 2; d < g.order(); ++d) {
      if (g.order() % d) continue;
      LagrangeSubsetStream s(g, d);
      while (auto a = s.next()) {
        FactorResult r = is_left_factor(g, *a);
        if (r.is_factor) {
          ProductCheck pc = product_check(g, *a, *r.complement);
          CHECK(pc.unique);
          CHECK(pc.coverage == g.full_set());
        }
      }
    }
  }
}

TEST_CASE("engine matches the naive oracle on groups of order <= 9") {
  // the full sweep also runs as an acceptance criterion; keep a fast slice
  // here for development feedback
  for (const char* name : {"C6", "S3", "C8", "Q8", "C9", "C3^2"}) {
    const GroupTable& g = catalog_group(name);
    for (int d = 2; d < g.order(); ++d) {
      if (g.order() % d) continue;
      LagrangeSubsetStream s(g, d);
      while (auto a = s.next()) {
        CHECK(is_left_factor(g, *a).is_factor == oracle::naive_is_left_factor(g, *a));
      }
    }
  }
}

TEST_CASE("every subgroup is a factor with the coset representatives as complement") {
  for (const char* name : {"C12", "D6", "A4", "Dic3", "C2^4"}) {
    const GroupTable& g = catalog_group(name);
    for (const Subset& h : all_subgroups(g)) {
      FactorResult r = is_left_factor(g, h);
      CHECK(r.is_factor);
      CHECK(*r.complement ==
            Subset::from_elements(g.order(), left_coset_representatives(g, h)));
    }
  }
}

TEST_CASE("find_all_complements") {
  SUBCASE("C4 over {e,a^2}: both complements, DFS order") {
    GroupTable g = build_cyclic(4);
    auto all = find_all_complements(g, Subset::of(4, {0, 2}));
    REQUIRE(all.size() == 2);
    CHECK(all[0] == Subset::of(4, {0, 1}));
    CHECK(all[1] == Subset::of(4, {0, 3}));
  }
  SUBCASE("whole group has exactly the trivial complement") {
    GroupTable g = build_cyclic(6);
    auto all = find_all_complements(g, g.full_set());
    REQUIRE(all.size() == 1);
    CHECK(all[0] == Subset::of(6, {0}));
  }
  SUBCASE("non-factor yields an empty list") {
    GroupTable g = build_cyclic(9);
    CHECK(find_all_complements(g, Subset::of(9, {1, 2, 4})).empty());
  }
  SUBCASE("non-Lagrange size throws") {
    GroupTable g = build_cyclic(9);
    CHECK_THROWS_AS(find_all_complements(g, Subset::of(9, {0, 1})), Error);
  }
}

TEST_CASE("node budget turns exhaustion into unknown") {
  GroupTable g = build_cyclic(9);
  Subset a = Subset::of(9, {1, 2, 4});
  FactorResult full = is_left_factor(g, a);
  CHECK(full.exhausted);
  CHECK(full.nodes_explored > 0);
  FactorResult clipped = is_left_factor(g, a, 0);
  CHECK(clipped.unknown());
  CHECK(!clipped.exhausted);
  CHECK(clipped.reason == "node-budget-exceeded");
  // a generous budget changes nothing
  FactorResult roomy = is_left_factor(g, a, full.nodes_explored + 10);
  CHECK(roomy.exhausted);
}

TEST_CASE("find_factorization") {
  SUBCASE("C4 = {e,a} * {e,a^2}") {
    GroupTable g = build_cyclic(4);
    auto r = find_factorization(g, {2, 2});
    REQUIRE(r.found());
    CHECK(r.factorization->parts[0] == Subset::of(4, {0, 1}));
    CHECK(r.factorization->parts[1] == Subset::of(4, {0, 2}));
    CHECK(is_valid_factorization(g, r.factorization->parts));
  }
  SUBCASE("single full-size part") {
    GroupTable g = build_cyclic(4);
    auto r = find_factorization(g, {4});
    REQUIRE(r.found());
    CHECK(r.factorization->parts[0] == g.full_set());
  }
  SUBCASE("A4 has no (2,3,2)-factorization") {
    const GroupTable& g = catalog_group("A4");
    auto r = find_factorization(g, {2, 3, 2});
    CHECK(!r.found());
    CHECK(r.exhausted);
  }
  SUBCASE("size mismatch throws") {
    GroupTable g = build_cyclic(4);
    CHECK_THROWS_AS(find_factorization(g, {2, 3}), Error);
    CHECK_THROWS_AS(find_factorization(g, {}), Error);
  }
  SUBCASE("budget gives unknown") {
    const GroupTable& g = catalog_group("A4");
    auto r = find_factorization(g, {2, 3, 2}, 5);
    CHECK(r.unknown());
  }
}

TEST_CASE("two-part search succeeds exactly when some size-m subset is a factor") {
  for (const CatalogEntry& e : catalog()) {
    if (e.table.order() > 8) continue;
    const GroupTable& g = e.table;
    for (int m = 2; m < g.order(); ++m) {
      if (g.order() % m) continue;
      bool some_factor = false;
      LagrangeSubsetStream s(g, m);
      while (auto a = s.next()) {
        if (is_left_factor(g, *a).is_factor) {
          some_factor = true;
          break;
        }
      }
      CHECK(find_factorization(g, {m, g.order() / m}).found() == some_factor);
    }
  }
}
