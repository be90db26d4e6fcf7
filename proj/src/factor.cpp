#include "grouptile/factor.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace grouptile {

namespace {

struct CoverSearch {
  int n = 0;
  uint64_t all = 0;
  std::vector<uint64_t> tile;           // tile[b]
  std::vector<std::vector<Elem>> cand;  // cand[x] = ascending b with x in tile[b]
  uint64_t nodes = 0;
  uint64_t budget = UINT64_MAX;
  bool budget_hit = false;

  void init(const GroupTable& g, const Subset& a, Side side) {
    n = g.order();
    all = g.full_set().bits();
    tile.resize(static_cast<size_t>(n));
    cand.assign(static_cast<size_t>(n), {});
    for (Elem b = 0; b < n; ++b) {
      Subset t = side == Side::Left ? translate_right(g, a, b) : translate_left(g, b, a);
      tile[static_cast<size_t>(b)] = t.bits();
      for (Elem x : t.elements()) cand[static_cast<size_t>(x)].push_back(b);
    }
  }

  enum class Outcome { Found, Exhausted, Budget };

  Outcome first(uint64_t covered, std::vector<Elem>& chosen) {
    if (covered == all) return Outcome::Found;
    Elem x = std::countr_zero(~covered & all);
    for (Elem b : cand[static_cast<size_t>(x)]) {
      uint64_t t = tile[static_cast<size_t>(b)];
      if (t & covered) continue;
      if (nodes >= budget) {
        budget_hit = true;
        return Outcome::Budget;
      }
      ++nodes;
      chosen.push_back(b);
      Outcome r = first(covered | t, chosen);
      if (r != Outcome::Exhausted) return r;
      chosen.pop_back();
    }
    return Outcome::Exhausted;
  }

  void enumerate(uint64_t covered, std::vector<Elem>& chosen, std::vector<Subset>& out) {
    if (covered == all) {
      out.push_back(Subset::from_elements(n, chosen));
      return;
    }
    Elem x = std::countr_zero(~covered & all);
    for (Elem b : cand[static_cast<size_t>(x)]) {
      uint64_t t = tile[static_cast<size_t>(b)];
      if (t & covered) continue;
      ++nodes;
      chosen.push_back(b);
      enumerate(covered | t, chosen, out);
      chosen.pop_back();
    }
  }
};

void verify_complement_or_die(const GroupTable& g, const Subset& a, const Subset& b, Side side) {
  ProductCheck pc = side == Side::Left ? product_check(g, a, b) : product_check(g, b, a);
  if (!pc.unique || pc.coverage != g.full_set())
    throw std::logic_error("complement certificate failed verification");
}

}  // namespace

FactorResult is_factor(const GroupTable& g, const Subset& a, Side side,
                       std::optional<uint64_t> node_budget) {
  assert(a.group_order() == g.order());
  FactorResult r;
  r.side = side;
  int n = g.order(), sz = a.size();
  if (sz == 0 || n % sz != 0) {
    r.is_factor = false;
    r.exhausted = true;  // no complement can exist: |G| = |A|*|B| is impossible
    r.reason = sz == 0 ? "empty-subset" : "size-not-dividing";
    return r;
  }
  CoverSearch cs;
  cs.init(g, a, side);
  if (node_budget) cs.budget = *node_budget;
  std::vector<Elem> chosen;
  CoverSearch::Outcome out = cs.first(0, chosen);
  r.nodes_explored = cs.nodes;
  switch (out) {
    case CoverSearch::Outcome::Found: {
      Subset b = Subset::from_elements(n, chosen);
      verify_complement_or_die(g, a, b, side);
      r.is_factor = true;
      r.complement = b;
      break;
    }
    case CoverSearch::Outcome::Exhausted:
      r.exhausted = true;
      break;
    case CoverSearch::Outcome::Budget:
      r.reason = "node-budget-exceeded";
      break;
  }
  return r;
}

FactorResult is_left_factor(const GroupTable& g, const Subset& a,
                            std::optional<uint64_t> node_budget) {
  return is_factor(g, a, Side::Left, node_budget);
}

FactorResult is_right_factor(const GroupTable& g, const Subset& a,
                             std::optional<uint64_t> node_budget) {
  return is_factor(g, a, Side::Right, node_budget);
}

std::vector<Subset> find_all_complements(const GroupTable& g, const Subset& a, Side side) {
  assert(a.group_order() == g.order());
  int n = g.order(), sz = a.size();
  if (sz == 0 || n % sz != 0)
    throw Error(Errc::NotLagrange, "subset size " + std::to_string(sz) +
                                       " does not divide group order " + std::to_string(n));
  CoverSearch cs;
  cs.init(g, a, side);
  // fixing tile b = e pins one representative per right-translation class
  std::vector<Elem> chosen{0};
  std::vector<Subset> out;
  cs.enumerate(cs.tile[0], chosen, out);
  for (const Subset& b : out) verify_complement_or_die(g, a, b, side);
  return out;
}

bool is_valid_factorization(const GroupTable& g, const std::vector<Subset>& parts) {
  uint64_t need = 1;
  for (const Subset& p : parts) {
    need *= static_cast<uint64_t>(p.size());
    if (need > static_cast<uint64_t>(g.order())) return false;
  }
  if (need != static_cast<uint64_t>(g.order())) return false;
  // odometer over tuples; every product must be fresh
  Subset seen = Subset::empty(g.order());
  std::vector<size_t> idx(parts.size(), 0);
  std::vector<std::vector<Elem>> elems;
  for (const Subset& p : parts) elems.push_back(p.elements());
  while (true) {
    Elem prod = 0;
    for (size_t i = 0; i < parts.size(); ++i) prod = g.mul(prod, elems[i][idx[i]]);
    if (seen.contains(prod)) return false;
    seen.add(prod);
    size_t i = parts.size();
    while (i > 0) {
      --i;
      if (++idx[i] < elems[i].size()) break;
      idx[i] = 0;
      if (i == 0) return seen == g.full_set();
    }
  }
}

namespace {

struct KSearch {
  const GroupTable& g;
  const std::vector<int>& sizes;
  uint64_t nodes = 0;
  uint64_t budget = UINT64_MAX;
  bool budget_hit = false;
  std::vector<Subset> parts;

  explicit KSearch(const GroupTable& g_, const std::vector<int>& sizes_) : g(g_), sizes(sizes_) {}

  // prefix: the set of all products a1*...*ai so far (distinct by invariant)
  bool dfs(size_t i, const Subset& prefix) {
    if (i == sizes.size()) return true;
    LagrangeSubsetStream stream(g, sizes[i]);
    while (auto part = stream.next()) {
      if (nodes >= budget) {
        budget_hit = true;
        return false;
      }
      ++nodes;
      Subset merged = Subset::empty(g.order());
      bool injective = true;
      for (Elem p : prefix.elements()) {
        for (Elem a : part->elements()) {
          Elem y = g.mul(p, a);
          if (merged.contains(y)) {
            injective = false;
            break;
          }
          merged.add(y);
        }
        if (!injective) break;
      }
      if (!injective) continue;
      parts.push_back(*part);
      if (dfs(i + 1, merged)) return true;
      if (budget_hit) return false;
      parts.pop_back();
    }
    return false;
  }
};

}  // namespace

KFactorizationResult find_factorization(const GroupTable& g, const std::vector<int>& sizes,
                                        std::optional<uint64_t> node_budget) {
  if (sizes.empty()) throw Error(Errc::SizeMismatch, "need at least one part size");
  long long prod = 1;
  for (int s : sizes) {
    if (s < 1) throw Error(Errc::SizeMismatch, "part sizes must be positive");
    prod *= s;
    if (prod > g.order()) break;
  }
  if (prod != g.order())
    throw Error(Errc::SizeMismatch, "part sizes multiply to " + std::to_string(prod) +
                                        ", group order is " + std::to_string(g.order()));
  KSearch ks(g, sizes);
  if (node_budget) ks.budget = *node_budget;
  KFactorizationResult r;
  bool found = ks.dfs(0, Subset::of(g.order(), {0}));
  r.nodes_explored = ks.nodes;
  if (found) {
    if (!is_valid_factorization(g, ks.parts))
      throw std::logic_error("factorization certificate failed verification");
    r.factorization = KFactorization{ks.parts, sizes};
  } else if (ks.budget_hit) {
    r.reason = "node-budget-exceeded";
  } else {
    r.exhausted = true;
  }
  return r;
}

}  // namespace grouptile
