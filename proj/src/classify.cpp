#include "grouptile/classify.hpp"

#include <algorithm>
#include <cassert>

namespace grouptile {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Greedy generating sequence: repeatedly adjoin the smallest element outside
// the closure so far.
std::vector<Elem> generating_sequence(const GroupTable& g) {
  std::vector<Elem> gens;
  Subset cl = Subset::of(g.order(), {0});
  while (cl.size() < g.order()) {
    Elem x = 0;
    while (cl.contains(x)) ++x;
    gens.push_back(x);
    cl = generated_subgroup(g, cl.unite(Subset::of(g.order(), {x})));
  }
  return gens;
}

}  // namespace

std::vector<std::vector<Elem>> automorphisms(const GroupTable& g) {
  const int n = g.order();
  std::vector<Elem> gens = generating_sequence(g);

  // express each element as (previous element) * generator, in BFS order
  std::vector<Elem> bfs_order;
  std::vector<std::pair<Elem, int>> via(static_cast<size_t>(n), {-1, -1});
  std::vector<bool> known(static_cast<size_t>(n), false);
  known[0] = true;
  bfs_order.push_back(0);
  for (size_t q = 0; q < bfs_order.size(); ++q) {
    Elem y = bfs_order[q];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      Elem x = g.mul(y, gens[gi]);
      if (!known[static_cast<size_t>(x)]) {
        known[static_cast<size_t>(x)] = true;
        via[static_cast<size_t>(x)] = {y, static_cast<int>(gi)};
        bfs_order.push_back(x);
      }
    }
  }
  assert(bfs_order.size() == static_cast<size_t>(n));

  std::vector<std::vector<Elem>> candidates_per_gen;
  for (Elem s : gens) {
    std::vector<Elem> c;
    int ord = element_order(g, s);
    for (Elem x = 0; x < n; ++x)
      if (element_order(g, x) == ord) c.push_back(x);
    candidates_per_gen.push_back(std::move(c));
  }

  std::vector<std::vector<Elem>> out;
  std::vector<Elem> img(gens.size(), 0);
  std::vector<Elem> phi(static_cast<size_t>(n), 0);

  auto try_assignment = [&]() {
    for (Elem x : bfs_order) {
      if (x == 0) {
        phi[0] = 0;
        continue;
      }
      auto [y, gi] = via[static_cast<size_t>(x)];
      phi[static_cast<size_t>(x)] = g.mul(phi[static_cast<size_t>(y)], img[static_cast<size_t>(gi)]);
    }
    uint64_t hit = 0;
    for (Elem x = 0; x < n; ++x) hit |= 1ull << phi[static_cast<size_t>(x)];
    if (hit != g.full_set().bits()) return;
    for (Elem i = 0; i < n; ++i)
      for (Elem j = 0; j < n; ++j)
        if (phi[static_cast<size_t>(g.mul(i, j))] !=
            g.mul(phi[static_cast<size_t>(i)], phi[static_cast<size_t>(j)]))
          return;
    out.push_back(phi);
  };

  // odometer over candidate generator images
  std::vector<size_t> idx(gens.size(), 0);
  while (true) {
    for (size_t i = 0; i < gens.size(); ++i) img[i] = candidates_per_gen[i][idx[i]];
    try_assignment();
    size_t i = gens.size();
    bool done = false;
    while (i > 0) {
      --i;
      if (++idx[i] < candidates_per_gen[i].size()) break;
      idx[i] = 0;
      if (i == 0) done = true;
    }
    if (done || gens.empty()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Subset apply_automorphism(const std::vector<Elem>& phi, const Subset& a) {
  Subset out = Subset::empty(a.group_order());
  for (Elem x : a.elements()) out.add(phi[static_cast<size_t>(x)]);
  return out;
}

bool orbit_canonical(const std::vector<std::vector<Elem>>& auts, const Subset& a) {
  for (const auto& phi : auts) {
    Subset img = apply_automorphism(phi, a);
    if (img != a && Subset::lex_less(img, a)) return false;
  }
  return true;
}

std::vector<int> proper_divisors(int n) {
  std::vector<int> out;
  for (int d = 2; d < n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace

CfsReport check_strong_cfs(const GroupTable& g, bool census, const ClassifierOptions& opt) {
  CfsReport rep;
  rep.group = g.display_name();
  rep.order = g.order();
  rep.element_names = g.names();
  rep.census = census;
  rep.skipped_sizes.push_back(1);
  if (g.order() > 1) rep.skipped_sizes.push_back(g.order());

  const bool prune = opt.aut_prune && !census;
  std::vector<std::vector<Elem>> auts;
  if (prune) auts = automorphisms(g);

  for (int d : proper_divisors(g.order())) {
    SizeCensus sc;
    sc.d = d;
    LagrangeSubsetStream stream(g, d);
    while (auto a = stream.next()) {
      if (prune && !orbit_canonical(auts, *a)) continue;
      FactorResult r = is_left_factor(g, *a, opt.node_budget);
      ++rep.subsets_tested;
      ++sc.tested;
      rep.nodes_explored += r.nodes_explored;
      if (r.unknown()) {
        rep.unknown = true;
        rep.holds = false;
        return rep;
      }
      if (!r.is_factor) {
        ++sc.nonfactors;
        if (!rep.witness) {
          rep.witness = *a;
          rep.witness_result = r;
        }
        if (!census) {
          rep.holds = false;
          return rep;
        }
        sc.nonfactor_examples.push_back(*a);
      }
    }
    if (census) rep.per_size.push_back(std::move(sc));
  }
  rep.holds = !rep.witness.has_value();
  return rep;
}

SizeCensus nonfactor_census(const GroupTable& g, int d, const ClassifierOptions& opt) {
  SizeCensus sc;
  sc.d = d;
  LagrangeSubsetStream stream(g, d);  // throws NotLagrange on bad d
  while (auto a = stream.next()) {
    FactorResult r = is_left_factor(g, *a, opt.node_budget);
    ++sc.tested;
    if (!r.is_factor && r.exhausted) {
      ++sc.nonfactors;
      sc.nonfactor_examples.push_back(*a);
    }
  }
  return sc;
}

TheoremReport verify_theorem(int max_order, bool census, const ClassifierOptions& opt) {
  if (max_order < 1 || max_order > catalog_bound())
    throw Error(Errc::CatalogBoundExceeded,
                "max order " + std::to_string(max_order) + " outside 1.." +
                    std::to_string(catalog_bound()));
  TheoremReport rep;
  rep.max_order = max_order;
  rep.census = census;
  for (const CatalogEntry& e : catalog()) {
    if (e.table.order() > max_order) continue;
    TheoremGroupLine line;
    line.name = e.name;
    line.trivial = e.table.order() == 1;
    line.expected_holds =
        !line.trivial && (is_prime(e.table.order()) || e.name == "C4" || e.name == "C2^2" ||
                          e.name == "C2^3" || e.name == "C3^2");
    line.report = check_strong_cfs(e.table, census, opt);
    if (line.expected_holds) rep.expected_positive.push_back(e.name);
    if (!line.trivial && line.report.holds) rep.actual_positive.push_back(e.name);
    if (!line.trivial && (line.report.unknown || line.report.holds != line.expected_holds))
      rep.mismatches.push_back(e.name);
    rep.groups.push_back(std::move(line));
  }
  return rep;
}

}  // namespace grouptile
