#include "grouptile/witness.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace grouptile {

std::vector<Subset> all_subgroups(const GroupTable& g) {
  std::set<uint64_t> seen;
  std::vector<Subset> found;
  std::vector<Subset> work;
  Subset trivial = Subset::of(g.order(), {0});
  seen.insert(trivial.bits());
  found.push_back(trivial);
  work.push_back(trivial);
  while (!work.empty()) {
    Subset s = work.back();
    work.pop_back();
    for (Elem x = 0; x < g.order(); ++x) {
      if (s.contains(x)) continue;
      Subset t = generated_subgroup(g, s.unite(Subset::of(g.order(), {x})));
      if (seen.insert(t.bits()).second) {
        found.push_back(t);
        work.push_back(t);
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Subset& a, const Subset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return Subset::lex_less(a, b);
  });
  return found;
}

Subset build_main_witness(const GroupTable& g, const MainWitnessParams& p) {
  const Subset& h = p.subgroup;
  if (!is_subgroup(g, h)) throw Error(Errc::BadParams, "H is not a subgroup");
  if (h.size() < 5) throw Error(Errc::BadParams, "H must have at least 5 elements");
  if (h.size() == g.order()) throw Error(Errc::BadParams, "H must be a proper subgroup");
  if (p.h0 == 0 || !h.contains(p.h0))
    throw Error(Errc::BadParams, "h0 must be a non-identity element of H");
  if (!h.contains(p.h1) || p.h1 == 0 || p.h1 == p.h0 || p.h1 == g.inverse(p.h0))
    throw Error(Errc::BadParams, "h1 must be an element of H outside {e, h0, h0^-1}");
  if (h.contains(p.outside)) throw Error(Errc::BadParams, "g must lie outside H");

  Subset a = h.difference(Subset::of(g.order(), {0, p.h0}));
  a.add(p.outside);
  a.add(g.mul(p.h1, p.outside));
  assert(a.size() == h.size());
  return a;
}

MainWitnessParamStream::MainWitnessParamStream(const GroupTable& g) : g_(g) {
  for (const Subset& s : all_subgroups(g))
    if (s.size() >= 5 && s.size() < g.order()) subgroups_.push_back(s);
}

void MainWitnessParamStream::fill_batch(const Subset& h) {
  batch_.clear();
  batch_pos_ = 0;
  const auto hs = h.elements();
  for (Elem h0 : hs) {
    if (h0 == 0) continue;
    for (Elem h1 : hs) {
      if (h1 == 0 || h1 == h0 || h1 == g_.inverse(h0)) continue;
      for (Elem out = 0; out < g_.order(); ++out) {
        if (h.contains(out)) continue;
        batch_.push_back(MainWitnessParams{h, h0, h1, out});
      }
    }
  }
}

std::optional<MainWitnessParams> MainWitnessParamStream::next() {
  while (batch_pos_ >= batch_.size()) {
    if (next_subgroup_ >= subgroups_.size()) return std::nullopt;
    fill_batch(subgroups_[next_subgroup_++]);
  }
  return batch_[batch_pos_++];
}

Subset build_order8_witness(const GroupTable& g, Elem a, Elem b) {
  if (g.order() != 8) throw Error(Errc::BadParams, "group must have order 8");
  if (a < 0 || a >= 8 || b < 0 || b >= 8) throw Error(Errc::BadParams, "element out of range");
  if (element_order(g, a) != 4 || element_order(g, b) != 4)
    throw Error(Errc::BadParams, "both elements must have order 4");
  Subset ca = generated_subgroup(g, Subset::of(8, {a}));
  Subset cb = generated_subgroup(g, Subset::of(8, {b}));
  if (ca == cb) throw Error(Errc::BadParams, "<a> and <b> must be distinct");
  return Subset::of(8, {a, g.power(a, 2), g.power(a, 3), b});
}

std::vector<std::pair<Elem, Elem>> order8_witness_pairs(const GroupTable& g) {
  if (g.order() != 8) throw Error(Errc::BadParams, "group must have order 8");
  std::vector<Elem> ord4;
  for (Elem x = 0; x < 8; ++x)
    if (element_order(g, x) == 4) ord4.push_back(x);
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a : ord4) {
    Subset ca = generated_subgroup(g, Subset::of(8, {a}));
    for (Elem b : ord4)
      if (!ca.contains(b)) out.emplace_back(a, b);
  }
  return out;
}

std::pair<GroupTable, Subset> theorem_case_witness(TheoremCase c) {
  switch (c) {
    case TheoremCase::D4: {
      GroupTable g = build_dihedral(4);
      // {a, a^2, b, a^2 b}
      return {g, Subset::of(8, {1, 2, 4, 6})};
    }
    case TheoremCase::C8: {
      GroupTable g = build_cyclic(8);
      // {a, a^2, a^3, a^5}
      return {g, Subset::of(8, {1, 2, 3, 5})};
    }
    case TheoremCase::C9: {
      GroupTable g = build_cyclic(9);
      // {a, a^2, a^4}
      return {g, Subset::of(9, {1, 2, 4})};
    }
  }
  throw Error(Errc::BadParams, "unknown case");
}

}  // namespace grouptile
