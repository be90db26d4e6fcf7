#pragma once
// Explicit non-factor witnesses: the large-subgroup construction
// A = (H \ {e,h0}) u {g, h1*g}, the order-8 construction {a,a^2,a^3,b}, and
// the three hard-coded case witnesses for D4, C8 and C9. Construction only;
// non-factor status is always confirmed through the factor engine.

#include <optional>
#include <utility>
#include <vector>

#include "grouptile/group.hpp"
#include "grouptile/subset.hpp"

namespace grouptile {

// Every subgroup of g (including {e} and g itself), sorted by size then by
// ascending element tuple.
std::vector<Subset> all_subgroups(const GroupTable& g);

struct MainWitnessParams {
  Subset subgroup;   // proper subgroup H with |H| >= 5
  Elem h0 = 0;       // element of H, != e
  Elem h1 = 0;       // element of H outside {e, h0, h0^-1}
  Elem outside = 0;  // element of G \ H
  bool operator==(const MainWitnessParams&) const = default;
};

// A = (H \ {e,h0}) u {g, h1*g}; |A| = |H|. Throws BadParams naming the
// violated constraint.
Subset build_main_witness(const GroupTable& g, const MainWitnessParams& p);

// Yields every admissible parameter tuple: subgroups in all_subgroups order,
// then h0, h1 and the outside element each ascending. Empty when no proper
// subgroup of size >= 5 exists.
class MainWitnessParamStream {
 public:
  explicit MainWitnessParamStream(const GroupTable& g);
  std::optional<MainWitnessParams> next();

 private:
  void fill_batch(const Subset& h);

  const GroupTable& g_;
  std::vector<Subset> subgroups_;
  size_t next_subgroup_ = 0;
  std::vector<MainWitnessParams> batch_;
  size_t batch_pos_ = 0;
};

// {a, a^2, a^3, b} for order-4 elements a, b generating distinct cyclic
// subgroups of a group of order 8. Throws BadParams.
Subset build_order8_witness(const GroupTable& g, Elem a, Elem b);

// All ordered pairs (a, b) admissible for build_order8_witness, ascending.
std::vector<std::pair<Elem, Elem>> order8_witness_pairs(const GroupTable& g);

enum class TheoremCase { D4, C8, C9 };

// The hard-coded case witnesses: D4 -> {a,a^2,b,a^2b}, C8 -> {a,a^2,a^3,a^5},
// C9 -> {a,a^2,a^4}.
std::pair<GroupTable, Subset> theorem_case_witness(TheoremCase c);

}  // namespace grouptile
