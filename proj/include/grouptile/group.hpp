#pragma once
// Finite groups of order <= 64 as dense multiplication tables, with builders
// for the cyclic, elementary abelian, dihedral, dicyclic and alternating
// families, direct products, validated raw Cayley tables, and a small spec
// mini-language ("C4", "C2^3", "D4", "Q8", "C4xC2", ...).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grouptile/common.hpp"
#include "grouptile/subset.hpp"

namespace grouptile {

struct GroupSpec {
  std::string expression;  // canonical mini-language form
  int order = 0;
  bool operator==(const GroupSpec&) const = default;
};

class GroupTable {
 public:
  static constexpr int kMaxOrder = 64;

  int order() const { return n_; }
  Elem mul(Elem i, Elem j) const { return table_[static_cast<size_t>(i) * n_ + j]; }
  Elem inverse(Elem i) const { return inv_[i]; }
  Elem power(Elem x, int k) const;  // x^k for k >= 0

  const std::string& name(Elem i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::optional<GroupSpec>& spec() const { return spec_; }
  std::string display_name() const;

  Subset full_set() const { return Subset::full(n_); }
  std::vector<std::vector<int>> rows() const;

  // Multiplication-table equality; element names and specs are ignored.
  bool same_table(const GroupTable& other) const;

 private:
  GroupTable() = default;
  friend GroupTable detail_make_group(int n, std::vector<uint8_t> flat,
                                      std::vector<std::string> names,
                                      std::optional<GroupSpec> spec);

  int n_ = 0;
  std::vector<uint8_t> table_;  // row-major, table_[i*n+j] = i*j
  std::vector<uint8_t> inv_;
  std::vector<std::string> names_;
  std::optional<GroupSpec> spec_;
};

GroupTable build_cyclic(int n);
GroupTable build_elementary_abelian(int p, int k);
GroupTable build_dihedral(int n);   // order 2n, n >= 2
GroupTable build_dicyclic(int m);   // order 4m, m >= 2
GroupTable build_quaternion();      // = dicyclic(2)
GroupTable build_alternating4();
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

// Validates all group axioms on a raw table (reporting the first violation),
// relabels so the identity sits at index 0, and computes inverses.
GroupTable from_cayley_table(const std::vector<std::vector<int>>& raw,
                             const std::optional<std::vector<std::string>>& names = std::nullopt);

// Mini-language: C<n>, C<p>^<k>, D<n>, Q8, A4, S3, Dic<m>, and x-separated
// direct products (left associative). Case-insensitive, whitespace ignored.
GroupTable parse_group_spec(std::string_view text);

// Smallest m >= 1 with x^m = e.
int element_order(const GroupTable& g, Elem x);

// Closure of seed (plus the identity) under products; always a subgroup.
Subset generated_subgroup(const GroupTable& g, const Subset& seed);

bool is_subgroup(const GroupTable& g, const Subset& s);

// One representative per coset Hx, ascending; together they tile the group:
// G is the disjoint union of the cosets H*rep. Throws NotASubgroup.
std::vector<Elem> left_coset_representatives(const GroupTable& g, const Subset& subgroup);

// Same, restricted to a universe that is itself a union of such cosets
// (e.g. representatives of A inside a larger subgroup H).
std::vector<Elem> coset_representatives_within(const GroupTable& g, const Subset& subgroup,
                                               const Subset& universe);

// Text format: line 1 = n, lines 2..n+1 = table rows, line n+2 = names.
std::string to_cayley_text(const GroupTable& g);
GroupTable from_cayley_text(const std::string& text);
GroupTable load_cayley_file(const std::string& path);

}  // namespace grouptile
