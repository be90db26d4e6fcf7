#include "grouptile/subset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>

#include "grouptile/group.hpp"

namespace grouptile {

Subset::Subset(int group_order, uint64_t bits) : bits_(bits), n_(group_order) {
  assert(group_order >= 0 && group_order <= 64);
  assert(group_order == 64 || (bits >> group_order) == 0);
}

Subset Subset::full(int group_order) {
  uint64_t b = group_order == 64 ? ~0ull : ((1ull << group_order) - 1);
  return Subset(group_order, b);
}

Subset Subset::of(int group_order, std::initializer_list<Elem> xs) {
  Subset s = Subset::empty(group_order);
  for (Elem x : xs) s.add(x);
  return s;
}

Subset Subset::from_elements(int group_order, const std::vector<Elem>& xs) {
  Subset s = Subset::empty(group_order);
  for (Elem x : xs) s.add(x);
  return s;
}

int Subset::size() const { return std::popcount(bits_); }

void Subset::add(Elem x) {
  assert(x >= 0 && x < n_);
  bits_ |= 1ull << x;
}

void Subset::remove(Elem x) {
  assert(x >= 0 && x < n_);
  bits_ &= ~(1ull << x);
}

Elem Subset::min_element() const {
  assert(bits_ != 0);
  return std::countr_zero(bits_);
}

std::vector<Elem> Subset::elements() const {
  std::vector<Elem> out;
  out.reserve(static_cast<size_t>(size()));
  uint64_t b = bits_;
  while (b) {
    out.push_back(std::countr_zero(b));
    b &= b - 1;
  }
  return out;
}

bool Subset::lex_less(const Subset& a, const Subset& b) {
  assert(a.size() == b.size());
  uint64_t d = a.bits_ ^ b.bits_;
  if (d == 0) return false;
  // The set holding the smallest element of the symmetric difference comes
  // first in ascending-tuple order.
  return a.contains(std::countr_zero(d));
}

Subset translate_left(const GroupTable& g, Elem u, const Subset& a) {
  assert(a.group_order() == g.order());
  assert(u >= 0 && u < g.order());
  Subset out = Subset::empty(g.order());
  for (Elem x : a.elements()) out.add(g.mul(u, x));
  return out;
}

Subset translate_right(const GroupTable& g, const Subset& a, Elem v) {
  assert(a.group_order() == g.order());
  assert(v >= 0 && v < g.order());
  Subset out = Subset::empty(g.order());
  for (Elem x : a.elements()) out.add(g.mul(x, v));
  return out;
}

ProductCheck product_check(const GroupTable& g, const Subset& a, const Subset& b) {
  assert(a.group_order() == g.order() && b.group_order() == g.order());
  ProductCheck pc;
  pc.coverage = Subset::empty(g.order());
  pc.unique = true;
  std::array<std::pair<Elem, Elem>, 64> first_pair{};
  const auto as = a.elements();
  const auto bs = b.elements();
  for (Elem x : as) {
    for (Elem y : bs) {
      Elem p = g.mul(x, y);
      if (!pc.coverage.contains(p)) {
        pc.coverage.add(p);
        first_pair[static_cast<size_t>(p)] = {x, y};
      } else if (pc.unique) {
        pc.unique = false;
        pc.collision = Collision{p, first_pair[static_cast<size_t>(p)], {x, y}};
      }
    }
  }
  assert(!pc.unique ||
         pc.coverage.size() == a.size() * b.size());
  return pc;
}

Subset normalize_to_identity(const GroupTable& g, const Subset& a) {
  if (a.empty_set()) return a;
  Elem u = a.min_element();
  return translate_left(g, g.inverse(u), a);
}

uint64_t lagrange_subset_count(int n, int d) {
  assert(n >= 1 && d >= 1 && d <= n);
  // C(n-1, d-1), exact in 64 bits for n <= 64
  unsigned __int128 r = 1;
  int top = n - 1, k = d - 1;
  if (k > top - k) k = top - k;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(top - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<uint64_t>(r);
}

LagrangeSubsetStream::LagrangeSubsetStream(const GroupTable& g, int d)
    : n_(g.order()), d_(d) {
  if (d < 1 || d > n_ || n_ % d != 0) {
    throw Error(Errc::NotLagrange, "size " + std::to_string(d) +
                                       " does not divide group order " + std::to_string(n_));
  }
  comb_.resize(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) comb_[static_cast<size_t>(i)] = i;  // comb_[0] stays 0
}

std::optional<Subset> LagrangeSubsetStream::next() {
  if (exhausted_) return std::nullopt;
  Subset out = Subset::from_elements(n_, comb_);
  // advance to the next combination with the identity fixed at position 0
  int i = d_ - 1;
  while (i >= 1 && comb_[static_cast<size_t>(i)] == n_ - d_ + i) --i;
  if (i < 1) {
    exhausted_ = true;
  } else {
    ++comb_[static_cast<size_t>(i)];
    for (int j = i + 1; j < d_; ++j)
      comb_[static_cast<size_t>(j)] = comb_[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Elem resolve_element(const GroupTable& g, const std::string& token) {
  for (Elem i = 0; i < g.order(); ++i) {
    if (g.name(i) == token) return i;
  }
  bool digits = !token.empty();
  for (char c : token) digits = digits && c >= '0' && c <= '9';
  if (digits) {
    long v = std::stol(token);
    if (v < 0 || v >= g.order()) {
      throw Error(Errc::BadElementName,
                  "index " + token + " out of range for group of order " +
                      std::to_string(g.order()));
    }
    return static_cast<Elem>(v);
  }
  throw Error(Errc::BadElementName, "no element named '" + token + "'");
}

}  // namespace

Subset parse_subset_text(const GroupTable& g, const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}') {
    throw Error(Errc::BadSubsetText, "expected a brace-delimited set, got '" + text + "'");
  }
  std::string inner = t.substr(1, t.size() - 2);
  Subset out = Subset::empty(g.order());
  std::string token;
  int depth = 0;
  bool any = false;
  auto flush = [&]() {
    std::string name = trim(token);
    token.clear();
    if (name.empty()) {
      if (any) throw Error(Errc::BadSubsetText, "empty element in '" + text + "'");
      return;
    }
    any = true;
    out.add(resolve_element(g, name));
  };
  for (char c : inner) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      any = true;
      flush();
      token.clear();
      continue;
    }
    token.push_back(c);
  }
  flush();
  if (depth != 0) throw Error(Errc::BadSubsetText, "unbalanced parentheses in '" + text + "'");
  return out;
}

std::string subset_to_text(const GroupTable& g, const Subset& a) {
  std::string out = "{";
  bool first = true;
  for (Elem x : a.elements()) {
    if (!first) out += ",";
    out += g.name(x);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace grouptile
