#include "grouptile/group.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace grouptile {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void check_order_bound(long long n, const std::string& what) {
  if (n < 1 || n > GroupTable::kMaxOrder) {
    throw Error(Errc::OrderOutOfRange,
                what + " gives order " + std::to_string(n) + ", supported range is 1.." +
                    std::to_string(GroupTable::kMaxOrder));
  }
}

std::string power_name(const std::string& gen, int k) {
  if (k == 0) return "e";
  if (k == 1) return gen;
  return gen + "^" + std::to_string(k);
}

}  // namespace

// Validates the four group axioms on a flat table whose identity is already
// at index 0, then fills inverses. All builders and the raw-table loader
// funnel through here.
GroupTable detail_make_group(int n, std::vector<uint8_t> flat, std::vector<std::string> names,
                             std::optional<GroupSpec> spec) {
  assert(n >= 1 && n <= GroupTable::kMaxOrder);
  assert(static_cast<int>(flat.size()) == n * n);
  auto at = [&](int i, int j) -> int { return flat[static_cast<size_t>(i) * n + j]; };

  for (int i = 0; i < n; ++i) {
    uint64_t row = 0, col = 0;
    for (int j = 0; j < n; ++j) {
      row |= 1ull << at(i, j);
      col |= 1ull << at(j, i);
    }
    uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    if (row != all)
      throw Error(Errc::NotAGroup, "row " + std::to_string(i) + " is not a permutation of 0.." +
                                       std::to_string(n - 1));
    if (col != all)
      throw Error(Errc::NotAGroup, "column " + std::to_string(i) +
                                       " is not a permutation of 0.." + std::to_string(n - 1));
  }
  for (int j = 0; j < n; ++j) {
    if (at(0, j) != j || at(j, 0) != j)
      throw Error(Errc::NotAGroup, "index 0 is not a two-sided identity at element " +
                                       std::to_string(j));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (at(at(i, j), k) != at(i, at(j, k)))
          throw Error(Errc::NotAGroup, "associativity fails at triple (" + std::to_string(i) +
                                           "," + std::to_string(j) + "," + std::to_string(k) +
                                           ")");

  std::vector<uint8_t> inv(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int found = -1;
    for (int j = 0; j < n; ++j) {
      if (at(i, j) == 0 && at(j, i) == 0) {
        found = j;
        break;
      }
    }
    if (found < 0)
      throw Error(Errc::NotAGroup, "element " + std::to_string(i) + " has no two-sided inverse");
    inv[static_cast<size_t>(i)] = static_cast<uint8_t>(found);
  }

  GroupTable g;
  g.n_ = n;
  g.table_ = std::move(flat);
  g.inv_ = std::move(inv);
  if (names.empty()) {
    names.reserve(static_cast<size_t>(n));
    names.emplace_back("e");
    for (int i = 1; i < n; ++i) names.push_back("x" + std::to_string(i));
  }
  assert(static_cast<int>(names.size()) == n);
  g.names_ = std::move(names);
  g.spec_ = std::move(spec);
  return g;
}

Elem GroupTable::power(Elem x, int k) const {
  assert(x >= 0 && x < n_ && k >= 0);
  Elem r = 0;
  for (int i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

std::string GroupTable::display_name() const {
  if (spec_) return spec_->expression;
  return "table(n=" + std::to_string(n_) + ")";
}

std::vector<std::vector<int>> GroupTable::rows() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(n_), std::vector<int>(static_cast<size_t>(n_)));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[static_cast<size_t>(i)][static_cast<size_t>(j)] = mul(i, j);
  return out;
}

bool GroupTable::same_table(const GroupTable& other) const {
  return n_ == other.n_ && table_ == other.table_;
}

GroupTable build_cyclic(int n) {
  check_order_bound(n, "cyclic group C" + std::to_string(n));
  std::vector<uint8_t> flat(static_cast<size_t>(n) * n);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    names.push_back(power_name("a", i));
    for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = static_cast<uint8_t>((i + j) % n);
  }
  return detail_make_group(n, std::move(flat), std::move(names),
                           GroupSpec{"C" + std::to_string(n), n});
}

GroupTable build_elementary_abelian(int p, int k) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(Errc::OrderOutOfRange, "exponent must be positive");
  long long n = 1;
  for (int i = 0; i < k; ++i) {
    n *= p;
    if (n > GroupTable::kMaxOrder)
      throw Error(Errc::OrderOutOfRange, "order " + std::to_string(p) + "^" + std::to_string(k) +
                                             " exceeds " + std::to_string(GroupTable::kMaxOrder));
  }
  int order = static_cast<int>(n);
  // element index = base-p digit vector, addition is digit-wise mod p
  auto add = [&](int x, int y) {
    int r = 0, place = 1;
    for (int d = 0; d < k; ++d) {
      r += ((x % p + y % p) % p) * place;
      x /= p;
      y /= p;
      place *= p;
    }
    return r;
  };
  // generator letters, skipping 'e' which names the identity
  static const char letters[] = {'a', 'b', 'c', 'd', 'f', 'g'};
  std::vector<uint8_t> flat(static_cast<size_t>(order) * order);
  std::vector<std::string> names;
  for (int i = 0; i < order; ++i) {
    std::string nm;
    int x = i;
    for (int d = 0; d < k; ++d) {
      int digit = x % p;
      x /= p;
      if (digit > 0) nm += power_name(std::string(1, letters[d]), digit);
    }
    names.push_back(nm.empty() ? "e" : nm);
    for (int j = 0; j < order; ++j)
      flat[static_cast<size_t>(i) * order + j] = static_cast<uint8_t>(add(i, j));
  }
  std::string expr = "C" + std::to_string(p) + (k > 1 ? "^" + std::to_string(k) : "");
  return detail_make_group(order, std::move(flat), std::move(names), GroupSpec{expr, order});
}

GroupTable build_dihedral(int n) {
  if (n < 2) throw Error(Errc::OrderOutOfRange, "dihedral D" + std::to_string(n) + " needs n >= 2");
  check_order_bound(2LL * n, "dihedral group D" + std::to_string(n));
  int order = 2 * n;
  // indices 0..n-1 are a^i, indices n..2n-1 are a^i b, with b a b = a^-1
  auto mul = [&](int x, int y) {
    int i = x % n, j = y % n;
    bool rx = x >= n, ry = y >= n;
    if (!rx && !ry) return (i + j) % n;
    if (!rx && ry) return n + (i + j) % n;
    if (rx && !ry) return n + ((i - j) % n + n) % n;
    return ((i - j) % n + n) % n;
  };
  std::vector<uint8_t> flat(static_cast<size_t>(order) * order);
  std::vector<std::string> names;
  for (int i = 0; i < order; ++i) {
    names.push_back(i < n ? power_name("a", i)
                          : (i == n ? "b" : power_name("a", i - n) + "b"));
    for (int j = 0; j < order; ++j)
      flat[static_cast<size_t>(i) * order + j] = static_cast<uint8_t>(mul(i, j));
  }
  return detail_make_group(order, std::move(flat), std::move(names),
                           GroupSpec{"D" + std::to_string(n), order});
}

GroupTable build_dicyclic(int m) {
  if (m < 2) throw Error(Errc::OrderOutOfRange, "dicyclic group needs m >= 2");
  check_order_bound(4LL * m, "dicyclic group of order " + std::to_string(4 * m));
  int n2 = 2 * m, order = 4 * m;
  // indices 0..2m-1 are a^i, indices 2m..4m-1 are a^i b, with b^2 = a^m and
  // b a b^-1 = a^-1
  auto mul = [&](int x, int y) {
    int i = x % n2, j = y % n2;
    bool rx = x >= n2, ry = y >= n2;
    if (!rx && !ry) return (i + j) % n2;
    if (!rx && ry) return n2 + (i + j) % n2;
    if (rx && !ry) return n2 + ((i - j) % n2 + n2) % n2;
    return (((i - j + m) % n2) + n2) % n2;
  };
  std::vector<uint8_t> flat(static_cast<size_t>(order) * order);
  std::vector<std::string> names;
  for (int i = 0; i < order; ++i) {
    names.push_back(i < n2 ? power_name("a", i)
                           : (i == n2 ? "b" : power_name("a", i - n2) + "b"));
    for (int j = 0; j < order; ++j)
      flat[static_cast<size_t>(i) * order + j] = static_cast<uint8_t>(mul(i, j));
  }
  std::string expr = m == 2 ? "Q8" : "Dic" + std::to_string(m);
  return detail_make_group(order, std::move(flat), std::move(names), GroupSpec{expr, order});
}

GroupTable build_quaternion() { return build_dicyclic(2); }

GroupTable build_alternating4() {
  // the 12 even permutations of {0,1,2,3} in lexicographic order
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[i] > p[j]) ++inv;
    if (inv % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  assert(perms.size() == 12);

  auto index_of = [&](const std::array<int, 4>& q) {
    for (size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == q) return static_cast<int>(i);
    assert(false);
    return -1;
  };
  auto cycle_name = [](const std::array<int, 4>& q) {
    std::string out;
    std::array<bool, 4> seen{};
    for (int s = 0; s < 4; ++s) {
      if (seen[s] || q[s] == s) continue;
      out += "(";
      int c = s;
      do {
        seen[c] = true;
        out += static_cast<char>('0' + c);
        c = q[c];
      } while (c != s);
      out += ")";
    }
    return out.empty() ? std::string("e") : out;
  };

  int order = 12;
  std::vector<uint8_t> flat(static_cast<size_t>(order) * order);
  std::vector<std::string> names;
  for (int i = 0; i < order; ++i) {
    names.push_back(cycle_name(perms[static_cast<size_t>(i)]));
    for (int j = 0; j < order; ++j) {
      std::array<int, 4> comp;
      for (int x = 0; x < 4; ++x)
        comp[x] = perms[static_cast<size_t>(i)][perms[static_cast<size_t>(j)][x]];
      flat[static_cast<size_t>(i) * order + j] = static_cast<uint8_t>(index_of(comp));
    }
  }
  return detail_make_group(order, std::move(flat), std::move(names), GroupSpec{"A4", order});
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  long long n = static_cast<long long>(g.order()) * h.order();
  check_order_bound(n, "direct product");
  int hn = h.order(), order = static_cast<int>(n);
  std::vector<uint8_t> flat(static_cast<size_t>(order) * order);
  std::vector<std::string> names;
  for (int i = 0; i < order; ++i) {
    int gi = i / hn, hi = i % hn;
    names.push_back("(" + g.name(gi) + "," + h.name(hi) + ")");
    for (int j = 0; j < order; ++j) {
      int gj = j / hn, hj = j % hn;
      flat[static_cast<size_t>(i) * order + j] =
          static_cast<uint8_t>(g.mul(gi, gj) * hn + h.mul(hi, hj));
    }
  }
  std::optional<GroupSpec> spec;
  if (g.spec() && h.spec())
    spec = GroupSpec{g.spec()->expression + "x" + h.spec()->expression, order};
  return detail_make_group(order, std::move(flat), std::move(names), std::move(spec));
}

GroupTable from_cayley_table(const std::vector<std::vector<int>>& raw,
                             const std::optional<std::vector<std::string>>& names) {
  int n = static_cast<int>(raw.size());
  if (n < 1 || n > GroupTable::kMaxOrder)
    throw Error(Errc::NotAGroup, "table has " + std::to_string(n) + " rows, supported range is 1.." +
                                     std::to_string(GroupTable::kMaxOrder));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(raw[static_cast<size_t>(i)].size()) != n)
      throw Error(Errc::NotAGroup, "row " + std::to_string(i) + " has wrong length");
    for (int v : raw[static_cast<size_t>(i)])
      if (v < 0 || v >= n)
        throw Error(Errc::NotAGroup,
                    "entry " + std::to_string(v) + " in row " + std::to_string(i) +
                        " is outside 0.." + std::to_string(n - 1));
  }
  if (names && static_cast<int>(names->size()) != n)
    throw Error(Errc::NotAGroup, "expected " + std::to_string(n) + " element names");

  // locate the two-sided identity before normalizing it to index 0
  int id = -1;
  for (int i = 0; i < n && id < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      ok = raw[static_cast<size_t>(i)][static_cast<size_t>(j)] == j &&
           raw[static_cast<size_t>(j)][static_cast<size_t>(i)] == j;
    if (ok) id = i;
  }
  // check rows/columns first so the malformed-table message names the axiom
  for (int i = 0; i < n; ++i) {
    uint64_t row = 0, col = 0;
    for (int j = 0; j < n; ++j) {
      row |= 1ull << raw[static_cast<size_t>(i)][static_cast<size_t>(j)];
      col |= 1ull << raw[static_cast<size_t>(j)][static_cast<size_t>(i)];
    }
    uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    if (row != all)
      throw Error(Errc::NotAGroup, "row " + std::to_string(i) + " is not a permutation of 0.." +
                                       std::to_string(n - 1));
    if (col != all)
      throw Error(Errc::NotAGroup, "column " + std::to_string(i) +
                                       " is not a permutation of 0.." + std::to_string(n - 1));
  }
  if (id < 0) throw Error(Errc::NotAGroup, "no two-sided identity element");

  // relabel so the identity is index 0 (swap labels 0 and id)
  auto relabel = [&](int x) { return x == id ? 0 : (x == 0 ? id : x); };
  std::vector<uint8_t> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      flat[static_cast<size_t>(relabel(i)) * n + relabel(j)] =
          static_cast<uint8_t>(relabel(raw[static_cast<size_t>(i)][static_cast<size_t>(j)]));
  std::vector<std::string> nm;
  if (names) {
    nm.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) nm[static_cast<size_t>(relabel(i))] = (*names)[static_cast<size_t>(i)];
  }
  return detail_make_group(n, std::move(flat), std::move(nm), std::nullopt);
}

namespace {

struct Atom {
  std::string canonical;
  GroupTable table;
};

Atom parse_atom(const std::string& atom, size_t pos) {
  auto fail = [&](const std::string& why) -> Error {
    return Error(Errc::SpecParseError,
                 why + " at position " + std::to_string(pos) + " ('" + atom + "')");
  };
  if (atom.empty()) throw fail("empty group term");
  std::string up;
  for (char c : atom) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));

  auto parse_int = [&](const std::string& s) -> int {
    if (s.empty()) throw fail("missing number");
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw fail("malformed number '" + s + "'");
    if (s.size() > 3) throw fail("number too large");
    return std::stoi(s);
  };

  if (up == "Q8") return {"Q8", build_quaternion()};
  if (up == "A4") return {"A4", build_alternating4()};
  if (up == "S3") {
    GroupTable t = build_dihedral(3);
    return {"S3", t};
  }
  if (up.rfind("DIC", 0) == 0) {
    int m = parse_int(up.substr(3));
    return {"Dic" + std::to_string(m), build_dicyclic(m)};
  }
  if (up[0] == 'C') {
    size_t caret = up.find('^');
    if (caret == std::string::npos) {
      int n = parse_int(up.substr(1));
      return {"C" + std::to_string(n), build_cyclic(n)};
    }
    int p = parse_int(up.substr(1, caret - 1));
    int k = parse_int(up.substr(caret + 1));
    return {"C" + std::to_string(p) + "^" + std::to_string(k), build_elementary_abelian(p, k)};
  }
  if (up[0] == 'D') {
    int n = parse_int(up.substr(1));
    return {"D" + std::to_string(n), build_dihedral(n)};
  }
  throw fail("unknown group family");
}

}  // namespace

GroupTable parse_group_spec(std::string_view text) {
  std::string stripped;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
  if (stripped.empty()) throw Error(Errc::SpecParseError, "empty group spec");

  std::vector<std::pair<std::string, size_t>> atoms;
  std::string cur;
  size_t start = 0;
  for (size_t i = 0; i <= stripped.size(); ++i) {
    if (i == stripped.size() || stripped[i] == 'x' || stripped[i] == 'X') {
      atoms.emplace_back(cur, start);
      cur.clear();
      start = i + 1;
    } else {
      cur += stripped[i];
    }
  }

  std::optional<GroupTable> acc;
  std::string expr;
  for (auto& [s, pos] : atoms) {
    Atom a = parse_atom(s, pos);
    if (!acc) {
      acc = std::move(a.table);
      expr = a.canonical;
    } else {
      acc = direct_product(*acc, a.table);
      expr += "x" + a.canonical;
    }
  }
  // re-stamp the canonical expression (direct_product concatenates raw specs)
  if (atoms.size() > 1 || acc->spec()->expression != expr) {
    GroupTable g = std::move(*acc);
    std::vector<uint8_t> flat(static_cast<size_t>(g.order()) * g.order());
    for (int i = 0; i < g.order(); ++i)
      for (int j = 0; j < g.order(); ++j)
        flat[static_cast<size_t>(i) * g.order() + j] = static_cast<uint8_t>(g.mul(i, j));
    return detail_make_group(g.order(), std::move(flat), g.names(), GroupSpec{expr, g.order()});
  }
  return std::move(*acc);
}

int element_order(const GroupTable& g, Elem x) {
  assert(x >= 0 && x < g.order());
  int m = 1;
  Elem y = x;
  while (y != 0) {
    y = g.mul(y, x);
    ++m;
  }
  return m;
}

Subset generated_subgroup(const GroupTable& g, const Subset& seed) {
  assert(seed.group_order() == g.order());
  Subset h = Subset::of(g.order(), {0}).unite(seed);
  std::vector<Elem> work = h.elements();
  while (!work.empty()) {
    Elem x = work.back();
    work.pop_back();
    for (Elem y : h.elements()) {
      for (Elem p : {g.mul(x, y), g.mul(y, x)}) {
        if (!h.contains(p)) {
          h.add(p);
          work.push_back(p);
        }
      }
    }
  }
  return h;
}

bool is_subgroup(const GroupTable& g, const Subset& s) {
  if (s.group_order() != g.order() || !s.contains(0)) return false;
  const auto xs = s.elements();
  for (Elem x : xs)
    for (Elem y : xs)
      if (!s.contains(g.mul(x, y))) return false;
  return true;
}

std::vector<Elem> coset_representatives_within(const GroupTable& g, const Subset& subgroup,
                                               const Subset& universe) {
  if (!is_subgroup(g, subgroup))
    throw Error(Errc::NotASubgroup, "coset representatives need a verified subgroup");
  std::vector<Elem> reps;
  Subset covered = Subset::empty(g.order());
  for (Elem x : universe.elements()) {
    if (covered.contains(x)) continue;
    Subset coset = translate_right(g, subgroup, x);
    if (!universe.contains_all(coset))
      throw Error(Errc::BadParams, "universe is not a union of right cosets of the subgroup");
    reps.push_back(x);
    covered = covered.unite(coset);
  }
  return reps;
}

std::vector<Elem> left_coset_representatives(const GroupTable& g, const Subset& subgroup) {
  return coset_representatives_within(g, subgroup, g.full_set());
}

std::string to_cayley_text(const GroupTable& g) {
  std::ostringstream out;
  out << g.order() << "\n";
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) {
      if (j) out << ' ';
      out << g.mul(i, j);
    }
    out << "\n";
  }
  for (int i = 0; i < g.order(); ++i) {
    if (i) out << ' ';
    out << g.name(i);
  }
  out << "\n";
  return out.str();
}

GroupTable from_cayley_text(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  if (!(in >> n) || n < 1 || n > GroupTable::kMaxOrder)
    throw Error(Errc::NotAGroup, "bad or missing order line");
  std::vector<std::vector<int>> raw(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> raw[static_cast<size_t>(i)][static_cast<size_t>(j)]))
        throw Error(Errc::NotAGroup, "table ends early at row " + std::to_string(i));
  std::vector<std::string> names;
  std::string tok;
  while (in >> tok) names.push_back(tok);
  if (names.empty()) return from_cayley_table(raw);
  if (static_cast<int>(names.size()) != n)
    throw Error(Errc::NotAGroup, "expected " + std::to_string(n) + " names, got " +
                                     std::to_string(names.size()));
  return from_cayley_table(raw, names);
}

GroupTable load_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_cayley_text(buf.str());
}

}  // namespace grouptile
