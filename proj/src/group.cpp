#include "pgroup/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "pgroup/errors.hpp"

namespace pgroup {

namespace {

std::string describe(const GroupTable& g) {
  std::ostringstream os;
  os << (g.name.empty() ? std::string("<unnamed>") : g.name) << " (order "
     << g.order << ")";
  return os.str();
}

void require_same_ambient(const Subgroup& a, const Subgroup& b,
                          const char* op) {
  if (a.ambient.get() != b.ambient.get())
    throw InputError(std::string(op) + ": subgroups of different groups");
}

std::vector<char> mask_of(const Subgroup& s) {
  std::vector<char> m(s.ambient->order, 0);
  for (int32_t x : s.elems) m[x] = 1;
  return m;
}

// Closure helper working on a membership mask; returns the sorted members.
std::vector<int32_t> close_under_mult(const GroupTable& g,
                                      std::vector<char>& mask) {
  std::vector<int32_t> members;
  for (int x = 0; x < g.order; ++x)
    if (mask[x]) members.push_back(x);
  size_t fresh = 0;  // members[fresh..) have not been multiplied yet
  while (fresh < members.size()) {
    int32_t a = members[fresh++];
    size_t known = members.size();
    for (size_t i = 0; i < known; ++i) {
      int32_t b = members[i];
      for (int32_t p : {g.mul(a, b), g.mul(b, a)}) {
        if (!mask[p]) {
          mask[p] = 1;
          members.push_back(p);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

int GroupTable::pow(int x, long long e) const {
  if (e < 0) return pow(inv[x], -e);
  int acc = 0, base = x;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int prime_power_base(long long n) {
  if (n < 2) return 0;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1 ? int(p) : 0;
    }
  }
  return int(n);  // n itself is prime
}

std::optional<TableViolation> validate_table(const GroupTable& g,
                                             uint64_t seed) {
  const int n = g.order;
  if (n < 1) return TableViolation{"order", {-1, -1, -1}, "order must be >= 1"};
  if (g.mult.size() != size_t(n) * n)
    return TableViolation{"shape", {-1, -1, -1}, "mult must hold order^2 entries"};
  for (size_t i = 0; i < g.mult.size(); ++i)
    if (g.mult[i] < 0 || g.mult[i] >= n)
      return TableViolation{"range", {int(i / n), int(i % n), -1},
                            "table entry out of range"};
  for (int x = 0; x < n; ++x) {
    if (g.mul(0, x) != x) return TableViolation{"identity", {0, x, -1}, "1*x != x"};
    if (g.mul(x, 0) != x) return TableViolation{"identity", {x, 0, -1}, "x*1 != x"};
  }
  // Latin square: every row and column is a permutation.
  std::vector<char> seen(n);
  for (int x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n; ++y) {
      int v = g.mul(x, y);
      if (seen[v])
        return TableViolation{"latin-row", {x, y, v}, "repeated value in row"};
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n; ++y) {
      int v = g.mul(y, x);
      if (seen[v])
        return TableViolation{"latin-col", {y, x, v}, "repeated value in column"};
      seen[v] = 1;
    }
  }
  // Two-sided inverses (with identity + Latin this pins a unique candidate).
  for (int x = 0; x < n; ++x) {
    int y = -1;
    for (int c = 0; c < n; ++c)
      if (g.mul(x, c) == 0) {
        y = c;
        break;
      }
    if (y < 0 || g.mul(y, x) != 0)
      return TableViolation{"inverse", {x, y, -1}, "no two-sided inverse"};
  }
  auto assoc = [&](int a, int b, int c) {
    return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
  };
  if (n <= 512) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!assoc(a, b, c))
            return TableViolation{"associativity", {a, b, c}, "exhaustive check"};
  } else {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> pick(0, n - 1);
    long long trials = 10LL * n * n;
    for (long long t = 0; t < trials; ++t) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (!assoc(a, b, c))
        return TableViolation{"associativity", {a, b, c}, "sampled check"};
    }
  }
  return std::nullopt;
}

GroupPtr make_group(GroupTable t, uint64_t seed, int order_cap) {
  if (t.order > order_cap) {
    std::ostringstream os;
    os << "group order " << t.order << " exceeds cap " << order_cap;
    throw ResourceError(os.str());
  }
  if (auto v = validate_table(t, seed)) {
    std::ostringstream os;
    os << "invalid multiplication table for " << describe(t) << ": " << v->axiom
       << " at (" << v->witness[0] << "," << v->witness[1] << "," << v->witness[2]
       << ") " << v->detail;
    throw InputError(os.str());
  }
  t.inv.assign(t.order, 0);
  for (int x = 0; x < t.order; ++x)
    for (int y = 0; y < t.order; ++y)
      if (t.mul(x, y) == 0) {
        t.inv[x] = y;
        break;
      }
  t.prime = prime_power_base(t.order);
  return std::make_shared<const GroupTable>(std::move(t));
}

// ---------------------------------------------------------------------------
// Subgroups.
// ---------------------------------------------------------------------------

bool Subgroup::contains(int x) const {
  return std::binary_search(elems.begin(), elems.end(), int32_t(x));
}

Subgroup trivial_subgroup(GroupPtr g) { return Subgroup{std::move(g), {0}}; }

Subgroup full_subgroup(GroupPtr g) {
  Subgroup s{g, std::vector<int32_t>(g->order)};
  std::iota(s.elems.begin(), s.elems.end(), 0);
  return s;
}

Subgroup subgroup_closure(GroupPtr g, const std::vector<int32_t>& gens) {
  std::vector<char> mask(g->order, 0);
  mask[0] = 1;
  for (int32_t x : gens) {
    if (x < 0 || x >= g->order)
      throw InputError("subgroup_closure: generator index out of range");
    mask[x] = 1;
    mask[g->inv[x]] = 1;
  }
  Subgroup s{g, {}};
  s.elems = close_under_mult(*g, mask);
  return s;
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b, "commutator_subgroup");
  const GroupTable& g = *a.ambient;
  std::vector<char> mask(g.order, 0);
  mask[0] = 1;
  for (int32_t x : a.elems)
    for (int32_t y : b.elems) {
      int c = g.comm(x, y);
      mask[c] = 1;
      mask[g.inv[c]] = 1;
    }
  Subgroup s{a.ambient, {}};
  s.elems = close_under_mult(g, mask);
  return s;
}

Subgroup power_subgroup(const Subgroup& s, long long e) {
  const GroupTable& g = *s.ambient;
  std::vector<char> mask(g.order, 0);
  mask[0] = 1;
  for (int32_t x : s.elems) {
    int p = g.pow(x, e);
    mask[p] = 1;
    mask[g.inv[p]] = 1;
  }
  Subgroup out{s.ambient, {}};
  out.elems = close_under_mult(g, mask);
  return out;
}

std::vector<int32_t> power_image_set(const Subgroup& s, long long e) {
  const GroupTable& g = *s.ambient;
  std::vector<int32_t> out;
  out.reserve(s.elems.size());
  for (int32_t x : s.elems) out.push_back(g.pow(x, e));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Subgroup center(GroupPtr g) {
  const GroupTable& t = *g;
  Subgroup s{g, {}};
  for (int z = 0; z < t.order; ++z) {
    bool central = true;
    for (int x = 0; x < t.order && central; ++x)
      central = t.mul(z, x) == t.mul(x, z);
    if (central) s.elems.push_back(z);
  }
  return s;
}

Subgroup centralizer_of_subgroup(GroupPtr g, const Subgroup& s) {
  const GroupTable& t = *g;
  Subgroup out{g, {}};
  for (int z = 0; z < t.order; ++z) {
    bool ok = true;
    for (int32_t x : s.elems)
      if (t.mul(z, x) != t.mul(x, z)) {
        ok = false;
        break;
      }
    if (ok) out.elems.push_back(z);
  }
  return out;
}

Subgroup product_of_subgroups(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b, "product_of_subgroups");
  const GroupTable& g = *a.ambient;
  std::vector<char> mask(g.order, 0);
  for (int32_t x : a.elems)
    for (int32_t y : b.elems) mask[g.mul(x, y)] = 1;
  Subgroup s{a.ambient, {}};
  for (int x = 0; x < g.order; ++x)
    if (mask[x]) s.elems.push_back(x);
  // The set product is a subgroup iff it is closed; verify rather than
  // silently taking the closure.
  for (int32_t x : s.elems)
    for (int32_t y : s.elems)
      if (!mask[g.mul(x, y)])
        throw InputError("product_of_subgroups: set product is not a subgroup");
  return s;
}

Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b, "intersect_subgroups");
  Subgroup s{a.ambient, {}};
  std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(),
                        b.elems.end(), std::back_inserter(s.elems));
  return s;
}

bool subgroup_leq(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b, "subgroup_leq");
  return std::includes(b.elems.begin(), b.elems.end(), a.elems.begin(),
                       a.elems.end());
}

bool subgroup_eq(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b, "subgroup_eq");
  return a.elems == b.elems;
}

std::optional<std::pair<int, int>> normality_witness(const Subgroup& s) {
  const GroupTable& t = *s.ambient;
  for (int g = 0; g < t.order; ++g)
    for (int32_t x : s.elems)
      if (!s.contains(t.conj(g, x))) return std::make_pair(int(x), g);
  return std::nullopt;
}

bool is_normal(const Subgroup& s) { return !normality_witness(s).has_value(); }

bool exponent_divides(const Subgroup& s, long long e) {
  for (int32_t x : s.elems)
    if (s.ambient->pow(x, e) != 0) return false;
  return true;
}

Subgroup elements_of_exponent_dividing(const Subgroup& s, long long e) {
  const GroupTable& g = *s.ambient;
  Subgroup out{s.ambient, {}};
  for (int32_t x : s.elems)
    if (g.pow(x, e) == 0) out.elems.push_back(x);
  for (int32_t x : out.elems)
    for (int32_t y : out.elems) {
      int p = g.mul(x, y);
      if (g.pow(p, e) != 0 || !out.contains(p))
        throw InputError(
            "elements_of_exponent_dividing: torsion set is not a subgroup");
    }
  return out;
}

bool is_abelian_subgroup(const Subgroup& s) {
  const GroupTable& g = *s.ambient;
  for (int32_t x : s.elems)
    for (int32_t y : s.elems)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

SubgroupGroup subgroup_to_group(const Subgroup& s, int order_cap) {
  const GroupTable& g = *s.ambient;
  const int n = s.order();
  std::vector<int32_t> to_sub(g.order, -1);
  for (int i = 0; i < n; ++i) to_sub[s.elems[i]] = i;
  GroupTable t;
  t.name = (g.name.empty() ? "group" : g.name) + "|subgroup";
  t.order = n;
  t.mult.resize(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int32_t p = to_sub[g.mul(s.elems[i], s.elems[j])];
      if (p < 0) throw InternalError("subgroup_to_group: set not closed");
      t.mult[size_t(i) * n + j] = p;
    }
  SubgroupGroup out;
  out.group = make_group(std::move(t), 0, order_cap);
  out.to_ambient = s.elems;
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms and quotients.
// ---------------------------------------------------------------------------

std::optional<std::array<int, 2>> hom_violation(const Homomorphism& f,
                                                uint64_t seed) {
  const GroupTable& d = *f.domain;
  const GroupTable& c = *f.codomain;
  if (f.map.size() != size_t(d.order))
    return std::array<int, 2>{-1, -1};
  auto bad = [&](int a, int b) {
    return f.map[d.mul(a, b)] != c.mul(f.map[a], f.map[b]);
  };
  if (d.order <= kDefaultOrderCap) {
    for (int a = 0; a < d.order; ++a)
      for (int b = 0; b < d.order; ++b)
        if (bad(a, b)) return std::array<int, 2>{a, b};
  } else {
    std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
    std::uniform_int_distribution<int> pick(0, d.order - 1);
    for (int t = 0; t < 10000; ++t) {
      int a = pick(rng), b = pick(rng);
      if (bad(a, b)) return std::array<int, 2>{a, b};
    }
  }
  return std::nullopt;
}

Subgroup hom_image(const Homomorphism& f) {
  std::vector<char> mask(f.codomain->order, 0);
  for (int32_t v : f.map) mask[v] = 1;
  Subgroup s{f.codomain, {}};
  for (int x = 0; x < f.codomain->order; ++x)
    if (mask[x]) s.elems.push_back(x);
  return s;
}

Subgroup hom_kernel(const Homomorphism& f) {
  Subgroup s{f.domain, {}};
  for (int x = 0; x < f.domain->order; ++x)
    if (f.map[x] == 0) s.elems.push_back(x);
  return s;
}

Subgroup image_of_subgroup(const Homomorphism& f, const Subgroup& s) {
  if (s.ambient.get() != f.domain.get())
    throw InputError("image_of_subgroup: subgroup not in the domain");
  std::vector<char> mask(f.codomain->order, 0);
  for (int32_t x : s.elems) mask[f.map[x]] = 1;
  Subgroup out{f.codomain, {}};
  for (int x = 0; x < f.codomain->order; ++x)
    if (mask[x]) out.elems.push_back(x);
  return out;
}

Subgroup preimage_of_subgroup(const Homomorphism& f, const Subgroup& s) {
  if (s.ambient.get() != f.codomain.get())
    throw InputError("preimage_of_subgroup: subgroup not in the codomain");
  Subgroup out{f.domain, {}};
  for (int x = 0; x < f.domain->order; ++x)
    if (s.contains(f.map[x])) out.elems.push_back(x);
  return out;
}

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner) {
  if (inner.codomain.get() != outer.domain.get())
    throw InputError("compose: codomain/domain mismatch");
  Homomorphism h{inner.domain, outer.codomain, {}};
  h.map.reserve(inner.map.size());
  for (int32_t v : inner.map) h.map.push_back(outer.map[v]);
  return h;
}

QuotientResult quotient_group(GroupPtr g, const Subgroup& n, int order_cap) {
  if (n.ambient.get() != g.get())
    throw InputError("quotient_group: subgroup of a different group");
  if (auto w = normality_witness(n)) {
    std::ostringstream os;
    os << "quotient_group: subgroup not normal in " << describe(*g)
       << "; conjugating element " << w->first << " by " << w->second
       << " leaves the subgroup";
    throw InputError(os.str());
  }
  const GroupTable& t = *g;
  // Coset of x = { x*s }, labelled by its minimal element.
  std::vector<int32_t> coset_rep(t.order, -1);
  for (int x = 0; x < t.order; ++x) {
    if (coset_rep[x] >= 0) continue;
    int32_t rep = x;  // elements are scanned in increasing order
    for (int32_t s : n.elems) coset_rep[t.mul(x, s)] = rep;
  }
  std::vector<int32_t> reps;
  for (int x = 0; x < t.order; ++x)
    if (coset_rep[x] == x) reps.push_back(x);
  std::vector<int32_t> index_of(t.order, -1);
  for (size_t i = 0; i < reps.size(); ++i) index_of[reps[i]] = int32_t(i);

  const int q = int(reps.size());
  GroupTable qt;
  qt.name = describe(t) + "/N" + std::to_string(n.order());
  qt.order = q;
  qt.mult.resize(size_t(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      qt.mult[size_t(i) * q + j] = index_of[coset_rep[t.mul(reps[i], reps[j])]];
  QuotientResult out;
  out.group = make_group(std::move(qt), 0, order_cap);
  out.projection = Homomorphism{g, out.group, {}};
  out.projection.map.resize(t.order);
  for (int x = 0; x < t.order; ++x)
    out.projection.map[x] = index_of[coset_rep[x]];
  return out;
}

// ---------------------------------------------------------------------------
// Actions.
// ---------------------------------------------------------------------------

ActionByAutomorphisms trivial_action(GroupPtr g, GroupPtr m) {
  ActionByAutomorphisms a{std::move(g), std::move(m), {}};
  std::vector<int32_t> id(a.space->order);
  std::iota(id.begin(), id.end(), 0);
  a.perm.assign(a.acting->order, id);
  return a;
}

ActionByAutomorphisms conjugation_action(GroupPtr g) {
  ActionByAutomorphisms a{g, g, {}};
  const GroupTable& t = *g;
  a.perm.resize(t.order);
  for (int x = 0; x < t.order; ++x) {
    a.perm[x].resize(t.order);
    for (int m = 0; m < t.order; ++m) a.perm[x][m] = t.conj(x, m);
  }
  return a;
}

std::optional<ActionViolation> validate_action(const ActionByAutomorphisms& a,
                                               uint64_t seed) {
  const GroupTable& g = *a.acting;
  const GroupTable& m = *a.space;
  if (a.perm.size() != size_t(g.order)) return ActionViolation{"shape"};
  std::vector<char> seen(m.order);
  for (int x = 0; x < g.order; ++x) {
    if (a.perm[x].size() != size_t(m.order)) return ActionViolation{"shape", {x}};
    std::fill(seen.begin(), seen.end(), 0);
    for (int v : a.perm[x]) {
      if (v < 0 || v >= m.order || seen[v])
        return ActionViolation{"bijection", {x, v, -1}};
      seen[v] = 1;
    }
  }
  for (int v = 0; v < m.order; ++v)
    if (a.perm[0][v] != v) return ActionViolation{"identity", {0, v, -1}};

  std::mt19937_64 rng(seed ^ 0xa0761d6478bd642fULL);
  auto pick = [&](int n) {
    return int(std::uniform_int_distribution<int>(0, n - 1)(rng));
  };
  // ^g (xy) = (^g x)(^g y)
  long long auto_pairs = 1LL * g.order * m.order * m.order;
  if (auto_pairs <= (1LL << 26)) {
    for (int x = 0; x < g.order; ++x)
      for (int u = 0; u < m.order; ++u)
        for (int v = 0; v < m.order; ++v)
          if (a.perm[x][m.mul(u, v)] != m.mul(a.perm[x][u], a.perm[x][v]))
            return ActionViolation{"automorphism", {x, u, v}};
  } else {
    for (int t = 0; t < 10000; ++t) {
      int x = pick(g.order), u = pick(m.order), v = pick(m.order);
      if (a.perm[x][m.mul(u, v)] != m.mul(a.perm[x][u], a.perm[x][v]))
        return ActionViolation{"automorphism", {x, u, v}};
    }
  }
  // ^(xy) m = ^x (^y m)
  long long comp_pairs = 1LL * g.order * g.order * m.order;
  if (comp_pairs <= (1LL << 26)) {
    for (int x = 0; x < g.order; ++x)
      for (int y = 0; y < g.order; ++y)
        for (int v = 0; v < m.order; ++v)
          if (a.perm[g.mul(x, y)][v] != a.perm[x][a.perm[y][v]])
            return ActionViolation{"composition", {x, y, v}};
  } else {
    for (int t = 0; t < 10000; ++t) {
      int x = pick(g.order), y = pick(g.order), v = pick(m.order);
      if (a.perm[g.mul(x, y)][v] != a.perm[x][a.perm[y][v]])
        return ActionViolation{"composition", {x, y, v}};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Invariants.
// ---------------------------------------------------------------------------

int element_order(const GroupTable& g, int x) {
  int o = 1, y = x;
  while (y != 0) {
    y = g.mul(y, x);
    ++o;
  }
  return x == 0 ? 1 : o;
}

long long group_exponent(const GroupTable& g) {
  long long e = 1;
  for (int x = 0; x < g.order; ++x) e = std::lcm(e, (long long)element_order(g, x));
  return e;
}

bool is_abelian(const GroupTable& g) {
  for (int x = 0; x < g.order; ++x)
    for (int y = x + 1; y < g.order; ++y)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

int nilpotency_class(GroupPtr g) {
  Subgroup term = full_subgroup(g);
  const Subgroup whole = full_subgroup(g);
  int cls = 0;
  while (!term.is_trivial()) {
    Subgroup next = commutator_subgroup(term, whole);
    if (subgroup_eq(next, term))
      throw InputError("nilpotency_class: group is not nilpotent");
    term = std::move(next);
    ++cls;
  }
  return cls;
}

std::vector<long long> abelian_invariants(GroupPtr g) {
  Subgroup derived = commutator_subgroup(full_subgroup(g), full_subgroup(g));
  GroupPtr ab = derived.is_trivial() ? g : quotient_group(g, derived).group;
  const GroupTable& a = *ab;
  long long n = a.order;
  if (n == 1) return {};
  // Per prime p | n: x with x^{p^k} = 1 number p^{d_k}; the partition
  // conjugate to (d_1-d_0, d_2-d_1, ...) lists the p-power cyclic factors.
  std::vector<std::vector<long long>> per_prime;  // descending prime powers
  long long rest = n;
  for (long long p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    std::vector<int> dk{0};  // d_0 = 0
    long long pk = 1;
    while (true) {
      pk *= p;
      long long cnt = 0;
      for (int x = 0; x < a.order; ++x)
        if (a.pow(x, pk) == 0) ++cnt;
      int d = 0;
      for (long long c = cnt; c > 1; c /= p) ++d;
      dk.push_back(d);
      if (cnt == [&] {  // stop once we captured the full p-part
            long long m = a.order, full = 1;
            while (m % p == 0) m /= p, full *= p;
            return full;
          }())
        break;
    }
    // d_k - d_{k-1} counts cyclic factors of order >= p^k, so exactly
    // (d_k - d_{k-1}) - (d_{k+1} - d_k) factors have order p^k.
    std::vector<long long> factors;  // cyclic p-power factors, descending
    for (size_t k = 1; k < dk.size(); ++k) {
      int ge_k = dk[k] - dk[k - 1];
      int ge_k1 = (k + 1 < dk.size()) ? dk[k + 1] - dk[k] : 0;
      long long pk2 = 1;
      for (size_t i = 0; i < k; ++i) pk2 *= p;
      for (int c = 0; c < ge_k - ge_k1; ++c) factors.push_back(pk2);
    }
    std::sort(factors.rbegin(), factors.rend());
    per_prime.push_back(std::move(factors));
  }
  size_t rows = 0;
  for (auto& f : per_prime) rows = std::max(rows, f.size());
  std::vector<long long> inv(rows, 1);
  for (auto& f : per_prime)
    for (size_t i = 0; i < f.size(); ++i) inv[i] *= f[i];  // descending chain
  std::reverse(inv.begin(), inv.end());  // ascending d1 | d2 | ...
  return inv;
}

std::vector<std::pair<long long, long long>> order_histogram(
    const GroupTable& g) {
  std::vector<std::pair<long long, long long>> out;
  std::vector<long long> ords;
  ords.reserve(g.order);
  for (int x = 0; x < g.order; ++x) ords.push_back(element_order(g, x));
  std::sort(ords.begin(), ords.end());
  for (size_t i = 0; i < ords.size();) {
    size_t j = i;
    while (j < ords.size() && ords[j] == ords[i]) ++j;
    out.emplace_back(ords[i], (long long)(j - i));
    i = j;
  }
  return out;
}

bool Fingerprint::operator<(const Fingerprint& o) const {
  return std::tie(order, exponent, ab_invariants, nilpotency_class) <
         std::tie(o.order, o.exponent, o.ab_invariants, o.nilpotency_class);
}

Fingerprint fingerprint(GroupPtr g) {
  Fingerprint f;
  f.order = g->order;
  f.exponent = group_exponent(*g);
  f.ab_invariants = abelian_invariants(g);
  f.nilpotency_class = nilpotency_class(g);
  return f;
}

}  // namespace pgroup
