#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pgroup {

// Default cap on the order of any group materialized as a full Cayley table.
// Tables take O(n^2) memory, so this also bounds memory per group at roughly
// 64 MiB of int32. Operations that would build a larger table throw
// ResourceError unless the caller passes a higher cap explicitly.
inline constexpr int kDefaultOrderCap = 4096;

// A finite group given by its full multiplication table. Elements are the
// indices 0..order-1 and index 0 is always the identity. `prime` is p when
// the order is a positive power of p, and 0 otherwise (including order 1).
struct GroupTable {
  std::string name;
  int order = 1;
  int prime = 0;
  std::vector<int32_t> mult;  // row-major: mult[x*order + y] = x*y
  std::vector<int32_t> inv;   // inv[x]*x = x*inv[x] = identity

  int mul(int x, int y) const { return mult[size_t(x) * order + y]; }
  int inverse(int x) const { return inv[x]; }
  // ^g x = g x g^-1 (left conjugation action)
  int conj(int g, int x) const { return mul(mul(g, x), inv[g]); }
  // [x,y] = x^-1 y^-1 x y
  int comm(int x, int y) const { return mul(mul(inv[x], inv[y]), mul(x, y)); }
  int pow(int x, long long e) const;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

// Result of a failed table validation: which axiom broke and on which
// elements. `witness` holds up to three element indices (unused slots -1).
struct TableViolation {
  std::string axiom;
  std::array<int, 3> witness{-1, -1, -1};
  std::string detail;
};

// Checks identity at index 0, Latin-square rows/columns, two-sided inverses
// and associativity. Associativity is exhaustive for order <= 512 and
// otherwise checked on 10*order^2 seeded random triples.
std::optional<TableViolation> validate_table(const GroupTable& g,
                                             uint64_t seed = 0);

// Validates `t`, fills in `inv` and the prime tag, and freezes the table.
// Throws ResourceError when the order exceeds `order_cap` and InputError
// when validation fails.
GroupPtr make_group(GroupTable t, uint64_t seed = 0,
                    int order_cap = kDefaultOrderCap);

// Returns p if n is a positive power of the prime p (n >= 2), else 0.
int prime_power_base(long long n);

// ---------------------------------------------------------------------------
// Subgroups. Stored as a sorted element list of the ambient group; the
// identity is always a member, so elems[0] == 0.
// ---------------------------------------------------------------------------

struct Subgroup {
  GroupPtr ambient;
  std::vector<int32_t> elems;

  int order() const { return int(elems.size()); }
  bool contains(int x) const;
  bool is_trivial() const { return elems.size() == 1; }
  bool is_full() const { return int(elems.size()) == ambient->order; }
};

Subgroup trivial_subgroup(GroupPtr g);
Subgroup full_subgroup(GroupPtr g);

// Smallest subgroup containing `gens`.
Subgroup subgroup_closure(GroupPtr g, const std::vector<int32_t>& gens);

// Subgroup generated by all sets/elements below; ambients must match.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
Subgroup power_subgroup(const Subgroup& s, long long e);  // <x^e : x in s>
Subgroup center(GroupPtr g);
Subgroup centralizer_of_subgroup(GroupPtr g, const Subgroup& s);

// The raw set {x^e : x in s}, sorted, not closed under multiplication.
std::vector<int32_t> power_image_set(const Subgroup& s, long long e);

// Set product {a*b}. Throws InputError when the result is not a subgroup
// (it always is when either factor is normal).
Subgroup product_of_subgroups(const Subgroup& a, const Subgroup& b);

Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b);

bool subgroup_leq(const Subgroup& a, const Subgroup& b);
bool subgroup_eq(const Subgroup& a, const Subgroup& b);

bool is_normal(const Subgroup& s);
// (x in s, g) with g x g^-1 outside s, if any.
std::optional<std::pair<int, int>> normality_witness(const Subgroup& s);

// True when every element of s satisfies x^e = 1.
bool exponent_divides(const Subgroup& s, long long e);

// {x in s : x^e = 1} as a subgroup; requires the result set to be closed
// (always the case when s is abelian) and throws InputError otherwise.
Subgroup elements_of_exponent_dividing(const Subgroup& s, long long e);

bool is_abelian_subgroup(const Subgroup& s);

// The subgroup as a standalone group: element i of the result corresponds to
// ambient element to_ambient[i]; numbering is ascending ambient index, which
// puts the identity first.
struct SubgroupGroup {
  GroupPtr group;
  std::vector<int32_t> to_ambient;
};
SubgroupGroup subgroup_to_group(const Subgroup& s,
                                int order_cap = kDefaultOrderCap);

// ---------------------------------------------------------------------------
// Homomorphisms and quotients.
// ---------------------------------------------------------------------------

struct Homomorphism {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<int32_t> map;  // elementwise images

  int apply(int x) const { return map[x]; }
};

// First pair (a,b) with f(ab) != f(a)f(b), if any. Exhaustive when
// |domain| <= 4096, otherwise >= 10^4 seeded samples.
std::optional<std::array<int, 2>> hom_violation(const Homomorphism& f,
                                                uint64_t seed = 0);

Subgroup hom_image(const Homomorphism& f);
Subgroup hom_kernel(const Homomorphism& f);
Subgroup image_of_subgroup(const Homomorphism& f, const Subgroup& s);
Subgroup preimage_of_subgroup(const Homomorphism& f, const Subgroup& s);
Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);

struct QuotientResult {
  GroupPtr group;
  Homomorphism projection;
};

// G/N with deterministic coset numbering: cosets are ordered by their
// minimal element, so the identity coset gets index 0. Throws InputError
// with a conjugation witness in the message when n is not normal.
QuotientResult quotient_group(GroupPtr g, const Subgroup& n,
                              int order_cap = kDefaultOrderCap);

// ---------------------------------------------------------------------------
// Group actions by automorphisms (used for crossed modules).
// ---------------------------------------------------------------------------

struct ActionByAutomorphisms {
  GroupPtr acting;  // G
  GroupPtr space;   // M
  // perm[g][m] = ^g m; each perm[g] is an automorphism of the space and
  // perm[g*h] = perm[g] o perm[h].
  std::vector<std::vector<int32_t>> perm;

  int apply(int g, int m) const { return perm[g][m]; }
};

struct ActionViolation {
  std::string law;  // "bijection" | "automorphism" | "composition" | "identity"
  std::array<int, 3> witness{-1, -1, -1};
};

ActionByAutomorphisms trivial_action(GroupPtr g, GroupPtr m);
// G acting on itself by conjugation.
ActionByAutomorphisms conjugation_action(GroupPtr g);

// Exhaustive when the pair counts are small, falling back to >= 10^4 seeded
// samples for large spaces (same policy as hom_violation).
std::optional<ActionViolation> validate_action(const ActionByAutomorphisms& a,
                                               uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Invariants.
// ---------------------------------------------------------------------------

int element_order(const GroupTable& g, int x);
long long group_exponent(const GroupTable& g);
bool is_abelian(const GroupTable& g);
// Length of the lower central series until it hits 1; throws InputError for
// non-nilpotent input (cannot happen for p-groups).
int nilpotency_class(GroupPtr g);
// Invariant factors d1 | d2 | ... | dk of the abelianization G/[G,G],
// ascending; empty for the trivial abelianization.
std::vector<long long> abelian_invariants(GroupPtr g);
// (element order, count) pairs, ascending by order. Finer than the
// fingerprint; used to keep non-isomorphic groups apart during corpus
// deduplication (e.g. dihedral vs quaternion of order 8).
std::vector<std::pair<long long, long long>> order_histogram(
    const GroupTable& g);

// Cheap isomorphism-invariant summary. Equal fingerprints do not imply
// isomorphism in general, but for abelian groups the invariant factors do.
struct Fingerprint {
  long long order = 1;
  long long exponent = 1;
  std::vector<long long> ab_invariants;
  int nilpotency_class = 0;

  bool operator==(const Fingerprint&) const = default;
  bool operator<(const Fingerprint& o) const;
};

Fingerprint fingerprint(GroupPtr g);

}  // namespace pgroup
