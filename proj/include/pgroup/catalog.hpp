#pragma once

#include <string>

#include "pgroup/group.hpp"

namespace pgroup {

// Constructors for the built-in group families. Element numbering is
// deterministic and documented per constructor so that serialized tables,
// subgroup element lists and golden test values are stable.

// Z/n: element i is g^i, mult (i,j) -> (i+j) mod n.
GroupPtr cyclic(int n);

// (Z/p)^k: element index sum d_i p^i for the digit vector (d_0,...,d_{k-1}),
// componentwise addition.
GroupPtr elementary_abelian(int p, int k);

// Heisenberg group of order p^3 (extraspecial of exponent p for odd p):
// triples (a,b,c) with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b') over Z/p,
// index a*p^2 + b*p + c.
GroupPtr heisenberg(int p);

// Extraspecial group of order p^3 and exponent p^2, presented as
// <a,b | a^(p^2) = b^p = 1, b^-1 a b = a^(1+p)>; element a^i b^j has index
// i*p + j with 0 <= i < p^2, 0 <= j < p.
GroupPtr extraspecial_exp_p2(int p);

// Dihedral group of order n = 2m (n >= 4, n a power of 2 for the p-group
// catalog, but any even n >= 4 is accepted): element r^i s^j has index
// i + m*j with r^m = s^2 = 1, s r s = r^-1.
GroupPtr dihedral(int n);

// Quaternion group of order 8: <a,b | a^4 = 1, b^2 = a^2, b^-1 a b = a^-1>;
// element a^i b^j has index i + 4j, 0 <= i < 4, 0 <= j < 2.
GroupPtr quaternion8();

// Semidihedral group of order 16: <r,s | r^8 = s^2 = 1, s^-1 r s = r^3>;
// element r^i s^j has index i + 8j.
GroupPtr semidihedral16();

// A x B with (x,y) -> x*|B| + y.
GroupPtr direct_product(GroupPtr a, GroupPtr b,
                        int order_cap = kDefaultOrderCap);

// N x| H for an action of H on N by automorphisms: pairs (x,y), x in N,
// y in H, index x*|H| + y, with (x,y)(x',y') = (x * ^y x', y y').
// Throws InputError when `act` fails validation.
GroupPtr semidirect_product(GroupPtr n, GroupPtr h,
                            const ActionByAutomorphisms& act,
                            int order_cap = kDefaultOrderCap);

// Parses constructor expressions such as "cyclic(9)", "heisenberg(3)",
// "elementary_abelian(3,2)", "quaternion(8)", "semidihedral(16)",
// "direct_product(cyclic(9),cyclic(3))", plus compact aliases like
// "heisenberg3", "c9", "d8", "q8", "sd16", "ea(3,2)".
GroupPtr parse_group_spec(const std::string& spec,
                          int order_cap = kDefaultOrderCap);

}  // namespace pgroup
