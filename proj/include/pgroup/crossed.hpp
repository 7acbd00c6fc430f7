#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pgroup/group.hpp"

namespace pgroup {

// mu: M -> G together with an action of G on M, subject to equivariance
// mu(^g m) = g mu(m) g^-1 and the Peiffer identity ^{mu(m)} m' = m m' m^-1.
struct CrossedModule {
  GroupPtr m;
  GroupPtr g;
  Homomorphism mu;
  ActionByAutomorphisms action;
};

struct CrossedModuleViolation {
  std::string law;  // "shape" | "homomorphism" | "action" | "equivariance" | "peiffer"
  std::array<int, 2> witness{-1, -1};
  std::string detail;
};

// Checks shape, the underlying homomorphism and action, then both crossed
// module axioms exhaustively over all (g, m) / (m, m') pairs.
std::optional<CrossedModuleViolation> validate_crossed_module(
    const CrossedModule& cm, uint64_t seed = 0);

// Builders. Each validates: a failed axiom raises InputError with the
// witness in the message.
CrossedModule identity_crossed_module(GroupPtr g);
// Subgroup with the conjugation action of the ambient group. When the
// subgroup is not normal conjugation does not restrict to it, so the
// builder installs the trivial action instead and validation reports the
// equivariance failure with a witness.
CrossedModule inclusion_crossed_module(const Subgroup& n);
// Trivial map and trivial action; m must be abelian (Peiffer forces it).
CrossedModule trivial_crossed_module(GroupPtr m, GroupPtr g);

// K = M x_G N = {(m, n) : mu(m) = nu(n)} with its projections. Element i
// of k corresponds to pairs[i].
struct PullbackResult {
  GroupPtr k;
  Homomorphism pi1;
  Homomorphism pi2;
  std::vector<std::pair<int32_t, int32_t>> pairs;

  // Index of the pair (m, n) in k; InputError when mu(m) != nu(n).
  int pair_index(int m, int n) const;
};

PullbackResult pullback(const CrossedModule& mu, const CrossedModule& nu,
                        int order_cap = kDefaultOrderCap);

// Commutative square of crossed modules with pairing h: M x N -> L.
// The stored h matrix is indexed h[m][n].
struct CrossedSquare {
  GroupPtr l, m, n, g;
  Homomorphism alpha;  // L -> M
  Homomorphism beta;   // L -> N
  Homomorphism mu;     // M -> G
  Homomorphism nu;     // N -> G
  std::vector<std::vector<int32_t>> h;
  ActionByAutomorphisms act_l, act_m, act_n;
};

struct CrossedSquareViolation {
  std::string axiom;
  std::array<int, 3> witness{-1, -1, -1};
  std::string detail;
};

// Checks the five crossed-square axioms plus the commutativity
// mu(alpha(l)) = nu(beta(l)) and that all three vertical maps are crossed
// modules. All laws are checked exhaustively over their instantiated
// domains; the seed only feeds the underlying homomorphism and action
// validators, which sample when a group is large.
std::optional<CrossedSquareViolation> validate_crossed_square(
    const CrossedSquare& s, uint64_t seed = 0);

}  // namespace pgroup
