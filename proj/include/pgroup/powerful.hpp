#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgroup/group.hpp"

namespace pgroup {

// Result of evaluating one theorem instance on one group. A violation means
// hypothesis_holds && !conclusion_holds; only then is a witness attached.
// Hypothesis-false cases are recorded rather than dropped so that suite
// statistics can tell vacuous passes from substantive ones.
struct TheoremCheck {
  std::string theorem_id;
  std::string group_name;
  int parameter_n = 0;
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  std::optional<std::string> witness;
  std::string note;

  TheoremCheck() = default;
  TheoremCheck(std::string id, std::string group, int n)
      : theorem_id(std::move(id)), group_name(std::move(group)), parameter_n(n) {}

  bool is_violation() const { return hypothesis_holds && !conclusion_holds; }
  bool is_substantive_pass() const {
    return hypothesis_holds && conclusion_holds;
  }
};

// The exponent used by the powerfulness conditions: p for odd p, 4 for p = 2.
inline long long powerful_exponent(int p) { return p == 2 ? 4 : p; }

// gamma_2(g) contained in g^p (odd p) resp. g^4 (p = 2); exact test.
bool is_powerful(GroupPtr g, int p);
// Same test applied to a subgroup with its induced multiplication; computed
// inside the ambient group, no table is materialized.
bool is_powerful_subgroup(const Subgroup& s, int p);
// [n, g] contained in n^p (odd p) resp. n^4 (p = 2). Throws InputError when
// n is not normal.
bool is_powerfully_embedded(const Subgroup& n, int p);
// Pair (x in n, y in g) with [x,y] outside the power subgroup, if any.
std::optional<std::pair<int, int>> powerfully_embedded_witness(
    const Subgroup& n, int p);

// H/Z_{n-1} powerful => gamma_n(H) powerfully embedded.
TheoremCheck check_theorem_A_i(GroupPtr h, int p, int n);
// H/Z_{n-1} powerful => lambda_n(H) powerfully embedded (odd p), resp.
// lambda_n(H) powerful as a group (p = 2). The two conclusions differ by
// parity exactly as stated; the p = 2 form is never strengthened.
TheoremCheck check_theorem_A_ii(GroupPtr h, int p, int n);
// H/D_{n-1}(H) powerful => Gamma_n(H) powerfully embedded; odd p, n >= 2
// only (InputError otherwise).
TheoremCheck check_theorem_A_iii(GroupPtr h, int p, int n);

// N <= Z_n(H) and H/N powerful => gamma_{n+1}(H) powerful as a group.
TheoremCheck check_theorem_B_i(GroupPtr h, const Subgroup& n_subgroup, int p,
                               int n);
// N <= D_n(H) and H/N powerful => Gamma_{n+1}(H) powerful as a group.
TheoremCheck check_theorem_B_ii(GroupPtr h, const Subgroup& n_subgroup, int p,
                                int n);

// Parts (i) and (ii) for the Frattini-series theorem. N must be normal
// (hard precondition); exponent-p or containment failures only make the
// hypothesis false. Part (i) records the always-true finiteness statement;
// part (ii) additionally needs p odd and H/N powerful and concludes that
// Psi_{n+1}(H) is powerful.
std::vector<TheoremCheck> check_frattini_theorem(GroupPtr h,
                                                 const Subgroup& n_subgroup,
                                                 int p, int n);

// For powerful g: gamma_i, Z_i, g^(p^i) and lambda_i are each powerfully
// embedded, and g^(p^i) coincides with the raw set of p^i-th powers.
// Throws InputError when g is not powerful.
std::vector<TheoremCheck> check_lubotzky_mann_suite(GroupPtr g, int p);

// The canonical powerfully embedded subgroups used for pairwise checks:
// series terms and power subgroups, deduplicated, filtered to those that
// really are powerfully embedded.
std::vector<Subgroup> powerfully_embedded_family(GroupPtr g, int p);

// For powerfully embedded M, N: [N^(p^i), M^(p^j)] = [N,M]^(p^(i+j)) as
// sets, for i + j <= max_sum.
std::vector<TheoremCheck> check_shalev_identity(GroupPtr g, int p,
                                                int max_sum = 3);

// For powerfully embedded M, N: MN, [M,N], [N,g] and N^p are powerfully
// embedded again.
std::vector<TheoremCheck> check_embedding_closure(GroupPtr g, int p);

}  // namespace pgroup
