#pragma once

#include <string>
#include <vector>

#include "pgroup/group.hpp"

namespace pgroup {

enum class SeriesKind { lower_central, upper_central, derived, lower_p, frattini };

std::string series_kind_name(SeriesKind k);

struct SeriesResult {
  SeriesKind kind;
  std::vector<Subgroup> terms;
  // Index of the last term; every later term of the infinite series equals
  // terms[stabilized_at]. The stored sequence stops at the first repeat
  // (the repeated copy is not stored).
  int stabilized_at = 0;

  // 1-based access matching the usual indexing: term(1) is the first term.
  // For upper_central, term(0) is the trivial group and term(n) = Z_n.
  const Subgroup& term_clamped(int n) const;
};

// Guard for non-nilpotent / malformed input; series longer than this many
// terms abort with ResourceError.
inline constexpr int kSeriesTermBound = 20;

// gamma_1 = G, gamma_{n+1} = [gamma_n, G].
SeriesResult lower_central_series(GroupPtr g, int term_bound = kSeriesTermBound);
// Z_0 = 1, Z_{n+1} = preimage of the center of G/Z_n. Ascending.
SeriesResult upper_central_series(GroupPtr g, int term_bound = kSeriesTermBound);
// Gamma_1 = G, Gamma_{n+1} = [Gamma_n, Gamma_n].
SeriesResult derived_series(GroupPtr g, int term_bound = kSeriesTermBound);
// lambda_1 = G, lambda_n = lambda_{n-1}^p [lambda_{n-1}, G]. Each term is
// recomputed through the closed form gamma_1^(p^(n-1)) gamma_2^(p^(n-2))
// ... gamma_n and the two are required to agree (InternalError otherwise).
SeriesResult lower_p_series(GroupPtr g, int p, int term_bound = kSeriesTermBound);
// psi_1 = G, psi_n = psi_{n-1}^p [psi_{n-1}, psi_{n-1}].
SeriesResult frattini_series(GroupPtr g, int p, int term_bound = kSeriesTermBound);

// { h : [...[[h,x1],x2],...,xn] = 1 for all x_i in Gamma_i(g) }, computed by
// the inside-out sweep K_{n+1} = {1}, K_i = { y : [y,x] in K_{i+1} for all
// x in Gamma_i }, returning K_1. The result is a normal subgroup.
Subgroup script_D_n(GroupPtr g, int n);
// Same sweep with Gamma_i replaced by the Frattini series terms Psi_i(g).
Subgroup script_F_n(GroupPtr g, int p, int n);

// Throws InputError unless g is a p-group for this p.
void require_p_group(const GroupPtr& g, int p, const char* who);

}  // namespace pgroup
