#include "pgroup/series.hpp"

#include <functional>
#include <sstream>

#include "pgroup/errors.hpp"

namespace pgroup {

std::string series_kind_name(SeriesKind k) {
  switch (k) {
    case SeriesKind::lower_central: return "lower_central";
    case SeriesKind::upper_central: return "upper_central";
    case SeriesKind::derived: return "derived";
    case SeriesKind::lower_p: return "lower_p";
    case SeriesKind::frattini: return "frattini";
  }
  return "?";
}

const Subgroup& SeriesResult::term_clamped(int n) const {
  int i = kind == SeriesKind::upper_central ? n : n - 1;
  if (i < 0) i = 0;
  if (i > stabilized_at) i = stabilized_at;
  return terms[i];
}

void require_p_group(const GroupPtr& g, int p, const char* who) {
  if (p < 2 || prime_power_base(p) != p)
    throw InputError(std::string(who) + ": " + std::to_string(p) +
                     " is not a prime");
  if (g->order != 1 && g->prime != p) {
    std::ostringstream os;
    os << who << ": group of order " << g->order << " is not a " << p
       << "-group";
    throw InputError(os.str());
  }
}

namespace {

// Runs `step` from the initial term until the series repeats, dropping the
// repeated copy. Bounded by term_bound.
SeriesResult iterate_series(SeriesKind kind, Subgroup first, int term_bound,
                            const std::function<Subgroup(const Subgroup&)>& step) {
  SeriesResult out;
  out.kind = kind;
  out.terms.push_back(std::move(first));
  while (true) {
    if (int(out.terms.size()) > term_bound)
      throw ResourceError(series_kind_name(kind) +
                          ": series exceeded the term bound");
    Subgroup next = step(out.terms.back());
    if (subgroup_eq(next, out.terms.back())) break;
    out.terms.push_back(std::move(next));
  }
  out.stabilized_at = int(out.terms.size()) - 1;
  return out;
}

}  // namespace

SeriesResult lower_central_series(GroupPtr g, int term_bound) {
  Subgroup whole = full_subgroup(g);
  return iterate_series(SeriesKind::lower_central, whole, term_bound,
                        [&](const Subgroup& t) {
                          return commutator_subgroup(t, whole);
                        });
}

SeriesResult upper_central_series(GroupPtr g, int term_bound) {
  return iterate_series(SeriesKind::upper_central, trivial_subgroup(g),
                        term_bound, [&](const Subgroup& t) {
                          if (t.is_full()) return t;
                          QuotientResult q = quotient_group(g, t);
                          return preimage_of_subgroup(q.projection,
                                                      center(q.group));
                        });
}

SeriesResult derived_series(GroupPtr g, int term_bound) {
  return iterate_series(SeriesKind::derived, full_subgroup(g), term_bound,
                        [](const Subgroup& t) {
                          return commutator_subgroup(t, t);
                        });
}

SeriesResult lower_p_series(GroupPtr g, int p, int term_bound) {
  require_p_group(g, p, "lower_p_series");
  Subgroup whole = full_subgroup(g);
  SeriesResult out = iterate_series(
      SeriesKind::lower_p, whole, term_bound, [&](const Subgroup& t) {
        return product_of_subgroups(power_subgroup(t, p),
                                    commutator_subgroup(t, whole));
      });
  // Closed-form cross-check: lambda_n = prod_i gamma_i ^ (p^(n-i)).
  SeriesResult gamma = lower_central_series(g, term_bound);
  for (size_t n = 1; n <= out.terms.size(); ++n) {
    Subgroup closed = trivial_subgroup(g);
    long long pe = 1;
    for (size_t i = n; i >= 1; --i) {  // gamma_i raised to p^(n-i)
      const Subgroup& gi = gamma.term_clamped(int(i));
      closed = product_of_subgroups(closed, power_subgroup(gi, pe));
      pe *= p;
    }
    if (!subgroup_eq(closed, out.terms[n - 1]))
      throw InternalError(
          "lower_p_series: recursive and closed-form terms disagree at index " +
          std::to_string(n));
  }
  return out;
}

SeriesResult frattini_series(GroupPtr g, int p, int term_bound) {
  require_p_group(g, p, "frattini_series");
  return iterate_series(SeriesKind::frattini, full_subgroup(g), term_bound,
                        [&](const Subgroup& t) {
                          return product_of_subgroups(
                              power_subgroup(t, p), commutator_subgroup(t, t));
                        });
}

namespace {

// Shared inside-out sweep for script_D_n / script_F_n: lower[i] supplies the
// quantifier set for level i (1-based, up to n).
Subgroup commutator_sweep(GroupPtr g, int n,
                          const std::function<const Subgroup&(int)>& level_set) {
  const GroupTable& t = *g;
  std::vector<char> K(t.order, 0);  // K_{n+1} = {1}
  K[0] = 1;
  for (int i = n; i >= 1; --i) {
    const Subgroup& xs = level_set(i);
    std::vector<char> next(t.order, 0);
    for (int y = 0; y < t.order; ++y) {
      bool ok = true;
      for (int32_t x : xs.elems)
        if (!K[t.comm(y, x)]) {
          ok = false;
          break;
        }
      next[y] = ok;
    }
    K.swap(next);
  }
  Subgroup out{g, {}};
  for (int x = 0; x < t.order; ++x)
    if (K[x]) out.elems.push_back(x);
  return out;
}

}  // namespace

Subgroup script_D_n(GroupPtr g, int n) {
  if (n < 1) throw InputError("script_D_n: n must be >= 1");
  SeriesResult derived = derived_series(g);
  return commutator_sweep(
      g, n, [&](int i) -> const Subgroup& { return derived.term_clamped(i); });
}

Subgroup script_F_n(GroupPtr g, int p, int n) {
  if (n < 1) throw InputError("script_F_n: n must be >= 1");
  SeriesResult psi = frattini_series(g, p);
  return commutator_sweep(
      g, n, [&](int i) -> const Subgroup& { return psi.term_clamped(i); });
}

}  // namespace pgroup
