#include "pgroup/powerful.hpp"

#include <sstream>

#include "pgroup/errors.hpp"
#include "pgroup/series.hpp"

namespace pgroup {

namespace {

std::string subgroup_brief(const Subgroup& s) {
  std::ostringstream os;
  os << "{order " << s.order() << "}";
  return os.str();
}

std::string witness_text(const Subgroup& n, std::pair<int, int> w) {
  std::ostringstream os;
  os << "commutator [" << w.first << "," << w.second
     << "] escapes the power subgroup of N=" << subgroup_brief(n);
  return os.str();
}

}  // namespace

bool is_powerful(GroupPtr g, int p) {
  require_p_group(g, p, "is_powerful");
  Subgroup whole = full_subgroup(g);
  return subgroup_leq(commutator_subgroup(whole, whole),
                      power_subgroup(whole, powerful_exponent(p)));
}

bool is_powerful_subgroup(const Subgroup& s, int p) {
  return subgroup_leq(commutator_subgroup(s, s),
                      power_subgroup(s, powerful_exponent(p)));
}

std::optional<std::pair<int, int>> powerfully_embedded_witness(
    const Subgroup& n, int p) {
  const GroupTable& g = *n.ambient;
  Subgroup powers = power_subgroup(n, powerful_exponent(p));
  for (int32_t x : n.elems)
    for (int y = 0; y < g.order; ++y)
      if (!powers.contains(g.comm(x, y))) return std::make_pair(int(x), y);
  return std::nullopt;
}

bool is_powerfully_embedded(const Subgroup& n, int p) {
  if (auto w = normality_witness(n)) {
    std::ostringstream os;
    os << "is_powerfully_embedded: subgroup not normal (element " << w->first
       << " conjugated by " << w->second << " escapes)";
    throw InputError(os.str());
  }
  return !powerfully_embedded_witness(n, p).has_value();
}

TheoremCheck check_theorem_A_i(GroupPtr h, int p, int n) {
  require_p_group(h, p, "check_theorem_A_i");
  if (n < 1) throw InputError("check_theorem_A_i: n must be >= 1");
  TheoremCheck c{"A_i", h->name, n};
  SeriesResult zs = upper_central_series(h);
  QuotientResult q = quotient_group(h, zs.term_clamped(n - 1));
  c.hypothesis_holds = is_powerful(q.group, p);
  Subgroup gamma_n = lower_central_series(h).term_clamped(n);
  auto w = powerfully_embedded_witness(gamma_n, p);
  c.conclusion_holds = !w.has_value();
  if (c.is_violation()) c.witness = witness_text(gamma_n, *w);
  return c;
}

TheoremCheck check_theorem_A_ii(GroupPtr h, int p, int n) {
  require_p_group(h, p, "check_theorem_A_ii");
  if (n < 1) throw InputError("check_theorem_A_ii: n must be >= 1");
  TheoremCheck c{"A_ii", h->name, n};
  SeriesResult zs = upper_central_series(h);
  QuotientResult q = quotient_group(h, zs.term_clamped(n - 1));
  c.hypothesis_holds = is_powerful(q.group, p);
  Subgroup lam = lower_p_series(h, p).term_clamped(n);
  if (p != 2) {
    auto w = powerfully_embedded_witness(lam, p);
    c.conclusion_holds = !w.has_value();
    if (c.is_violation()) c.witness = witness_text(lam, *w);
  } else {
    // For p = 2 the statement concludes powerful, not powerfully embedded.
    c.conclusion_holds = is_powerful_subgroup(lam, p);
    if (c.is_violation()) c.witness = "lambda_n not powerful " + subgroup_brief(lam);
    c.note = "p=2 conclusion form: lambda_n powerful";
  }
  return c;
}

TheoremCheck check_theorem_A_iii(GroupPtr h, int p, int n) {
  require_p_group(h, p, "check_theorem_A_iii");
  if (p == 2)
    throw InputError("check_theorem_A_iii: stated for odd primes only");
  if (n < 2) throw InputError("check_theorem_A_iii: n must be >= 2");
  TheoremCheck c{"A_iii", h->name, n};
  Subgroup dn = script_D_n(h, n - 1);
  QuotientResult q = quotient_group(h, dn);
  c.hypothesis_holds = is_powerful(q.group, p);
  Subgroup gam = derived_series(h).term_clamped(n);
  auto w = powerfully_embedded_witness(gam, p);
  c.conclusion_holds = !w.has_value();
  if (c.is_violation()) c.witness = witness_text(gam, *w);
  return c;
}

namespace {

TheoremCheck check_theorem_B_impl(GroupPtr h, const Subgroup& n_sub, int p,
                                  int n, bool part_two) {
  require_p_group(h, p, "check_theorem_B");
  if (p == 2) throw InputError("check_theorem_B: stated for odd primes only");
  if (n < 1) throw InputError("check_theorem_B: n must be >= 1");
  if (n_sub.ambient.get() != h.get())
    throw InputError("check_theorem_B: subgroup of a different group");
  if (auto w = normality_witness(n_sub)) {
    std::ostringstream os;
    os << "check_theorem_B: N not normal (element " << w->first << ", conjugator "
       << w->second << ")";
    throw InputError(os.str());
  }
  TheoremCheck c{part_two ? "B_ii" : "B_i", h->name, n};
  Subgroup bound = part_two ? script_D_n(h, n)
                            : upper_central_series(h).term_clamped(n);
  bool contained = subgroup_leq(n_sub, bound);
  QuotientResult q = quotient_group(h, n_sub);
  bool quot_powerful = is_powerful(q.group, p);
  c.hypothesis_holds = contained && quot_powerful;
  Subgroup target = part_two ? derived_series(h).term_clamped(n + 1)
                             : lower_central_series(h).term_clamped(n + 1);
  c.conclusion_holds = is_powerful_subgroup(target, p);
  std::ostringstream note;
  note << "N order " << n_sub.order() << (contained ? ", contained" : ", not contained")
       << (quot_powerful ? ", quotient powerful" : ", quotient not powerful");
  c.note = note.str();
  if (c.is_violation())
    c.witness = (part_two ? "Gamma_" : "gamma_") + std::to_string(n + 1) +
                " not powerful " + subgroup_brief(target);
  return c;
}

}  // namespace

TheoremCheck check_theorem_B_i(GroupPtr h, const Subgroup& n_sub, int p, int n) {
  return check_theorem_B_impl(h, n_sub, p, n, false);
}

TheoremCheck check_theorem_B_ii(GroupPtr h, const Subgroup& n_sub, int p, int n) {
  return check_theorem_B_impl(h, n_sub, p, n, true);
}

std::vector<TheoremCheck> check_frattini_theorem(GroupPtr h,
                                                 const Subgroup& n_sub, int p,
                                                 int n) {
  require_p_group(h, p, "check_frattini_theorem");
  if (n < 1) throw InputError("check_frattini_theorem: n must be >= 1");
  if (n_sub.ambient.get() != h.get())
    throw InputError("check_frattini_theorem: subgroup of a different group");
  if (auto w = normality_witness(n_sub)) {
    std::ostringstream os;
    os << "check_frattini_theorem: N not normal (element " << w->first
       << ", conjugator " << w->second << ")";
    throw InputError(os.str());
  }
  bool exp_p = exponent_divides(n_sub, p);
  bool contained = subgroup_leq(n_sub, script_F_n(h, p, n));
  bool base_hyp = exp_p && contained;

  std::vector<TheoremCheck> out;
  Subgroup psi = frattini_series(h, p).term_clamped(n + 1);

  TheoremCheck part1{"frattini_i", h->name, n};
  part1.hypothesis_holds = base_hyp;
  part1.conclusion_holds = true;  // finiteness of Psi_{n+1} is immediate here
  part1.note = "Psi_{n+1} order " + std::to_string(psi.order());
  out.push_back(std::move(part1));

  TheoremCheck part2{"frattini_ii", h->name, n};
  bool quot_powerful = p != 2 && is_powerful(quotient_group(h, n_sub).group, p);
  part2.hypothesis_holds = base_hyp && p != 2 && quot_powerful;
  part2.conclusion_holds = is_powerful_subgroup(psi, p);
  if (p == 2) part2.note = "skipped for p=2: statement is for odd p";
  if (part2.is_violation())
    part2.witness = "Psi_{n+1} not powerful " + subgroup_brief(psi);
  out.push_back(std::move(part2));
  return out;
}

std::vector<TheoremCheck> check_lubotzky_mann_suite(GroupPtr g, int p) {
  if (!is_powerful(g, p))
    throw InputError("check_lubotzky_mann_suite: group is not powerful");
  std::vector<TheoremCheck> out;
  auto embedded_record = [&](const std::string& id, const Subgroup& s, int i) {
    TheoremCheck c{id, g->name, i};
    c.hypothesis_holds = true;
    auto w = powerfully_embedded_witness(s, p);
    c.conclusion_holds = !w.has_value();
    if (c.is_violation()) c.witness = witness_text(s, *w);
    out.push_back(std::move(c));
  };

  SeriesResult gam = lower_central_series(g);
  for (int i = 1; i <= gam.stabilized_at + 1; ++i)
    embedded_record("LM_gamma_embedded", gam.term_clamped(i), i);
  SeriesResult zs = upper_central_series(g);
  for (int i = 1; i <= zs.stabilized_at; ++i)
    embedded_record("LM_upper_central_embedded", zs.term_clamped(i), i);
  SeriesResult lam = lower_p_series(g, p);
  for (int i = 1; i <= lam.stabilized_at + 1; ++i)
    embedded_record("LM_lambda_embedded", lam.term_clamped(i), i);

  Subgroup whole = full_subgroup(g);
  long long pe = 1;
  for (int i = 1;; ++i) {
    pe *= p;
    Subgroup pw = power_subgroup(whole, pe);
    embedded_record("LM_power_embedded", pw, i);
    TheoremCheck c{"LM_power_surjective", g->name, i};
    c.hypothesis_holds = true;
    c.conclusion_holds = power_image_set(whole, pe) == pw.elems;
    if (c.is_violation())
      c.witness = "G^(p^" + std::to_string(i) + ") has non-power elements";
    out.push_back(std::move(c));
    if (pw.is_trivial()) break;
  }
  return out;
}

std::vector<Subgroup> powerfully_embedded_family(GroupPtr g, int p) {
  std::vector<Subgroup> cands;
  SeriesResult gam = lower_central_series(g);
  SeriesResult zs = upper_central_series(g);
  SeriesResult lam = lower_p_series(g, p);
  for (const Subgroup& s : gam.terms) cands.push_back(s);
  for (const Subgroup& s : zs.terms) cands.push_back(s);
  for (const Subgroup& s : lam.terms) cands.push_back(s);
  Subgroup whole = full_subgroup(g);
  long long pe = 1;
  while (true) {
    pe *= p;
    Subgroup pw = power_subgroup(whole, pe);
    bool trivial = pw.is_trivial();
    cands.push_back(std::move(pw));
    if (trivial) break;
  }
  std::vector<Subgroup> out;
  for (Subgroup& s : cands) {
    bool dup = false;
    for (const Subgroup& t : out)
      if (t.elems == s.elems) {
        dup = true;
        break;
      }
    if (!dup && is_normal(s) && !powerfully_embedded_witness(s, p).has_value())
      out.push_back(std::move(s));
  }
  return out;
}

std::vector<TheoremCheck> check_shalev_identity(GroupPtr g, int p, int max_sum) {
  std::vector<TheoremCheck> out;
  std::vector<Subgroup> fam = powerfully_embedded_family(g, p);
  for (size_t a = 0; a < fam.size(); ++a)
    for (size_t b = 0; b < fam.size(); ++b) {
      const Subgroup& n = fam[a];
      const Subgroup& m = fam[b];
      Subgroup base = commutator_subgroup(n, m);
      for (int i = 0; i <= max_sum; ++i)
        for (int j = 0; i + j <= max_sum; ++j) {
          long long pi = 1, pj = 1, pij = 1;
          for (int t = 0; t < i; ++t) pi *= p;
          for (int t = 0; t < j; ++t) pj *= p;
          for (int t = 0; t < i + j; ++t) pij *= p;
          TheoremCheck c{"shalev_power_commutator", g->name, i * 10 + j};
          c.hypothesis_holds = true;
          Subgroup lhs = commutator_subgroup(power_subgroup(n, pi),
                                             power_subgroup(m, pj));
          Subgroup rhs = power_subgroup(base, pij);
          c.conclusion_holds = subgroup_eq(lhs, rhs);
          std::ostringstream note;
          note << "|N|=" << n.order() << " |M|=" << m.order() << " i=" << i
               << " j=" << j;
          c.note = note.str();
          if (c.is_violation()) {
            std::ostringstream os;
            os << "orders " << lhs.order() << " vs " << rhs.order();
            c.witness = os.str();
          }
          out.push_back(std::move(c));
        }
    }
  return out;
}

std::vector<TheoremCheck> check_embedding_closure(GroupPtr g, int p) {
  std::vector<TheoremCheck> out;
  std::vector<Subgroup> fam = powerfully_embedded_family(g, p);
  Subgroup whole = full_subgroup(g);
  for (size_t a = 0; a < fam.size(); ++a)
    for (size_t b = 0; b < fam.size(); ++b) {
      const Subgroup& m = fam[a];
      const Subgroup& n = fam[b];
      struct Item {
        const char* id;
        Subgroup s;
      };
      Item items[] = {
          {"LM_product_embedded", product_of_subgroups(m, n)},
          {"LM_commutator_embedded", commutator_subgroup(m, n)},
          {"LM_ng_embedded", commutator_subgroup(n, whole)},
          {"LM_npower_embedded", power_subgroup(n, p)},
      };
      for (Item& it : items) {
        TheoremCheck c{it.id, g->name, int(a * fam.size() + b)};
        c.hypothesis_holds = true;
        auto w = powerfully_embedded_witness(it.s, p);
        c.conclusion_holds = !w.has_value();
        if (c.is_violation()) c.witness = witness_text(it.s, *w);
        out.push_back(std::move(c));
      }
    }
  return out;
}

}  // namespace pgroup
