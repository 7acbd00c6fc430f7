// End-to-end acceptance run: one pass/fail line per criterion, exit 0 only
// when every criterion holds.  Each criterion recomputes its expectations
// independently of the code paths it exercises wherever an elementary
// oracle is available.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pgroup/catalog.hpp"
#include "pgroup/corpus.hpp"
#include "pgroup/crossed.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/group.hpp"
#include "pgroup/jsonio.hpp"
#include "pgroup/powerful.hpp"
#include "pgroup/presentation.hpp"
#include "pgroup/series.hpp"
#include "pgroup/suite.hpp"
#include "pgroup/tensor.hpp"
#include "pgroup/todd_coxeter.hpp"

using namespace pgroup;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Tensors computed during the run; the structure criterion revalidates
// every one of them.
std::vector<TensorResult> g_tensors;

// ---------------------------------------------------------------------
// Smith normal form diagonal of a small integer matrix, written against
// nothing but integer arithmetic so it can serve as an oracle.

std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> a) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  std::vector<long long> diag;
  size_t t = 0;
  while (t < rows && t < cols) {
    size_t pr = rows, pc = cols;
    long long best = 0;
    for (size_t i = t; i < rows; ++i) {
      for (size_t j = t; j < cols; ++j) {
        if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
          best = std::llabs(a[i][j]);
          pr = i;
          pc = j;
        }
      }
    }
    if (best == 0) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    for (;;) {
      bool dirty = false;
      for (size_t i = t + 1; i < rows; ++i) {
        long long f = a[i][t] / a[t][t];
        if (f != 0) {
          for (size_t j = t; j < cols; ++j) a[i][j] -= f * a[t][j];
        }
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          dirty = true;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        long long f = a[t][j] / a[t][t];
        if (f != 0) {
          for (size_t i = t; i < rows; ++i) a[i][j] -= f * a[i][t];
        }
        if (a[t][j] != 0) {
          for (size_t i = t; i < rows; ++i) std::swap(a[i][t], a[i][j]);
          dirty = true;
        }
      }
      if (dirty) continue;
      bool fixed = true;
      for (size_t i = t + 1; i < rows && fixed; ++i) {
        for (size_t j = t + 1; j < cols && fixed; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
            fixed = false;
          }
        }
      }
      if (fixed) break;
    }
    diag.push_back(std::llabs(a[t][t]));
    ++t;
  }
  std::vector<long long> out;
  for (long long d : diag) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

// Invariant factors of A (x)_Z B from the invariant factor lists of the
// two abelian groups, via the stacked relation matrix.
std::vector<long long> abelian_tensor_oracle(const std::vector<long long>& d,
                                             const std::vector<long long>& e) {
  size_t cols = d.size() * e.size();
  std::vector<std::vector<long long>> a(2 * cols,
                                        std::vector<long long>(cols, 0));
  size_t c = 0;
  for (size_t i = 0; i < d.size(); ++i) {
    for (size_t j = 0; j < e.size(); ++j) {
      a[2 * c][c] = d[i];
      a[2 * c + 1][c] = e[j];
      ++c;
    }
  }
  return smith_diagonal(std::move(a));
}

// ---------------------------------------------------------------------
// Criterion 1: over the whole default corpus the recursive lower-p series
// matches an independently assembled closed form, and every upper central
// term sits inside the matching iterated-centralizer subgroup.

Outcome series_identities() {
  std::vector<GroupPtr> corpus = build_corpus(CorpusSpec::defaults());
  long long term_checks = 0, containments = 0;
  for (const GroupPtr& g : corpus) {
    int p = g->prime;
    SeriesResult lam = lower_p_series(g, p);
    SeriesResult gam = lower_central_series(g);
    int depth = (int)lam.terms.size() + 1;  // one step past stabilization
    for (int n = 1; n <= depth; ++n) {
      Subgroup closed = power_subgroup(gam.term_clamped(1), ipow(p, n - 1));
      for (int i = 2; i <= n; ++i) {
        closed = product_of_subgroups(
            closed, power_subgroup(gam.term_clamped(i), ipow(p, n - i)));
      }
      if (!subgroup_eq(lam.term_clamped(n), closed)) {
        return {false, g->name + ": lower-p term " + std::to_string(n) +
                           " differs from its closed form"};
      }
      ++term_checks;
    }
    SeriesResult zc = upper_central_series(g);
    for (int n = 1; n <= zc.stabilized_at + 1; ++n) {
      if (!subgroup_leq(zc.term_clamped(n), script_D_n(g, n))) {
        return {false, g->name + ": upper central term " + std::to_string(n) +
                           " escapes the centralizer sweep"};
      }
      ++containments;
    }
  }
  std::ostringstream os;
  os << corpus.size() << " groups, " << term_checks << " closed-form terms, "
     << containments << " containments";
  return {true, os.str()};
}

// ---------------------------------------------------------------------
// Criterion 2: the quotient-criteria and Frattini suites over the default
// corpus record zero violations and at least three substantive passes per
// theorem id, with the parity-free ids substantive at both parities.

Outcome quotient_criteria_suites() {
  CorpusSpec spec = CorpusSpec::defaults();
  std::map<std::string, int> prime_of;
  for (const GroupPtr& g : build_corpus(spec)) prime_of[g->name] = g->prime;

  std::vector<SuiteReport> pow_rep = run_suites("powerful-theorems", spec);
  std::vector<SuiteReport> fra_rep = run_suites("frattini", spec);
  const SuiteReport& pr = pow_rep.front();
  const SuiteReport& fr = fra_rep.front();
  if (pr.counts.violation + fr.counts.violation > 0) {
    return {false, "violations recorded: " +
                       std::to_string(pr.counts.violation) + " + " +
                       std::to_string(fr.counts.violation)};
  }

  std::map<std::string, long long> by_parity;  // "id/even" and "id/odd"
  for (const TheoremCheck& c : pr.checks) {
    if (!c.is_substantive_pass()) continue;
    bool even = prime_of.at(c.group_name) == 2;
    by_parity[c.theorem_id + (even ? "/even" : "/odd")]++;
  }
  for (const char* key : {"A_i/even", "A_i/odd", "A_ii/even", "A_ii/odd"}) {
    if (by_parity[key] < 3) {
      return {false, std::string("fewer than 3 substantive passes for ") +
                         key};
    }
  }
  auto minimum = [](const SuiteReport& r, const char* id) {
    auto it = r.substantive_by_theorem.find(id);
    return it != r.substantive_by_theorem.end() && it->second >= 3;
  };
  for (const char* id : {"A_iii", "B_i", "B_ii"}) {
    if (!minimum(pr, id)) {
      return {false, std::string("fewer than 3 substantive passes for ") + id};
    }
  }
  for (const char* id : {"frattini_i", "frattini_ii"}) {
    if (!minimum(fr, id)) {
      return {false, std::string("fewer than 3 substantive passes for ") + id};
    }
  }
  std::ostringstream os;
  os << pr.checks.size() << " + " << fr.checks.size()
     << " checks, zero violations";
  return {true, os.str()};
}

// ---------------------------------------------------------------------
// Criterion 3: every powerful corpus group passes the embedded-series and
// power-surjectivity battery.

Outcome powerful_group_battery() {
  std::vector<GroupPtr> corpus = build_corpus(CorpusSpec::defaults());
  long long groups = 0, checks = 0;
  std::set<std::string> ids_seen;
  for (const GroupPtr& g : corpus) {
    if (!is_powerful(g, g->prime)) continue;
    ++groups;
    for (const TheoremCheck& c : check_lubotzky_mann_suite(g, g->prime)) {
      if (c.is_violation()) {
        return {false, g->name + ": " + c.theorem_id + " violated at n = " +
                           std::to_string(c.parameter_n)};
      }
      if (c.is_substantive_pass()) ids_seen.insert(c.theorem_id);
      ++checks;
    }
  }
  for (const char* id :
       {"LM_gamma_embedded", "LM_upper_central_embedded", "LM_lambda_embedded",
        "LM_power_embedded", "LM_power_surjective"}) {
    if (!ids_seen.count(id)) {
      return {false, std::string("no substantive coverage for ") + id};
    }
  }
  std::ostringstream os;
  os << groups << " powerful groups, " << checks << " checks";
  return {true, os.str()};
}

// ---------------------------------------------------------------------
// Criterion 4: coset enumeration goldens, byte-identical standardized
// tables across repeat runs, and every reference presentation resolving to
// its catalog order.

Outcome enumeration_goldens() {
  struct Golden {
    const char* text;
    int cosets;
  };
  const Golden goldens[] = {
      {"<a | a^5>", 5},
      {"<a,b | a^2, b^2, (a*b)^3>", 6},
      {"<a,b | a^4, a^2*b^-2, b^-1*a*b*a>", 8},
  };
  for (const Golden& gold : goldens) {
    Presentation p = parse_presentation(gold.text);
    CosetTable first = todd_coxeter(p, {});
    CosetTable second = todd_coxeter(p, {});
    if (first.coset_count != gold.cosets) {
      return {false, std::string(gold.text) + ": expected " +
                         std::to_string(gold.cosets) + " cosets, got " +
                         std::to_string(first.coset_count)};
    }
    if (coset_table_json(p, {}, first) != coset_table_json(p, {}, second)) {
      return {false, std::string(gold.text) + ": repeat runs disagree"};
    }
  }
  long long refs = 0;
  for (const ReferencePresentation& r : reference_presentations()) {
    GroupPtr expected = parse_group_spec(r.group_spec);
    EnumeratedGroup eg = enumerate_presentation(r.presentation);
    if (eg.group->order != expected->order) {
      return {false, r.group_spec + ": presentation resolves to order " +
                         std::to_string(eg.group->order)};
    }
    ++refs;
  }
  std::ostringstream os;
  os << "3 goldens, " << refs << " reference presentations";
  return {true, os.str()};
}

// ---------------------------------------------------------------------
// Criterion 5: tensors of abelian pairs with trivial actions match the
// Smith-normal-form oracle.

Outcome abelian_tensor_invariants() {
  GroupPtr base = cyclic(1);
  const char* specs[] = {"cyclic(2)", "cyclic(3)", "cyclic(4)",
                         "ea(2,2)",   "ea(3,2)",   "cyclic(9)"};
  long long pairs = 0;
  for (const char* ms : specs) {
    for (const char* ns : specs) {
      GroupPtr mg = parse_group_spec(ms);
      GroupPtr ng = parse_group_spec(ns);
      TensorResult t = compute_tensor(trivial_crossed_module(mg, base),
                                      trivial_crossed_module(ng, base));
      if (!is_abelian(*t.group)) {
        return {false, std::string(ms) + " (x) " + ns + " is not abelian"};
      }
      std::vector<long long> expected = abelian_tensor_oracle(
          abelian_invariants(mg), abelian_invariants(ng));
      if (abelian_invariants(t.group) != expected) {
        return {false,
                std::string(ms) + " (x) " + ns + " disagrees with the oracle"};
      }
      g_tensors.push_back(std::move(t));
      ++pairs;
    }
  }
  return {true, std::to_string(pairs) + " pairs match the oracle"};
}

// ---------------------------------------------------------------------
// Criterion 6: every tensor computed during this run satisfies the
// homomorphism, pairing and square identities (exhaustive on small
// tensors, seeded sampling on large ones inside the validators).

Outcome structure_identities() {
  TensorCaps caps;
  caps.q_element_cap = 32;  // admit the order-27 factors mod p
  caps.max_cosets = 65536;
  caps.order_cap = 8192;  // the mod-3 square of heisenberg(3) reaches 6561
  auto add_square = [&](const char* spec, int q) {
    CrossedModule id = identity_crossed_module(parse_group_spec(spec));
    g_tensors.push_back(q == 0 ? compute_tensor(id, id, caps)
                               : compute_q_tensor(id, id, q, caps));
  };
  add_square("heisenberg(3)", 0);
  add_square("heisenberg(3)", 3);
  add_square("extraspecial_exp_p2(3)", 0);
  add_square("dihedral(8)", 0);
  add_square("dihedral(8)", 2);
  add_square("quaternion(8)", 0);
  add_square("quaternion(8)", 2);
  add_square("cyclic(9)", 3);
  add_square("ea(3,2)", 3);

  GroupPtr h = heisenberg(3);
  CrossedModule incl = inclusion_crossed_module(center(h));
  CrossedModule full = identity_crossed_module(h);
  g_tensors.push_back(compute_tensor(incl, full, caps));
  g_tensors.push_back(compute_q_tensor(incl, full, 3, caps));

  long long plain = 0, modq = 0;
  for (const TensorResult& t : g_tensors) {
    std::string where = t.left.m->name + " (x) " + t.right.m->name +
                        (t.q ? " mod " + std::to_string(t.q) : "");
    if (auto v = hom_violation(t.alpha)) {
      return {false, where + ": alpha breaks at (" +
                         std::to_string((*v)[0]) + ", " +
                         std::to_string((*v)[1]) + ")"};
    }
    if (auto v = hom_violation(t.beta)) {
      return {false, where + ": beta breaks at (" + std::to_string((*v)[0]) +
                         ", " + std::to_string((*v)[1]) + ")"};
    }
    if (auto v = pairing_violation(t)) {
      return {false, where + ": commutator pairing fails at (" +
                         std::to_string((*v)[0]) + ", " +
                         std::to_string((*v)[1]) + ")"};
    }
    if (auto v = validate_crossed_square(tensor_crossed_square(t))) {
      return {false, where + ": square axiom " + v->axiom + ": " + v->detail};
    }
    (t.q ? modq : plain)++;
  }
  std::ostringstream os;
  os << plain << " plain and " << modq << " mod-q tensors validated";
  return {true, os.str()};
}

// ---------------------------------------------------------------------
// Criterion 7: the powerful-tensor battery on small modules, under the
// stock caps.  Aspects the caps exclude must surface as skips (the suite
// maps those to exit code 2), never as passes, and at least two modules
// must complete every aspect.

Outcome powerful_tensor_battery() {
  std::vector<CrossedModule> mods;
  mods.push_back(identity_crossed_module(cyclic(9)));
  mods.push_back(identity_crossed_module(elementary_abelian(3, 2)));
  mods.push_back(identity_crossed_module(extraspecial_exp_p2(3)));
  GroupPtr h = heisenberg(3);
  mods.push_back(inclusion_crossed_module(center(h)));

  long long checks = 0, substantive = 0, skips = 0;
  int complete = 0;
  for (const CrossedModule& m : mods) {
    TheoremCOutcome out = check_theorem_c(m, 3);
    for (const TheoremCheck& c : out.checks) {
      if (c.is_violation()) {
        return {false, m.m->name + ": " + c.theorem_id + " violated"};
      }
      substantive += c.is_substantive_pass();
      ++checks;
    }
    if (out.skipped.empty()) ++complete;
    skips += (long long)out.skipped.size();
  }
  if (complete < 2) {
    return {false, "only " + std::to_string(complete) +
                       " modules completed every aspect"};
  }
  std::ostringstream os;
  os << checks << " checks (" << substantive << " substantive), " << skips
     << " capped aspects reported as skips, " << complete
     << " modules fully complete";
  return {true, os.str()};
}

// ---------------------------------------------------------------------
// Criterion 8: fold-2 exactness of  N_1 N_2 -> H (x)^q H -> G (x)^q G -> 1
// for three central quotients, with the kernel compared elementwise.

Outcome fold2_exactness() {
  TensorCaps caps;
  caps.element_cap = 32;
  caps.q_element_cap = 32;
  caps.max_cosets = 65536;
  caps.order_cap = 8192;

  GroupPtr h27 = heisenberg(3);
  GroupPtr c9 = cyclic(9);
  GroupPtr d8 = dihedral(8);
  struct Item {
    GroupPtr h;
    Subgroup n;
    int q;
  };
  const Item items[] = {
      {h27, center(h27), 3},
      {c9, power_subgroup(full_subgroup(c9), 3), 3},
      {d8, center(d8), 2},
  };
  std::ostringstream os;
  for (const Item& item : items) {
    ExactSequenceReport rep =
        check_nfold_exact_sequence(item.h, item.n, 2, item.q, caps);
    if (!rep.ok()) {
      return {false, rep.group_name + ": kernel_matches = " +
                         std::to_string(rep.kernel_matches) +
                         ", order_law = " +
                         std::to_string(rep.order_law_holds)};
    }
    if (os.tellp() > 0) os << ", ";
    os << rep.group_name << " |ker| = " << rep.kernel_order;
  }
  return {true, os.str()};
}

// ---------------------------------------------------------------------
// Criterion 9: the order of the second lower-p term divides the order of
// the mod-p tensor square of the central quotient.

Outcome quotient_tensor_bound() {
  GroupPtr h27 = heisenberg(3);
  GroupPtr g93 = direct_product(cyclic(9), cyclic(3));
  struct Item {
    GroupPtr h;
    Subgroup n;
  };
  const Item items[] = {
      {h27, center(h27)},
      {g93, power_subgroup(full_subgroup(g93), 3)},
  };
  for (const Item& item : items) {
    TheoremCheck c = check_surjection_law(item.h, item.n, 3, 1);
    if (!c.hypothesis_holds) {
      return {false, item.h->name + ": hypothesis unexpectedly vacuous (" +
                         c.note + ")"};
    }
    if (!c.conclusion_holds) {
      return {false, item.h->name + ": divisibility fails (" + c.note + ")"};
    }
  }
  return {true, "2 central quotients, divisibility holds"};
}

}  // namespace

int main() {
  struct Row {
    int id;
    const char* label;
    double budget_seconds;  // 0 = no budget
    std::function<Outcome()> run;
  };
  const std::vector<Row> rows = {
      {1, "lower-p closed form and centralizer sweep", 30, series_identities},
      {2, "quotient criteria and Frattini suites", 120,
       quotient_criteria_suites},
      {3, "powerful-group battery", 30, powerful_group_battery},
      {4, "enumeration goldens and reference presentations", 0,
       enumeration_goldens},
      {5, "abelian tensor invariants vs oracle", 60,
       abelian_tensor_invariants},
      {6, "structure identities on computed tensors", 0, structure_identities},
      {7, "powerful-tensor battery", 300, powerful_tensor_battery},
      {8, "fold-2 exactness", 300, fold2_exactness},
      {9, "quotient tensor order bound", 120, quotient_tensor_bound},
  };

  int failures = 0;
  for (const Row& row : rows) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = row.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    bool in_budget = row.budget_seconds <= 0 || secs < row.budget_seconds;
    bool pass = out.pass && in_budget;
    if (!pass) ++failures;
    std::printf("criterion %d [%s]: %s (%.2fs) %s%s\n", row.id, row.label,
                pass ? "PASS" : "FAIL", secs, out.detail.c_str(),
                in_budget ? "" : " [over budget]");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", (int)rows.size() - failures,
              rows.size());
  return failures == 0 ? 0 : 1;
}
