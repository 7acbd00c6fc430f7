#include "pgroup/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <numeric>
#include <set>
#include <thread>

#include "pgroup/catalog.hpp"
#include "pgroup/crossed.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/series.hpp"
#include "pgroup/tensor.hpp"

namespace pgroup {

namespace {

struct TaskResult {
  std::vector<TheoremCheck> checks;
  std::vector<std::string> skipped;
};
using Task = std::function<TaskResult()>;

// Runs every task and returns the results in schedule order regardless of
// the worker count, so reports never depend on --jobs.
std::vector<TaskResult> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<TaskResult> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  auto run_one = [&](std::size_t i) {
    try {
      results[i] = tasks[i]();
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (jobs <= 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) run_one(i);
    };
    std::size_t count = std::min<std::size_t>(jobs, tasks.size());
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (std::size_t i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

// Caps for the breadth sweeps: small enough that a doomed enumeration
// fails fast, large enough for every keystone example.
TensorCaps structure_caps(std::uint64_t seed) {
  TensorCaps caps;
  caps.element_cap = 27;
  caps.q_element_cap = 16;
  caps.max_cosets = 8192;
  caps.order_cap = 4096;
  caps.seed = seed;
  return caps;
}

// The fold-2 exact sequences need |H| up to 27 on both sides of the
// pairing and tensors up to order 6561.
TensorCaps exactness_caps(std::uint64_t seed) {
  TensorCaps caps;
  caps.element_cap = 32;
  caps.q_element_cap = 32;
  caps.max_cosets = 65536;
  caps.order_cap = 8192;
  caps.seed = seed;
  return caps;
}

bool spec_covers(const CorpusSpec& spec, int p, long long order) {
  if (std::find(spec.primes.begin(), spec.primes.end(), p) ==
      spec.primes.end()) {
    return false;
  }
  auto it = spec.max_order.find(p);
  return it != spec.max_order.end() && it->second >= order;
}

bool spec_has_family(const CorpusSpec& spec, const std::string& family) {
  return std::find(spec.whitelist.begin(), spec.whitelist.end(), family) !=
         spec.whitelist.end();
}

// ---- series-axioms ----------------------------------------------------

TaskResult series_checks(GroupPtr g) {
  TaskResult r;
  int p = g->prime;

  SeriesResult gam = lower_central_series(g);
  SeriesResult lam = lower_p_series(g, p);
  int depth = std::max(gam.stabilized_at, lam.stabilized_at) + 2;

  // Rebuild every lambda term from the lower central series and compare.
  TheoremCheck closed("lambda_closed_form", g->name, depth);
  closed.hypothesis_holds = true;
  closed.conclusion_holds = true;
  for (int n = 1; n <= depth; ++n) {
    Subgroup prod = trivial_subgroup(g);
    long long pe = 1;
    for (int i = n; i >= 1; --i) {
      prod = product_of_subgroups(prod,
                                  power_subgroup(gam.term_clamped(i), pe));
      pe *= p;
    }
    if (!subgroup_eq(prod, lam.term_clamped(n))) {
      closed.conclusion_holds = false;
      closed.witness = "term " + std::to_string(n);
      break;
    }
  }
  closed.note = "terms 1.." + std::to_string(depth);
  r.checks.push_back(closed);

  SeriesResult zs = upper_central_series(g);
  TheoremCheck sweep("upper_central_in_iterated_centralizer", g->name,
                     zs.stabilized_at + 1);
  sweep.hypothesis_holds = true;
  sweep.conclusion_holds = true;
  for (int n = 1; n <= zs.stabilized_at + 1; ++n) {
    if (!subgroup_leq(zs.term_clamped(n), script_D_n(g, n))) {
      sweep.conclusion_holds = false;
      sweep.witness = "n = " + std::to_string(n);
      break;
    }
  }
  r.checks.push_back(sweep);

  TheoremCheck chain("series_descending_normal", g->name, 0);
  chain.hypothesis_holds = true;
  chain.conclusion_holds = true;
  SeriesResult der = derived_series(g);
  SeriesResult psi = frattini_series(g, p);
  auto well_formed = [&](const SeriesResult& s, const char* label) {
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
      if (!is_normal(s.terms[i]) ||
          (i + 1 < s.terms.size() &&
           !subgroup_leq(s.terms[i + 1], s.terms[i]))) {
        chain.conclusion_holds = false;
        chain.witness = std::string(label) + " term " + std::to_string(i + 1);
        return;
      }
    }
  };
  well_formed(gam, "lower central");
  well_formed(lam, "lower p");
  well_formed(der, "derived");
  well_formed(psi, "frattini");
  if (chain.conclusion_holds && gam.terms.back().order() != 1) {
    chain.conclusion_holds = false;
    chain.witness = "lower central series does not reach 1";
  }
  r.checks.push_back(chain);
  return r;
}

// ---- powerful-theorems -------------------------------------------------

TaskResult powerful_checks(GroupPtr h) {
  TaskResult r;
  int p = h->prime;
  for (int n = 1; n <= 3; ++n) r.checks.push_back(check_theorem_A_i(h, p, n));
  for (int n = 1; n <= 3; ++n) r.checks.push_back(check_theorem_A_ii(h, p, n));
  if (p % 2 == 1) {
    for (int n = 2; n <= 3; ++n) {
      r.checks.push_back(check_theorem_A_iii(h, p, n));
    }
    const Subgroup candidates[] = {trivial_subgroup(h), center(h)};
    for (const Subgroup& n_sub : candidates) {
      for (int n = 1; n <= 2; ++n) {
        r.checks.push_back(check_theorem_B_i(h, n_sub, p, n));
        r.checks.push_back(check_theorem_B_ii(h, n_sub, p, n));
      }
    }
  }
  if (is_powerful(h, p)) {
    auto append = [&](std::vector<TheoremCheck> v) {
      for (auto& c : v) r.checks.push_back(std::move(c));
    };
    append(check_lubotzky_mann_suite(h, p));
    append(check_shalev_identity(h, p));
    append(check_embedding_closure(h, p));
  }
  return r;
}

// ---- tensor-structure ---------------------------------------------------

// Order of the tensor square of an abelian group, clamped at cap + 1; used
// to reject hopeless enumerations before they start.
long long predicted_abelian_square(GroupPtr g, long long cap) {
  std::vector<long long> d = abelian_invariants(g);
  long long prod = 1;
  for (long long a : d) {
    for (long long b : d) {
      prod *= std::gcd(a, b);
      if (prod > cap) return cap + 1;
    }
  }
  return prod;
}

void structure_records(TaskResult& r, const TensorResult& t,
                       const std::string& group, const char* axiom_id,
                       const char* pairing_id, const char* image_id,
                       const Subgroup& expected_image,
                       const char* image_label, std::uint64_t seed) {
  TheoremCheck axioms(axiom_id, group, 0);
  axioms.hypothesis_holds = true;
  auto sq = validate_crossed_square(tensor_crossed_square(t), seed);
  axioms.conclusion_holds = !sq.has_value();
  if (sq) axioms.witness = sq->axiom + ": " + sq->detail;
  axioms.note = "|tensor| = " + std::to_string(t.group->order);
  r.checks.push_back(axioms);

  TheoremCheck pairing(pairing_id, group, 0);
  pairing.hypothesis_holds = true;
  auto pv = pairing_violation(t, seed);
  pairing.conclusion_holds = !pv.has_value();
  if (pv) {
    pairing.witness = "l = " + std::to_string((*pv)[0]) +
                      ", l' = " + std::to_string((*pv)[1]);
  }
  r.checks.push_back(pairing);

  TheoremCheck image(image_id, group, 0);
  image.hypothesis_holds = true;
  Subgroup beta_image = hom_image(t.beta);
  image.conclusion_holds = subgroup_eq(beta_image, expected_image);
  image.note = std::string("|im beta| = ") +
               std::to_string(beta_image.order()) + ", |" + image_label +
               "| = " + std::to_string(expected_image.order());
  r.checks.push_back(image);
}

TaskResult tensor_structure_checks(GroupPtr g, const TensorCaps& caps) {
  TaskResult r;
  int p = g->prime;
  CrossedModule idm = identity_crossed_module(g);

  if (g->order > caps.element_cap) {
    r.skipped.push_back("tensor square of " + g->name + ": factor order " +
                        std::to_string(g->order) + " exceeds the element cap " +
                        std::to_string(caps.element_cap));
  } else if (is_abelian(*g) &&
             predicted_abelian_square(g, caps.order_cap) > caps.order_cap) {
    r.skipped.push_back("tensor square of " + g->name +
                        ": predicted order exceeds the order cap " +
                        std::to_string(caps.order_cap));
  } else {
    try {
      TensorResult t = compute_tensor(idm, idm, caps);
      structure_records(r, t, g->name, "tensor_square_axioms",
                        "tensor_pairing", "tensor_derived_image",
                        lower_central_series(g).term_clamped(2), "gamma_2",
                        caps.seed);
    } catch (const ResourceError& e) {
      r.skipped.push_back("tensor square of " + g->name + ": " + e.what());
    }
  }

  if (g->order > caps.q_element_cap) {
    r.skipped.push_back("mod-" + std::to_string(p) + " tensor square of " +
                        g->name + ": factor order " +
                        std::to_string(g->order) +
                        " exceeds the element cap " +
                        std::to_string(caps.q_element_cap));
  } else {
    try {
      TensorResult t = compute_q_tensor(idm, idm, p, caps);
      structure_records(r, t, g->name, "q_tensor_square_axioms",
                        "q_tensor_pairing", "q_tensor_lambda_image",
                        lower_p_series(g, p).term_clamped(2), "lambda_2",
                        caps.seed);
    } catch (const ResourceError& e) {
      r.skipped.push_back("mod-" + std::to_string(p) + " tensor square of " +
                          g->name + ": " + e.what());
    }
  }
  return r;
}

// ---- tensor-powerful ----------------------------------------------------

TaskResult tensor_powerful_checks(GroupPtr g, const TensorCaps& caps) {
  TaskResult r;
  int p = g->prime;
  if (g->order > caps.element_cap) {
    r.skipped.push_back("powerful-tensor checks for " + g->name + ": order " +
                        std::to_string(g->order) + " exceeds the element cap " +
                        std::to_string(caps.element_cap));
    return r;
  }
  if (is_abelian(*g) &&
      predicted_abelian_square(g, caps.order_cap) > caps.order_cap) {
    r.skipped.push_back("powerful-tensor checks for " + g->name +
                        ": predicted tensor square order exceeds the order "
                        "cap " +
                        std::to_string(caps.order_cap));
    return r;
  }
  auto append = [&](TheoremCOutcome out) {
    for (auto& c : out.checks) r.checks.push_back(std::move(c));
    for (auto& s : out.skipped) r.skipped.push_back(std::move(s));
  };
  CrossedModule idm = identity_crossed_module(g);
  append(check_theorem_c(idm, p, caps));
  if (!is_abelian(*g)) {
    append(check_theorem_c(inclusion_crossed_module(center(g)), p, caps));
  }
  for (int n = 0; n <= 1; ++n) {
    try {
      r.checks.push_back(check_power_expansion(idm, p, n, caps));
    } catch (const ResourceError& e) {
      r.skipped.push_back("power expansion for " + g->name + ": " + e.what());
    }
  }
  return r;
}

// ---- exactness and frattini fixed instances -----------------------------

struct SequenceInstance {
  GroupPtr h;
  Subgroup n_sub;
  int p = 0;
  std::string label;
};

// The keystone extensions: a nonabelian H mod its center for both parities
// plus cyclic and mixed abelian cases.
std::vector<SequenceInstance> sequence_instances(const CorpusSpec& spec) {
  std::vector<SequenceInstance> out;
  if (spec_covers(spec, 3, 27) && spec_has_family(spec, "heisenberg")) {
    GroupPtr h = heisenberg(3);
    out.push_back({h, center(h), 3, "heisenberg(3) by its center"});
  }
  if (spec_covers(spec, 3, 9) && spec_has_family(spec, "cyclic")) {
    GroupPtr h = cyclic(9);
    out.push_back(
        {h, power_subgroup(full_subgroup(h), 3), 3, "cyclic(9) by cubes"});
  }
  if (spec_covers(spec, 3, 27) && spec_has_family(spec, "cyclic") &&
      spec_has_family(spec, "direct_product")) {
    GroupPtr h = direct_product(cyclic(9), cyclic(3));
    out.push_back(
        {h, power_subgroup(full_subgroup(h), 3), 3, h->name + " by cubes"});
  }
  if (spec_covers(spec, 2, 8) && spec_has_family(spec, "dihedral")) {
    GroupPtr h = dihedral(8);
    out.push_back({h, center(h), 2, "dihedral(8) by its center"});
  }
  if (spec_covers(spec, 2, 4) && spec_has_family(spec, "cyclic")) {
    GroupPtr h = cyclic(4);
    out.push_back(
        {h, power_subgroup(full_subgroup(h), 2), 2, "cyclic(4) by squares"});
  }
  return out;
}

TaskResult exact_sequence_check(const SequenceInstance& inst,
                                const TensorCaps& caps) {
  TaskResult r;
  try {
    ExactSequenceReport rep =
        check_nfold_exact_sequence(inst.h, inst.n_sub, 2, inst.p, caps);
    TheoremCheck c("exact_sequence_fold2", inst.label, 2);
    c.hypothesis_holds = true;
    c.conclusion_holds = rep.ok();
    c.note = "|H (x) H| = " + std::to_string(rep.h_tensor_order) +
             ", |N1 N2| = " + std::to_string(rep.product_order) +
             ", |ker d| = " + std::to_string(rep.kernel_order) +
             ", |G (x) G| = " + std::to_string(rep.g_tensor_order);
    r.checks.push_back(c);
  } catch (const ResourceError& e) {
    r.skipped.push_back("exact sequence for " + inst.label + ": " + e.what());
  }
  return r;
}

TaskResult surjection_check(const SequenceInstance& inst,
                            const TensorCaps& caps) {
  TaskResult r;
  try {
    r.checks.push_back(check_surjection_law(inst.h, inst.n_sub, inst.p, 1,
                                            caps));
  } catch (const ResourceError& e) {
    r.skipped.push_back("surjection law for " + inst.label + ": " + e.what());
  }
  return r;
}

TaskResult frattini_surjection_check(const SequenceInstance& inst,
                                     const TensorCaps& caps) {
  TaskResult r;
  try {
    r.checks.push_back(
        check_frattini_surjection_law(inst.h, inst.n_sub, inst.p, 1, caps));
  } catch (const ResourceError& e) {
    r.skipped.push_back("frattini surjection for " + inst.label + ": " +
                        e.what());
  }
  return r;
}

TaskResult frattini_checks(GroupPtr h) {
  TaskResult r;
  int p = h->prime;
  const Subgroup candidates[] = {trivial_subgroup(h), center(h)};
  for (const Subgroup& n_sub : candidates) {
    for (int n = 1; n <= 2; ++n) {
      for (auto& c : check_frattini_theorem(h, n_sub, p, n)) {
        r.checks.push_back(std::move(c));
      }
    }
  }
  return r;
}

// ---- schedule assembly ---------------------------------------------------

std::vector<Task> build_schedule(const std::string& suite,
                                 const std::vector<GroupPtr>& corpus,
                                 const CorpusSpec& spec) {
  std::vector<Task> tasks;
  if (suite == "series-axioms") {
    for (GroupPtr g : corpus) {
      tasks.push_back([g] { return series_checks(g); });
    }
  } else if (suite == "powerful-theorems") {
    for (GroupPtr g : corpus) {
      tasks.push_back([g] { return powerful_checks(g); });
    }
  } else if (suite == "tensor-structure") {
    TensorCaps caps = structure_caps(spec.seed);
    for (GroupPtr g : corpus) {
      tasks.push_back([g, caps] { return tensor_structure_checks(g, caps); });
    }
  } else if (suite == "tensor-powerful") {
    TensorCaps caps = structure_caps(spec.seed);
    for (GroupPtr g : corpus) {
      if (g->prime % 2 == 0) continue;
      tasks.push_back([g, caps] { return tensor_powerful_checks(g, caps); });
    }
  } else if (suite == "exactness") {
    TensorCaps caps = exactness_caps(spec.seed);
    for (const SequenceInstance& inst : sequence_instances(spec)) {
      tasks.push_back([inst, caps] { return exact_sequence_check(inst, caps); });
    }
    for (const SequenceInstance& inst : sequence_instances(spec)) {
      if (!subgroup_leq(inst.n_sub,
                        upper_central_series(inst.h).term_clamped(1))) {
        continue;
      }
      tasks.push_back([inst, caps] { return surjection_check(inst, caps); });
    }
  } else if (suite == "frattini") {
    for (GroupPtr g : corpus) {
      tasks.push_back([g] { return frattini_checks(g); });
    }
    TensorCaps caps = exactness_caps(spec.seed);
    for (const SequenceInstance& inst : sequence_instances(spec)) {
      if (!subgroup_leq(inst.n_sub, script_F_n(inst.h, inst.p, 1))) continue;
      tasks.push_back(
          [inst, caps] { return frattini_surjection_check(inst, caps); });
    }
  } else {
    throw InputError("unknown suite '" + suite + "'");
  }
  return tasks;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "series-axioms", "powerful-theorems", "tensor-structure",
      "tensor-powerful", "exactness", "frattini"};
  return names;
}

std::vector<SuiteReport> run_suites(const std::string& name,
                                    const CorpusSpec& spec,
                                    const SuiteOptions& opts) {
  std::vector<std::string> selected;
  if (name == "all") {
    selected = suite_names();
  } else {
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw InputError("unknown suite '" + name + "'");
    }
    selected.push_back(name);
  }

  std::vector<GroupPtr> corpus = build_corpus(spec);
  std::vector<std::string> corpus_names;
  corpus_names.reserve(corpus.size());
  for (const GroupPtr& g : corpus) corpus_names.push_back(g->name);

  std::vector<SuiteReport> reports;
  for (const std::string& suite : selected) {
    auto start = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.suite = suite;
    rep.spec = spec;
    rep.options = opts;
    rep.corpus_names = corpus_names;

    std::vector<Task> tasks = build_schedule(suite, corpus, spec);
    for (TaskResult& tr : run_tasks(tasks, opts.jobs)) {
      for (auto& c : tr.checks) rep.checks.push_back(std::move(c));
      for (auto& s : tr.skipped) rep.skipped.push_back(std::move(s));
    }

    for (const TheoremCheck& c : rep.checks) {
      rep.substantive_by_theorem.try_emplace(c.theorem_id, 0);
      if (c.is_violation()) {
        ++rep.counts.violation;
      } else if (c.is_substantive_pass()) {
        ++rep.counts.substantive_pass;
        ++rep.substantive_by_theorem[c.theorem_id];
      } else {
        ++rep.counts.vacuous_pass;
      }
    }
    rep.counts.skipped_resource = static_cast<long long>(rep.skipped.size());
    for (const auto& [id, n] : rep.substantive_by_theorem) {
      if (n < opts.min_substantive) rep.below_minimum.push_back(id);
    }
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    reports.push_back(std::move(rep));
  }
  return reports;
}

int suite_exit_code(const std::vector<SuiteReport>& reports) {
  bool skipped = false;
  bool unhealthy = false;
  for (const SuiteReport& r : reports) {
    if (r.counts.violation > 0) return 1;
    skipped = skipped || r.counts.skipped_resource > 0;
    unhealthy = unhealthy || !r.healthy();
  }
  if (skipped || unhealthy) return 2;
  return 0;
}

}  // namespace pgroup
