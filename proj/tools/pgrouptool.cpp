#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pgroup/catalog.hpp"
#include "pgroup/corpus.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/jsonio.hpp"
#include "pgroup/series.hpp"
#include "pgroup/suite.hpp"
#include "pgroup/tensor.hpp"
#include "pgroup/todd_coxeter.hpp"

namespace {

using namespace pgroup;

constexpr int kExitViolation = 1;
constexpr int kExitResource = 2;
constexpr int kExitUsage = 3;

struct GlobalOptions {
  std::string output;  // "", "text" or "json"; "" picks a per-command default
  std::uint64_t seed = 0;
  int max_cosets = kDefaultMaxCosets;
  long long max_order = 0;  // 0 = command default
  int jobs = 1;
};

bool want_json(const GlobalOptions& g, bool json_default) {
  if (g.output.empty()) return json_default;
  return g.output == "json";
}

long long order_cap_or(const GlobalOptions& g, long long fallback) {
  return g.max_order > 0 ? g.max_order : fallback;
}

std::string join_longs(const std::vector<long long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << " ";
    os << v[i];
  }
  return os.str();
}

// ---- group ----------------------------------------------------------------

void print_group_text(GroupPtr g) {
  Fingerprint fp = fingerprint(g);
  std::cout << "name: " << g->name << "\n";
  std::cout << "order: " << g->order << "\n";
  std::cout << "prime: " << g->prime << "\n";
  std::cout << "exponent: " << fp.exponent << "\n";
  std::cout << "abelian: " << (is_abelian(*g) ? "yes" : "no") << "\n";
  std::cout << "nilpotency class: " << fp.nilpotency_class << "\n";
  std::cout << "abelian invariants: " << join_longs(fp.ab_invariants) << "\n";
  std::ostringstream hist;
  for (auto [order, count] : order_histogram(*g)) {
    hist << " " << order << "^" << count;
  }
  std::cout << "order histogram:" << hist.str() << "\n";
  Subgroup whole = full_subgroup(g);
  std::cout << "center order: " << center(g).order() << "\n";
  std::cout << "derived order: " << commutator_subgroup(whole, whole).order()
            << "\n";
}

int run_group_info(const GlobalOptions& opts, const std::string& spec) {
  GroupPtr g = parse_group_spec(spec, int(order_cap_or(opts, kDefaultOrderCap)));
  if (want_json(opts, false)) {
    std::cout << group_info_json(g);
  } else {
    print_group_text(g);
  }
  return 0;
}

int run_group_series(const GlobalOptions& opts, const std::string& spec) {
  GroupPtr g = parse_group_spec(spec, int(order_cap_or(opts, kDefaultOrderCap)));
  if (want_json(opts, false)) {
    std::cout << series_json(g);
    return 0;
  }
  std::cout << "group: " << g->name << " (order " << g->order << ")\n";
  auto line = [](const SeriesResult& s) {
    std::cout << series_kind_name(s.kind) << ":";
    for (const Subgroup& t : s.terms) std::cout << " " << t.order();
    std::cout << "\n";
  };
  line(lower_central_series(g));
  line(upper_central_series(g));
  line(derived_series(g));
  if (g->prime != 0) {
    line(lower_p_series(g, g->prime));
    line(frattini_series(g, g->prime));
  }
  return 0;
}

Subgroup pick_normal_subgroup(GroupPtr g, const std::string& by) {
  if (by == "center") return center(g);
  Subgroup whole = full_subgroup(g);
  if (by == "derived") return commutator_subgroup(whole, whole);
  if (by == "frattini") {
    if (g->prime == 0) {
      throw InputError("--by frattini needs a p-group, got " + g->name);
    }
    return frattini_series(g, g->prime).term_clamped(2);
  }
  if (by.rfind("power:", 0) == 0) {
    long long e = 0;
    try {
      e = std::stoll(by.substr(6));
    } catch (const std::exception&) {
      throw InputError("--by power:<e> needs an integer exponent");
    }
    if (e < 1) throw InputError("--by power:<e> needs e >= 1");
    return power_subgroup(whole, e);
  }
  throw InputError("unknown --by value '" + by +
                   "' (want center, derived, frattini or power:<e>)");
}

int run_group_quotient(const GlobalOptions& opts, const std::string& spec,
                       const std::string& by) {
  GroupPtr g = parse_group_spec(spec, int(order_cap_or(opts, kDefaultOrderCap)));
  Subgroup n_sub = pick_normal_subgroup(g, by);
  QuotientResult q = quotient_group(g, n_sub);
  if (want_json(opts, false)) {
    std::cout << quotient_json(g, by, n_sub, q.group);
    return 0;
  }
  std::cout << "group: " << g->name << " (order " << g->order << ")\n";
  std::cout << "by: " << by << " (order " << n_sub.order() << ")\n";
  std::cout << "quotient order: " << q.group->order << "\n";
  std::cout << "quotient abelian invariants: "
            << join_longs(abelian_invariants(q.group)) << "\n";
  return 0;
}

// ---- tc --------------------------------------------------------------------

Word parse_subgroup_word(const Presentation& p, const std::string& text) {
  std::ostringstream os;
  os << "<";
  for (int g = 1; g <= p.generator_count; ++g) {
    if (g > 1) os << ",";
    os << p.label(g);
  }
  os << " | " << text << ">";
  Presentation wrapper = parse_presentation(os.str());
  return wrapper.relators.at(0);
}

int run_tc(const GlobalOptions& opts, const std::string& text,
           const std::vector<std::string>& subgroup_texts) {
  Presentation p = parse_presentation(text);
  std::vector<Word> words;
  words.reserve(subgroup_texts.size());
  for (const std::string& s : subgroup_texts) {
    words.push_back(parse_subgroup_word(p, s));
  }
  CosetTable table = todd_coxeter(p, words, opts.max_cosets);
  if (want_json(opts, false)) {
    std::cout << coset_table_json(p, subgroup_texts, table);
    return 0;
  }
  std::cout << "presentation: " << format_presentation(p) << "\n";
  std::cout << "status: " << table_status_name(table.status) << "\n";
  std::cout << "cosets: " << table.coset_count << "\n";
  std::cout << "coset";
  for (int g = 1; g <= p.generator_count; ++g) {
    std::cout << "  " << p.label(g) << "  " << p.label(g) << "^-1";
  }
  std::cout << "\n";
  for (int row = 0; row < table.coset_count; ++row) {
    std::cout << (row + 1);
    for (int col = 0; col < 2 * p.generator_count; ++col) {
      std::cout << "  " << table.columns[col][row];
    }
    std::cout << "\n";
  }
  return 0;
}

// ---- tensor / qtensor -------------------------------------------------------

TensorCaps single_instance_caps(const GlobalOptions& opts, GroupPtr g) {
  TensorCaps caps;
  caps.element_cap = g->order;
  caps.q_element_cap = g->order;
  long long pairs = 1LL * (g->order - 1) * (g->order - 1) + g->order + 8;
  if (pairs > caps.generator_cap) caps.generator_cap = int(pairs);
  caps.max_cosets = opts.max_cosets;
  caps.order_cap = int(order_cap_or(opts, caps.order_cap));
  caps.seed = opts.seed;
  return caps;
}

int run_tensor(const GlobalOptions& opts, const std::string& spec, int q,
               bool emit_presentation) {
  GroupPtr g = parse_group_spec(spec, int(order_cap_or(opts, kDefaultOrderCap)));
  TensorCaps caps = single_instance_caps(opts, g);
  CrossedModule idm = identity_crossed_module(g);
  TensorResult t = q == 0 ? compute_tensor(idm, idm, caps)
                          : compute_q_tensor(idm, idm, q, caps);
  if (want_json(opts, true)) {
    std::cout << tensor_json(t, emit_presentation);
    return 0;
  }
  std::cout << "factors: " << t.left.m->name << " (x) " << t.right.m->name;
  if (t.q != 0) std::cout << " mod " << t.q;
  std::cout << "\n";
  std::cout << "tensor order: " << t.group->order << "\n";
  std::cout << "abelian: " << (is_abelian(*t.group) ? "yes" : "no") << "\n";
  std::cout << "abelian invariants: "
            << join_longs(abelian_invariants(t.group)) << "\n";
  std::cout << "pair generators: "
            << t.presentation.generator_count - int(t.brace_map.size()) << "\n";
  std::cout << "brace generators: " << t.brace_map.size() << "\n";
  std::cout << "alpha image order: " << hom_image(t.alpha).order() << "\n";
  std::cout << "beta image order: " << hom_image(t.beta).order() << "\n";
  if (emit_presentation) {
    std::cout << "presentation: " << format_presentation(t.presentation)
              << "\n";
  }
  return 0;
}

// ---- verify ------------------------------------------------------------------

CorpusSpec make_corpus_spec(const GlobalOptions& opts,
                            const std::vector<int>& primes,
                            const std::vector<std::string>& families) {
  CorpusSpec defaults = CorpusSpec::defaults();
  CorpusSpec spec;
  spec.whitelist = families.empty() ? all_corpus_families() : families;
  spec.seed = opts.seed;
  spec.primes = primes.empty() ? defaults.primes : primes;
  for (int p : spec.primes) {
    if (opts.max_order > 0) {
      spec.max_order[p] = opts.max_order;
    } else {
      auto it = defaults.max_order.find(p);
      if (it == defaults.max_order.end()) {
        throw InputError("no default order cap for prime " +
                         std::to_string(p) + "; pass --max-order");
      }
      spec.max_order[p] = it->second;
    }
  }
  return spec;
}

void print_reports_text(const std::vector<SuiteReport>& reports,
                        int exit_code) {
  for (const SuiteReport& r : reports) {
    std::ostringstream head;
    head << "suite " << r.suite << ": " << r.checks.size() << " checks; "
         << r.counts.substantive_pass << " substantive, "
         << r.counts.vacuous_pass << " vacuous, " << r.counts.violation
         << " violations, " << r.counts.skipped_resource << " skipped; "
         << (r.healthy() ? "healthy" : "below minimum");
    std::cout << head.str();
    std::printf(" (%.2fs)\n", r.wall_seconds);
    for (const std::string& id : r.below_minimum) {
      std::cout << "  below minimum: " << id << " ("
                << r.substantive_by_theorem.at(id) << " substantive)\n";
    }
    for (const TheoremCheck& c : r.checks) {
      if (!c.is_violation()) continue;
      std::cout << "  violation: " << c.theorem_id << " on " << c.group_name
                << " n=" << c.parameter_n;
      if (c.witness) std::cout << " witness " << *c.witness;
      if (!c.note.empty()) std::cout << " (" << c.note << ")";
      std::cout << "\n";
    }
    for (const std::string& s : r.skipped) {
      std::cout << "  skipped: " << s << "\n";
    }
  }
  std::cout << "exit " << exit_code << "\n";
}

int run_verify(const GlobalOptions& opts, const std::string& suite,
               const std::vector<int>& primes,
               const std::vector<std::string>& families,
               int min_substantive) {
  CorpusSpec spec = make_corpus_spec(opts, primes, families);
  SuiteOptions sopts;
  sopts.min_substantive = min_substantive;
  sopts.jobs = opts.jobs;
  std::vector<SuiteReport> reports = run_suites(suite, spec, sopts);
  int code = suite_exit_code(reports);
  if (want_json(opts, false)) {
    std::cout << suite_reports_json(suite, reports, code);
  } else {
    print_reports_text(reports, code);
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite p-group series, powerfulness and tensor checks"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--output", opts.output, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opts.seed, "seed for sampled checks");
  app.add_option("--max-cosets", opts.max_cosets,
                 "coset enumeration row limit");
  app.add_option("--max-order", opts.max_order,
                 "largest group order the command may materialize");
  app.add_option("--jobs", opts.jobs, "worker threads for verify")
      ->check(CLI::PositiveNumber);

  std::function<int()> action;

  auto* group = app.add_subcommand("group", "inspect a catalog group");
  group->require_subcommand(1);
  std::string group_spec;
  std::string quotient_by = "center";
  auto add_group_opt = [&](CLI::App* cmd) {
    cmd->add_option("--group", group_spec, "group spec, e.g. heisenberg(3)")
        ->required();
  };
  auto* info = group->add_subcommand("info", "orders and invariants");
  add_group_opt(info);
  info->callback([&] { action = [&] { return run_group_info(opts, group_spec); }; });
  auto* series = group->add_subcommand("series", "standard series term orders");
  add_group_opt(series);
  series->callback(
      [&] { action = [&] { return run_group_series(opts, group_spec); }; });
  auto* quotient = group->add_subcommand("quotient", "quotient by a named normal subgroup");
  add_group_opt(quotient);
  quotient->add_option("--by", quotient_by,
                       "center, derived, frattini or power:<e>");
  quotient->callback([&] {
    action = [&] { return run_group_quotient(opts, group_spec, quotient_by); };
  });

  auto* tc = app.add_subcommand("tc", "coset enumeration for a presentation");
  std::string presentation_text;
  std::vector<std::string> subgroup_texts;
  tc->add_option("--presentation", presentation_text,
                 "presentation, e.g. '<a,b | a^2, b^3, (a*b)^3>'")
      ->required();
  tc->add_option("--subgroup", subgroup_texts,
                 "subgroup generator word (repeatable)");
  tc->callback([&] {
    action = [&] { return run_tc(opts, presentation_text, subgroup_texts); };
  });

  auto* tensor = app.add_subcommand("tensor", "tensor square of a group");
  std::string tensor_spec;
  bool tensor_self = false;
  bool emit_presentation = false;
  tensor->add_option("--group", tensor_spec, "group spec")->required();
  tensor->add_flag("--self", tensor_self, "square the group with itself");
  tensor->add_flag("--emit-presentation", emit_presentation,
                   "include the generated presentation");
  tensor->callback([&] {
    action = [&] {
      if (!tensor_self) throw InputError("tensor: pass --self");
      return run_tensor(opts, tensor_spec, 0, emit_presentation);
    };
  });

  auto* qtensor =
      app.add_subcommand("qtensor", "tensor square modulo q of a group");
  std::string qtensor_spec;
  bool qtensor_self = false;
  bool q_emit_presentation = false;
  int q_value = 0;
  qtensor->add_option("--group", qtensor_spec, "group spec")->required();
  qtensor->add_flag("--self", qtensor_self, "square the group with itself");
  qtensor->add_option("--q", q_value, "modulus (default: the group's prime)");
  qtensor->add_flag("--emit-presentation", q_emit_presentation,
                    "include the generated presentation");
  qtensor->callback([&] {
    action = [&] {
      if (!qtensor_self) throw InputError("qtensor: pass --self");
      int q = q_value;
      if (q == 0) {
        GroupPtr g = parse_group_spec(
            qtensor_spec, int(order_cap_or(opts, kDefaultOrderCap)));
        q = g->prime;
        if (q == 0) {
          throw InputError("qtensor: " + g->name +
                           " is not a p-group; pass --q");
        }
      }
      if (q < 1) throw InputError("qtensor: q must be >= 1");
      return run_tensor(opts, qtensor_spec, q, q_emit_presentation);
    };
  });

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite_name = "all";
  std::vector<int> verify_primes;
  std::vector<std::string> verify_families;
  int min_substantive = 3;
  verify->add_option("--suite", suite_name,
                     "series-axioms, powerful-theorems, tensor-structure, "
                     "tensor-powerful, exactness, frattini or all");
  verify->add_option("--prime", verify_primes,
                     "corpus prime (repeatable; default 2 3 5)");
  verify->add_option("--family", verify_families,
                     "constructor family whitelist (repeatable; default all)");
  verify->add_option("--min-substantive", min_substantive,
                     "substantive passes required per theorem");
  verify->callback([&] {
    action = [&] {
      return run_verify(opts, suite_name, verify_primes, verify_families,
                        min_substantive);
    };
  });

  // Let global options appear after the subcommand name as well.
  for (CLI::App* sub : {group, info, series, quotient, tc, tensor, qtensor,
                        verify}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "unexpected failure: " << e.what() << "\n";
    return kExitViolation;
  }
}
