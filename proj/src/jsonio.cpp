#include "pgroup/jsonio.hpp"

#include "json.hpp"
#include "pgroup/series.hpp"

namespace pgroup {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json header(const char* kind) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = kToolVersion;
  j["kind"] = kind;
  return j;
}

ordered_json group_summary(GroupPtr g) {
  ordered_json j;
  j["name"] = g->name;
  j["order"] = g->order;
  j["prime"] = g->prime;
  Fingerprint fp = fingerprint(g);
  j["exponent"] = fp.exponent;
  j["abelian"] = is_abelian(*g);
  j["nilpotency_class"] = fp.nilpotency_class;
  j["abelian_invariants"] = fp.ab_invariants;
  return j;
}

ordered_json series_summary(const SeriesResult& s) {
  ordered_json j;
  j["kind"] = series_kind_name(s.kind);
  std::vector<long long> orders;
  orders.reserve(s.terms.size());
  for (const Subgroup& t : s.terms) orders.push_back(t.order());
  j["term_orders"] = orders;
  j["stabilized_at"] = s.stabilized_at;
  return j;
}

const char* check_status(const TheoremCheck& c) {
  if (c.is_violation()) return "violation";
  if (c.is_substantive_pass()) return "substantive_pass";
  return "vacuous_pass";
}

ordered_json check_record(const TheoremCheck& c) {
  ordered_json j;
  j["theorem"] = c.theorem_id;
  j["group"] = c.group_name;
  j["n"] = c.parameter_n;
  j["hypothesis"] = c.hypothesis_holds;
  j["conclusion"] = c.conclusion_holds;
  j["status"] = check_status(c);
  if (c.witness) j["witness"] = *c.witness;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

}  // namespace

std::string group_info_json(GroupPtr g) {
  ordered_json j = header("group-info");
  j["group"] = group_summary(g);
  ordered_json hist = ordered_json::array();
  for (auto [order, count] : order_histogram(*g)) {
    hist.push_back({{"element_order", order}, {"count", count}});
  }
  j["order_histogram"] = hist;
  j["center_order"] = center(g).order();
  Subgroup whole = full_subgroup(g);
  j["derived_order"] = commutator_subgroup(whole, whole).order();
  return dump(j);
}

std::string series_json(GroupPtr g) {
  ordered_json j = header("series");
  j["group"] = group_summary(g);
  ordered_json list = ordered_json::array();
  list.push_back(series_summary(lower_central_series(g)));
  list.push_back(series_summary(upper_central_series(g)));
  list.push_back(series_summary(derived_series(g)));
  if (g->prime != 0) {
    list.push_back(series_summary(lower_p_series(g, g->prime)));
    list.push_back(series_summary(frattini_series(g, g->prime)));
  }
  j["series"] = list;
  return dump(j);
}

std::string quotient_json(GroupPtr g, const std::string& by_label,
                          const Subgroup& n_sub, GroupPtr quotient) {
  ordered_json j = header("quotient");
  j["group"] = group_summary(g);
  j["by"] = by_label;
  j["normal_subgroup_order"] = n_sub.order();
  j["quotient"] = group_summary(quotient);
  return dump(j);
}

std::string coset_table_json(const Presentation& p,
                             const std::vector<std::string>& subgroup_words,
                             const CosetTable& table) {
  ordered_json j = header("coset-table");
  j["presentation"] = format_presentation(p);
  j["subgroup_words"] = subgroup_words;
  j["status"] = table_status_name(table.status);
  j["cosets"] = table.coset_count;
  ordered_json cols = ordered_json::array();
  for (int g = 1; g <= table.generator_count; ++g) {
    ordered_json col;
    col["generator"] = p.label(g);
    col["action"] = table.columns[2 * (g - 1)];
    col["inverse_action"] = table.columns[2 * (g - 1) + 1];
    cols.push_back(col);
  }
  j["columns"] = cols;
  return dump(j);
}

std::string tensor_json(const TensorResult& t, bool include_presentation) {
  ordered_json j = header(t.q == 0 ? "tensor" : "q-tensor");
  j["left"] = group_summary(t.left.m);
  j["right"] = group_summary(t.right.m);
  j["base"] = t.left.g->name;
  j["q"] = t.q;
  int brace_count = static_cast<int>(t.brace_map.size());
  j["pair_generators"] = t.presentation.generator_count - brace_count;
  j["brace_generators"] = brace_count;
  j["relators"] = t.presentation.relators.size();
  j["tensor"] = group_summary(t.group);
  j["alpha_image_order"] = hom_image(t.alpha).order();
  j["beta_image_order"] = hom_image(t.beta).order();
  if (include_presentation) {
    j["presentation"] = format_presentation(t.presentation);
  }
  return dump(j);
}

std::string suite_reports_json(const std::string& requested,
                               const std::vector<SuiteReport>& reports,
                               int exit_code) {
  ordered_json j = header("verify");
  ordered_json config;
  config["suite"] = requested;
  if (!reports.empty()) {
    const CorpusSpec& spec = reports.front().spec;
    config["primes"] = spec.primes;
    ordered_json caps;
    for (auto [p, cap] : spec.max_order) caps[std::to_string(p)] = cap;
    config["max_order"] = caps;
    config["whitelist"] = spec.whitelist;
    config["seed"] = spec.seed;
    config["min_substantive"] = reports.front().options.min_substantive;
  }
  j["config"] = config;

  ordered_json suites = ordered_json::array();
  for (const SuiteReport& r : reports) {
    ordered_json s;
    s["suite"] = r.suite;
    s["corpus"] = r.corpus_names;
    ordered_json counts;
    counts["substantive_pass"] = r.counts.substantive_pass;
    counts["vacuous_pass"] = r.counts.vacuous_pass;
    counts["violation"] = r.counts.violation;
    counts["skipped_resource"] = r.counts.skipped_resource;
    counts["scheduled"] = r.counts.scheduled();
    s["counts"] = counts;
    ordered_json sub;
    for (const auto& [id, n] : r.substantive_by_theorem) sub[id] = n;
    s["substantive_by_theorem"] = sub;
    s["below_minimum"] = r.below_minimum;
    s["healthy"] = r.healthy();
    ordered_json checks = ordered_json::array();
    for (const TheoremCheck& c : r.checks) checks.push_back(check_record(c));
    s["checks"] = checks;
    s["skipped"] = r.skipped;
    suites.push_back(s);
  }
  j["suites"] = suites;
  j["exit_code"] = exit_code;
  return dump(j);
}

}  // namespace pgroup
