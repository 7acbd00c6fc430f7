#pragma once

#include <map>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "powerful.hpp"

namespace pgroup {

inline constexpr const char* kToolVersion = "1.0.0";

struct SuiteOptions {
  // A theorem id that appears in a suite's check list must collect at least
  // this many substantive (hypothesis and conclusion both true) passes for
  // the suite to count as healthy.
  int min_substantive = 3;
  // Worker threads.  Results are merged in schedule order, so the report is
  // identical for any job count.
  int jobs = 1;
};

struct SuiteCounts {
  long long substantive_pass = 0;
  long long vacuous_pass = 0;
  long long violation = 0;
  long long skipped_resource = 0;

  long long scheduled() const {
    return substantive_pass + vacuous_pass + violation + skipped_resource;
  }
};

struct SuiteReport {
  std::string suite;
  CorpusSpec spec;
  SuiteOptions options;
  std::vector<std::string> corpus_names;
  std::vector<TheoremCheck> checks;
  // One entry per check that a resource cap prevented, with the reason.
  std::vector<std::string> skipped;
  SuiteCounts counts;
  std::map<std::string, long long> substantive_by_theorem;
  // Theorem ids that appear in `checks` but fall short of min_substantive.
  std::vector<std::string> below_minimum;
  // Text output only; never serialized to JSON so reports stay reproducible.
  double wall_seconds = 0.0;

  bool healthy() const { return below_minimum.empty(); }
};

// The individual suites, in the order "all" runs them:
//   series-axioms      central/derived/p-series identities over the corpus
//   powerful-theorems  quotient criteria, embedded-series and power facts
//   tensor-structure   square axioms and pairing laws on computed tensors
//   tensor-powerful    powerful-tensor criteria and power expansions
//   exactness          fold-2 exact sequences and the lambda surjection law
//   frattini           Frattini-series facts and their tensor counterparts
const std::vector<std::string>& suite_names();

// `name` is a suite name or "all".  Throws InputError for anything else.
std::vector<SuiteReport> run_suites(const std::string& name,
                                    const CorpusSpec& spec,
                                    const SuiteOptions& opts = {});

// 0 when every report is free of violations, has no resource skips and
// meets the substantive minimums; 1 when any violation was recorded;
// 2 otherwise (skipped checks or a missed minimum).
int suite_exit_code(const std::vector<SuiteReport>& reports);

}  // namespace pgroup
