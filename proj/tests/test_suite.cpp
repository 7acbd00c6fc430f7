#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "pgroup/catalog.hpp"
#include "pgroup/corpus.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/suite.hpp"

using namespace pgroup;

namespace {

std::vector<std::string> corpus_names(const CorpusSpec& spec) {
  std::vector<std::string> names;
  for (const auto& g : build_corpus(spec)) names.push_back(g->name);
  return names;
}

CorpusSpec small_spec(int p, long long cap,
                      std::vector<std::string> families =
                          all_corpus_families()) {
  CorpusSpec spec;
  spec.primes = {p};
  spec.max_order = {{p, cap}};
  spec.whitelist = std::move(families);
  return spec;
}

}  // namespace

TEST_SUITE("corpus") {
  TEST_CASE("defaults cover three primes with per-prime caps") {
    CorpusSpec spec = CorpusSpec::defaults();
    CHECK(spec.primes == std::vector<int>{2, 3, 5});
    CHECK(spec.max_order.at(2) == 128);
    CHECK(spec.max_order.at(3) == 243);
    CHECK(spec.max_order.at(5) == 125);
    CHECK(spec.whitelist == all_corpus_families());
  }

  TEST_CASE("p = 3 corpus up to order 27") {
    std::vector<std::string> names = corpus_names(small_spec(3, 27));
    std::vector<std::string> expected = {
        "cyclic(3)",
        "cyclic(9)",
        "elementary_abelian(3,2)",
        "cyclic(27)",
        "direct_product(cyclic(3),cyclic(9))",
        "elementary_abelian(3,3)",
        "extraspecial_exp_p2(3)",
        "heisenberg(3)",
    };
    CHECK(names == expected);
  }

  TEST_CASE("p = 2 corpus up to order 16") {
    std::vector<std::string> names = corpus_names(small_spec(2, 16));
    CHECK(names.size() == 17);
    for (const char* want :
         {"cyclic(16)", "direct_product(cyclic(2),cyclic(8))",
          "direct_product(cyclic(4),cyclic(4))",
          "direct_product(cyclic(4),elementary_abelian(2,2))",
          "elementary_abelian(2,4)", "dihedral(8)", "dihedral(16)",
          "quaternion(8)", "semidihedral(16)"}) {
      CAPTURE(want);
      CHECK(std::count(names.begin(), names.end(), std::string(want)) == 1);
    }
    // C2 x C2 duplicates elementary_abelian(2,2) and is dropped.
    CHECK(std::count(names.begin(), names.end(),
                     std::string("direct_product(cyclic(2),cyclic(2))")) == 0);
  }

  TEST_CASE("corpus groups match directly built references") {
    std::vector<GroupPtr> corpus = build_corpus(small_spec(3, 27));
    std::map<std::string, GroupPtr> by_name;
    for (const auto& g : corpus) by_name[g->name] = g;
    CHECK(fingerprint(by_name.at("heisenberg(3)")) ==
          fingerprint(heisenberg(3)));
    CHECK(fingerprint(by_name.at("elementary_abelian(3,2)")) ==
          fingerprint(elementary_abelian(3, 2)));
    CHECK(fingerprint(by_name.at("direct_product(cyclic(3),cyclic(9))")) ==
          fingerprint(direct_product(cyclic(3), cyclic(9))));
  }

  TEST_CASE("dihedral and quaternion both survive dedup") {
    // Same order profile of subgroup counts is not enough to merge them:
    // the dedup key includes the element-order histogram, which separates
    // D8 (five involutions) from Q8 (one).
    std::vector<std::string> names = corpus_names(small_spec(2, 8));
    CHECK(std::count(names.begin(), names.end(), std::string("dihedral(8)")) ==
          1);
    CHECK(std::count(names.begin(), names.end(),
                     std::string("quaternion(8)")) == 1);
  }

  TEST_CASE("corpus is deterministic") {
    CorpusSpec spec = small_spec(2, 32);
    CHECK(corpus_names(spec) == corpus_names(spec));
  }

  TEST_CASE("whitelist restricts the families") {
    std::vector<std::string> names =
        corpus_names(small_spec(2, 16, {"cyclic"}));
    CHECK(names == std::vector<std::string>{"cyclic(2)", "cyclic(4)",
                                            "cyclic(8)", "cyclic(16)"});
    CHECK(build_corpus(small_spec(2, 16, {})).empty());
  }

  TEST_CASE("bad specs are rejected") {
    CHECK_THROWS_AS(build_corpus(small_spec(2, 16, {"frobenius"})),
                    InputError);
    CHECK_THROWS_AS(build_corpus(small_spec(4, 16)), InputError);
    CorpusSpec no_cap;
    no_cap.primes = {2, 3};
    no_cap.max_order = {{2, 16}};
    no_cap.whitelist = all_corpus_families();
    CHECK_THROWS_AS(build_corpus(no_cap), InputError);
  }
}

TEST_SUITE("suites") {
  TEST_CASE("suite names are stable") {
    CHECK(suite_names() ==
          std::vector<std::string>{"series-axioms", "powerful-theorems",
                                   "tensor-structure", "tensor-powerful",
                                   "exactness", "frattini"});
    CHECK_THROWS_AS(run_suites("bogus", small_spec(3, 9)), InputError);
  }

  TEST_CASE("series suite over a small corpus is clean") {
    std::vector<SuiteReport> reports =
        run_suites("series-axioms", small_spec(3, 27));
    REQUIRE(reports.size() == 1);
    const SuiteReport& r = reports.front();
    CHECK(r.suite == "series-axioms");
    CHECK(r.corpus_names.size() == 8);
    CHECK(!r.checks.empty());
    CHECK(r.counts.violation == 0);
    CHECK(r.counts.skipped_resource == (long long)r.skipped.size());
    CHECK(r.counts.substantive_pass + r.counts.vacuous_pass +
              r.counts.violation ==
          (long long)r.checks.size());
    for (const auto& [id, n] : r.substantive_by_theorem) {
      CAPTURE(id);
      CHECK(n >= 0);
    }
  }

  TEST_CASE("reports are identical for any job count") {
    CorpusSpec spec = small_spec(3, 27);
    SuiteOptions serial;
    SuiteOptions parallel;
    parallel.jobs = 3;
    std::vector<SuiteReport> a = run_suites("powerful-theorems", spec, serial);
    std::vector<SuiteReport> b =
        run_suites("powerful-theorems", spec, parallel);
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 1);
    REQUIRE(a[0].checks.size() == b[0].checks.size());
    for (std::size_t i = 0; i < a[0].checks.size(); ++i) {
      const TheoremCheck& x = a[0].checks[i];
      const TheoremCheck& y = b[0].checks[i];
      CHECK(x.theorem_id == y.theorem_id);
      CHECK(x.group_name == y.group_name);
      CHECK(x.parameter_n == y.parameter_n);
      CHECK(x.hypothesis_holds == y.hypothesis_holds);
      CHECK(x.conclusion_holds == y.conclusion_holds);
    }
    CHECK(a[0].skipped == b[0].skipped);
  }

  TEST_CASE("all runs every suite in order") {
    // Cyclic 2-groups keep the tensor and exactness work tiny.
    std::vector<SuiteReport> reports =
        run_suites("all", small_spec(2, 8, {"cyclic"}));
    REQUIRE(reports.size() == suite_names().size());
    for (std::size_t i = 0; i < reports.size(); ++i)
      CHECK(reports[i].suite == suite_names()[i]);
    for (const SuiteReport& r : reports) {
      CAPTURE(r.suite);
      CHECK(r.counts.violation == 0);
    }
  }

  TEST_CASE("seed is echoed into the report") {
    CorpusSpec spec = small_spec(3, 9);
    spec.seed = 12345;
    std::vector<SuiteReport> reports = run_suites("series-axioms", spec);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].spec.seed == 12345);
  }

  TEST_CASE("exit code ranks violations over skips") {
    SuiteReport clean;
    clean.counts.substantive_pass = 5;

    SuiteReport skipped = clean;
    skipped.counts.skipped_resource = 1;
    skipped.skipped.push_back("capped");

    SuiteReport unhealthy = clean;
    unhealthy.below_minimum.push_back("some_id");

    SuiteReport violated = clean;
    violated.counts.violation = 1;

    CHECK(suite_exit_code({clean}) == 0);
    CHECK(suite_exit_code({clean, skipped}) == 2);
    CHECK(suite_exit_code({clean, unhealthy}) == 2);
    CHECK(suite_exit_code({clean, skipped, violated}) == 1);
  }
}
