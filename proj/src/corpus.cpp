#include "pgroup/corpus.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "pgroup/catalog.hpp"
#include "pgroup/errors.hpp"

namespace pgroup {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

using DedupKey = std::pair<Fingerprint, std::vector<std::pair<long long, long long>>>;

DedupKey dedup_key(GroupPtr g) { return {fingerprint(g), order_histogram(*g)}; }

}  // namespace

const std::vector<std::string>& all_corpus_families() {
  static const std::vector<std::string> families = {
      "cyclic",      "elementary_abelian", "heisenberg",
      "extraspecial_exp_p2", "dihedral",   "quaternion8",
      "semidihedral16",      "direct_product"};
  return families;
}

CorpusSpec CorpusSpec::defaults() {
  CorpusSpec spec;
  spec.primes = {2, 3, 5};
  spec.max_order = {{2, 128}, {3, 243}, {5, 125}};
  spec.whitelist = all_corpus_families();
  return spec;
}

std::vector<GroupPtr> build_corpus(const CorpusSpec& spec) {
  std::set<std::string> want(spec.whitelist.begin(), spec.whitelist.end());
  for (const std::string& name : want) {
    const auto& known = all_corpus_families();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw InputError("build_corpus: unknown family '" + name + "'");
    }
  }

  std::vector<int> primes = spec.primes;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  std::vector<GroupPtr> out;
  std::set<DedupKey> seen;
  auto push = [&](GroupPtr g, int p) {
    if (g->prime != p) {
      throw InternalError("build_corpus: " + g->name + " is not a " +
                          std::to_string(p) + "-group");
    }
    if (seen.insert(dedup_key(g)).second) out.push_back(std::move(g));
  };

  for (int p : primes) {
    if (!is_prime(p)) {
      throw InputError("build_corpus: " + std::to_string(p) +
                       " is not a prime");
    }
    auto it = spec.max_order.find(p);
    if (it == spec.max_order.end()) {
      throw InputError("build_corpus: no max order given for prime " +
                       std::to_string(p));
    }
    long long cap = it->second;

    std::vector<GroupPtr> bases;
    if (want.count("cyclic")) {
      for (long long n = p; n <= cap; n *= p) bases.push_back(cyclic(int(n)));
    }
    if (want.count("elementary_abelian")) {
      long long n = 1LL * p * p;
      for (int k = 2; n <= cap; ++k, n *= p) {
        bases.push_back(elementary_abelian(p, k));
      }
    }
    if (p % 2 == 1 && 1LL * p * p * p <= cap) {
      if (want.count("heisenberg")) bases.push_back(heisenberg(p));
      if (want.count("extraspecial_exp_p2")) {
        bases.push_back(extraspecial_exp_p2(p));
      }
    }
    if (p == 2) {
      if (want.count("dihedral")) {
        for (long long n = 8; n <= cap; n *= 2) bases.push_back(dihedral(int(n)));
      }
      if (want.count("quaternion8") && cap >= 8) bases.push_back(quaternion8());
      if (want.count("semidihedral16") && cap >= 16) {
        bases.push_back(semidihedral16());
      }
    }

    for (const GroupPtr& g : bases) push(g, p);
    if (want.count("direct_product")) {
      for (std::size_t i = 0; i < bases.size(); ++i) {
        for (std::size_t j = i; j < bases.size(); ++j) {
          if (1LL * bases[i]->order * bases[j]->order > cap) continue;
          push(direct_product(bases[i], bases[j]), p);
        }
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const GroupPtr& a, const GroupPtr& b) {
    if (a->order != b->order) return a->order < b->order;
    return a->name < b->name;
  });
  return out;
}

}  // namespace pgroup
