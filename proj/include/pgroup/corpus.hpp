#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "group.hpp"

namespace pgroup {

// Names of the constructor families build_corpus knows how to instantiate.
// "direct_product" enables pairwise products of the base groups.
const std::vector<std::string>& all_corpus_families();

// Describes a deterministic test corpus: the primes to cover, an order cap
// per prime, and which constructor families may contribute.  The seed is
// echoed into reports and handed to seeded checks downstream; corpus
// membership itself never depends on it.
struct CorpusSpec {
  std::vector<int> primes;
  std::map<int, long long> max_order;
  std::vector<std::string> whitelist;
  std::uint64_t seed = 0;

  // p = 2 up to order 128, p = 3 up to 243, p = 5 up to 125, all families.
  static CorpusSpec defaults();
};

// Instantiates every whitelisted constructor for every requested prime,
// subject to the per-prime order cap, then adds pairwise direct products
// of those base groups (still subject to the cap).  Duplicates are removed
// using the fingerprint plus the element-order histogram, keeping the
// first group encountered.  The result is sorted by (order, name) and is
// byte-for-byte reproducible for a fixed spec.  An empty whitelist yields
// an empty corpus.
std::vector<GroupPtr> build_corpus(const CorpusSpec& spec);

}  // namespace pgroup
