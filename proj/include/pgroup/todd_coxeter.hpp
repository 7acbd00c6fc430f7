#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgroup/group.hpp"
#include "pgroup/presentation.hpp"

namespace pgroup {

inline constexpr int kDefaultMaxCosets = 2000000;

enum class TableStatus { complete, exceeded, in_progress };
std::string table_status_name(TableStatus s);

// Complete coset table for a subgroup H of a finitely presented group.
// Cosets are numbered 1..coset_count and coset 1 is the subgroup coset H
// itself. Column 2*(g-1) holds the action of generator g, column
// 2*(g-1)+1 the action of its inverse; row index is coset-1 and entries
// are 1-based coset numbers.
struct CosetTable {
  int generator_count = 0;
  int coset_count = 0;
  TableStatus status = TableStatus::in_progress;
  std::vector<std::vector<int32_t>> columns;

  // Image of `coset` (1-based) under a single signed letter.
  int apply(int coset, int32_t letter) const;
  // Image of `coset` under a word, applied left to right.
  int trace(int coset, const Word& w) const;

  // Checks totality, mutually inverse columns, that every relator fixes
  // every coset, and that every subgroup word fixes coset 1. Throws
  // InternalError on failure.
  void validate(const Presentation& p,
                const std::vector<Word>& subgroup_words) const;
};

// HLT coset enumeration with coincidence handling and a lookahead pass
// before giving up. On success the returned table is complete and
// standardized: cosets are renumbered in breadth-first discovery order
// from coset 1, scanning columns g1, g1^-1, g2, g2^-1, ... so that equal
// subgroups always produce byte-identical tables. Throws
// ResourceError("coset enumeration exceeded ...") when the enumeration
// cannot finish within max_cosets row slots; no partial state escapes.
CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<Word>& subgroup_words,
                        int max_cosets = kDefaultMaxCosets);

struct EnumeratedGroup {
  GroupPtr group;
  // generator_images[g-1] is the element of `group` represented by
  // generator g.
  std::vector<int> generator_images;
};

// Converts a complete table for the trivial subgroup into an exact group
// table (the regular action on cosets; the identity element is coset 1).
// Verifies that every relator evaluates to the identity under the
// generator images. order_cap bounds the materialized group order.
EnumeratedGroup table_to_group(const CosetTable& ct, const Presentation& p,
                               int order_cap = kDefaultOrderCap);

// Convenience wrapper: enumerate the trivial subgroup and materialize.
EnumeratedGroup enumerate_presentation(const Presentation& p,
                                       int max_cosets = kDefaultMaxCosets,
                                       int order_cap = kDefaultOrderCap);

}  // namespace pgroup
