#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pgroup {

// A word in the free group: nonzero signed generator indices, 1-based.
// +i is generator i, -i its inverse.
using Word = std::vector<int32_t>;

// Free reduction (cancel adjacent x, -x). Idempotent.
Word reduce(Word w);
// Free reduction plus trimming of inverse prefix/suffix pairs; conjugate
// relators collapse to a common core. Used by the enumerator.
Word cyclically_reduce(Word w);
Word inverse_word(const Word& w);
Word concat_words(const Word& a, const Word& b);

struct Presentation {
  int generator_count = 0;
  std::vector<Word> relators;
  // Optional text labels; empty, or exactly one per generator.
  std::vector<std::string> generator_labels;

  // Throws InputError on out-of-range letters or label arity mismatch.
  void check() const;
  std::string label(int gen_1based) const;
};

// Text format: <a,b | a^2, b^2, (a*b)^3>. Supported relator syntax:
// juxtaposition with '*', parentheses, and integer exponents (which may be
// negative). An empty relator list (<a|>) is allowed.
Presentation parse_presentation(const std::string& text);
std::string format_presentation(const Presentation& p);

// Defining presentations for the constructor catalog, keyed by the group
// spec strings understood by parse_group_spec. Used to cross-check the
// enumerator against the exact tables.
struct ReferencePresentation {
  std::string group_spec;
  Presentation presentation;
};
std::vector<ReferencePresentation> reference_presentations();

}  // namespace pgroup
