#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wsd/taxonomy.hpp"

namespace wsd {

// Cross-file consistency findings from index.noun validation; never fatal.
struct WordNetLoadReport {
  std::vector<std::string> issues;
};

// Parses WordNet 3.0 noun database files. data.noun supplies the synsets
// and their IS-A edges (`@` and `@i` pointers); index.noun is consulted
// only to cross-check lemma/offset pairs. Header lines start with two
// spaces. Malformed lines raise parse_error with the line number.
Taxonomy load_wordnet(std::istream& data_noun, std::istream& index_noun,
                      WordNetLoadReport* report = nullptr);

// Line-oriented synthetic taxonomy text:
//   SYN <id> WORDS <lemma>[,<lemma>...] PARENTS [<id>[,<id>...]] [GLOSS <text>]
// `#` starts a comment; empty PARENTS means top level.
Taxonomy load_synthetic(std::istream& in);

// Canonical synthetic-format serialization (id-sorted; virtual root and
// its synthesized edges omitted). load_synthetic(save_synthetic(t)) is
// isomorphic to t.
void save_synthetic(std::ostream& out, const Taxonomy& t);

}  // namespace wsd
