#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wsd/infocontent.hpp"
#include "wsd/similarity.hpp"
#include "wsd/taxonomy.hpp"

namespace wsd {

// The word set W: normalized lemmas with at least one sense each,
// duplicates collapsed, plus the inputs that had to be dropped.
struct WordGroup {
  std::vector<std::string> words;
  std::vector<std::string> skipped;
};

// Normalizes raw tokens (lowercase, plural folding, spaces to underscores),
// drops duplicates, and routes out-of-taxonomy tokens to `skipped`.
WordGroup make_group(const Taxonomy& t, const std::vector<std::string>& raw_words);

struct DisambigOptions {
  bool credit_ties = false;       // credit every tied MIS, not just the winner
  bool extend_ancestors = false;  // score ancestors of senses too
};

struct SenseScore {
  SynsetId sense;
  double support = 0.0;
  double phi = 0.0;
};

struct WordPhi {
  std::string word;
  std::vector<SenseScore> senses;  // ordered by id
  double normalization = 0.0;
};

// v[i,j] and the (deterministic) most informative subsumer per pair.
struct PairEvidence {
  std::size_t i = 0;
  std::size_t j = 0;
  double v = 0.0;
  SynsetId c;
};

struct PhiAssignment {
  std::vector<WordPhi> words;           // in group order
  std::vector<PairEvidence> pair_log;   // canonical i<j order
  DisambigOptions options;

  const WordPhi* find(const std::string& word) const;
};

// Pairwise credit assignment over the group: each pair's similarity v goes
// to every sense under that pair's most informative subsumer, every word's
// normalization grows by v, and phi = support/normalization (uniform
// 1/num_senses when a word's normalization stays 0). With extend_ancestors
// the per-word sense lists include all ancestors of the word's senses.
PhiAssignment disambiguate(const Taxonomy& t, const IcTable& ic, const WordGroup& group,
                           const DisambigOptions& options = {});

// Highest-level annotation: per word, among concepts scoring at least the
// best direct sense, the one closest to the root (ties: larger phi, then
// smaller id). Requires an assignment computed with extend_ancestors.
std::vector<std::pair<std::string, SynsetId>> annotate(const Taxonomy& t,
                                                       const PhiAssignment& pa);

// First k senses of a word by phi descending, id ascending on ties.
std::vector<std::pair<SynsetId, double>> top_senses(const PhiAssignment& pa,
                                                    const std::string& word,
                                                    std::size_t k);

// Human-judged sense membership W' for a group; possibly several senses
// per word.
struct GoldGrouping {
  std::map<std::string, std::set<SynsetId>> members;
};

// Every gold sense must be a sense of its word.
void validate_gold(const Taxonomy& t, const GoldGrouping& gold);

}  // namespace wsd
