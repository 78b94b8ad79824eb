#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsd/infocontent.hpp"
#include "wsd/taxonomy.hpp"

namespace wsd {

struct SimilarityResult {
  double value = 0.0;
  std::optional<SynsetId> mis;      // most informative subsumer
  std::vector<SynsetId> tied_mis;   // every concept achieving the max, id-sorted
};

// Synsets subsuming both words in any sense of either: the intersection of
// the ancestor unions over each word's senses. Sorted by id.
std::vector<SynsetId> subsumers(const Taxonomy& t, const std::string& w1,
                                const std::string& w2);

// sim(w1, w2) = max over observed subsumers of -log Pr(c). Unobserved
// subsumers are excluded from the max; the virtual root is always observed
// when N > 0, so the result exists and is 0 when only the root subsumes.
// MIS ties break to the smallest id; the full tied set is reported.
SimilarityResult similarity(const Taxonomy& t, const IcTable& ic, const std::string& w1,
                            const std::string& w2);

}  // namespace wsd
