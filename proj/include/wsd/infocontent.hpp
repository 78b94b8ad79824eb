#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>

#include "wsd/corpus.hpp"
#include "wsd/taxonomy.hpp"

namespace wsd {

// Propagated concept counts freq(c). Kept as exact integers; probability
// and information content are derived on demand in double precision.
struct FrequencyTable {
  std::unordered_map<SynsetId, std::uint64_t> freq;
  std::uint64_t total_n = 0;

  std::uint64_t at(const SynsetId& id) const {
    auto it = freq.find(id);
    return it == freq.end() ? 0 : it->second;
  }
};

enum class LogBase { natural, base2 };

// freq(c) = sum of count(n) over nouns n with some sense subsumed by c.
// A noun contributes once per concept no matter how many of its senses
// fall under it.
FrequencyTable propagate(const Taxonomy& t, const LemmaCounts& counts);

// Relative frequency freq(c)/N; 0 for unobserved concepts.
double probability(const FrequencyTable& ft, const SynsetId& c);

// -log Pr(c) in the given base; nullopt = UNOBSERVED (never infinity).
std::optional<double> information_content(const FrequencyTable& ft, const SynsetId& c,
                                          LogBase base);

// Frequency table plus the log base it is to be read in.
struct IcTable {
  FrequencyTable freq;
  LogBase log_base = LogBase::natural;

  bool observed(const SynsetId& c) const { return freq.at(c) > 0; }
  double probability(const SynsetId& c) const { return wsd::probability(freq, c); }
  std::optional<double> ic(const SynsetId& c) const {
    return information_content(freq, c, log_base);
  }
};

// `<synset-id>\t<freq>` lines (observed concepts only, id-sorted) plus
// trailing `#N\t<total>` and `#logbase\t<e|2>` records. Reloadable
// without the corpus.
void save_ic(std::ostream& out, const IcTable& table);
IcTable load_ic(std::istream& in);

}  // namespace wsd
