#include "wsd/infocontent.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <unordered_set>
#include <vector>

#include "wsd/error.hpp"

namespace wsd {

FrequencyTable propagate(const Taxonomy& t, const LemmaCounts& counts) {
  FrequencyTable ft;
  ft.total_n = counts.total_n;
  for (const auto& [lemma, count] : counts.counts) {
    const auto& senses = t.senses(lemma);
    if (senses.empty()) {
      fail(Err::unknown_lemma, "counted lemma '" + lemma + "' is not in the taxonomy");
    }
    if (count == 0) continue;
    // Union of subsumers over all senses: set semantics per concept.
    std::unordered_set<SynsetId> subsumers;
    for (const SynsetId& s : senses) {
      for (SynsetId& a : t.ancestors(s)) subsumers.insert(std::move(a));
    }
    for (const SynsetId& c : subsumers) ft.freq[c] += count;
  }
  return ft;
}

double probability(const FrequencyTable& ft, const SynsetId& c) {
  if (ft.total_n == 0) fail(Err::empty_corpus, "probability undefined: N = 0");
  return static_cast<double>(ft.at(c)) / static_cast<double>(ft.total_n);
}

std::optional<double> information_content(const FrequencyTable& ft, const SynsetId& c,
                                          LogBase base) {
  if (ft.total_n == 0) fail(Err::empty_corpus, "information content undefined: N = 0");
  const std::uint64_t f = ft.at(c);
  if (f == 0) return std::nullopt;
  if (f == ft.total_n) return 0.0;  // exact, avoids -0.0 from -log(1)
  const double p = static_cast<double>(f) / static_cast<double>(ft.total_n);
  return base == LogBase::natural ? -std::log(p) : -std::log2(p);
}

void save_ic(std::ostream& out, const IcTable& table) {
  std::vector<std::pair<SynsetId, std::uint64_t>> rows(table.freq.freq.begin(),
                                                       table.freq.freq.end());
  std::sort(rows.begin(), rows.end());
  for (const auto& [id, f] : rows) {
    if (f > 0) out << id.value << '\t' << f << '\n';
  }
  out << "#N\t" << table.freq.total_n << '\n';
  out << "#logbase\t" << (table.log_base == LogBase::natural ? "e" : "2") << '\n';
}

IcTable load_ic(std::istream& in) {
  IcTable table;
  bool saw_total = false;
  bool saw_base = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      fail(Err::parse_error, "ic line " + std::to_string(lineno) + ": missing tab");
    }
    const std::string key = line.substr(0, tab);
    const std::string val = line.substr(tab + 1);
    if (key == "#logbase") {
      if (val == "e") {
        table.log_base = LogBase::natural;
      } else if (val == "2") {
        table.log_base = LogBase::base2;
      } else {
        fail(Err::parse_error, "ic line " + std::to_string(lineno) + ": bad log base '" + val + "'");
      }
      saw_base = true;
      continue;
    }
    std::uint64_t n = 0;
    if (!parse_u64(val, n)) {
      fail(Err::parse_error, "ic line " + std::to_string(lineno) + ": bad count '" + val + "'");
    }
    if (key == "#N") {
      table.freq.total_n = n;
      saw_total = true;
    } else if (!key.empty() && key.front() == '#') {
      fail(Err::parse_error, "ic line " + std::to_string(lineno) + ": unknown record '" + key + "'");
    } else {
      table.freq.freq[SynsetId{key}] = n;
    }
  }
  if (!saw_total) fail(Err::parse_error, "ic file: missing #N record");
  if (!saw_base) fail(Err::parse_error, "ic file: missing #logbase record");
  return table;
}

}  // namespace wsd
