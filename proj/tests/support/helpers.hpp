#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsd/corpus.hpp"
#include "wsd/infocontent.hpp"
#include "wsd/taxonomy.hpp"
#include "wsd/wordnet_loader.hpp"

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
  return std::string(WSD_FIXTURE_DIR) + "/" + name;
}

inline std::ifstream open_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  return in;
}

inline wsd::Taxonomy load_fixture_taxonomy(const std::string& name) {
  auto in = open_fixture(name);
  return wsd::load_synthetic(in);
}

inline wsd::Synset syn(std::string id, std::vector<std::string> words,
                       std::vector<std::string> parents = {}, std::string gloss = {}) {
  wsd::Synset s;
  s.id = wsd::SynsetId{std::move(id)};
  s.words = std::move(words);
  for (std::string& p : parents) s.parents.push_back(wsd::SynsetId{std::move(p)});
  s.gloss = std::move(gloss);
  return s;
}

inline wsd::LemmaCounts counts_of(std::vector<std::pair<std::string, std::uint64_t>> entries) {
  wsd::LemmaCounts c;
  for (auto& [lemma, n] : entries) {
    c.counts[lemma] += n;
    c.total_n += n;
  }
  return c;
}

// counts{doctor:2, lawyer:1, dog:1} for fixture3.tax
inline wsd::LemmaCounts fixture3_counts() {
  return counts_of({{"doctor", 2}, {"lawyer", 1}, {"dog", 1}});
}

// counts{doctor:1, nurse:1, teacher:1, dog:2} for fixture5.tax
inline wsd::LemmaCounts fixture5_counts() {
  return counts_of({{"doctor", 1}, {"nurse", 1}, {"teacher", 1}, {"dog", 2}});
}

inline wsd::IcTable make_ic(const wsd::Taxonomy& t, const wsd::LemmaCounts& counts,
                            wsd::LogBase base = wsd::LogBase::natural) {
  return wsd::IcTable{wsd::propagate(t, counts), base};
}

}  // namespace testsupport
