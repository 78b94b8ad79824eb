#include "wsd/disambig.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <set>
#include <stdexcept>
#include <thread>

#include "wsd/corpus.hpp"
#include "wsd/error.hpp"

namespace wsd {

namespace {

// Pairs below this count are not worth spreading across threads.
constexpr std::size_t kParallelPairThreshold = 256;

std::string trimmed(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

WordGroup make_group(const Taxonomy& t, const std::vector<std::string>& raw_words) {
  WordGroup g;
  std::set<std::string> seen;
  std::set<std::string> seen_skipped;
  for (const std::string& raw : raw_words) {
    const std::string token = trimmed(raw);
    if (token.empty()) continue;
    if (auto norm = normalize_token(t, token, CountMode::noun_list)) {
      if (seen.insert(*norm).second) g.words.push_back(*norm);
    } else if (seen_skipped.insert(lower_ascii_copy(token)).second) {
      g.skipped.push_back(token);
    }
  }
  return g;
}

const WordPhi* PhiAssignment::find(const std::string& word) const {
  for (const WordPhi& wp : words) {
    if (wp.word == word) return &wp;
  }
  return nullptr;
}

PhiAssignment disambiguate(const Taxonomy& t, const IcTable& ic, const WordGroup& group,
                           const DisambigOptions& options) {
  if (group.words.empty()) fail(Err::empty_group, "word group is empty");
  if (ic.freq.total_n == 0) fail(Err::empty_corpus, "disambiguation undefined: N = 0");

  const std::size_t n = group.words.size();

  // Candidate sense lists, id-ordered, plus each candidate's ancestor set
  // for the credit test "c[i,j] is an ancestor of sense[i,k]".
  std::vector<std::vector<SynsetId>> senses(n);
  std::vector<std::vector<std::vector<SynsetId>>> sense_anc(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& direct = t.senses(group.words[i]);
    if (direct.empty()) {
      fail(Err::no_senses, "'" + group.words[i] + "' has no senses in the taxonomy");
    }
    if (options.extend_ancestors) {
      std::vector<SynsetId> ext;
      for (const SynsetId& s : direct) {
        auto anc = t.ancestors(s);
        ext.insert(ext.end(), anc.begin(), anc.end());
      }
      std::sort(ext.begin(), ext.end());
      ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
      senses[i] = std::move(ext);
    } else {
      senses[i] = direct;
    }
    sense_anc[i].reserve(senses[i].size());
    for (const SynsetId& s : senses[i]) sense_anc[i].push_back(t.ancestors(s));
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }

  struct PairWork {
    double v = 0.0;
    SynsetId mis;
    std::vector<std::size_t> credit_i;
    std::vector<std::size_t> credit_j;
  };
  std::vector<PairWork> work(pairs.size());

  auto compute = [&](std::size_t p) {
    const auto [i, j] = pairs[p];
    const SimilarityResult r = similarity(t, ic, group.words[i], group.words[j]);
    PairWork w;
    w.v = r.value;
    w.mis = *r.mis;
    // A sense is credited when any winning subsumer covers it; a sense
    // under several tied winners still gains v only once.
    const std::vector<SynsetId> single{w.mis};
    const std::vector<SynsetId>& winners = options.credit_ties ? r.tied_mis : single;
    auto collect = [&](std::size_t word, std::vector<std::size_t>& out) {
      for (std::size_t k = 0; k < senses[word].size(); ++k) {
        const std::vector<SynsetId>& anc = sense_anc[word][k];
        for (const SynsetId& c : winners) {
          if (std::binary_search(anc.begin(), anc.end(), c)) {
            out.push_back(k);
            break;
          }
        }
      }
    };
    collect(i, w.credit_i);
    collect(j, w.credit_j);
    work[p] = std::move(w);
  };

  // Pair computations are pure; folding stays in canonical pair order so
  // the result does not depend on the schedule.
  const std::size_t npairs = pairs.size();
  const unsigned hw = std::thread::hardware_concurrency();
  if (npairs >= kParallelPairThreshold && hw > 1) {
    const std::size_t nchunks = std::min<std::size_t>(hw, 8);
    const std::size_t chunk = (npairs + nchunks - 1) / nchunks;
    std::vector<std::future<void>> futures;
    for (std::size_t c = 0; c < nchunks; ++c) {
      const std::size_t begin = c * chunk;
      const std::size_t end = std::min(npairs, begin + chunk);
      if (begin >= end) break;
      futures.push_back(std::async(std::launch::async, [&, begin, end] {
        for (std::size_t p = begin; p < end; ++p) compute(p);
      }));
    }
    for (auto& f : futures) f.get();
  } else {
    for (std::size_t p = 0; p < npairs; ++p) compute(p);
  }

  PhiAssignment pa;
  pa.options = options;
  pa.words.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    pa.words[i].word = group.words[i];
    pa.words[i].senses.reserve(senses[i].size());
    for (const SynsetId& s : senses[i]) pa.words[i].senses.push_back({s, 0.0, 0.0});
  }
  pa.pair_log.reserve(npairs);
  for (std::size_t p = 0; p < npairs; ++p) {
    const auto [i, j] = pairs[p];
    PairWork& w = work[p];
    for (std::size_t k : w.credit_i) pa.words[i].senses[k].support += w.v;
    for (std::size_t k : w.credit_j) pa.words[j].senses[k].support += w.v;
    pa.words[i].normalization += w.v;
    pa.words[j].normalization += w.v;
    pa.pair_log.push_back({i, j, w.v, std::move(w.mis)});
  }

  for (WordPhi& wp : pa.words) {
    if (wp.normalization > 0.0) {
      for (SenseScore& s : wp.senses) {
        const double phi = s.support / wp.normalization;
        if (phi < 0.0 || phi > 1.0 + 1e-9) {
          throw std::logic_error("phi out of range for '" + wp.word + "'");
        }
        s.phi = std::min(phi, 1.0);  // subset vs. total sums may differ by an ulp
      }
    } else {
      const double uniform = 1.0 / static_cast<double>(wp.senses.size());
      for (SenseScore& s : wp.senses) s.phi = uniform;
    }
  }
  return pa;
}

std::vector<std::pair<std::string, SynsetId>> annotate(const Taxonomy& t,
                                                       const PhiAssignment& pa) {
  if (!pa.options.extend_ancestors) {
    fail(Err::requires_ancestor_extension,
         "annotation needs an assignment computed with extend_ancestors");
  }
  std::vector<std::pair<std::string, SynsetId>> out;
  out.reserve(pa.words.size());
  for (const WordPhi& wp : pa.words) {
    const std::vector<SynsetId>& direct = t.senses(wp.word);
    double best_direct = 0.0;
    for (const SenseScore& s : wp.senses) {
      if (std::binary_search(direct.begin(), direct.end(), s.sense)) {
        best_direct = std::max(best_direct, s.phi);
      }
    }
    const SenseScore* pick = nullptr;
    int pick_depth = 0;
    for (const SenseScore& s : wp.senses) {
      if (s.phi < best_direct) continue;
      const int d = t.depth(s.sense);
      const bool better =
          !pick || d < pick_depth ||
          (d == pick_depth &&
           (s.phi > pick->phi || (s.phi == pick->phi && s.sense < pick->sense)));
      if (better) {
        pick = &s;
        pick_depth = d;
      }
    }
    out.emplace_back(wp.word, pick->sense);
  }
  return out;
}

std::vector<std::pair<SynsetId, double>> top_senses(const PhiAssignment& pa,
                                                    const std::string& word,
                                                    std::size_t k) {
  const WordPhi* wp = pa.find(word);
  if (!wp) fail(Err::unknown_lemma, "'" + word + "' is not in the assignment");
  std::vector<std::pair<SynsetId, double>> ranked;
  ranked.reserve(wp->senses.size());
  for (const SenseScore& s : wp->senses) ranked.emplace_back(s.sense, s.phi);
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

void validate_gold(const Taxonomy& t, const GoldGrouping& gold) {
  for (const auto& [word, ids] : gold.members) {
    const std::vector<SynsetId>& senses = t.senses(word);
    for (const SynsetId& id : ids) {
      if (!std::binary_search(senses.begin(), senses.end(), id)) {
        fail(Err::invalid_gold,
             "gold sense '" + id.value + "' is not a sense of '" + word + "'");
      }
    }
  }
}

}  // namespace wsd
