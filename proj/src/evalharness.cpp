#include "wsd/evalharness.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <random>
#include <sstream>

#include "wsd/error.hpp"

namespace wsd {

namespace {

constexpr int kMinConfidence = 2;  // ratings 0 and 1 are excluded

struct Prepared {
  const TestCase* tc;
  std::string target;            // normalized
  std::vector<SynsetId> senses;  // of the target
  WordGroup group;
};

Prepared prepare(const Taxonomy& t, const TestCase& tc) {
  Prepared p;
  p.tc = &tc;
  const auto norm = normalize_token(t, tc.target, CountMode::noun_list);
  if (!norm) {
    fail(Err::invalid_gold, "target '" + tc.target + "' is not in the taxonomy");
  }
  p.target = *norm;
  p.group = make_group(t, tc.group_words);
  if (std::find(p.group.words.begin(), p.group.words.end(), p.target) ==
      p.group.words.end()) {
    fail(Err::target_not_in_group, "target '" + tc.target + "' is not in its group");
  }
  p.senses = t.senses(p.target);
  if (!std::binary_search(p.senses.begin(), p.senses.end(), tc.gold)) {
    fail(Err::invalid_gold,
         "gold '" + tc.gold.value + "' is not a sense of '" + p.target + "'");
  }
  return p;
}

std::vector<Prepared> retained(const Taxonomy& t, const std::vector<TestCase>& cases,
                               std::size_t* excluded) {
  std::vector<Prepared> out;
  std::size_t dropped = 0;
  for (const TestCase& tc : cases) {
    if (tc.confidence < kMinConfidence) {
      ++dropped;
      continue;
    }
    out.push_back(prepare(t, tc));
  }
  if (excluded) *excluded = dropped;
  if (out.empty()) fail(Err::all_cases_excluded, "no cases left after confidence filter");
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Rejection-sampled bound keeps runs reproducible across standard
// libraries, unlike uniform_int_distribution.
std::size_t bounded(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % n);
}

}  // namespace

std::vector<TestCase> parse_cases(std::istream& in) {
  std::vector<TestCase> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string> fields;
    std::size_t begin = 0;
    while (true) {
      const std::size_t tab = line.find('\t', begin);
      fields.push_back(line.substr(begin, tab == std::string::npos ? std::string::npos
                                                                   : tab - begin));
      if (tab == std::string::npos) break;
      begin = tab + 1;
    }
    if (fields.size() != 5) {
      fail(Err::parse_error,
           "cases line " + std::to_string(lineno) + ": expected 5 tab-separated fields, got " +
               std::to_string(fields.size()));
    }

    TestCase tc;
    tc.judge = fields[0];
    try {
      std::size_t used = 0;
      tc.confidence = std::stoi(fields[1], &used);
      if (used != fields[1].size()) throw std::invalid_argument(fields[1]);
    } catch (const std::exception&) {
      fail(Err::parse_error,
           "cases line " + std::to_string(lineno) + ": bad confidence '" + fields[1] + "'");
    }
    if (tc.confidence < 0 || tc.confidence > 4) {
      fail(Err::parse_error,
           "cases line " + std::to_string(lineno) + ": confidence out of range 0..4");
    }
    tc.target = fields[2];
    tc.gold = SynsetId{fields[3]};
    std::istringstream words(fields[4]);
    std::string w;
    while (std::getline(words, w, ',')) {
      if (!w.empty()) tc.group_words.push_back(w);
    }
    if (tc.target.empty() || tc.gold.value.empty() || tc.group_words.empty()) {
      fail(Err::parse_error, "cases line " + std::to_string(lineno) + ": empty field");
    }
    out.push_back(std::move(tc));
  }
  return out;
}

EvalReport score(const Taxonomy& t, const IcTable& ic, const std::vector<TestCase>& cases,
                 const DisambigOptions& options) {
  EvalReport report;
  const std::vector<Prepared> kept = retained(t, cases, &report.excluded_low_confidence);
  for (const Prepared& p : kept) {
    const PhiAssignment pa = disambiguate(t, ic, p.group, options);
    // Prediction is always over the target's direct senses; with
    // extend_ancestors the assignment also carries ancestor concepts.
    const WordPhi* wp = pa.find(p.target);
    const SenseScore* best = nullptr;
    for (const SenseScore& s : wp->senses) {
      if (!std::binary_search(p.senses.begin(), p.senses.end(), s.sense)) continue;
      if (!best || s.phi > best->phi) best = &s;  // ties keep the smaller id
    }
    if (best->sense == p.tc->gold) ++report.n_correct;
  }
  report.n_considered = kept.size();
  report.accuracy =
      static_cast<double>(report.n_correct) / static_cast<double>(report.n_considered);
  return report;
}

std::pair<double, double> random_baseline(const Taxonomy& t,
                                          const std::vector<TestCase>& cases, int runs,
                                          std::uint64_t seed, bool sample_stddev) {
  if (runs < 1) fail(Err::parse_error, "random baseline needs at least one run");
  const std::vector<Prepared> kept = retained(t, cases, nullptr);

  std::vector<double> accs(static_cast<std::size_t>(runs));
  for (int run = 0; run < runs; ++run) {
    std::mt19937_64 rng(splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * (run + 1))));
    std::size_t correct = 0;
    for (const Prepared& p : kept) {
      const SynsetId& choice = p.senses[bounded(rng, p.senses.size())];
      if (choice == p.tc->gold) ++correct;
    }
    accs[run] = static_cast<double>(correct) / static_cast<double>(kept.size());
  }

  double mean = 0.0;
  for (double a : accs) mean += a;
  mean /= static_cast<double>(runs);
  double var = 0.0;
  for (double a : accs) var += (a - mean) * (a - mean);
  if (sample_stddev && runs > 1) {
    var /= static_cast<double>(runs - 1);
  } else {
    var /= static_cast<double>(runs);
  }
  return {mean, std::sqrt(var)};
}

std::vector<JudgeAgreement> judge_agreement(const std::vector<TestCase>& cases) {
  // Case identity: target plus group words as given.
  auto key_of = [](const TestCase& tc) {
    std::string key = tc.target;
    for (const std::string& w : tc.group_words) {
      key.push_back('\x1f');
      key += w;
    }
    return key;
  };

  std::map<std::string, std::map<std::string, const TestCase*>> by_key;  // key -> judge
  std::vector<std::string> judges;
  for (const TestCase& tc : cases) {
    by_key[key_of(tc)].emplace(tc.judge, &tc);  // first record per judge wins
    if (std::find(judges.begin(), judges.end(), tc.judge) == judges.end()) {
      judges.push_back(tc.judge);
    }
  }
  std::sort(judges.begin(), judges.end());

  std::vector<JudgeAgreement> out;
  for (const std::string& a : judges) {
    for (const std::string& b : judges) {
      if (a == b) continue;
      JudgeAgreement ja{a, b, 0, 0};
      for (const auto& [key, per_judge] : by_key) {
        const auto ita = per_judge.find(a);
        const auto itb = per_judge.find(b);
        if (ita == per_judge.end() || itb == per_judge.end()) continue;
        if (ita->second->confidence < kMinConfidence) continue;
        ++ja.n_shared;
        if (ita->second->gold == itb->second->gold) ++ja.n_agree;
      }
      if (ja.n_shared > 0) out.push_back(ja);
    }
  }
  return out;
}

}  // namespace wsd
