#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wsd/disambig.hpp"
#include "wsd/infocontent.hpp"
#include "wsd/taxonomy.hpp"

namespace wsd {

// One forced-choice judgment: the judge picked exactly one sense of
// `target` within `group_words`, with confidence 0 (none) .. 4 (high).
struct TestCase {
  std::string judge;
  int confidence = 0;
  std::string target;
  SynsetId gold;
  std::vector<std::string> group_words;
};

struct EvalReport {
  std::size_t n_considered = 0;
  std::size_t n_correct = 0;
  double accuracy = 0.0;
  double baseline_mean = 0.0;
  double baseline_stddev = 0.0;
  int baseline_runs = 0;
  std::size_t excluded_low_confidence = 0;
};

// Agreement of judge b with judge a over a's retained cases that b also
// judged; serves as the human upper bound for accuracy.
struct JudgeAgreement {
  std::string judge_a;
  std::string judge_b;
  std::size_t n_shared = 0;
  std::size_t n_agree = 0;
};

// `<judge>\t<confidence>\t<target>\t<gold-synset-id>\t<word1,word2,...>`
// records; `#` comments and blank lines are skipped.
std::vector<TestCase> parse_cases(std::istream& in);

// Low-confidence cases (0 or 1) are excluded. Each retained case runs the
// disambiguation algorithm on its group and predicts the argmax-phi sense
// of the target (smallest id on ties); exact match against gold.
EvalReport score(const Taxonomy& t, const IcTable& ic, const std::vector<TestCase>& cases,
                 const DisambigOptions& options = {});

// Uniformly random sense choice per retained case, `runs` times. Returns
// (mean, stddev) of per-run accuracy; population stddev unless
// sample_stddev. Deterministic for a given seed.
std::pair<double, double> random_baseline(const Taxonomy& t,
                                          const std::vector<TestCase>& cases, int runs,
                                          std::uint64_t seed, bool sample_stddev = false);

// Computed for every ordered judge pair sharing at least one retained case.
std::vector<JudgeAgreement> judge_agreement(const std::vector<TestCase>& cases);

}  // namespace wsd
