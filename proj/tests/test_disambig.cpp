#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "support/helpers.hpp"
#include "support/oracle.hpp"
#include "support/random_case.hpp"
#include "wsd/disambig.hpp"
#include "wsd/error.hpp"

using testsupport::make_ic;
using testsupport::syn;
using wsd::DisambigOptions;
using wsd::Err;
using wsd::Error;
using wsd::PhiAssignment;
using wsd::SynsetId;
using wsd::Taxonomy;
using wsd::WordGroup;

namespace {

constexpr double kVDoctorNurse = 0.916290731874155;    // -ln(2/5) at health_prof
constexpr double kVDoctorTeacher = 0.5108256237659907; // -ln(3/5) at person
constexpr double kPhiDoctorS2 = 0.3579425193658126;

double phi_of(const PhiAssignment& pa, const std::string& word, const std::string& sense) {
  const wsd::WordPhi* wp = pa.find(word);
  REQUIRE(wp != nullptr);
  for (const wsd::SenseScore& s : wp->senses) {
    if (s.sense.value == sense) return s.phi;
  }
  FAIL("sense " << sense << " not present for " << word);
  return -1.0;
}

}  // namespace

TEST_CASE("make_group normalizes, deduplicates, and reports unknown words") {
  Taxonomy t = testsupport::load_fixture_taxonomy("fixture5.tax");
  const WordGroup g = wsd::make_group(
      t, {"Doctors", "nurse", "doctor", "qwzx", "teacher", "QWZX", " nurse "});
  const std::vector<std::string> expected = {"doctor", "nurse", "teacher"};
  CHECK(g.words == expected);
  REQUIRE(g.skipped.size() == 1);
  CHECK(g.skipped[0] == "qwzx");
}

TEST_CASE("hand-executed pairwise credit on the five-token fixture") {
  Taxonomy t = testsupport::load_fixture_taxonomy("fixture5.tax");
  const auto ic = make_ic(t, testsupport::fixture5_counts());
  const WordGroup g = wsd::make_group(t, {"doctor", "nurse", "teacher"});
  const PhiAssignment pa = wsd::disambiguate(t, ic, g);

  // pair log: v and MIS per pair
  REQUIRE(pa.pair_log.size() == 3);
  CHECK(pa.pair_log[0].v == doctest::Approx(kVDoctorNurse).epsilon(1e-12));
  CHECK(pa.pair_log[0].c.value == "p01");  // health professional
  CHECK(pa.pair_log[1].v == doctest::Approx(kVDoctorTeacher).epsilon(1e-12));
  CHECK(pa.pair_log[1].c.value == "p00");  // person
  CHECK(pa.pair_log[2].v == doctest::Approx(kVDoctorTeacher).epsilon(1e-12));
  CHECK(pa.pair_log[2].c.value == "p00");

  CHECK(phi_of(pa, "doctor", "p10") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(phi_of(pa, "doctor", "p11") == doctest::Approx(kPhiDoctorS2).epsilon(1e-9));
  CHECK(phi_of(pa, "nurse", "p12") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(phi_of(pa, "nurse", "p13") == doctest::Approx(kPhiDoctorS2).epsilon(1e-9));
  CHECK(phi_of(pa, "teacher", "p14") == doctest::Approx(1.0).epsilon(1e-12));

  const wsd::WordPhi* doctor = pa.find("doctor");
  CHECK(doctor->normalization ==
        doctest::Approx(kVDoctorNurse + kVDoctorTeacher).epsilon(1e-12));
}

TEST_CASE("a single-word group falls back to uniform phi") {
  Taxonomy t = testsupport::load_fixture_taxonomy("fixture5.tax");
  const auto ic = make_ic(t, testsupport::fixture5_counts());
  const PhiAssignment pa = wsd::disambiguate(t, ic, wsd::make_group(t, {"doctor"}));
  CHECK(pa.pair_log.empty());
  CHECK(phi_of(pa, "doctor", "p10") == 0.5);
  CHECK(phi_of(pa, "doctor", "p11") == 0.5);
  CHECK(pa.find("doctor")->normalization == 0.0);
}

TEST_CASE("a group whose words share only the root stays uniform") {
  Taxonomy t = testsupport::load_fixture_taxonomy("fixture5.tax");
  const auto ic = make_ic(t, testsupport::fixture5_counts());
  const PhiAssignment pa = wsd::disambiguate(t, ic, wsd::make_group(t, {"doctor", "dog"}));
  REQUIRE(pa.pair_log.size() == 1);
  CHECK(pa.pair_log[0].v == 0.0);
  CHECK(phi_of(pa, "doctor", "p10") == 0.5);
  CHECK(phi_of(pa, "doctor", "p11") == 0.5);
  CHECK(phi_of(pa, "dog", "p21") == 1.0);
}

TEST_CASE("zero-similarity pairs leave phi defined for partially related groups") {
  Taxonomy t = testsupport::load_fixture_taxonomy("fixture5.tax");
  const auto ic = make_ic(t, testsupport::fixture5_counts());
  const PhiAssignment pa =
      wsd::disambiguate(t, ic, wsd::make_group(t, {"doctor", "nurse", "dog"}));
  // dog contributes v = 0 pairs; doctor/nurse still credit health_prof
  CHECK(phi_of(pa, "doctor", "p10") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(phi_of(pa, "doctor", "p11") == 0.0);
  CHECK(phi_of(pa, "dog", "p21") == 1.0);  // fallback: its normalization is 0
}

TEST_CASE("support is a sum of log probabilities of the crediting subsumers") {
  Taxonomy t = testsupport::load_fixture_taxonomy("fixture5.tax");
  const auto ic = make_ic(t, testsupport::fixture5_counts());
  const PhiAssignment pa =
      wsd::disambiguate(t, ic, wsd::make_group(t, {"doctor", "nurse", "teacher"}));
  // doctor#1 was credited by health_prof (Pr 2/5) and person (Pr 3/5)
  const wsd::WordPhi* doctor = pa.find("doctor");
  double support = 0.0;
  for (const auto& s : doctor->senses) {
    if (s.sense.value == "p10") support = s.support;
  }
  CHECK(std::exp(-support) == doctest::Approx((2.0 / 5.0) * (3.0 / 5.0)).epsilon(1e-12));
}

TEST_CASE("pairwise credit conservation") {
  for (std::uint64_t seed = 900; seed < 930; ++seed) {
    const auto rc = testsupport::make_random_case(seed);
    const Taxonomy t = Taxonomy::build(rc.synsets);
    const auto ic = make_ic(t, rc.counts);
    const WordGroup g{rc.group, {}};
    const PhiAssignment pa = wsd::disambiguate(t, ic, g);

    // normalization[i] equals the sum of v over pairs containing i
    std::vector<double> norm(g.words.size(), 0.0);
    for (const wsd::PairEvidence& pe : pa.pair_log) {
      norm[pe.i] += pe.v;
      norm[pe.j] += pe.v;
    }
    for (std::size_t i = 0; i < g.words.size(); ++i) {
      CHECK(pa.words[i].normalization == doctest::Approx(norm[i]).epsilon(1e-12));
    }

    // each sense's support never exceeds its word's normalization
    for (const wsd::WordPhi& wp : pa.words) {
      for (const wsd::SenseScore& s : wp.senses) {
        CHECK(s.support <= wp.normalization + 1e-12);
        CHECK(s.phi >= 0.0);
        CHECK(s.phi <= 1.0);
      }
    }
  }
}

TEST_CASE("word order does not change phi") {
  Taxonomy t = testsupport::load_fixture_taxonomy("fixture5.tax");
  const auto ic = make_ic(t, testsupport::fixture5_counts());
  const std::vector<std::vector<std::string>> orders = {
      {"doctor", "nurse", "teacher"},
      {"teacher", "doctor", "nurse"},
      {"nurse", "teacher", "doctor"},
  };
  const PhiAssignment base = wsd::disambiguate(t, ic, wsd::make_group(t, orders[0]));
  for (const auto& order : orders) {
    const PhiAssignment pa = wsd::disambiguate(t, ic, wsd::make_group(t, order));
    for (const wsd::WordPhi& wp : base.words) {
      const wsd::WordPhi* other = pa.find(wp.word);
      REQUIRE(other != nullptr);
      REQUIRE(other->senses.size() == wp.senses.size());
      for (std::size_t k = 0; k < wp.senses.size(); ++k) {
        CHECK(other->senses[k].sense == wp.senses[k].sense);
        CHECK(other->senses[k].phi == doctest::Approx(wp.senses[k].phi).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("monosemous words supported by every pair get phi 1") {
  for (std::uint64_t seed = 1000; seed < 1020; ++seed) {
    const auto rc = testsupport::make_random_case(seed);
    const Taxonomy t = Taxonomy::build(rc.synsets);
    const auto ic = make_ic(t, rc.counts);
    const PhiAssignment pa = wsd::disambiguate(t, ic, WordGroup{rc.group, {}});
    for (const wsd::WordPhi& wp : pa.words) {
      if (wp.senses.size() != 1 || wp.normalization == 0.0) continue;
      // the MIS of any pair subsumes some sense; with one sense it is that one
      CHECK(wp.senses[0].phi == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("whenever normalization is positive some sense has support") {
  for (std::uint64_t seed = 1100; seed < 1130; ++seed) {
    const auto rc = testsupport::make_random_case(seed);
    const Taxonomy t = Taxonomy::build(rc.synsets);
    const auto ic = make_ic(t, rc.counts);
    const PhiAssignment pa = wsd::disambiguate(t, ic, WordGroup{rc.group, {}});
    for (const wsd::WordPhi& wp : pa.words) {
      if (wp.normalization == 0.0) continue;
      double max_phi = 0.0;
      for (const auto& s : wp.senses) max_phi = std::max(max_phi, s.phi);
      CHECK(max_phi > 0.0);
    }
  }
}

TEST_CASE("ancestor extension scores higher-level concepts too") {
  Taxonomy t = testsupport::load_fixture_taxonomy("fixture5.tax");
  const auto ic = make_ic(t, testsupport::fixture5_counts());
  DisambigOptions opt;
  opt.extend_ancestors = true;
  const PhiAssignment pa =
      wsd::disambiguate(t, ic, wsd::make_group(t, {"doctor", "nurse", "teacher"}), opt);

  CHECK(phi_of(pa, "doctor", "p10") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(phi_of(pa, "doctor", "p01") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(phi_of(pa, "doctor", "p00") == doctest::Approx(kPhiDoctorS2).epsilon(1e-9));
  CHECK(phi_of(pa, "doctor", "p11") == doctest::Approx(kPhiDoctorS2).epsilon(1e-9));
  CHECK(phi_of(pa, "doctor", "p02") == doctest::Approx(kPhiDoctorS2).epsilon(1e-9));
  CHECK(phi_of(pa, "doctor", Taxonomy::reserved_root_id().value) == 0.0);

  // every scored concept is an ancestor-or-self of some direct sense
  for (const wsd::WordPhi& wp : pa.words) {
    for (const wsd::SenseScore& s : wp.senses) {
      bool covers = false;
      for (const SynsetId& direct : t.senses(wp.word)) {
        if (t.is_ancestor(s.sense, direct)) covers = true;
      }
      CHECK(covers);
    }
  }
}

TEST_CASE("annotation picks the highest level concept tied with the best sense") {
  Taxonomy t = testsupport::load_fixture_taxonomy("fixture5.tax");
  const auto ic = make_ic(t, testsupport::fixture5_counts());
  DisambigOptions opt;
  opt.extend_ancestors = true;
  const PhiAssignment pa =
      wsd::disambiguate(t, ic, wsd::make_group(t, {"doctor", "nurse", "teacher"}), opt);
  const auto labels = wsd::annotate(t, pa);

  REQUIRE(labels.size() == 3);
  CHECK(labels[0].first == "doctor");
  CHECK(labels[0].second.value == "p01");  // health professional
  CHECK(labels[1].first == "nurse");
  CHECK(labels[1].second.value == "p01");
  CHECK(labels[2].first == "teacher");
  CHECK(labels[2].second.value == "p00");  // person scores 1.0 for teacher
}

TEST_CASE("annotation never drops below the sense itself") {
  // Both words live in the same synset; the MIS is that synset, so no
  // strictly higher concept reaches the best phi.
  Taxonomy t = Taxonomy::build({
      syn("m", {"x", "y"}),
      syn("other", {"z"}),
  });
  const auto ic = make_ic(t, testsupport::counts_of({{"x", 1}, {"y", 1}, {"z", 1}}));
  DisambigOptions opt;
  opt.extend_ancestors = true;
  const PhiAssignment pa = wsd::disambiguate(t, ic, wsd::make_group(t, {"x", "y"}), opt);
  const auto labels = wsd::annotate(t, pa);
  CHECK(labels[0].second.value == "m");
  CHECK(labels[1].second.value == "m");
}

TEST_CASE("random taxonomies: annotation obeys its selection rule") {
  for (std::uint64_t seed = 1300; seed < 1340; ++seed) {
    const auto rc = testsupport::make_random_case(seed);
    const Taxonomy t = Taxonomy::build(rc.synsets);
    const auto ic = make_ic(t, rc.counts);
    DisambigOptions opt;
    opt.extend_ancestors = true;
    const PhiAssignment pa = wsd::disambiguate(t, ic, WordGroup{rc.group, {}}, opt);
    const auto labels = wsd::annotate(t, pa);
    REQUIRE(labels.size() == pa.words.size());

    for (std::size_t i = 0; i < labels.size(); ++i) {
      const wsd::WordPhi& wp = pa.words[i];
      const SynsetId& label = labels[i].second;

      const auto& direct = t.senses(wp.word);
      double best_direct = 0.0;
      for (const auto& s : wp.senses) {
        if (std::binary_search(direct.begin(), direct.end(), s.sense)) {
          best_direct = std::max(best_direct, s.phi);
        }
      }

      double label_phi = -1.0;
      for (const auto& s : wp.senses) {
        if (s.sense == label) label_phi = s.phi;
      }
      REQUIRE(label_phi >= 0.0);  // label is a scored concept
      CHECK(label_phi >= best_direct);

      bool covers_direct = false;
      for (const SynsetId& d : direct) {
        if (t.is_ancestor(label, d)) covers_direct = true;
      }
      CHECK(covers_direct);

      // no candidate sits strictly higher, and ties follow phi then id
      for (const auto& s : wp.senses) {
        if (s.phi < best_direct) continue;
        CHECK(t.depth(s.sense) >= t.depth(label));
        if (t.depth(s.sense) == t.depth(label)) {
          CHECK(s.phi <= label_phi);
          if (s.phi == label_phi) CHECK(!(s.sense < label));
        }
      }
    }
  }
}

TEST_CASE("annotation requires the ancestor extension") {
  Taxonomy t = testsupport::load_fixture_taxonomy("fixture5.tax");
  const auto ic = make_ic(t, testsupport::fixture5_counts());
  const PhiAssignment pa =
      wsd::disambiguate(t, ic, wsd::make_group(t, {"doctor", "nurse"}));
  try {
    wsd::annotate(t, pa);
    FAIL("expected requires_ancestor_extension");
  } catch (const Error& e) {
    CHECK(e.code() == Err::requires_ancestor_extension);
  }
}

TEST_CASE("top_senses ranks by phi then id") {
  Taxonomy t = testsupport::load_fixture_taxonomy("fixture5.tax");
  const auto ic = make_ic(t, testsupport::fixture5_counts());
  const PhiAssignment pa =
      wsd::disambiguate(t, ic, wsd::make_group(t, {"doctor", "nurse", "teacher"}));

  const auto top1 = wsd::top_senses(pa, "doctor", 1);
  REQUIRE(top1.size() == 1);
  CHECK(top1[0].first.value == "p10");
  CHECK(top1[0].second == doctest::Approx(1.0).epsilon(1e-12));

  const auto all = wsd::top_senses(pa, "doctor", 2);
  REQUIRE(all.size() == 2);
  CHECK(all[1].first.value == "p11");

  CHECK(wsd::top_senses(pa, "doctor", 0).empty());
  CHECK(wsd::top_senses(pa, "doctor", 99).size() == 2);

  try {
    wsd::top_senses(pa, "dog", 1);
    FAIL("expected unknown_lemma");
  } catch (const Error& e) {
    CHECK(e.code() == Err::unknown_lemma);
  }
}

TEST_CASE("empty groups and empty corpora are rejected") {
  Taxonomy t = testsupport::load_fixture_taxonomy("fixture5.tax");
  const auto ic = make_ic(t, testsupport::fixture5_counts());
  try {
    wsd::disambiguate(t, ic, WordGroup{});
    FAIL("expected empty_group");
  } catch (const Error& e) {
    CHECK(e.code() == Err::empty_group);
  }
  wsd::IcTable empty;
  try {
    wsd::disambiguate(t, empty, wsd::make_group(t, {"doctor", "nurse"}));
    FAIL("expected empty_corpus");
  } catch (const Error& e) {
    CHECK(e.code() == Err::empty_corpus);
  }
}

TEST_CASE("agrees with the literal transcription oracle") {
  for (std::uint64_t seed = 1200; seed < 1260; ++seed) {
    const auto rc = testsupport::make_random_case(seed);
    const Taxonomy t = Taxonomy::build(rc.synsets);
    const auto ic = make_ic(t, rc.counts);
    const auto g = oracle::Graph::from_synsets(rc.synsets);

    for (const bool extend : {false, true}) {
      for (const bool ties : {false, true}) {
        DisambigOptions opt;
        opt.extend_ancestors = extend;
        opt.credit_ties = ties;
        const PhiAssignment pa = wsd::disambiguate(t, ic, WordGroup{rc.group, {}}, opt);
        const auto expected =
            oracle::fig1(g, rc.counts, rc.group, wsd::LogBase::natural, ties, extend);

        for (const wsd::WordPhi& wp : pa.words) {
          const auto& exp_senses = expected.at(wp.word);
          REQUIRE(wp.senses.size() == exp_senses.size());
          for (std::size_t k = 0; k < wp.senses.size(); ++k) {
            CHECK(wp.senses[k].sense.value == exp_senses[k].first);
            CHECK(wp.senses[k].phi ==
                  doctest::Approx(exp_senses[k].second).epsilon(1e-9));
          }
        }
      }
    }
  }
}

TEST_CASE("large groups cross the parallel threshold and match the oracle exactly") {
  // 40-concept chain with 30 words spread over it: 435 pairs.
  std::vector<wsd::Synset> synsets;
  for (int k = 0; k < 40; ++k) {
    char id[8], pid[8];
    std::snprintf(id, sizeof(id), "c%02d", k);
    std::snprintf(pid, sizeof(pid), "c%02d", k - 1);
    wsd::Synset s;
    s.id = SynsetId{id};
    if (k > 0) s.parents.push_back(SynsetId{pid});
    synsets.push_back(std::move(s));
  }
  wsd::LemmaCounts counts;
  std::vector<std::string> group;
  for (int w = 0; w < 30; ++w) {
    const std::string word = "w" + std::to_string(w);
    synsets[(w * 7) % 40].words.push_back(word);
    synsets[(w * 11 + 3) % 40].words.push_back(word);
    counts.counts[word] = 1 + (w % 5);
    counts.total_n += 1 + (w % 5);
    group.push_back(word);
  }

  const Taxonomy t = Taxonomy::build(synsets);
  const auto ic = make_ic(t, counts);
  const PhiAssignment a = wsd::disambiguate(t, ic, WordGroup{group, {}});
  const PhiAssignment b = wsd::disambiguate(t, ic, WordGroup{group, {}});

  const auto g = oracle::Graph::from_synsets(synsets);
  const auto expected = oracle::fig1(g, counts, group, wsd::LogBase::natural, false, false);

  for (std::size_t i = 0; i < a.words.size(); ++i) {
    REQUIRE(a.words[i].senses.size() == b.words[i].senses.size());
    const auto& exp_senses = expected.at(a.words[i].word);
    for (std::size_t k = 0; k < a.words[i].senses.size(); ++k) {
      // schedule independence: repeat runs and the sequential reference
      // are bitwise identical
      CHECK(a.words[i].senses[k].phi == b.words[i].senses[k].phi);
      CHECK(a.words[i].senses[k].phi == exp_senses[k].second);
    }
  }
}

TEST_CASE("gold groupings validate against the taxonomy") {
  Taxonomy t = testsupport::load_fixture_taxonomy("fixture5.tax");
  wsd::GoldGrouping ok;
  ok.members["doctor"] = {SynsetId{"p10"}, SynsetId{"p11"}};
  CHECK_NOTHROW(wsd::validate_gold(t, ok));

  wsd::GoldGrouping bad;
  bad.members["doctor"] = {SynsetId{"p12"}};  // a nurse sense
  try {
    wsd::validate_gold(t, bad);
    FAIL("expected invalid_gold");
  } catch (const Error& e) {
    CHECK(e.code() == Err::invalid_gold);
  }
}
