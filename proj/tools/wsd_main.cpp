// wsd: information-content similarity and noun-group sense disambiguation
// over an IS-A taxonomy (real WordNet 3.0 noun files or synthetic graphs).

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wsd/corpus.hpp"
#include "wsd/disambig.hpp"
#include "wsd/error.hpp"
#include "wsd/evalharness.hpp"
#include "wsd/infocontent.hpp"
#include "wsd/similarity.hpp"
#include "wsd/taxonomy.hpp"
#include "wsd/wordnet_loader.hpp"

namespace {

namespace fs = std::filesystem;

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) wsd::fail(wsd::Err::io_error, "cannot open '" + path + "'");
  return in;
}

wsd::Taxonomy load_taxonomy(const std::string& path) {
  if (fs::is_directory(path)) {
    auto data = open_input((fs::path(path) / "data.noun").string());
    auto index = open_input((fs::path(path) / "index.noun").string());
    wsd::WordNetLoadReport report;
    wsd::Taxonomy t = wsd::load_wordnet(data, index, &report);
    for (const std::string& issue : report.issues) std::cerr << "warning: " << issue << '\n';
    return t;
  }
  auto in = open_input(path);
  return wsd::load_synthetic(in);
}

wsd::LogBase parse_base(const std::string& s) {
  if (s == "e") return wsd::LogBase::natural;
  if (s == "2") return wsd::LogBase::base2;
  wsd::fail(wsd::Err::parse_error, "log base must be 'e' or '2', got '" + s + "'");
}

// Persisted tables carry their log base; an explicit flag must agree.
wsd::IcTable load_ic_checked(const std::string& path, const std::string& base_flag) {
  auto in = open_input(path);
  wsd::IcTable table = wsd::load_ic(in);
  if (!base_flag.empty() && parse_base(base_flag) != table.log_base) {
    wsd::fail(wsd::Err::log_base_mismatch,
              "ic table '" + path + "' was built with log base " +
                  (table.log_base == wsd::LogBase::natural ? "e" : "2") +
                  ", but --log-base " + base_flag + " was given");
  }
  return table;
}

std::vector<std::string> split_group_arg(const std::string& arg) {
  std::vector<std::string> out;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<std::string> read_group_file(const std::string& path) {
  auto in = open_input(path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

int cmd_build_ic(const std::string& taxonomy_path, const std::string& ic_path,
                 const std::string& base_flag, const std::string& mode_flag,
                 const std::vector<std::string>& corpus_paths,
                 const std::string& counts_path) {
  const wsd::Taxonomy t = load_taxonomy(taxonomy_path);
  const wsd::CountMode mode =
      mode_flag == "noun-list" ? wsd::CountMode::noun_list : wsd::CountMode::raw_text;

  wsd::LemmaCounts counts;
  wsd::SkippedTokens skipped;
  for (const std::string& path : corpus_paths) {
    auto in = open_input(path);
    wsd::LemmaCounts shard = wsd::count_stream(t, in, mode, &skipped);
    wsd::merge(counts, shard);
  }
  if (counts.total_n == 0) wsd::fail(wsd::Err::empty_corpus, "empty corpus: no nouns counted");

  if (mode == wsd::CountMode::noun_list) {
    for (const auto& [tok, c] : skipped.tokens) {
      std::cerr << "skipped: " << tok << " (" << c << ")\n";
    }
  }

  wsd::IcTable table{wsd::propagate(t, counts), parse_base(base_flag)};
  {
    std::ofstream out(ic_path);
    if (!out) wsd::fail(wsd::Err::io_error, "cannot write '" + ic_path + "'");
    wsd::save_ic(out, table);
  }
  if (!counts_path.empty()) {
    std::ofstream out(counts_path);
    if (!out) wsd::fail(wsd::Err::io_error, "cannot write '" + counts_path + "'");
    wsd::save_counts(out, counts);
  }

  std::cout << "N           " << counts.total_n << '\n';
  std::cout << "vocabulary  " << counts.counts.size() << '\n';
  std::cout << "skipped     " << skipped.total << '\n';
  return 0;
}

int cmd_sim(const std::string& taxonomy_path, const std::string& ic_path,
            const std::string& base_flag, const std::string& w1, const std::string& w2) {
  const wsd::Taxonomy t = load_taxonomy(taxonomy_path);
  const wsd::IcTable ic = load_ic_checked(ic_path, base_flag);

  std::vector<std::string> norm;
  for (const std::string& w : {w1, w2}) {
    auto lemma = wsd::normalize_token(t, w, wsd::CountMode::noun_list);
    if (!lemma) {
      std::cout << "word '" << w << "': Not in WordNet\n";
      return 0;
    }
    norm.push_back(*lemma);
  }

  const wsd::SimilarityResult r = wsd::similarity(t, ic, norm[0], norm[1]);
  std::cout << "similarity  " << fmt4(r.value) << '\n';
  std::cout << "mis         " << r.mis->value << '\n';
  std::cout << "lemmas      ";
  const auto& words = t.at(*r.mis).words;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) std::cout << ", ";
    std::cout << words[i];
  }
  if (words.empty()) std::cout << "(virtual root)";
  std::cout << '\n';
  std::cout << "tied        " << r.tied_mis.size() << '\n';
  return 0;
}

void print_word_block(const wsd::Taxonomy& t, const wsd::PhiAssignment& pa,
                      const std::string& display, const std::string& lemma) {
  const wsd::WordPhi* wp = pa.find(lemma);
  std::cout << "Word '" << display << "'  (" << wp->senses.size() << " alternatives)\n";
  for (const wsd::SenseScore& s : wp->senses) {
    std::cout << "    " << fmt4(s.phi) << "    ";
    const wsd::Synset& syn = t.at(s.sense);
    for (std::size_t i = 0; i < syn.words.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << syn.words[i];
    }
    if (!syn.gloss.empty()) std::cout << ": " << syn.gloss;
    std::cout << '\n';
  }
}

int cmd_disambig(const std::string& taxonomy_path, const std::string& ic_path,
                 const std::string& base_flag, const std::vector<std::string>& tokens,
                 bool credit_ties, bool extend_ancestors, bool annotate_mode) {
  const wsd::Taxonomy t = load_taxonomy(taxonomy_path);
  const wsd::IcTable ic = load_ic_checked(ic_path, base_flag);

  const wsd::WordGroup group = wsd::make_group(t, tokens);
  std::optional<wsd::PhiAssignment> pa;
  if (!group.words.empty()) {
    wsd::DisambigOptions options;
    options.credit_ties = credit_ties;
    options.extend_ancestors = extend_ancestors || annotate_mode;
    pa = wsd::disambiguate(t, ic, group, options);
  }

  if (annotate_mode) {
    std::vector<std::pair<std::string, wsd::SynsetId>> labels;
    if (pa) labels = wsd::annotate(t, *pa);
    std::map<std::string, const wsd::SynsetId*> by_word;
    for (const auto& [word, id] : labels) by_word[word] = &id;

    std::set<std::string> printed;
    for (const std::string& tok : tokens) {
      auto lemma = wsd::normalize_token(t, tok, wsd::CountMode::noun_list);
      if (!lemma) {
        std::cout << tok << " -> Not in WordNet\n";
        continue;
      }
      if (!printed.insert(*lemma).second) continue;
      const wsd::SynsetId* id = by_word.at(*lemma);
      std::cout << *lemma << " -> " << id->value << " (";
      const auto& words = t.at(*id).words;
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << words[i];
      }
      if (words.empty()) std::cout << "virtual root";
      std::cout << ")\n";
    }
    return 0;
  }

  std::set<std::string> printed;
  bool first = true;
  for (const std::string& tok : tokens) {
    auto lemma = wsd::normalize_token(t, tok, wsd::CountMode::noun_list);
    if (lemma && !printed.insert(*lemma).second) continue;
    if (!first) std::cout << '\n';
    first = false;
    if (!lemma) {
      std::cout << "Word '" << tok << "'\n    Not in WordNet\n";
      continue;
    }
    print_word_block(t, *pa, tok, *lemma);
  }
  return 0;
}

int cmd_eval(const std::string& taxonomy_path, const std::string& ic_path,
             const std::string& base_flag, const std::string& cases_path, int runs,
             std::uint64_t seed, bool sample_stddev, bool credit_ties,
             bool extend_ancestors) {
  const wsd::Taxonomy t = load_taxonomy(taxonomy_path);
  const wsd::IcTable ic = load_ic_checked(ic_path, base_flag);
  auto in = open_input(cases_path);
  const std::vector<wsd::TestCase> cases = wsd::parse_cases(in);

  wsd::DisambigOptions options;
  options.credit_ties = credit_ties;
  options.extend_ancestors = extend_ancestors;

  wsd::EvalReport report = wsd::score(t, ic, cases, options);
  const auto [mean, stddev] = wsd::random_baseline(t, cases, runs, seed, sample_stddev);
  report.baseline_mean = mean;
  report.baseline_stddev = stddev;
  report.baseline_runs = runs;

  std::cout << "considered        " << report.n_considered << '\n';
  std::cout << "correct           " << report.n_correct << '\n';
  std::cout << "accuracy          " << fmt4(report.accuracy) << '\n';
  std::cout << "excluded          " << report.excluded_low_confidence << '\n';
  std::cout << "baseline runs     " << report.baseline_runs << '\n';
  std::cout << "baseline mean     " << fmt4(report.baseline_mean) << '\n';
  std::cout << "baseline stddev   " << fmt4(report.baseline_stddev) << '\n';
  for (const wsd::JudgeAgreement& ja : wsd::judge_agreement(cases)) {
    std::cout << "agreement " << ja.judge_a << "->" << ja.judge_b << "   "
              << fmt4(static_cast<double>(ja.n_agree) / static_cast<double>(ja.n_shared))
              << " (" << ja.n_shared << " shared)\n";
  }
  std::cout << "#considered\t" << report.n_considered << '\n';
  std::cout << "#correct\t" << report.n_correct << '\n';
  std::cout << "#accuracy\t" << fmt6(report.accuracy) << '\n';
  std::cout << "#excluded_low_confidence\t" << report.excluded_low_confidence << '\n';
  std::cout << "#baseline_runs\t" << report.baseline_runs << '\n';
  std::cout << "#baseline_mean\t" << fmt6(report.baseline_mean) << '\n';
  std::cout << "#baseline_stddev\t" << fmt6(report.baseline_stddev) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information-content similarity and sense disambiguation for noun groups"};
  app.require_subcommand(1);

  std::string taxonomy_path, ic_path, log_base, mode = "raw-text";
  std::string group_arg, group_file, cases_path, counts_path;
  std::vector<std::string> corpus_paths;
  std::string word1, word2;
  bool credit_ties = false, extend_ancestors = false, sample_stddev = false;
  int runs = 10;
  std::uint64_t seed = 1;

  auto add_taxonomy = [&](CLI::App* sub) {
    sub->add_option("--taxonomy", taxonomy_path,
                    "synthetic taxonomy file or WordNet directory")
        ->required();
  };
  auto add_ic_in = [&](CLI::App* sub) {
    sub->add_option("--ic", ic_path, "ic table file")->required();
    sub->add_option("--log-base", log_base, "validate table log base (e|2)");
  };
  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", group_arg, "comma-separated noun group");
    sub->add_option("--group-file", group_file, "noun group file, one word per line");
  };

  CLI::App* build = app.add_subcommand("build-ic", "count a corpus and write the ic table");
  add_taxonomy(build);
  build->add_option("--ic", ic_path, "output ic table file")->required();
  build->add_option("--log-base", log_base, "log base for the table (e|2)")
      ->default_val("e");
  build->add_option("--mode", mode, "corpus interpretation: raw-text|noun-list")
      ->check(CLI::IsMember({"raw-text", "noun-list"}));
  build->add_option("--counts", counts_path, "also write per-lemma counts here");
  build->add_option("corpus", corpus_paths, "corpus file(s)")->required();

  CLI::App* sim = app.add_subcommand("sim", "similarity of two words");
  add_taxonomy(sim);
  add_ic_in(sim);
  sim->add_option("word1", word1)->required();
  sim->add_option("word2", word2)->required();

  CLI::App* dis = app.add_subcommand("disambig", "per-sense phi for a noun group");
  add_taxonomy(dis);
  add_ic_in(dis);
  add_group(dis);
  dis->add_flag("--credit-ties", credit_ties, "credit all tied subsumers");
  dis->add_flag("--extend-ancestors", extend_ancestors, "score ancestor concepts too");

  CLI::App* ann = app.add_subcommand("annotate", "highest-level concept per word");
  add_taxonomy(ann);
  add_ic_in(ann);
  add_group(ann);
  ann->add_flag("--credit-ties", credit_ties, "credit all tied subsumers");

  CLI::App* ev = app.add_subcommand("eval", "score gold-labeled cases");
  add_taxonomy(ev);
  add_ic_in(ev);
  ev->add_option("--cases", cases_path, "test case file")->required();
  ev->add_option("--runs", runs, "random baseline runs");
  ev->add_option("--seed", seed, "random baseline seed");
  ev->add_flag("--sample-stddev", sample_stddev, "sample instead of population stddev");
  ev->add_flag("--credit-ties", credit_ties, "credit all tied subsumers");
  ev->add_flag("--extend-ancestors", extend_ancestors, "score ancestor concepts too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (build->parsed()) {
      return cmd_build_ic(taxonomy_path, ic_path, log_base, mode, corpus_paths, counts_path);
    }
    if (sim->parsed()) {
      return cmd_sim(taxonomy_path, ic_path, log_base, word1, word2);
    }
    if (dis->parsed() || ann->parsed()) {
      std::vector<std::string> tokens;
      if (!group_arg.empty()) tokens = split_group_arg(group_arg);
      if (!group_file.empty()) {
        for (std::string& w : read_group_file(group_file)) tokens.push_back(std::move(w));
      }
      if (tokens.empty()) {
        std::cerr << "error: no group given (use --group or --group-file)\n";
        return 1;
      }
      return cmd_disambig(taxonomy_path, ic_path, log_base, tokens, credit_ties,
                          extend_ancestors, ann->parsed());
    }
    if (ev->parsed()) {
      return cmd_eval(taxonomy_path, ic_path, log_base, cases_path, runs, seed,
                      sample_stddev, credit_ties, extend_ancestors);
    }
  } catch (const wsd::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
