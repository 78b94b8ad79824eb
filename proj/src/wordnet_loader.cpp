#include "wsd/wordnet_loader.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "wsd/error.hpp"

namespace wsd {

namespace {

[[noreturn]] void parse_fail(const char* file, std::size_t lineno, const std::string& why) {
  fail(Err::parse_error, std::string(file) + " line " + std::to_string(lineno) + ": " + why);
}

std::string lower_ascii(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool header_line(const std::string& line) { return line.rfind("  ", 0) == 0; }

int hex_value(const std::string& s) {
  std::size_t used = 0;
  const int v = std::stoi(s, &used, 16);
  if (used != s.size() || v < 0) throw std::invalid_argument(s);
  return v;
}

int dec_value(const std::string& s) {
  std::size_t used = 0;
  const int v = std::stoi(s, &used, 10);
  if (used != s.size() || v < 0) throw std::invalid_argument(s);
  return v;
}

bool all_digits(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Whitespace-split tokens with their byte offsets (for GLOSS recovery).
std::vector<std::pair<std::string, std::size_t>> split_with_pos(const std::string& line) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t begin = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > begin) out.emplace_back(line.substr(begin, i - begin), begin);
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& s, const char* file,
                                      std::size_t lineno) {
  std::vector<std::string> out;
  std::size_t begin = 0;
  while (begin <= s.size()) {
    const std::size_t comma = s.find(',', begin);
    const std::string item =
        s.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin);
    if (item.empty()) parse_fail(file, lineno, "empty item in comma list '" + s + "'");
    out.push_back(item);
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  return out;
}

}  // namespace

Taxonomy load_wordnet(std::istream& data_noun, std::istream& index_noun,
                      WordNetLoadReport* report) {
  std::vector<Synset> synsets;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(data_noun, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || header_line(line)) continue;

    // synset_offset lex_filenum ss_type w_cnt (word lex_id)+ p_cnt ptr* [| gloss]
    std::string gloss;
    std::string head = line;
    if (const std::size_t bar = line.find('|'); bar != std::string::npos) {
      head = line.substr(0, bar);
      gloss = line.substr(bar + 1);
      while (!gloss.empty() && std::isspace(static_cast<unsigned char>(gloss.front()))) {
        gloss.erase(gloss.begin());
      }
      while (!gloss.empty() && std::isspace(static_cast<unsigned char>(gloss.back()))) {
        gloss.pop_back();
      }
    }

    std::istringstream in(head);
    std::string offset, lex_filenum, ss_type, w_cnt_hex;
    if (!(in >> offset >> lex_filenum >> ss_type >> w_cnt_hex)) {
      parse_fail("data.noun", lineno, "truncated synset header");
    }
    if (!all_digits(offset)) {
      parse_fail("data.noun", lineno, "bad synset offset '" + offset + "'");
    }
    if (ss_type != "n") {
      fail(Err::wrong_part_of_speech, "data.noun line " + std::to_string(lineno) +
                                          ": synset type '" + ss_type + "' in noun file");
    }

    Synset s;
    s.id = SynsetId{offset};
    s.gloss = std::move(gloss);

    int w_cnt = 0;
    try {
      w_cnt = hex_value(w_cnt_hex);
    } catch (const std::exception&) {
      parse_fail("data.noun", lineno, "bad word count '" + w_cnt_hex + "'");
    }
    if (w_cnt == 0) parse_fail("data.noun", lineno, "synset with zero words");
    for (int i = 0; i < w_cnt; ++i) {
      std::string word, lex_id;
      if (!(in >> word >> lex_id)) parse_fail("data.noun", lineno, "truncated word list");
      try {
        hex_value(lex_id);
      } catch (const std::exception&) {
        parse_fail("data.noun", lineno, "bad lex_id '" + lex_id + "'");
      }
      s.words.push_back(lower_ascii(std::move(word)));
    }

    std::string p_cnt_str;
    if (!(in >> p_cnt_str)) parse_fail("data.noun", lineno, "missing pointer count");
    int p_cnt = 0;
    try {
      p_cnt = dec_value(p_cnt_str);
    } catch (const std::exception&) {
      parse_fail("data.noun", lineno, "bad pointer count '" + p_cnt_str + "'");
    }
    for (int i = 0; i < p_cnt; ++i) {
      std::string symbol, target, pos, source_target;
      if (!(in >> symbol >> target >> pos >> source_target)) {
        parse_fail("data.noun", lineno, "truncated pointer list");
      }
      if (symbol == "@" || symbol == "@i") {
        if (pos != "n") {
          parse_fail("data.noun", lineno, "hypernym pointer to non-noun '" + pos + "'");
        }
        if (!all_digits(target)) {
          parse_fail("data.noun", lineno, "bad pointer offset '" + target + "'");
        }
        s.parents.push_back(SynsetId{target});
      }
    }
    std::string extra;
    if (in >> extra) parse_fail("data.noun", lineno, "unexpected trailing field '" + extra + "'");

    synsets.push_back(std::move(s));
  }

  Taxonomy t = Taxonomy::build(std::move(synsets));

  // index.noun cross-check: every lemma/offset pair must resolve to a
  // synset that carries the lemma.
  lineno = 0;
  while (std::getline(index_noun, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || header_line(line)) continue;

    std::istringstream in(line);
    std::string lemma, pos, synset_cnt_str, p_cnt_str;
    if (!(in >> lemma >> pos >> synset_cnt_str >> p_cnt_str)) {
      parse_fail("index.noun", lineno, "truncated entry header");
    }
    if (pos != "n") {
      fail(Err::wrong_part_of_speech, "index.noun line " + std::to_string(lineno) +
                                          ": part of speech '" + pos + "' in noun index");
    }
    int synset_cnt = 0, p_cnt = 0;
    try {
      synset_cnt = dec_value(synset_cnt_str);
      p_cnt = dec_value(p_cnt_str);
    } catch (const std::exception&) {
      parse_fail("index.noun", lineno, "bad counts in entry header");
    }
    std::string skip;
    for (int i = 0; i < p_cnt; ++i) {
      if (!(in >> skip)) parse_fail("index.noun", lineno, "truncated pointer symbols");
    }
    std::string sense_cnt, tagsense_cnt;
    if (!(in >> sense_cnt >> tagsense_cnt)) {
      parse_fail("index.noun", lineno, "missing sense counts");
    }
    lemma = lower_ascii(std::move(lemma));
    for (int i = 0; i < synset_cnt; ++i) {
      std::string offset;
      if (!(in >> offset)) parse_fail("index.noun", lineno, "truncated offset list");
      if (!report) continue;
      const SynsetId id{offset};
      if (!t.contains(id)) {
        report->issues.push_back("index.noun line " + std::to_string(lineno) + ": lemma '" +
                                 lemma + "' names missing synset " + offset);
        continue;
      }
      const auto& words = t.at(id).words;
      if (!std::binary_search(words.begin(), words.end(), lemma)) {
        report->issues.push_back("index.noun line " + std::to_string(lineno) + ": synset " +
                                 offset + " does not contain lemma '" + lemma + "'");
      }
    }
  }

  return t;
}

Taxonomy load_synthetic(std::istream& in) {
  std::vector<Synset> synsets;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = split_with_pos(line);
    if (tokens.empty() || tokens.front().first.front() == '#') continue;
    if (tokens.front().first != "SYN") {
      parse_fail("synthetic taxonomy", lineno, "expected SYN, got '" + tokens.front().first + "'");
    }
    if (tokens.size() < 4 || tokens[2].first != "WORDS") {
      parse_fail("synthetic taxonomy", lineno, "expected 'SYN <id> WORDS <lemmas>'");
    }

    Synset s;
    s.id = SynsetId{tokens[1].first};
    s.words = split_commas(tokens[3].first, "synthetic taxonomy", lineno);
    for (std::string& w : s.words) w = lower_ascii(std::move(w));

    std::size_t next = 4;
    if (next >= tokens.size() || tokens[next].first != "PARENTS") {
      parse_fail("synthetic taxonomy", lineno, "expected PARENTS");
    }
    ++next;
    if (next < tokens.size() && tokens[next].first != "GLOSS") {
      for (std::string& p : split_commas(tokens[next].first, "synthetic taxonomy", lineno)) {
        s.parents.push_back(SynsetId{std::move(p)});
      }
      ++next;
    }
    if (next < tokens.size()) {
      if (tokens[next].first != "GLOSS") {
        parse_fail("synthetic taxonomy", lineno,
                   "unexpected token '" + tokens[next].first + "'");
      }
      const std::size_t gloss_begin = tokens[next].second + tokens[next].first.size();
      if (gloss_begin < line.size()) {
        std::string gloss = line.substr(gloss_begin);
        while (!gloss.empty() && std::isspace(static_cast<unsigned char>(gloss.front()))) {
          gloss.erase(gloss.begin());
        }
        s.gloss = std::move(gloss);
      }
      if (s.gloss.empty()) parse_fail("synthetic taxonomy", lineno, "GLOSS without text");
    }

    synsets.push_back(std::move(s));
  }
  return Taxonomy::build(std::move(synsets));
}

void save_synthetic(std::ostream& out, const Taxonomy& t) {
  const SynsetId& root = t.virtual_root();
  for (const SynsetId& id : t.ids()) {
    if (id == root) continue;
    const Synset& s = t.at(id);
    if (s.words.empty()) {
      fail(Err::io_error,
           "synset '" + id.value + "' has no words; not representable in the synthetic format");
    }
    out << "SYN " << id.value << " WORDS ";
    for (std::size_t i = 0; i < s.words.size(); ++i) {
      if (i) out << ',';
      out << s.words[i];
    }
    out << " PARENTS";
    bool first = true;
    for (const SynsetId& p : s.parents) {
      if (p == root) continue;  // synthesized edge, implied by empty list
      out << (first ? " " : ",") << p.value;
      first = false;
    }
    if (!s.gloss.empty()) out << " GLOSS " << s.gloss;
    out << '\n';
  }
}

}  // namespace wsd
