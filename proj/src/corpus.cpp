#include "wsd/corpus.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "wsd/error.hpp"

namespace wsd {

bool parse_u64(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  const char* end = s.data() + s.size();
  const auto [p, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && p == end;
}

std::string lower_ascii_copy(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

namespace {

bool is_lemma(const Taxonomy& t, const std::string& s) { return !t.senses(s).empty(); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string singularize(const Taxonomy& t, const std::string& token) {
  if (token.empty() || is_lemma(t, token)) return token;

  static const std::map<std::string, std::string> irregular = {
      {"men", "man"},     {"children", "child"}, {"feet", "foot"},
      {"teeth", "tooth"}, {"people", "person"},
  };
  if (auto it = irregular.find(token); it != irregular.end() && is_lemma(t, it->second)) {
    return it->second;
  }

  if (token.size() > 3 && token.ends_with("ies")) {
    std::string c = token.substr(0, token.size() - 3) + "y";
    if (is_lemma(t, c)) return c;
  }
  static constexpr std::array<std::string_view, 5> es_suffixes = {"ses", "xes", "zes",
                                                                  "ches", "shes"};
  for (std::string_view suffix : es_suffixes) {
    if (token.size() > suffix.size() && token.ends_with(suffix)) {
      std::string c = token.substr(0, token.size() - 2);  // strip "es"
      if (is_lemma(t, c)) return c;
    }
  }
  if (token.size() > 1 && token.ends_with('s')) {
    std::string c = token.substr(0, token.size() - 1);
    if (is_lemma(t, c)) return c;
  }
  return token;
}

std::optional<std::string> normalize_token(const Taxonomy& t, std::string_view raw,
                                           CountMode mode) {
  std::string s = lower_ascii_copy(trim(raw));
  if (s.empty()) return std::nullopt;
  if (mode == CountMode::noun_list) {
    // Collocations may be written with spaces; lemmas use underscores.
    std::string joined;
    bool in_gap = false;
    for (char c : s) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        in_gap = true;
        continue;
      }
      if (in_gap && !joined.empty()) joined.push_back('_');
      in_gap = false;
      joined.push_back(c);
    }
    s = std::move(joined);
  }
  const std::string folded = singularize(t, s);
  if (is_lemma(t, folded)) return folded;
  return std::nullopt;
}

LemmaCounts count_tokens(const Taxonomy& t, const std::vector<std::string>& tokens,
                         CountMode mode, SkippedTokens* skipped) {
  LemmaCounts out;
  for (const std::string& tok : tokens) {
    if (trim(tok).empty()) continue;
    if (auto lemma = normalize_token(t, tok, mode)) {
      ++out.counts[*lemma];
      ++out.total_n;
    } else if (skipped) {
      ++skipped->tokens[lower_ascii_copy(trim(tok))];
      ++skipped->total;
    }
  }
  return out;
}

std::vector<std::string> tokenize_text(std::string_view text) {
  auto is_word_char = [](unsigned char c) {
    return std::isalpha(c) || c == '\'' || c == '-' || c >= 0x80;
  };
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && !is_word_char(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t begin = i;
    while (i < text.size() && is_word_char(static_cast<unsigned char>(text[i]))) ++i;
    if (begin == i) continue;
    std::string_view tok = text.substr(begin, i - begin);
    while (!tok.empty() && (tok.front() == '\'' || tok.front() == '-')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == '\'' || tok.back() == '-')) tok.remove_suffix(1);
    if (!tok.empty()) out.emplace_back(tok);
  }
  return out;
}

LemmaCounts count_stream(const Taxonomy& t, std::istream& in, CountMode mode,
                         SkippedTokens* skipped) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (mode == CountMode::raw_text) {
      for (std::string& tok : tokenize_text(line)) tokens.push_back(std::move(tok));
    } else {
      if (!trim(line).empty()) tokens.push_back(line);
    }
  }
  return count_tokens(t, tokens, mode, skipped);
}

void merge(LemmaCounts& into, const LemmaCounts& from) {
  for (const auto& [lemma, c] : from.counts) into.counts[lemma] += c;
  into.total_n += from.total_n;
}

void save_counts(std::ostream& out, const LemmaCounts& counts) {
  for (const auto& [lemma, c] : counts.counts) out << lemma << '\t' << c << '\n';
  out << "#N\t" << counts.total_n << '\n';
}

LemmaCounts load_counts(std::istream& in) {
  LemmaCounts out;
  bool saw_total = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      fail(Err::parse_error, "counts line " + std::to_string(lineno) + ": missing tab");
    }
    const std::string key = line.substr(0, tab);
    const std::string val = line.substr(tab + 1);
    std::uint64_t n = 0;
    if (!parse_u64(val, n)) {
      fail(Err::parse_error, "counts line " + std::to_string(lineno) + ": bad count '" + val + "'");
    }
    if (key == "#N") {
      out.total_n = n;
      saw_total = true;
    } else if (!key.empty() && key.front() == '#') {
      fail(Err::parse_error, "counts line " + std::to_string(lineno) + ": unknown record '" + key + "'");
    } else {
      out.counts[key] = n;
    }
  }
  if (!saw_total) fail(Err::parse_error, "counts file: missing #N record");
  return out;
}

}  // namespace wsd
