#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wsd/taxonomy.hpp"

namespace wsd {

enum class CountMode { raw_text, noun_list };

// Per-lemma corpus counts count(n) and the total noun instance count N.
// Only normalized lemmas present in the taxonomy ever appear in counts.
struct LemmaCounts {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t total_n = 0;
};

// Tokens that were not accepted, aggregated for reporting.
struct SkippedTokens {
  std::map<std::string, std::uint64_t> tokens;
  std::uint64_t total = 0;
};

std::string lower_ascii_copy(std::string_view s);

// Strict unsigned decimal parse; rejects signs, junk, and overflow.
bool parse_u64(std::string_view s, std::uint64_t& out);

// Rule-based plural folding. The fold applies only when the original is
// not a taxonomy lemma and the folded form is; otherwise the token comes
// back unchanged. Expects a lowercased token.
std::string singularize(const Taxonomy& t, const std::string& token);

// Lowercases (and in noun-list mode joins internal whitespace with '_'),
// then folds plurals. Empty result = token is not a taxonomy noun.
std::optional<std::string> normalize_token(const Taxonomy& t, std::string_view raw,
                                           CountMode mode);

// Singular and plural forms count as the same noun; tokens not covered by
// the taxonomy are skipped (and tallied in `skipped` when given).
LemmaCounts count_tokens(const Taxonomy& t, const std::vector<std::string>& tokens,
                         CountMode mode, SkippedTokens* skipped = nullptr);

// Stream-driven counting: raw-text mode tokenizes free text, noun-list
// mode takes one noun (or collocation) per line.
LemmaCounts count_stream(const Taxonomy& t, std::istream& in, CountMode mode,
                         SkippedTokens* skipped = nullptr);

// Shard merge; associative and commutative.
void merge(LemmaCounts& into, const LemmaCounts& from);

// Splits free text into word tokens. Unigram-only: collocation lemmas
// cannot match in raw-text mode.
std::vector<std::string> tokenize_text(std::string_view text);

// `<lemma>\t<count>` lines with a trailing `#N\t<total>` record.
void save_counts(std::ostream& out, const LemmaCounts& counts);
LemmaCounts load_counts(std::istream& in);

}  // namespace wsd
