#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wsd {

// Stable synset identifier: the byte offset for real WordNet data
// ("10104064") or a label for synthetic taxonomies. The total order over
// ids is what makes tie-breaking and output ordering reproducible.
struct SynsetId {
  std::string value;
  auto operator<=>(const SynsetId&) const = default;
};

std::ostream& operator<<(std::ostream& os, const SynsetId& id);

struct Synset {
  SynsetId id;
  std::vector<std::string> words;  // lemmas, lowercase, '_' joins collocations
  std::vector<SynsetId> parents;   // empty = top level (attached to virtual root)
  std::string gloss;
};

// Immutable IS-A DAG over synsets with a synthesized virtual root.
// All queries are const and safe for any number of concurrent readers.
class Taxonomy {
 public:
  // Id given to the synthesized root; rejected in input synsets.
  static const SynsetId& reserved_root_id();

  // Verifies id uniqueness, referential integrity and acyclicity, creates
  // the virtual root and re-parents all top-level synsets to it, and builds
  // the lemma index. Words are lowercased; word and parent lists are
  // deduplicated.
  static Taxonomy build(std::vector<Synset> synsets);

  const SynsetId& virtual_root() const { return nodes_[root_].id; }
  bool contains(const SynsetId& id) const;
  const Synset& at(const SynsetId& id) const;

  std::size_t size() const { return nodes_.size(); }  // includes virtual root
  std::vector<SynsetId> ids() const;                  // sorted

  // Reflexive transitive closure over parents, sorted by id.
  // ancestors(virtual_root) == {virtual_root}.
  std::vector<SynsetId> ancestors(const SynsetId& id) const;

  // True when `ancestor` subsumes `node` (reflexively).
  bool is_ancestor(const SynsetId& ancestor, const SynsetId& node) const;

  std::vector<SynsetId> children(const SynsetId& id) const;

  // Minimum number of IS-A edges from the virtual root.
  int depth(const SynsetId& id) const;

  // Sense list S_i for a lemma, ordered by id; empty when the word is
  // not in the taxonomy. Expects a lowercased lemma.
  const std::vector<SynsetId>& senses(std::string_view lemma) const;

  const std::map<std::string, std::vector<SynsetId>>& lemma_index() const {
    return lemma_index_;
  }

 private:
  Taxonomy() = default;

  std::uint32_t index_of(const SynsetId& id) const;  // throws unknown_synset
  std::vector<std::uint32_t> ancestor_indices(std::uint32_t start) const;

  std::vector<Synset> nodes_;  // sorted by id, so index order == id order
  std::vector<std::vector<std::uint32_t>> parents_;
  std::vector<std::vector<std::uint32_t>> children_;
  std::vector<int> depth_;
  std::unordered_map<std::string, std::uint32_t> by_id_;
  std::map<std::string, std::vector<SynsetId>> lemma_index_;
  std::uint32_t root_ = 0;
};

}  // namespace wsd

template <>
struct std::hash<wsd::SynsetId> {
  std::size_t operator()(const wsd::SynsetId& id) const noexcept {
    return std::hash<std::string>{}(id.value);
  }
};
