#include "wsd/taxonomy.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "wsd/error.hpp"

namespace wsd {

std::ostream& operator<<(std::ostream& os, const SynsetId& id) {
  return os << id.value;
}

const SynsetId& Taxonomy::reserved_root_id() {
  static const SynsetId id{"*ROOT*"};
  return id;
}

namespace {

std::string lower_ascii(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Locates one cycle among nodes that survived the topological peel and
// renders it as "a -> b -> ... -> a" (arrow = has-parent). Every survivor
// keeps at least one unpeeled child, so the downward walk must repeat.
std::string describe_cycle(const std::vector<Synset>& nodes,
                           const std::vector<std::vector<std::uint32_t>>& children,
                           const std::vector<bool>& remaining) {
  const std::uint32_t n = static_cast<std::uint32_t>(nodes.size());
  std::uint32_t cur = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (remaining[i]) { cur = i; break; }
  }
  std::vector<std::uint32_t> path;
  std::vector<std::int64_t> pos(n, -1);
  while (pos[cur] < 0) {
    pos[cur] = static_cast<std::int64_t>(path.size());
    path.push_back(cur);
    std::uint32_t next = cur;
    for (std::uint32_t c : children[cur]) {
      if (remaining[c]) { next = c; break; }
    }
    cur = next;
  }
  std::vector<std::uint32_t> cycle(path.begin() + pos[cur], path.end());
  std::reverse(cycle.begin(), cycle.end());  // child steps reversed = parent steps
  std::ostringstream os;
  for (std::uint32_t u : cycle) os << nodes[u].id.value << " -> ";
  os << nodes[cycle.front()].id.value;
  return os.str();
}

}  // namespace

Taxonomy Taxonomy::build(std::vector<Synset> input) {
  Taxonomy t;

  for (Synset& s : input) {
    for (std::string& w : s.words) w = lower_ascii(std::move(w));
    sort_unique(s.words);
    sort_unique(s.parents);
    if (s.id == reserved_root_id()) {
      fail(Err::duplicate_id, "synset id '" + s.id.value + "' is reserved for the virtual root");
    }
  }

  Synset root;
  root.id = reserved_root_id();
  input.push_back(std::move(root));

  std::sort(input.begin(), input.end(),
            [](const Synset& a, const Synset& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < input.size(); ++i) {
    if (input[i].id == input[i - 1].id) {
      fail(Err::duplicate_id, "duplicate synset id '" + input[i].id.value + "'");
    }
  }

  t.nodes_ = std::move(input);
  const std::uint32_t n = static_cast<std::uint32_t>(t.nodes_.size());
  t.by_id_.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) t.by_id_.emplace(t.nodes_[i].id.value, i);
  t.root_ = t.by_id_.at(reserved_root_id().value);

  // Resolve parents; parentless synsets hang off the virtual root.
  t.parents_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    Synset& s = t.nodes_[i];
    if (i == t.root_) continue;
    if (s.parents.empty()) {
      s.parents.push_back(reserved_root_id());
      t.parents_[i].push_back(t.root_);
      continue;
    }
    for (const SynsetId& p : s.parents) {
      auto it = t.by_id_.find(p.value);
      if (it == t.by_id_.end()) {
        fail(Err::dangling_parent,
             "synset '" + s.id.value + "' names missing parent '" + p.value + "'");
      }
      t.parents_[i].push_back(it->second);
    }
  }

  t.children_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t p : t.parents_[i]) t.children_[p].push_back(i);
  }

  // Acyclicity: peel nodes whose parents are all peeled (Kahn over
  // child -> parent edges); leftovers sit on a cycle.
  {
    std::vector<std::uint32_t> pending(n);
    std::vector<std::uint32_t> ready;
    for (std::uint32_t i = 0; i < n; ++i) {
      pending[i] = static_cast<std::uint32_t>(t.children_[i].size());
      if (pending[i] == 0) ready.push_back(i);
    }
    std::size_t peeled = 0;
    while (!ready.empty()) {
      const std::uint32_t c = ready.back();
      ready.pop_back();
      ++peeled;
      for (std::uint32_t p : t.parents_[c]) {
        if (--pending[p] == 0) ready.push_back(p);
      }
    }
    if (peeled != n) {
      std::vector<bool> remaining(n);
      for (std::uint32_t i = 0; i < n; ++i) remaining[i] = pending[i] > 0;
      fail(Err::cycle_detected,
           "IS-A cycle: " + describe_cycle(t.nodes_, t.children_, remaining));
    }
  }

  // Depths by BFS from the root over child edges. Acyclicity plus the
  // root being the only parentless node make every synset reachable.
  t.depth_.assign(n, -1);
  {
    std::vector<std::uint32_t> queue{t.root_};
    t.depth_[t.root_] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t u = queue[head];
      for (std::uint32_t c : t.children_[u]) {
        if (t.depth_[c] < 0) {
          t.depth_[c] = t.depth_[u] + 1;
          queue.push_back(c);
        }
      }
    }
  }

  for (std::uint32_t i = 0; i < n; ++i) {
    for (const std::string& w : t.nodes_[i].words) {
      t.lemma_index_[w].push_back(t.nodes_[i].id);
    }
  }
  // nodes_ is id-sorted, but a lemma may repeat across insertion order.
  for (auto& [lemma, list] : t.lemma_index_) sort_unique(list);

  return t;
}

std::uint32_t Taxonomy::index_of(const SynsetId& id) const {
  auto it = by_id_.find(id.value);
  if (it == by_id_.end()) {
    fail(Err::unknown_synset, "unknown synset '" + id.value + "'");
  }
  return it->second;
}

bool Taxonomy::contains(const SynsetId& id) const {
  return by_id_.find(id.value) != by_id_.end();
}

const Synset& Taxonomy::at(const SynsetId& id) const {
  return nodes_[index_of(id)];
}

std::vector<SynsetId> Taxonomy::ids() const {
  std::vector<SynsetId> out;
  out.reserve(nodes_.size());
  for (const Synset& s : nodes_) out.push_back(s.id);
  return out;
}

std::vector<std::uint32_t> Taxonomy::ancestor_indices(std::uint32_t start) const {
  std::vector<std::uint32_t> visited{start};
  std::unordered_set<std::uint32_t> seen{start};
  for (std::size_t head = 0; head < visited.size(); ++head) {
    for (std::uint32_t p : parents_[visited[head]]) {
      if (seen.insert(p).second) visited.push_back(p);
    }
  }
  std::sort(visited.begin(), visited.end());
  return visited;
}

std::vector<SynsetId> Taxonomy::ancestors(const SynsetId& id) const {
  std::vector<SynsetId> out;
  for (std::uint32_t i : ancestor_indices(index_of(id))) out.push_back(nodes_[i].id);
  return out;
}

bool Taxonomy::is_ancestor(const SynsetId& ancestor, const SynsetId& node) const {
  const std::uint32_t target = index_of(ancestor);
  const std::uint32_t start = index_of(node);
  if (target == start) return true;
  std::vector<std::uint32_t> stack{start};
  std::unordered_set<std::uint32_t> seen{start};
  while (!stack.empty()) {
    const std::uint32_t cur = stack.back();
    stack.pop_back();
    for (std::uint32_t p : parents_[cur]) {
      if (p == target) return true;
      if (seen.insert(p).second) stack.push_back(p);
    }
  }
  return false;
}

std::vector<SynsetId> Taxonomy::children(const SynsetId& id) const {
  std::vector<SynsetId> out;
  for (std::uint32_t c : children_[index_of(id)]) out.push_back(nodes_[c].id);
  std::sort(out.begin(), out.end());
  return out;
}

int Taxonomy::depth(const SynsetId& id) const { return depth_[index_of(id)]; }

const std::vector<SynsetId>& Taxonomy::senses(std::string_view lemma) const {
  static const std::vector<SynsetId> empty;
  auto it = lemma_index_.find(lower_ascii(std::string(lemma)));
  return it == lemma_index_.end() ? empty : it->second;
}

}  // namespace wsd
