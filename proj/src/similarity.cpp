#include "wsd/similarity.hpp"

#include <algorithm>

#include "wsd/error.hpp"

namespace wsd {

namespace {

std::vector<SynsetId> ancestor_union(const Taxonomy& t, const std::string& w) {
  const auto& senses = t.senses(w);
  if (senses.empty()) fail(Err::no_senses, "'" + w + "' has no senses in the taxonomy");
  std::vector<SynsetId> u;
  for (const SynsetId& s : senses) {
    auto anc = t.ancestors(s);
    u.insert(u.end(), anc.begin(), anc.end());
  }
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

}  // namespace

std::vector<SynsetId> subsumers(const Taxonomy& t, const std::string& w1,
                                const std::string& w2) {
  const std::vector<SynsetId> a = ancestor_union(t, w1);
  const std::vector<SynsetId> b = ancestor_union(t, w2);
  std::vector<SynsetId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

SimilarityResult similarity(const Taxonomy& t, const IcTable& ic, const std::string& w1,
                            const std::string& w2) {
  if (ic.freq.total_n == 0) fail(Err::empty_corpus, "similarity undefined: N = 0");
  const std::vector<SynsetId> common = subsumers(t, w1, w2);

  // Max IC = min positive freq; exact integer comparison keeps ties exact.
  SimilarityResult out;
  std::uint64_t best = 0;
  for (const SynsetId& c : common) {
    const std::uint64_t f = ic.freq.at(c);
    if (f == 0) continue;
    if (out.tied_mis.empty() || f < best) {
      best = f;
      out.tied_mis.assign(1, c);
    } else if (f == best) {
      out.tied_mis.push_back(c);  // `common` is sorted, so ties stay sorted
    }
  }
  // The virtual root subsumes everything and carries freq = N > 0 in any
  // table propagated from this taxonomy.
  if (out.tied_mis.empty()) {
    fail(Err::empty_corpus, "no observed subsumer for '" + w1 + "'/'" + w2 +
                                "'; the ic table does not cover the taxonomy root");
  }
  out.mis = out.tied_mis.front();
  out.value = information_content(ic.freq, *out.mis, ic.log_base).value();
  return out;
}

}  // namespace wsd
