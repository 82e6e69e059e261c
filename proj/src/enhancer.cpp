#include "keylift/enhancer.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "keylift/errors.hpp"

namespace keylift {

namespace {

void require_hit_counts(const AnnotatedList& list, const char* op) {
  for (const auto& k : list.keyphrases)
    if (!k.hit_count.has_value())
      throw ParameterError(std::string(op) + ": keyphrase '" + k.phrase.text() +
                           "' has no hit count; run annotate first");
}

AnnotatedList keep_indices(const AnnotatedList& list, const std::vector<bool>& keep) {
  AnnotatedList out;
  out.doc_id = list.doc_id;
  out.ordering = list.ordering;
  for (std::size_t i = 0; i < list.keyphrases.size(); ++i)
    if (keep[i]) out.keyphrases.push_back(list.keyphrases[i]);
  if (out.keyphrases.empty() && !list.keyphrases.empty())
    out.warning = "pruning removed every keyphrase";
  return out;
}

// Indices of the n smallest-count entries; among equal counts the larger
// extractor rank (less confident) goes first.
std::vector<std::size_t> smallest_n(const AnnotatedList& list, std::size_t n) {
  std::vector<std::size_t> order(list.keyphrases.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ka = list.keyphrases[a];
    const auto& kb = list.keyphrases[b];
    if (*ka.hit_count != *kb.hit_count) return *ka.hit_count < *kb.hit_count;
    return ka.extractor_rank > kb.extractor_rank;
  });
  order.resize(std::min(n, order.size()));
  return order;
}

}  // namespace

AnnotatedList annotate_hits(const KeyphraseList& list, const CorpusIndex& index) {
  AnnotatedList out = list;
  out.ordering = Ordering::informativeness;
  for (auto& k : out.keyphrases) k.hit_count = index.doc_frequency(k.phrase);
  return out;
}

AnnotatedList order_by_informativeness(const AnnotatedList& list) {
  require_hit_counts(list, "order_by_informativeness");
  AnnotatedList out = list;
  out.ordering = Ordering::informativeness;
  std::stable_sort(out.keyphrases.begin(), out.keyphrases.end(),
                   [](const Keyphrase& a, const Keyphrase& b) {
                     if (*a.hit_count != *b.hit_count) return *a.hit_count > *b.hit_count;
                     return a.extractor_rank < b.extractor_rank;
                   });
  return out;
}

AnnotatedList prune_threshold(const AnnotatedList& list, std::uint64_t min_hits) {
  require_hit_counts(list, "prune_threshold");
  std::vector<bool> keep(list.keyphrases.size());
  for (std::size_t i = 0; i < list.keyphrases.size(); ++i)
    keep[i] = *list.keyphrases[i].hit_count >= min_hits;
  return keep_indices(list, keep);
}

AnnotatedList prune_least_frequent(const AnnotatedList& list, std::size_t n) {
  require_hit_counts(list, "prune_least_frequent");
  std::vector<bool> keep(list.keyphrases.size(), true);
  for (std::size_t idx : smallest_n(list, n)) keep[idx] = false;
  return keep_indices(list, keep);
}

AnnotatedList prune_extremes(const AnnotatedList& list, std::size_t low, std::size_t high) {
  require_hit_counts(list, "prune_extremes");
  if (low + high > list.keyphrases.size())
    throw ParameterError("prune_extremes: low + high (" + std::to_string(low + high) +
                         ") exceeds list size (" + std::to_string(list.keyphrases.size()) + ")");
  std::vector<bool> keep(list.keyphrases.size(), true);
  for (std::size_t idx : smallest_n(list, low)) keep[idx] = false;

  // Largest counts from the remainder, so an entry never falls in both pools.
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (keep[i]) rest.push_back(i);
  std::sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
    const auto& ka = list.keyphrases[a];
    const auto& kb = list.keyphrases[b];
    if (*ka.hit_count != *kb.hit_count) return *ka.hit_count > *kb.hit_count;
    return ka.extractor_rank > kb.extractor_rank;
  });
  for (std::size_t i = 0; i < std::min(high, rest.size()); ++i) keep[rest[i]] = false;
  return keep_indices(list, keep);
}

}  // namespace keylift
