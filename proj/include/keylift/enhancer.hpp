#pragma once

#include <cstdint>
#include <cstddef>

#include "keylift/corpus_index.hpp"
#include "keylift/keyphrase.hpp"

namespace keylift {

inline constexpr std::uint64_t kDefaultMinHits = 100;
inline constexpr std::size_t kDefaultTailPrune = 5;
inline constexpr std::size_t kDefaultLowPrune = 3;
inline constexpr std::size_t kDefaultHighPrune = 2;

// Fills hit_count = doc_frequency(phrase) for every entry; order preserved.
AnnotatedList annotate_hits(const KeyphraseList& list, const CorpusIndex& index);

// Stable sort by hit count descending (most general first); equal counts keep
// extractor rank order. Throws ParameterError when a hit count is missing.
AnnotatedList order_by_informativeness(const AnnotatedList& list);

// Keeps exactly the entries with hit_count >= min_hits, order preserved.
// An emptied list comes back with a warning set.
AnnotatedList prune_threshold(const AnnotatedList& list, std::uint64_t min_hits = kDefaultMinHits);

// Removes the n entries with the smallest hit counts (ties: drop the larger
// extractor rank first). n >= length empties the list with a warning.
AnnotatedList prune_least_frequent(const AnnotatedList& list, std::size_t n = kDefaultTailPrune);

// Removes the `low` smallest-count and `high` largest-count entries; an entry
// qualifying for both pools is removed once, against the low pool. Throws
// ParameterError when low + high > length.
AnnotatedList prune_extremes(const AnnotatedList& list, std::size_t low = kDefaultLowPrune,
                             std::size_t high = kDefaultHighPrune);

}  // namespace keylift
