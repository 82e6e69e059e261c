#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "keylift/corpus_index.hpp"
#include "keylift/phrase.hpp"

namespace keylift {

// Zero co-occurrence between two attested phrases maps to this value instead
// of negative infinity so set means stay finite.
inline constexpr double kDefaultPmiFloor = -10.0;

// log2 association score between two phrases. Zero means the phrases are
// statistically independent in the corpus.
struct PmiScore {
  enum class Kind {
    value,      // both phrases attested, co-occurrence observed
    floored,    // both attested, never co-occur: clamped to the floor
    undefined,  // at least one phrase absent from the corpus
  };

  Kind kind = Kind::undefined;
  double value = 0.0;  // the floor when floored; meaningless when undefined

  bool defined() const noexcept { return kind != Kind::undefined; }
};

PmiScore pmi_from_counts(std::uint64_t df_p, std::uint64_t df_q, std::uint64_t co_df,
                         std::uint64_t doc_count, double floor = kDefaultPmiFloor);

PmiScore pmi(const CorpusIndex& index, const Phrase& p, const Phrase& q,
             double floor = kDefaultPmiFloor);

// Average PMI over all cross pairs of two phrase sets. Undefined pairs are
// excluded from the mean and counted; floored pairs contribute the floor.
struct SetSimilarity {
  double value = 0.0;
  std::size_t pair_count = 0;       // pairs averaged
  std::size_t undefined_pairs = 0;  // pairs excluded

  bool defined() const noexcept { return pair_count > 0; }
};

// Throws ParameterError when either set is empty. Symmetric in its sets and
// invariant under permutation of either.
SetSimilarity set_similarity(const CorpusIndex& index, std::span<const Phrase> extracted,
                             std::span<const Phrase> gold, double floor = kDefaultPmiFloor);

// For each gold phrase, the extracted phrases attaining its maximum PMI,
// included only when that maximum is strictly positive. Ties keep the input
// order of `extracted`.
std::vector<std::pair<Phrase, std::vector<Phrase>>> best_matches(
    const CorpusIndex& index, std::span<const Phrase> gold, std::span<const Phrase> extracted,
    double floor = kDefaultPmiFloor);

}  // namespace keylift
