#pragma once

#include <cstdint>
#include <vector>

#include "keylift/corpus_index.hpp"
#include "keylift/keyphrase.hpp"
#include "keylift/phrase.hpp"
#include "keylift/text.hpp"

namespace keylift {

inline constexpr int kDefaultExtractCount = 15;
inline constexpr int kMinExtractCount = 3;
inline constexpr int kMaxExtractCount = 30;

struct Candidate {
  Phrase phrase;  // 1..3 tokens
  std::uint32_t term_frequency = 0;
  std::uint32_t first_position = 0;  // token offset of the first occurrence
  std::uint32_t doc_length = 0;
  double score = 0.0;
};

// All 1-3-token contiguous subsequences that stay inside one sentence, carry
// no stoplist token at either boundary, and contain at least one alphabetic
// token. Output is ordered by (first_position, length, text).
std::vector<Candidate> generate_candidates(const TokenizedDocument& doc, const Stoplist& stoplist);

// score = (tf / doc_length) * log2((N + 1) / (df + 1)) * (1 - first_position / doc_length)
void score_candidates(std::vector<Candidate>& candidates, const CorpusIndex& index);

double candidate_score(const Candidate& c, std::size_t corpus_doc_count, std::uint32_t df);

// Top-k candidates by score after dedup: a candidate loses to a higher-scoring
// one with the same stem-folded form, or to a higher-scoring strictly longer
// candidate that contains it with equal term frequency. Ties break by earlier
// first_position, then lexicographic text. Throws ParameterError when k is
// outside [3, 30]; a document with fewer surviving candidates yields a shorter
// list with a warning set.
KeyphraseList extract(const TokenizedDocument& doc, const CorpusIndex& index,
                      int k = kDefaultExtractCount, const Stoplist& stoplist = Stoplist::builtin());

}  // namespace keylift
