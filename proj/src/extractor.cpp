#include "keylift/extractor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "keylift/errors.hpp"

namespace keylift {

namespace {

bool has_alpha(const std::string& token) {
  for (unsigned char c : token)
    if (std::isalpha(c) != 0 || c >= 0x80) return true;
  return false;
}

// True when `inner` occurs as a contiguous subsequence of `outer`.
bool contains_subsequence(const std::vector<std::string>& outer,
                          const std::vector<std::string>& inner) {
  if (inner.size() > outer.size()) return false;
  for (std::size_t start = 0; start + inner.size() <= outer.size(); ++start) {
    bool match = true;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (outer[start + i] != inner[i]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

}  // namespace

std::vector<Candidate> generate_candidates(const TokenizedDocument& doc, const Stoplist& stoplist) {
  constexpr std::size_t kMaxCandidateTokens = 3;
  const auto doc_length = static_cast<std::uint32_t>(doc.tokens.size());
  std::vector<Candidate> out;
  if (doc_length == 0) return out;

  struct Occurrence {
    std::uint32_t tf = 0;
    std::uint32_t first_position = 0;
  };
  // Ordered map keyed by token sequence keeps output deterministic.
  std::map<std::vector<std::string>, Occurrence> found;

  std::size_t sentence_start = 0;
  auto next_break = doc.sentence_breaks.begin();
  while (sentence_start < doc.tokens.size()) {
    const std::size_t sentence_end =
        next_break == doc.sentence_breaks.end() ? doc.tokens.size() : *next_break;
    for (std::size_t pos = sentence_start; pos < sentence_end; ++pos) {
      const std::size_t max_len = std::min(kMaxCandidateTokens, sentence_end - pos);
      for (std::size_t len = 1; len <= max_len; ++len) {
        const std::string& first = doc.tokens[pos];
        const std::string& last = doc.tokens[pos + len - 1];
        if (stoplist.contains(first) || stoplist.contains(last)) continue;
        std::vector<std::string> seq(doc.tokens.begin() + static_cast<std::ptrdiff_t>(pos),
                                     doc.tokens.begin() + static_cast<std::ptrdiff_t>(pos + len));
        if (std::none_of(seq.begin(), seq.end(), has_alpha)) continue;
        auto [it, inserted] = found.try_emplace(std::move(seq));
        ++it->second.tf;
        if (inserted) it->second.first_position = static_cast<std::uint32_t>(pos);
      }
    }
    if (next_break != doc.sentence_breaks.end()) ++next_break;
    sentence_start = sentence_end;
  }

  out.reserve(found.size());
  for (auto& [tokens, occ] : found) {
    Candidate c;
    c.phrase = Phrase(std::vector<std::string>(tokens));
    c.term_frequency = occ.tf;
    c.first_position = occ.first_position;
    c.doc_length = doc_length;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.first_position != b.first_position) return a.first_position < b.first_position;
    if (a.phrase.size() != b.phrase.size()) return a.phrase.size() < b.phrase.size();
    return a.phrase.tokens() < b.phrase.tokens();
  });
  return out;
}

double candidate_score(const Candidate& c, std::size_t corpus_doc_count, std::uint32_t df) {
  const double doc_length = c.doc_length;
  const double tfidf = (c.term_frequency / doc_length) *
                       std::log2((static_cast<double>(corpus_doc_count) + 1.0) / (df + 1.0));
  const double position_weight = 1.0 - c.first_position / doc_length;
  return tfidf * position_weight;
}

void score_candidates(std::vector<Candidate>& candidates, const CorpusIndex& index) {
  for (auto& c : candidates)
    c.score = candidate_score(c, index.doc_count(), index.doc_frequency(c.phrase));
}

KeyphraseList extract(const TokenizedDocument& doc, const CorpusIndex& index, int k,
                      const Stoplist& stoplist) {
  if (k < kMinExtractCount || k > kMaxExtractCount)
    throw ParameterError("extract count must be in [" + std::to_string(kMinExtractCount) + ", " +
                         std::to_string(kMaxExtractCount) + "], got " + std::to_string(k));

  auto candidates = generate_candidates(doc, stoplist);
  score_candidates(candidates, index);
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.first_position != b.first_position) return a.first_position < b.first_position;
    return a.phrase.text() < b.phrase.text();
  });

  KeyphraseList list;
  list.doc_id = doc.doc_id;
  list.ordering = Ordering::extractor_confidence;

  std::vector<std::string> kept_stems;
  std::vector<const Candidate*> kept;
  for (const auto& c : candidates) {
    if (kept.size() == static_cast<std::size_t>(k)) break;
    const std::string key = stem_key(c.phrase);
    if (std::find(kept_stems.begin(), kept_stems.end(), key) != kept_stems.end()) continue;
    const bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const Candidate* winner) {
      return winner->phrase.size() > c.phrase.size() &&
             winner->term_frequency == c.term_frequency &&
             contains_subsequence(winner->phrase.tokens(), c.phrase.tokens());
    });
    if (absorbed) continue;
    kept.push_back(&c);
    kept_stems.push_back(key);
  }

  for (std::size_t i = 0; i < kept.size(); ++i) {
    Keyphrase phrase;
    phrase.phrase = kept[i]->phrase;
    phrase.extractor_rank = static_cast<std::uint32_t>(i + 1);
    phrase.score = kept[i]->score;
    list.keyphrases.push_back(std::move(phrase));
  }
  if (list.keyphrases.size() < static_cast<std::size_t>(k))
    list.warning = "only " + std::to_string(list.keyphrases.size()) + " of " + std::to_string(k) +
                   " keyphrases available";
  return list;
}

}  // namespace keylift
