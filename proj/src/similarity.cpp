#include "keylift/similarity.hpp"

#include <cmath>

#include "keylift/errors.hpp"

namespace keylift {

PmiScore pmi_from_counts(std::uint64_t df_p, std::uint64_t df_q, std::uint64_t co_df,
                         std::uint64_t doc_count, double floor) {
  if (df_p == 0 || df_q == 0) return {PmiScore::Kind::undefined, 0.0};
  if (co_df == 0) return {PmiScore::Kind::floored, floor};
  // log2((co/N) / ((df_p/N)(df_q/N))) collapses to log2(co*N / (df_p*df_q)).
  const double ratio = (static_cast<double>(co_df) * static_cast<double>(doc_count)) /
                       (static_cast<double>(df_p) * static_cast<double>(df_q));
  return {PmiScore::Kind::value, std::log2(ratio)};
}

PmiScore pmi(const CorpusIndex& index, const Phrase& p, const Phrase& q, double floor) {
  const std::uint64_t df_p = index.doc_frequency(p);
  const std::uint64_t df_q = index.doc_frequency(q);
  if (df_p == 0 || df_q == 0) return {PmiScore::Kind::undefined, 0.0};
  const std::uint64_t co = index.co_document_frequency(p, q);
  return pmi_from_counts(df_p, df_q, co, index.doc_count(), floor);
}

SetSimilarity set_similarity(const CorpusIndex& index, std::span<const Phrase> extracted,
                             std::span<const Phrase> gold, double floor) {
  if (extracted.empty() || gold.empty())
    throw ParameterError("set_similarity requires two non-empty phrase sets");
  SetSimilarity result;
  double sum = 0.0;
  for (const auto& e : extracted) {
    for (const auto& g : gold) {
      const PmiScore score = pmi(index, e, g, floor);
      if (!score.defined()) {
        ++result.undefined_pairs;
        continue;
      }
      sum += score.value;
      ++result.pair_count;
    }
  }
  if (result.pair_count > 0) result.value = sum / static_cast<double>(result.pair_count);
  return result;
}

std::vector<std::pair<Phrase, std::vector<Phrase>>> best_matches(const CorpusIndex& index,
                                                                 std::span<const Phrase> gold,
                                                                 std::span<const Phrase> extracted,
                                                                 double floor) {
  std::vector<std::pair<Phrase, std::vector<Phrase>>> table;
  table.reserve(gold.size());
  for (const auto& g : gold) {
    double best = 0.0;
    bool have_best = false;
    std::vector<Phrase> matches;
    for (const auto& e : extracted) {
      const PmiScore score = pmi(index, g, e, floor);
      if (!score.defined()) continue;
      if (!have_best || score.value > best) {
        best = score.value;
        have_best = true;
        matches.clear();
        matches.push_back(e);
      } else if (score.value == best) {
        matches.push_back(e);
      }
    }
    if (!have_best || best <= 0.0) matches.clear();
    table.emplace_back(g, std::move(matches));
  }
  return table;
}

}  // namespace keylift
