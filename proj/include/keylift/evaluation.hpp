#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "keylift/clustering.hpp"
#include "keylift/corpus_index.hpp"
#include "keylift/enhancer.hpp"
#include "keylift/keyphrase.hpp"
#include "keylift/similarity.hpp"

namespace keylift {

// Author-assigned keyphrases for one document, in author order.
struct GoldStandard {
  std::string doc_id;
  std::vector<Phrase> keyphrases;
  std::string warning;  // set when a phrase was truncated or dropped
};

// One phrase per line, UTF-8, '#' lines are comments. Phrases longer than
// Phrase::kMaxTokens tokens are truncated with a warning. Throws IoError when
// the file cannot be read, ParameterError when no phrase survives.
GoldStandard load_gold(const std::filesystem::path& path, std::string doc_id = {});

struct OverlapCounts {
  std::size_t exact = 0;    // equal after normalization
  std::size_t stemmed = 0;  // equal after stem-folding (includes exact)
};

// Greedy one-to-one matching in list order; each gold phrase matches at most
// once.
OverlapCounts string_overlap(const KeyphraseList& extracted, const GoldStandard& gold);

struct CoverageFractions {
  double in_text = 0.0;       // contiguous in the document
  double variant_form = 0.0;  // contiguous only after stem-folding
  double absent = 0.0;
};

CoverageFractions gold_coverage(const GoldStandard& gold, const TokenizedDocument& doc);

// Stable variant names used in reports and TSV columns.
inline constexpr const char* kVariantFull = "full";
inline constexpr const char* kVariantThreshold = "prune_threshold";
inline constexpr const char* kVariantLeastFrequent = "prune_least_frequent";
inline constexpr const char* kVariantExtremes = "prune_extremes";
inline constexpr const char* kVariantPrefix5 = "prefix_5";
inline constexpr const char* kVariantPrefix10 = "prefix_10";
inline constexpr const char* kVariantLargestCluster = "keep_largest_cluster";
inline constexpr const char* kVariantDropClusters = "remove_smallest_clusters";
inline constexpr const char* kVariantDropClustersMin3 = "remove_smallest_min2_3";
inline constexpr const char* kVariantDropClustersMin4 = "remove_smallest_min2_4";

struct VariantScore {
  std::string name;
  SetSimilarity similarity;  // pair_count == 0 marks an undefined cell
  std::size_t list_size = 0;
  bool applied = true;  // false when a conditional gate kept the list unchanged
};

struct EvaluationReport {
  std::string doc_id;
  OverlapCounts overlap;
  std::optional<CoverageFractions> coverage;
  std::size_t largest_cluster_size = 0;  // 0 when the list was too small to cluster
  std::vector<VariantScore> variants;
  // gold phrase text -> best-matching extracted phrase texts
  std::vector<std::pair<std::string, std::vector<std::string>>> best_match_table;
};

struct EvalConfig {
  double pmi_floor = kDefaultPmiFloor;
  std::uint64_t min_hits = kDefaultMinHits;
  std::size_t tail_n = kDefaultTailPrune;
  std::size_t low = kDefaultLowPrune;
  std::size_t high = kDefaultHighPrune;
  std::size_t cluster_target = kDefaultClusterTarget;
  std::size_t drop_clusters = 3;
  bool all_variants = true;  // false evaluates the full list only
};

// Scores the full list and every reduction variant against the gold set.
// The list must carry hit counts (see annotate_hits); gold must be non-empty.
// Passing the source document adds coverage fractions.
EvaluationReport evaluate_variants(const AnnotatedList& list, const GoldStandard& gold,
                                   const CorpusIndex& index, const EvalConfig& config = {},
                                   const TokenizedDocument* doc = nullptr);

nlohmann::ordered_json to_json(const EvaluationReport& report);
EvaluationReport report_from_json(const nlohmann::json& j);
EvaluationReport load_report(const std::filesystem::path& path);

// Collection-level table: per-variant means over documents (undefined cells
// skipped and counted) plus the per-gate cluster-removal summary.
struct GateAggregate {
  std::string name;
  std::size_t documents = 0;  // documents where the gate applied
  std::optional<double> mean_full;
  std::optional<double> mean_largest;
  std::optional<double> mean_after_removal;
  double mean_largest_cluster_size = 0.0;
  double mean_keyphrases_after = 0.0;
};

struct AggregateTable {
  std::vector<std::string> variant_names;
  std::vector<std::string> doc_ids;
  // values[doc][variant]; nullopt for undefined or not-applied cells
  std::vector<std::vector<std::optional<double>>> values;
  std::vector<std::optional<double>> means;  // per variant, over defined cells
  std::vector<std::size_t> skipped;          // per variant
  std::vector<GateAggregate> gates;
};

// Throws ParameterError on an empty input.
AggregateTable aggregate(const std::vector<EvaluationReport>& reports);

std::string aggregate_to_tsv(const AggregateTable& table);

}  // namespace keylift
