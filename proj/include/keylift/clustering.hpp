#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "keylift/corpus_index.hpp"
#include "keylift/keyphrase.hpp"
#include "keylift/similarity.hpp"

namespace keylift {

inline constexpr std::size_t kDefaultClusterTarget = 5;

enum class ExecutionPolicy { serial, parallel };

// k×k floored PMI values among a document's keyphrases. Rows double as the
// clustering feature vectors.
struct SimilarityMatrix {
  std::vector<Phrase> phrases;
  std::vector<double> values;  // row-major k×k

  std::size_t size() const noexcept { return phrases.size(); }
  double at(std::size_t i, std::size_t j) const { return values[i * phrases.size() + j]; }
  std::span<const double> row(std::size_t i) const {
    return {values.data() + i * phrases.size(), phrases.size()};
  }
};

// Throws ParameterError when the list has fewer than two entries.
SimilarityMatrix build_similarity_matrix(const AnnotatedList& list, const CorpusIndex& index,
                                         double floor = kDefaultPmiFloor,
                                         ExecutionPolicy policy = ExecutionPolicy::parallel);

// dot(u,v)/(|u||v|); nullopt when either vector is all zeros (clustering
// treats that as similarity -1). Throws ParameterError on dimension mismatch
// or empty input.
std::optional<double> cosine(std::span<const double> u, std::span<const double> v);

// Disjoint groups of indices into the originating keyphrase list.
struct ClusterPartition {
  std::vector<std::vector<std::size_t>> clusters;  // members ascending

  std::size_t size() const noexcept { return clusters.size(); }
};

// Average-linkage bottom-up merge on row-vector cosines until
// min(target, k) clusters remain. Deterministic: the merge with the highest
// average cosine wins, ties by the smallest (i, j) pair of smallest member
// indices. Throws ParameterError when target == 0 or the matrix is empty.
ClusterPartition agglomerative_cluster(const SimilarityMatrix& matrix,
                                       std::size_t target = kDefaultClusterTarget,
                                       ExecutionPolicy policy = ExecutionPolicy::parallel);

// A partition bound to its list: clusters sorted largest first (ties by
// higher total hit count, then lowest member index), members sorted by hit
// count descending (ties keep extractor rank order).
struct ClusteredList {
  AnnotatedList source;
  std::vector<std::vector<std::size_t>> clusters;

  std::size_t largest_cluster_size() const noexcept {
    return clusters.empty() ? 0 : clusters.front().size();
  }
};

// Builds the similarity matrix, clusters, and orders the result. The list
// needs hit counts and at least two entries.
ClusteredList cluster_keyphrases(const AnnotatedList& list, const CorpusIndex& index,
                                 std::size_t target = kDefaultClusterTarget,
                                 double floor = kDefaultPmiFloor,
                                 ExecutionPolicy policy = ExecutionPolicy::parallel);

// Orders a ready-made partition against its list without re-clustering.
ClusteredList order_partition(const AnnotatedList& list, const ClusterPartition& partition);

// The keyphrases of the largest cluster, hit count descending.
AnnotatedList keep_largest_cluster(const ClusteredList& clustered);

struct ReductionResult {
  AnnotatedList list;
  bool applied = false;  // false when a gate or degenerate case kept everything
};

// Drops the n smallest clusters (ties: lower total hit count first, then
// higher smallest member index) and returns the remaining keyphrases ordered
// cluster by cluster. When min_second > 0 and the second-largest cluster is
// smaller than it, or when n >= cluster count, the list is returned unchanged
// with applied = false.
ReductionResult remove_smallest_clusters(const ClusteredList& clustered, std::size_t n = 3,
                                         std::size_t min_second = 0);

nlohmann::ordered_json clusters_to_json(const ClusteredList& clustered);

}  // namespace keylift
