#include "keylift/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "keylift/errors.hpp"
#include "keylift/kernels.hpp"
#include "kernels_common.hpp"

namespace keylift {

namespace {

void require_hit_counts(const AnnotatedList& list, const char* op) {
  for (const auto& k : list.keyphrases)
    if (!k.hit_count.has_value())
      throw ParameterError(std::string(op) + ": keyphrase '" + k.phrase.text() +
                           "' has no hit count; run annotate first");
}

std::uint64_t total_hits(const AnnotatedList& list, const std::vector<std::size_t>& cluster) {
  std::uint64_t sum = 0;
  for (std::size_t idx : cluster) sum += *list.keyphrases[idx].hit_count;
  return sum;
}

}  // namespace

SimilarityMatrix build_similarity_matrix(const AnnotatedList& list, const CorpusIndex& index,
                                         double floor, ExecutionPolicy policy) {
  if (list.keyphrases.size() < 2)
    throw ParameterError("similarity matrix needs at least 2 keyphrases, got " +
                         std::to_string(list.keyphrases.size()));
  require_hit_counts(list, "build_similarity_matrix");

  SimilarityMatrix matrix;
  matrix.phrases.reserve(list.keyphrases.size());
  for (const auto& k : list.keyphrases) matrix.phrases.push_back(k.phrase);
  matrix.values = policy == ExecutionPolicy::parallel
                      ? kernels::pmi_matrix_parallel(index, matrix.phrases, floor)
                      : kernels::pmi_matrix_serial(index, matrix.phrases, floor);
  return matrix;
}

std::optional<double> cosine(std::span<const double> u, std::span<const double> v) {
  if (u.empty()) throw ParameterError("cosine of empty vectors");
  if (u.size() != v.size())
    throw ParameterError("cosine dimension mismatch: " + std::to_string(u.size()) + " vs " +
                         std::to_string(v.size()));
  const double nu = std::sqrt(kernels::detail::dot(u, u));
  const double nv = std::sqrt(kernels::detail::dot(v, v));
  if (nu == 0.0 || nv == 0.0) return std::nullopt;
  return kernels::detail::dot(u, v) / (nu * nv);
}

ClusterPartition agglomerative_cluster(const SimilarityMatrix& matrix, std::size_t target,
                                       ExecutionPolicy policy) {
  const std::size_t k = matrix.size();
  if (target == 0) throw ParameterError("cluster target must be at least 1");
  if (k == 0) throw ParameterError("cannot cluster an empty similarity matrix");
  if (matrix.values.size() != k * k)
    throw ParameterError("similarity matrix is not square");

  const std::vector<double> cos =
      policy == ExecutionPolicy::parallel ? kernels::cosine_matrix_parallel(matrix.values, k)
                                          : kernels::cosine_matrix_serial(matrix.values, k);

  std::vector<std::vector<std::size_t>> clusters(k);
  for (std::size_t i = 0; i < k; ++i) clusters[i] = {i};

  // Greedy average-linkage merges; k stays small, so rescanning every cluster
  // pair each step is cheaper than maintaining an update structure.
  while (clusters.size() > std::min(target, k)) {
    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_a = 0, best_b = 1;
    for (std::size_t a = 0; a < clusters.size(); ++a) {
      for (std::size_t b = a + 1; b < clusters.size(); ++b) {
        double sum = 0.0;
        for (std::size_t i : clusters[a])
          for (std::size_t j : clusters[b]) sum += cos[i * k + j];
        const double avg = sum / (static_cast<double>(clusters[a].size()) *
                                  static_cast<double>(clusters[b].size()));
        // Members are ascending and clusters stay sorted by smallest member,
        // so (a, b) order here matches the (i, j) tie-break pair order.
        if (avg > best) {
          best = avg;
          best_a = a;
          best_b = b;
        }
      }
    }
    std::vector<std::size_t> merged;
    merged.reserve(clusters[best_a].size() + clusters[best_b].size());
    std::merge(clusters[best_a].begin(), clusters[best_a].end(), clusters[best_b].begin(),
               clusters[best_b].end(), std::back_inserter(merged));
    clusters[best_a] = std::move(merged);
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(best_b));
    std::sort(clusters.begin(), clusters.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
  }

  ClusterPartition partition;
  partition.clusters = std::move(clusters);
  return partition;
}

ClusteredList order_partition(const AnnotatedList& list, const ClusterPartition& partition) {
  require_hit_counts(list, "order_partition");
  std::vector<bool> seen(list.keyphrases.size(), false);
  for (const auto& cluster : partition.clusters) {
    for (std::size_t idx : cluster) {
      if (idx >= list.keyphrases.size() || seen[idx])
        throw ParameterError("partition does not match the keyphrase list");
      seen[idx] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw ParameterError("partition does not cover the keyphrase list");

  ClusteredList out;
  out.source = list;
  out.clusters = partition.clusters;
  for (auto& cluster : out.clusters) {
    std::sort(cluster.begin(), cluster.end(), [&](std::size_t a, std::size_t b) {
      const auto& ka = list.keyphrases[a];
      const auto& kb = list.keyphrases[b];
      if (*ka.hit_count != *kb.hit_count) return *ka.hit_count > *kb.hit_count;
      return ka.extractor_rank < kb.extractor_rank;
    });
  }
  std::sort(out.clusters.begin(), out.clusters.end(),
            [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              const std::uint64_t ha = total_hits(list, a);
              const std::uint64_t hb = total_hits(list, b);
              if (ha != hb) return ha > hb;
              return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
            });
  return out;
}

ClusteredList cluster_keyphrases(const AnnotatedList& list, const CorpusIndex& index,
                                 std::size_t target, double floor, ExecutionPolicy policy) {
  const SimilarityMatrix matrix = build_similarity_matrix(list, index, floor, policy);
  const ClusterPartition partition = agglomerative_cluster(matrix, target, policy);
  return order_partition(list, partition);
}

AnnotatedList keep_largest_cluster(const ClusteredList& clustered) {
  if (clustered.clusters.empty()) throw ParameterError("cannot reduce an empty partition");
  AnnotatedList out;
  out.doc_id = clustered.source.doc_id;
  out.ordering = Ordering::clustered;
  for (std::size_t idx : clustered.clusters.front())
    out.keyphrases.push_back(clustered.source.keyphrases[idx]);
  return out;
}

ReductionResult remove_smallest_clusters(const ClusteredList& clustered, std::size_t n,
                                         std::size_t min_second) {
  if (clustered.clusters.empty()) throw ParameterError("cannot reduce an empty partition");
  ReductionResult result;
  result.list = clustered.source;
  result.applied = false;
  if (n >= clustered.clusters.size()) return result;
  if (min_second > 0) {
    const std::size_t second =
        clustered.clusters.size() >= 2 ? clustered.clusters[1].size() : 0;
    if (second < min_second) return result;
  }

  // Clusters are ordered (size desc, total hits desc, lowest member asc), so
  // the n to drop — smallest size, then lowest total hit count, then highest
  // smallest-member index — are exactly the last n.
  result.applied = true;
  result.list.keyphrases.clear();
  result.list.warning.clear();
  result.list.ordering = Ordering::clustered;
  for (std::size_t c = 0; c + n < clustered.clusters.size(); ++c)
    for (std::size_t idx : clustered.clusters[c])
      result.list.keyphrases.push_back(clustered.source.keyphrases[idx]);
  return result;
}

nlohmann::ordered_json clusters_to_json(const ClusteredList& clustered) {
  nlohmann::ordered_json doc;
  doc["doc_id"] = clustered.source.doc_id;
  auto clusters = nlohmann::ordered_json::array();
  for (const auto& cluster : clustered.clusters) {
    auto members = nlohmann::ordered_json::array();
    for (std::size_t idx : cluster) {
      const auto& k = clustered.source.keyphrases[idx];
      nlohmann::ordered_json member;
      member["text"] = k.phrase.text();
      member["hit_count"] = k.hit_count.value_or(0);
      members.push_back(std::move(member));
    }
    clusters.push_back(std::move(members));
  }
  doc["clusters"] = std::move(clusters);
  return doc;
}

}  // namespace keylift
