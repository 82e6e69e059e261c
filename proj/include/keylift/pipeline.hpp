#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "keylift/clustering.hpp"
#include "keylift/enhancer.hpp"
#include "keylift/evaluation.hpp"
#include "keylift/extractor.hpp"
#include "keylift/similarity.hpp"

namespace keylift {

enum class PruneMode { none, threshold, tail, extremes };

struct PipelineConfig {
  std::filesystem::path index_path;
  std::filesystem::path out_dir;
  std::filesystem::path stoplist_path;  // empty: KEYLIFT_STOPLIST or the built-in list
  int k = kDefaultExtractCount;
  double pmi_floor = kDefaultPmiFloor;
  PruneMode prune = PruneMode::none;
  std::uint64_t min_hits = kDefaultMinHits;
  std::size_t tail_n = kDefaultTailPrune;
  std::size_t low = kDefaultLowPrune;
  std::size_t high = kDefaultHighPrune;
  std::size_t cluster_target = kDefaultClusterTarget;
  int jobs = 1;
};

struct PipelineResult {
  std::size_t documents = 0;
  std::vector<std::string> errors;  // one diagnostic per failed document

  bool ok() const noexcept { return errors.empty(); }
};

// Resolves a stoplist: explicit path, else $KEYLIFT_STOPLIST, else built-in.
const Stoplist& resolve_stoplist(const std::filesystem::path& explicit_path, Stoplist& storage);

// cluster_keyphrases, except lists too small to cluster (fewer than two
// entries) come back as one trivial cluster instead of an error. Shared by
// the pipeline and the cluster subcommand so their artifacts stay identical.
ClusteredList cluster_with_fallback(const AnnotatedList& list, const CorpusIndex& index,
                                    std::size_t target = kDefaultClusterTarget,
                                    double floor = kDefaultPmiFloor);

// For each document emits <doc_id>.extracted.json, <doc_id>.enhanced.json,
// <doc_id>.clusters.json and, when a gold file is mapped for it,
// <doc_id>.report.json under out_dir. Documents are independent; jobs > 1
// processes them in parallel. Every artifact equals the output of the
// corresponding subcommand run with the same settings.
PipelineResult run_pipeline(const PipelineConfig& config,
                            const std::vector<std::filesystem::path>& doc_paths,
                            const std::map<std::string, std::filesystem::path>& gold_by_doc);

}  // namespace keylift
