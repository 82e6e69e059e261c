#include "keylift/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "keylift/errors.hpp"

namespace keylift {

namespace {

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open document: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct DocArtifacts {
  AnnotatedList enhanced;
  ClusteredList clustered;
};

AnnotatedList apply_prune(const AnnotatedList& list, const PipelineConfig& config) {
  switch (config.prune) {
    case PruneMode::none:
      return list;
    case PruneMode::threshold:
      return prune_threshold(list, config.min_hits);
    case PruneMode::tail:
      return prune_least_frequent(list, config.tail_n);
    case PruneMode::extremes:
      return prune_extremes(list, config.low, config.high);
  }
  throw ParameterError("unknown prune mode");
}

}  // namespace

const Stoplist& resolve_stoplist(const std::filesystem::path& explicit_path, Stoplist& storage) {
  if (!explicit_path.empty()) {
    storage = Stoplist::from_file(explicit_path);
    return storage;
  }
  if (const char* env = std::getenv("KEYLIFT_STOPLIST"); env != nullptr && *env != '\0') {
    storage = Stoplist::from_file(env);
    return storage;
  }
  return Stoplist::builtin();
}

ClusteredList cluster_with_fallback(const AnnotatedList& list, const CorpusIndex& index,
                                    std::size_t target, double floor) {
  if (list.keyphrases.size() >= 2) return cluster_keyphrases(list, index, target, floor);
  ClusterPartition trivial;
  if (!list.keyphrases.empty()) trivial.clusters.push_back({0});
  if (trivial.clusters.empty()) {
    ClusteredList out;
    out.source = list;
    return out;
  }
  return order_partition(list, trivial);
}

PipelineResult run_pipeline(const PipelineConfig& config,
                            const std::vector<std::filesystem::path>& doc_paths,
                            const std::map<std::string, std::filesystem::path>& gold_by_doc) {
  const CorpusIndex index = CorpusIndex::load(config.index_path);
  Stoplist storage;
  const Stoplist& stoplist = resolve_stoplist(config.stoplist_path, storage);
  if (!config.out_dir.empty()) std::filesystem::create_directories(config.out_dir);

  EvalConfig eval_config;
  eval_config.pmi_floor = config.pmi_floor;
  eval_config.min_hits = config.min_hits;
  eval_config.tail_n = config.tail_n;
  eval_config.low = config.low;
  eval_config.high = config.high;
  eval_config.cluster_target = config.cluster_target;

  std::vector<std::string> errors(doc_paths.size());
  std::vector<bool> succeeded(doc_paths.size(), false);

  const auto n = static_cast<std::int64_t>(doc_paths.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(config.jobs, 1))
#endif
  for (std::int64_t i = 0; i < n; ++i) {
    const auto& path = doc_paths[static_cast<std::size_t>(i)];
    const std::string doc_id = path.stem().string();
    try {
      const TokenizedDocument doc = tokenize_document(doc_id, read_text_file(path));
      const KeyphraseList extracted = extract(doc, index, config.k, stoplist);
      write_json_file(to_json(extracted), config.out_dir / (doc_id + ".extracted.json"));

      AnnotatedList enhanced = order_by_informativeness(annotate_hits(extracted, index));
      enhanced = apply_prune(enhanced, config);
      write_json_file(to_json(enhanced), config.out_dir / (doc_id + ".enhanced.json"));

      const ClusteredList clustered =
          cluster_with_fallback(enhanced, index, config.cluster_target, config.pmi_floor);
      write_json_file(clusters_to_json(clustered), config.out_dir / (doc_id + ".clusters.json"));

      if (auto gold_it = gold_by_doc.find(doc_id); gold_it != gold_by_doc.end()) {
        const GoldStandard gold = load_gold(gold_it->second, doc_id);
        const EvaluationReport report =
            evaluate_variants(enhanced, gold, index, eval_config, &doc);
        write_json_file(to_json(report), config.out_dir / (doc_id + ".report.json"));
      }
      succeeded[static_cast<std::size_t>(i)] = true;
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(i)] = doc_id + ": " + e.what();
    }
  }

  PipelineResult result;
  for (std::size_t i = 0; i < doc_paths.size(); ++i) {
    if (succeeded[i])
      ++result.documents;
    else
      result.errors.push_back(errors[i]);
  }
  return result;
}

}  // namespace keylift
