// keylift command-line interface: indexing, counting, PMI queries, keyphrase
// extraction, list enhancement, clustering, evaluation, and the combined
// pipeline, plus a generator for the synthetic test fixtures.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "keylift/clustering.hpp"
#include "keylift/corpus_index.hpp"
#include "keylift/enhancer.hpp"
#include "keylift/errors.hpp"
#include "keylift/evaluation.hpp"
#include "keylift/extractor.hpp"
#include "keylift/fixtures.hpp"
#include "keylift/keyphrase.hpp"
#include "keylift/pipeline.hpp"
#include "keylift/similarity.hpp"
#include "keylift/text.hpp"

namespace {

namespace fs = std::filesystem;
using namespace keylift;

// Exit status for per-document pipeline failures after diagnostics printed.
struct PipelineFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<fs::path> list_documents(const fs::path& dir) {
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".txt")
      paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  return paths;
}

void emit_json(const nlohmann::ordered_json& j, const fs::path& out) {
  if (out.empty())
    std::cout << j.dump(2) << '\n';
  else
    write_json_file(j, out);
}

void emit_text(const std::string& text, const fs::path& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw IoError("cannot write: " + out.string());
  file << text;
}

struct PruneSpec {
  PruneMode mode = PruneMode::none;
  std::uint64_t min_hits = kDefaultMinHits;
  std::size_t tail_n = kDefaultTailPrune;
  std::size_t low = kDefaultLowPrune;
  std::size_t high = kDefaultHighPrune;
};

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw ParameterError("invalid " + what + ": '" + text + "'");
  }
}

// "threshold[:100]", "tail[:5]" or "extremes[:3,2]".
PruneSpec parse_prune(const std::string& spec) {
  PruneSpec out;
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (name == "threshold") {
    out.mode = PruneMode::threshold;
    if (!args.empty()) out.min_hits = parse_uint(args, "threshold");
  } else if (name == "tail") {
    out.mode = PruneMode::tail;
    if (!args.empty()) out.tail_n = parse_uint(args, "tail size");
  } else if (name == "extremes") {
    out.mode = PruneMode::extremes;
    if (!args.empty()) {
      const auto comma = args.find(',');
      if (comma == std::string::npos)
        throw ParameterError("extremes needs two sizes, e.g. extremes:3,2");
      out.low = parse_uint(args.substr(0, comma), "low prune size");
      out.high = parse_uint(args.substr(comma + 1), "high prune size");
    }
  } else {
    throw ParameterError("unknown prune mode '" + name +
                         "' (expected threshold, tail or extremes)");
  }
  return out;
}

struct KeepSpec {
  enum class Mode { clusters, largest, drop_smallest } mode = Mode::clusters;
  std::size_t drop_n = 3;
  std::size_t min_second = 0;
};

// "largest" or "drop-smallest[:3[,min-second:4]]".
KeepSpec parse_keep(const std::string& spec) {
  KeepSpec out;
  if (spec == "largest") {
    out.mode = KeepSpec::Mode::largest;
    return out;
  }
  if (spec.rfind("drop-smallest", 0) != 0)
    throw ParameterError("unknown --keep mode '" + spec +
                         "' (expected largest or drop-smallest:N[,min-second:M])");
  out.mode = KeepSpec::Mode::drop_smallest;
  std::string rest = spec.substr(std::string("drop-smallest").size());
  if (rest.empty()) return out;
  if (rest.front() != ':') throw ParameterError("malformed --keep spec '" + spec + "'");
  rest = rest.substr(1);
  const auto comma = rest.find(',');
  out.drop_n = parse_uint(rest.substr(0, comma), "cluster drop count");
  if (comma != std::string::npos) {
    const std::string tail = rest.substr(comma + 1);
    const std::string prefix = "min-second:";
    if (tail.rfind(prefix, 0) != 0)
      throw ParameterError("malformed --keep spec '" + spec + "'");
    out.min_second = parse_uint(tail.substr(prefix.size()), "min-second");
  }
  return out;
}

std::vector<TokenizedDocument> tokenize_directory(const fs::path& dir) {
  std::vector<TokenizedDocument> docs;
  for (const auto& path : list_documents(dir))
    docs.push_back(tokenize_document(path.stem().string(), read_text_file(path)));
  if (docs.empty()) throw ParameterError("no .txt documents under " + dir.string());
  return docs;
}

void print_pmi(const PmiScore& score) {
  char buf[64];
  switch (score.kind) {
    case PmiScore::Kind::value:
      std::snprintf(buf, sizeof(buf), "%.6f", score.value);
      std::cout << buf << '\n';
      break;
    case PmiScore::Kind::floored:
      std::snprintf(buf, sizeof(buf), "%.6f", score.value);
      std::cout << buf << " FLOOR\n";
      break;
    case PmiScore::Kind::undefined:
      std::cout << "UNDEFINED\n";
      break;
  }
}

void register_commands(CLI::App& app) {
  // ---- index build ---------------------------------------------------------
  auto* index_cmd = app.add_subcommand("index", "Corpus index operations");
  index_cmd->require_subcommand(1);
  auto* build_cmd = index_cmd->add_subcommand("build", "Build an index from a directory of .txt files");
  auto corpus_dir = std::make_shared<fs::path>();
  auto index_out = std::make_shared<fs::path>();
  build_cmd->add_option("corpus_dir", *corpus_dir, "Directory of .txt documents")
      ->required();
  build_cmd->add_option("-o,--output", *index_out, "Index file to write")->required();
  build_cmd->callback([corpus_dir, index_out] {
    const auto docs = tokenize_directory(*corpus_dir);
    CorpusIndex::build(docs).save(*index_out);
    std::cout << docs.size() << " documents indexed\n";
  });

  // ---- counts --------------------------------------------------------------
  auto* counts_cmd = app.add_subcommand("counts", "Print df (or co_df with --with) for a phrase");
  auto counts_index = std::make_shared<fs::path>();
  auto counts_phrase = std::make_shared<std::string>();
  auto counts_with = std::make_shared<std::string>();
  counts_cmd->add_option("index_file", *counts_index, "Index file")->required();
  counts_cmd->add_option("--phrase", *counts_phrase, "Phrase to count")->required();
  counts_cmd->add_option("--with", *counts_with, "Second phrase: print co-document frequency");
  counts_cmd->callback([counts_index, counts_phrase, counts_with] {
    const CorpusIndex index = CorpusIndex::load(*counts_index);
    const Phrase phrase = Phrase::parse(*counts_phrase);
    if (counts_with->empty())
      std::cout << index.doc_frequency(phrase) << '\n';
    else
      std::cout << index.co_document_frequency(phrase, Phrase::parse(*counts_with)) << '\n';
  });

  // ---- pmi -----------------------------------------------------------------
  auto* pmi_cmd = app.add_subcommand("pmi", "Print the PMI of two phrases");
  auto pmi_index = std::make_shared<fs::path>();
  auto pmi_a = std::make_shared<std::string>();
  auto pmi_b = std::make_shared<std::string>();
  auto pmi_floor = std::make_shared<double>(kDefaultPmiFloor);
  pmi_cmd->add_option("index_file", *pmi_index, "Index file")->required();
  pmi_cmd->add_option("phrase1", *pmi_a, "First phrase")->required();
  pmi_cmd->add_option("phrase2", *pmi_b, "Second phrase")->required();
  pmi_cmd->add_option("--floor", *pmi_floor, "Floor for zero co-occurrence");
  pmi_cmd->callback([pmi_index, pmi_a, pmi_b, pmi_floor] {
    const CorpusIndex index = CorpusIndex::load(*pmi_index);
    print_pmi(pmi(index, Phrase::parse(*pmi_a), Phrase::parse(*pmi_b), *pmi_floor));
  });

  // ---- extract ---------------------------------------------------------
  auto* extract_cmd = app.add_subcommand("extract", "Extract top keyphrases from a document");
  auto ex_index = std::make_shared<fs::path>();
  auto ex_doc = std::make_shared<fs::path>();
  auto ex_k = std::make_shared<int>(kDefaultExtractCount);
  auto ex_stoplist = std::make_shared<fs::path>();
  auto ex_out = std::make_shared<fs::path>();
  extract_cmd->add_option("index_file", *ex_index, "Index file")->required();
  extract_cmd->add_option("doc_file", *ex_doc, "Document to extract from")->required();
  extract_cmd->add_option("-k,--count", *ex_k, "Keyphrases to extract (3-30)");
  extract_cmd->add_option("--stoplist", *ex_stoplist, "Stoplist file (default: $KEYLIFT_STOPLIST or built-in)");
  extract_cmd->add_option("-o,--output", *ex_out, "Output JSON file (default: stdout)");
  extract_cmd->callback([ex_index, ex_doc, ex_k, ex_stoplist, ex_out] {
    const CorpusIndex index = CorpusIndex::load(*ex_index);
    Stoplist storage;
    const Stoplist& stoplist = resolve_stoplist(*ex_stoplist, storage);
    const TokenizedDocument doc =
        tokenize_document(ex_doc->stem().string(), read_text_file(*ex_doc));
    emit_json(to_json(extract(doc, index, *ex_k, stoplist)), *ex_out);
  });

  // ---- enhance ---------------------------------------------------------
  auto* enhance_cmd = app.add_subcommand("enhance", "Annotate hit counts, order and prune a list");
  auto en_index = std::make_shared<fs::path>();
  auto en_list = std::make_shared<fs::path>();
  auto en_order = std::make_shared<bool>(false);
  auto en_prune = std::make_shared<std::string>();
  auto en_out = std::make_shared<fs::path>();
  enhance_cmd->add_option("index_file", *en_index, "Index file")->required();
  enhance_cmd->add_option("list_json", *en_list, "Keyphrase list JSON")->required();
  enhance_cmd->add_flag("--order", *en_order, "Order by informativeness (hit count descending)");
  enhance_cmd->add_option("--prune", *en_prune,
                          "threshold[:100] | tail[:5] | extremes[:3,2]");
  enhance_cmd->add_option("-o,--output", *en_out, "Output JSON file (default: stdout)");
  enhance_cmd->callback([en_index, en_list, en_order, en_prune, en_out] {
    const CorpusIndex index = CorpusIndex::load(*en_index);
    AnnotatedList list = annotate_hits(load_keyphrase_list(*en_list), index);
    if (*en_order) list = order_by_informativeness(list);
    if (!en_prune->empty()) {
      const PruneSpec spec = parse_prune(*en_prune);
      switch (spec.mode) {
        case PruneMode::threshold:
          list = prune_threshold(list, spec.min_hits);
          break;
        case PruneMode::tail:
          list = prune_least_frequent(list, spec.tail_n);
          break;
        case PruneMode::extremes:
          list = prune_extremes(list, spec.low, spec.high);
          break;
        case PruneMode::none:
          break;
      }
    }
    emit_json(to_json(list), *en_out);
  });

  // ---- cluster ---------------------------------------------------------
  auto* cluster_cmd = app.add_subcommand("cluster", "Cluster a keyphrase list by PMI similarity");
  auto cl_index = std::make_shared<fs::path>();
  auto cl_list = std::make_shared<fs::path>();
  auto cl_target = std::make_shared<std::size_t>(kDefaultClusterTarget);
  auto cl_keep = std::make_shared<std::string>();
  auto cl_floor = std::make_shared<double>(kDefaultPmiFloor);
  auto cl_out = std::make_shared<fs::path>();
  cluster_cmd->add_option("index_file", *cl_index, "Index file")->required();
  cluster_cmd->add_option("list_json", *cl_list, "Keyphrase list JSON")->required();
  cluster_cmd->add_option("-k,--clusters", *cl_target, "Target cluster count");
  cluster_cmd->add_option("--keep", *cl_keep, "largest | drop-smallest:N[,min-second:M]");
  cluster_cmd->add_option("--floor", *cl_floor, "PMI floor");
  cluster_cmd->add_option("-o,--output", *cl_out, "Output JSON file (default: stdout)");
  cluster_cmd->callback([cl_index, cl_list, cl_target, cl_keep, cl_floor, cl_out] {
    const CorpusIndex index = CorpusIndex::load(*cl_index);
    const AnnotatedList list = annotate_hits(load_keyphrase_list(*cl_list), index);
    const ClusteredList clustered = cluster_with_fallback(list, index, *cl_target, *cl_floor);
    if (cl_keep->empty()) {
      emit_json(clusters_to_json(clustered), *cl_out);
      return;
    }
    const KeepSpec keep = parse_keep(*cl_keep);
    if (keep.mode == KeepSpec::Mode::largest) {
      emit_json(to_json(keep_largest_cluster(clustered)), *cl_out);
    } else {
      const ReductionResult reduced =
          remove_smallest_clusters(clustered, keep.drop_n, keep.min_second);
      emit_json(to_json(reduced.list), *cl_out);
    }
  });

  // ---- evaluate --------------------------------------------------------
  auto* eval_cmd = app.add_subcommand("evaluate", "Score a list against a gold standard");
  auto ev_index = std::make_shared<fs::path>();
  auto ev_list = std::make_shared<fs::path>();
  auto ev_gold = std::make_shared<fs::path>();
  auto ev_doc = std::make_shared<fs::path>();
  auto ev_all = std::make_shared<bool>(false);
  auto ev_config = std::make_shared<EvalConfig>();
  auto ev_out = std::make_shared<fs::path>();
  eval_cmd->add_option("index_file", *ev_index, "Index file")->required();
  eval_cmd->add_option("list_json", *ev_list, "Keyphrase list JSON")->required();
  eval_cmd->add_option("--gold", *ev_gold, "Gold standard file (one phrase per line)")
      ->required();
  eval_cmd->add_option("--doc", *ev_doc, "Source document (adds gold coverage fractions)");
  eval_cmd->add_flag("--all-variants", *ev_all, "Evaluate every pruning and clustering variant");
  eval_cmd->add_option("--floor", ev_config->pmi_floor, "PMI floor");
  eval_cmd->add_option("--min-hits", ev_config->min_hits, "Threshold prune minimum");
  eval_cmd->add_option("--tail", ev_config->tail_n, "Least-frequent prune size");
  eval_cmd->add_option("--low", ev_config->low, "Extremes prune: least frequent");
  eval_cmd->add_option("--high", ev_config->high, "Extremes prune: most frequent");
  eval_cmd->add_option("--cluster-target", ev_config->cluster_target, "Cluster count");
  eval_cmd->add_option("--drop", ev_config->drop_clusters, "Smallest clusters to remove");
  eval_cmd->add_option("-o,--output", *ev_out, "Output JSON file (default: stdout)");
  eval_cmd->callback([ev_index, ev_list, ev_gold, ev_doc, ev_all, ev_config, ev_out] {
    const CorpusIndex index = CorpusIndex::load(*ev_index);
    const AnnotatedList list = annotate_hits(load_keyphrase_list(*ev_list), index);
    const GoldStandard gold = load_gold(*ev_gold, list.doc_id);
    ev_config->all_variants = *ev_all;
    if (ev_doc->empty()) {
      emit_json(to_json(evaluate_variants(list, gold, index, *ev_config)), *ev_out);
    } else {
      const TokenizedDocument doc =
          tokenize_document(ev_doc->stem().string(), read_text_file(*ev_doc));
      emit_json(to_json(evaluate_variants(list, gold, index, *ev_config, &doc)), *ev_out);
    }
  });

  // ---- aggregate -------------------------------------------------------
  auto* agg_cmd = app.add_subcommand("aggregate", "Merge evaluation reports into a TSV table");
  auto agg_reports = std::make_shared<std::vector<fs::path>>();
  auto agg_out = std::make_shared<fs::path>();
  agg_cmd->add_option("reports", *agg_reports, "Evaluation report JSON files")
      ->required();
  agg_cmd->add_option("-o,--output", *agg_out, "Output TSV file (default: stdout)");
  agg_cmd->callback([agg_reports, agg_out] {
    std::vector<EvaluationReport> reports;
    reports.reserve(agg_reports->size());
    for (const auto& path : *agg_reports) reports.push_back(load_report(path));
    emit_text(aggregate_to_tsv(aggregate(reports)), *agg_out);
  });

  // ---- pipeline ----------------------------------------------------------
  auto* pipe_cmd = app.add_subcommand("pipeline", "Extract, enhance, cluster and evaluate a directory of documents");
  auto pp_index = std::make_shared<fs::path>();
  auto pp_docs = std::make_shared<fs::path>();
  auto pp_gold = std::make_shared<fs::path>();
  auto pp_prune = std::make_shared<std::string>();
  auto pp_config = std::make_shared<PipelineConfig>();
  pipe_cmd->add_option("index_file", *pp_index, "Index file")->required();
  pipe_cmd->add_option("docs_dir", *pp_docs, "Directory of .txt documents")
      ->required();
  pipe_cmd->add_option("--gold", *pp_gold, "Directory of <doc_id>.gold files");
  pipe_cmd->add_option("-o,--out-dir", pp_config->out_dir, "Artifact directory")->required();
  pipe_cmd->add_option("-k,--count", pp_config->k, "Keyphrases to extract (3-30)");
  pipe_cmd->add_option("--prune", *pp_prune, "threshold[:100] | tail[:5] | extremes[:3,2]");
  pipe_cmd->add_option("--floor", pp_config->pmi_floor, "PMI floor");
  pipe_cmd->add_option("--cluster-target", pp_config->cluster_target, "Cluster count");
  pipe_cmd->add_option("--stoplist", pp_config->stoplist_path, "Stoplist file");
  pipe_cmd->add_option("--jobs", pp_config->jobs, "Parallel document workers");
  pipe_cmd->callback([pp_index, pp_docs, pp_gold, pp_prune, pp_config] {
    pp_config->index_path = *pp_index;
    if (!pp_prune->empty()) {
      const PruneSpec spec = parse_prune(*pp_prune);
      pp_config->prune = spec.mode;
      pp_config->min_hits = spec.min_hits;
      pp_config->tail_n = spec.tail_n;
      pp_config->low = spec.low;
      pp_config->high = spec.high;
    }
    const std::vector<fs::path> docs = list_documents(*pp_docs);
    std::map<std::string, fs::path> gold_by_doc;
    if (!pp_gold->empty()) {
      for (const auto& doc : docs) {
        const fs::path candidate = *pp_gold / (doc.stem().string() + ".gold");
        if (fs::exists(candidate)) gold_by_doc[doc.stem().string()] = candidate;
      }
    }
    const PipelineResult result = run_pipeline(*pp_config, docs, gold_by_doc);
    std::cout << result.documents << " documents\n";
    if (!result.ok()) {
      for (const auto& error : result.errors) std::cerr << "error: " << error << '\n';
      throw PipelineFailure(std::to_string(result.errors.size()) + " documents failed");
    }
  });

  // ---- seed-fixtures -----------------------------------------------------
  auto* seed_cmd = app.add_subcommand("seed-fixtures", "Write the synthetic fixture corpus (corpus/, docs/, gold/)");
  auto seed_dir = std::make_shared<fs::path>();
  auto seed_value = std::make_shared<std::uint64_t>(11);
  seed_cmd->add_option("dir", *seed_dir, "Target directory")->required();
  seed_cmd->add_option("--seed", *seed_value, "Generator seed");
  seed_cmd->callback([seed_dir, seed_value] {
    fixtures::write_pipeline_fixture(*seed_dir, *seed_value);
    std::cout << "fixtures written: " << seed_dir->string() << '\n';
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"keylift: keyphrase list post-processing and evaluation"};
  app.require_subcommand(1);
  register_commands(app);
  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const IndexFormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const JsonFormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const FingerprintMismatchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
