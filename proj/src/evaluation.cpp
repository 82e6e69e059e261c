#include "keylift/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "keylift/errors.hpp"
#include "keylift/text.hpp"

namespace keylift {

namespace {

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

bool tokens_contiguous_in(const std::vector<std::string>& haystack,
                          const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  for (std::size_t start = 0; start + needle.size() <= haystack.size(); ++start) {
    bool match = true;
    for (std::size_t i = 0; i < needle.size(); ++i) {
      if (haystack[start + i] != needle[i]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

// Scores one reduced list against gold; an empty list marks the cell
// undefined instead of erroring out of the whole report.
VariantScore score_variant(std::string name, const AnnotatedList& variant,
                           const GoldStandard& gold, const CorpusIndex& index, double floor,
                           bool applied = true) {
  VariantScore score;
  score.name = std::move(name);
  score.list_size = variant.keyphrases.size();
  score.applied = applied;
  if (!variant.keyphrases.empty())
    score.similarity = set_similarity(index, variant.phrases(), gold.keyphrases, floor);
  return score;
}

AnnotatedList prefix_by_rank(const AnnotatedList& list, std::size_t n) {
  AnnotatedList out;
  out.doc_id = list.doc_id;
  out.ordering = Ordering::extractor_confidence;
  out.keyphrases = list.keyphrases;
  std::sort(out.keyphrases.begin(), out.keyphrases.end(),
            [](const Keyphrase& a, const Keyphrase& b) {
              return a.extractor_rank < b.extractor_rank;
            });
  if (out.keyphrases.size() > n) out.keyphrases.resize(n);
  return out;
}

std::optional<double> mean_of(const std::vector<double>& values) {
  if (values.empty()) return std::nullopt;
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace

GoldStandard load_gold(const std::filesystem::path& path, std::string doc_id) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open gold file: " + path.string());

  GoldStandard gold;
  gold.doc_id = doc_id.empty() ? path.stem().string() : std::move(doc_id);
  std::vector<std::string> seen;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() == '#') continue;
    auto tokens = normalize(line);
    if (tokens.empty()) continue;
    if (tokens.size() > Phrase::kMaxTokens) {
      tokens.resize(Phrase::kMaxTokens);
      gold.warning = "one or more phrases truncated to " + std::to_string(Phrase::kMaxTokens) +
                     " tokens";
    }
    Phrase phrase{std::move(tokens)};
    if (std::find(seen.begin(), seen.end(), phrase.text()) != seen.end()) continue;
    seen.push_back(phrase.text());
    gold.keyphrases.push_back(std::move(phrase));
  }
  if (gold.keyphrases.empty())
    throw ParameterError("gold file contains no keyphrases: " + path.string());
  return gold;
}

OverlapCounts string_overlap(const KeyphraseList& extracted, const GoldStandard& gold) {
  OverlapCounts counts;
  std::vector<bool> gold_used(gold.keyphrases.size(), false);
  std::vector<bool> extracted_used(extracted.keyphrases.size(), false);

  for (std::size_t e = 0; e < extracted.keyphrases.size(); ++e) {
    for (std::size_t g = 0; g < gold.keyphrases.size(); ++g) {
      if (gold_used[g] || extracted.keyphrases[e].phrase != gold.keyphrases[g]) continue;
      gold_used[g] = true;
      extracted_used[e] = true;
      ++counts.exact;
      break;
    }
  }
  counts.stemmed = counts.exact;
  for (std::size_t e = 0; e < extracted.keyphrases.size(); ++e) {
    if (extracted_used[e]) continue;
    const std::string key = stem_key(extracted.keyphrases[e].phrase);
    for (std::size_t g = 0; g < gold.keyphrases.size(); ++g) {
      if (gold_used[g] || key != stem_key(gold.keyphrases[g])) continue;
      gold_used[g] = true;
      ++counts.stemmed;
      break;
    }
  }
  return counts;
}

CoverageFractions gold_coverage(const GoldStandard& gold, const TokenizedDocument& doc) {
  std::vector<std::string> stemmed_doc;
  stemmed_doc.reserve(doc.tokens.size());
  for (const auto& t : doc.tokens) stemmed_doc.push_back(stem(t));

  std::size_t in_text = 0, variant = 0, absent = 0;
  for (const auto& phrase : gold.keyphrases) {
    if (tokens_contiguous_in(doc.tokens, phrase.tokens())) {
      ++in_text;
      continue;
    }
    std::vector<std::string> stemmed_phrase;
    stemmed_phrase.reserve(phrase.size());
    for (const auto& t : phrase.tokens()) stemmed_phrase.push_back(stem(t));
    if (tokens_contiguous_in(stemmed_doc, stemmed_phrase))
      ++variant;
    else
      ++absent;
  }
  const auto total = static_cast<double>(gold.keyphrases.size());
  CoverageFractions fractions;
  fractions.in_text = in_text / total;
  fractions.variant_form = variant / total;
  fractions.absent = absent / total;
  return fractions;
}

EvaluationReport evaluate_variants(const AnnotatedList& list, const GoldStandard& gold,
                                   const CorpusIndex& index, const EvalConfig& config,
                                   const TokenizedDocument* doc) {
  if (gold.keyphrases.empty()) throw ParameterError("gold standard is empty");

  EvaluationReport report;
  report.doc_id = list.doc_id;
  report.overlap = string_overlap(list, gold);
  if (doc != nullptr) report.coverage = gold_coverage(gold, *doc);
  for (auto& [gold_phrase, matched] :
       best_matches(index, gold.keyphrases, list.phrases(), config.pmi_floor)) {
    std::vector<std::string> texts;
    texts.reserve(matched.size());
    for (const auto& p : matched) texts.push_back(p.text());
    report.best_match_table.emplace_back(gold_phrase.text(), std::move(texts));
  }

  report.variants.push_back(
      score_variant(kVariantFull, list, gold, index, config.pmi_floor));
  if (!config.all_variants) return report;

  report.variants.push_back(score_variant(
      kVariantThreshold, prune_threshold(list, config.min_hits), gold, index, config.pmi_floor));
  report.variants.push_back(
      score_variant(kVariantLeastFrequent, prune_least_frequent(list, config.tail_n), gold, index,
                    config.pmi_floor));
  if (config.low + config.high <= list.keyphrases.size()) {
    report.variants.push_back(
        score_variant(kVariantExtremes, prune_extremes(list, config.low, config.high), gold,
                      index, config.pmi_floor));
  } else {
    // Too short to take both ends off; report the cell as undefined.
    VariantScore score;
    score.name = kVariantExtremes;
    score.applied = false;
    report.variants.push_back(std::move(score));
  }
  report.variants.push_back(
      score_variant(kVariantPrefix5, prefix_by_rank(list, 5), gold, index, config.pmi_floor));
  report.variants.push_back(
      score_variant(kVariantPrefix10, prefix_by_rank(list, 10), gold, index, config.pmi_floor));

  if (list.keyphrases.size() >= 2) {
    const ClusteredList clustered =
        cluster_keyphrases(list, index, config.cluster_target, config.pmi_floor);
    report.largest_cluster_size = clustered.largest_cluster_size();
    report.variants.push_back(score_variant(
        kVariantLargestCluster, keep_largest_cluster(clustered), gold, index, config.pmi_floor));
    const struct {
      const char* name;
      std::size_t min_second;
    } gates[] = {{kVariantDropClusters, 0},
                 {kVariantDropClustersMin3, 3},
                 {kVariantDropClustersMin4, 4}};
    for (const auto& gate : gates) {
      const ReductionResult reduced =
          remove_smallest_clusters(clustered, config.drop_clusters, gate.min_second);
      report.variants.push_back(score_variant(gate.name, reduced.list, gold, index,
                                              config.pmi_floor, reduced.applied));
    }
  } else {
    for (const char* name : {kVariantLargestCluster, kVariantDropClusters,
                             kVariantDropClustersMin3, kVariantDropClustersMin4}) {
      VariantScore score;
      score.name = name;
      score.applied = false;
      report.variants.push_back(std::move(score));
    }
  }
  return report;
}

nlohmann::ordered_json to_json(const EvaluationReport& report) {
  nlohmann::ordered_json j;
  j["doc_id"] = report.doc_id;
  j["overlap"] = {{"exact", report.overlap.exact}, {"stemmed", report.overlap.stemmed}};
  if (report.coverage) {
    j["coverage"] = {{"in_text", report.coverage->in_text},
                     {"variant_form", report.coverage->variant_form},
                     {"absent", report.coverage->absent}};
  }
  j["largest_cluster_size"] = report.largest_cluster_size;
  auto variants = nlohmann::ordered_json::array();
  for (const auto& v : report.variants) {
    nlohmann::ordered_json item;
    item["name"] = v.name;
    if (v.similarity.defined())
      item["similarity"] = v.similarity.value;
    else
      item["similarity"] = nullptr;
    item["pair_count"] = v.similarity.pair_count;
    item["undefined_pairs"] = v.similarity.undefined_pairs;
    item["list_size"] = v.list_size;
    item["applied"] = v.applied;
    variants.push_back(std::move(item));
  }
  j["variants"] = std::move(variants);
  auto matches = nlohmann::ordered_json::array();
  for (const auto& [gold_text, extracted] : report.best_match_table) {
    nlohmann::ordered_json item;
    item["gold"] = gold_text;
    item["extracted"] = extracted;
    matches.push_back(std::move(item));
  }
  j["best_matches"] = std::move(matches);
  return j;
}

EvaluationReport report_from_json(const nlohmann::json& j) {
  try {
    EvaluationReport report;
    report.doc_id = j.at("doc_id").get<std::string>();
    report.overlap.exact = j.at("overlap").at("exact").get<std::size_t>();
    report.overlap.stemmed = j.at("overlap").at("stemmed").get<std::size_t>();
    if (j.contains("coverage")) {
      CoverageFractions coverage;
      coverage.in_text = j.at("coverage").at("in_text").get<double>();
      coverage.variant_form = j.at("coverage").at("variant_form").get<double>();
      coverage.absent = j.at("coverage").at("absent").get<double>();
      report.coverage = coverage;
    }
    report.largest_cluster_size = j.at("largest_cluster_size").get<std::size_t>();
    for (const auto& item : j.at("variants")) {
      VariantScore v;
      v.name = item.at("name").get<std::string>();
      v.similarity.pair_count = item.at("pair_count").get<std::size_t>();
      v.similarity.undefined_pairs = item.at("undefined_pairs").get<std::size_t>();
      if (!item.at("similarity").is_null())
        v.similarity.value = item.at("similarity").get<double>();
      else if (v.similarity.pair_count != 0)
        throw JsonFormatError("variant '" + v.name + "' has pairs but a null similarity");
      v.list_size = item.at("list_size").get<std::size_t>();
      v.applied = item.at("applied").get<bool>();
      report.variants.push_back(std::move(v));
    }
    for (const auto& item : j.at("best_matches")) {
      report.best_match_table.emplace_back(
          item.at("gold").get<std::string>(),
          item.at("extracted").get<std::vector<std::string>>());
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw JsonFormatError(std::string("malformed evaluation report: ") + e.what());
  }
}

EvaluationReport load_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open report file: " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw JsonFormatError("cannot parse " + path.string() + ": " + e.what());
  }
  try {
    return report_from_json(j);
  } catch (const JsonFormatError& e) {
    throw JsonFormatError(path.string() + ": " + e.what());
  }
}

AggregateTable aggregate(const std::vector<EvaluationReport>& reports) {
  if (reports.empty()) throw ParameterError("nothing to aggregate");

  AggregateTable table;
  for (const auto& report : reports) {
    table.doc_ids.push_back(report.doc_id);
    for (const auto& v : report.variants)
      if (std::find(table.variant_names.begin(), table.variant_names.end(), v.name) ==
          table.variant_names.end())
        table.variant_names.push_back(v.name);
  }

  table.values.assign(reports.size(),
                      std::vector<std::optional<double>>(table.variant_names.size()));
  for (std::size_t d = 0; d < reports.size(); ++d) {
    for (const auto& v : reports[d].variants) {
      const auto col = static_cast<std::size_t>(
          std::find(table.variant_names.begin(), table.variant_names.end(), v.name) -
          table.variant_names.begin());
      if (v.applied && v.similarity.defined()) table.values[d][col] = v.similarity.value;
    }
  }

  table.means.resize(table.variant_names.size());
  table.skipped.assign(table.variant_names.size(), 0);
  for (std::size_t col = 0; col < table.variant_names.size(); ++col) {
    std::vector<double> defined;
    for (std::size_t d = 0; d < reports.size(); ++d) {
      if (table.values[d][col])
        defined.push_back(*table.values[d][col]);
      else
        ++table.skipped[col];
    }
    table.means[col] = mean_of(defined);
  }

  for (const char* gate :
       {kVariantDropClusters, kVariantDropClustersMin3, kVariantDropClustersMin4}) {
    GateAggregate agg;
    agg.name = gate;
    std::vector<double> full, largest, after;
    double cluster_sizes = 0.0, after_sizes = 0.0;
    for (const auto& report : reports) {
      const VariantScore* gate_score = nullptr;
      const VariantScore* full_score = nullptr;
      const VariantScore* largest_score = nullptr;
      for (const auto& v : report.variants) {
        if (v.name == gate) gate_score = &v;
        if (v.name == kVariantFull) full_score = &v;
        if (v.name == kVariantLargestCluster) largest_score = &v;
      }
      if (gate_score == nullptr || !gate_score->applied) continue;
      ++agg.documents;
      cluster_sizes += static_cast<double>(report.largest_cluster_size);
      after_sizes += static_cast<double>(gate_score->list_size);
      if (gate_score->similarity.defined()) after.push_back(gate_score->similarity.value);
      if (full_score != nullptr && full_score->similarity.defined())
        full.push_back(full_score->similarity.value);
      if (largest_score != nullptr && largest_score->similarity.defined())
        largest.push_back(largest_score->similarity.value);
    }
    agg.mean_full = mean_of(full);
    agg.mean_largest = mean_of(largest);
    agg.mean_after_removal = mean_of(after);
    if (agg.documents > 0) {
      agg.mean_largest_cluster_size = cluster_sizes / static_cast<double>(agg.documents);
      agg.mean_keyphrases_after = after_sizes / static_cast<double>(agg.documents);
    }
    table.gates.push_back(std::move(agg));
  }
  return table;
}

std::string aggregate_to_tsv(const AggregateTable& table) {
  std::ostringstream out;
  out << "doc_id";
  for (const auto& name : table.variant_names) out << '\t' << name;
  out << '\n';
  for (std::size_t d = 0; d < table.doc_ids.size(); ++d) {
    out << table.doc_ids[d];
    for (std::size_t col = 0; col < table.variant_names.size(); ++col)
      out << '\t' << (table.values[d][col] ? format_value(*table.values[d][col]) : "NA");
    out << '\n';
  }
  out << "average";
  for (const auto& mean : table.means) out << '\t' << (mean ? format_value(*mean) : "NA");
  out << '\n';
  out << "skipped";
  for (std::size_t count : table.skipped) out << '\t' << count;
  out << '\n';

  out << "\nheuristic\tdocuments\tsimilarity_full\tsimilarity_largest_cluster"
         "\tsimilarity_after_removal\tavg_largest_cluster_size\tavg_keyphrases_after\n";
  for (const auto& gate : table.gates) {
    out << gate.name << '\t' << gate.documents << '\t'
        << (gate.mean_full ? format_value(*gate.mean_full) : "NA") << '\t'
        << (gate.mean_largest ? format_value(*gate.mean_largest) : "NA") << '\t'
        << (gate.mean_after_removal ? format_value(*gate.mean_after_removal) : "NA") << '\t'
        << format_value(gate.mean_largest_cluster_size) << '\t'
        << format_value(gate.mean_keyphrases_after) << '\n';
  }
  return out.str();
}

}  // namespace keylift
