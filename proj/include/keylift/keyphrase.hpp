#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "keylift/phrase.hpp"

namespace keylift {

enum class Ordering { extractor_confidence, informativeness, clustered };

std::string_view to_string(Ordering o);
Ordering ordering_from_string(std::string_view s);

struct Keyphrase {
  Phrase phrase;
  std::uint32_t extractor_rank = 0;  // 1-based confidence rank
  double score = 0.0;
  std::optional<std::uint64_t> hit_count;  // corpus document count, filled by the enhancer
};

struct KeyphraseList {
  std::string doc_id;
  std::vector<Keyphrase> keyphrases;
  Ordering ordering = Ordering::extractor_confidence;
  std::string warning;  // empty when nothing noteworthy happened

  std::size_t size() const noexcept { return keyphrases.size(); }
  bool has_hit_counts() const;
  std::vector<Phrase> phrases() const;
};

// A KeyphraseList whose entries all carry a hit count.
using AnnotatedList = KeyphraseList;

nlohmann::ordered_json to_json(const KeyphraseList& list);
// Throws JsonFormatError on parse failures, missing fields, ranks that are
// not a permutation of 1..k, or duplicate normalized phrases.
KeyphraseList keyphrase_list_from_json(const nlohmann::json& j);
KeyphraseList load_keyphrase_list(const std::filesystem::path& path);

// Writes via a temp file and rename so readers never observe partial output.
void write_json_file(const nlohmann::ordered_json& j, const std::filesystem::path& path);

}  // namespace keylift
