#include "keylift/keyphrase.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "keylift/errors.hpp"
#include "keylift/text.hpp"

namespace keylift {

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::extractor_confidence:
      return "extractor_confidence";
    case Ordering::informativeness:
      return "informativeness";
    case Ordering::clustered:
      return "clustered";
  }
  return "extractor_confidence";
}

Ordering ordering_from_string(std::string_view s) {
  if (s == "extractor_confidence") return Ordering::extractor_confidence;
  if (s == "informativeness") return Ordering::informativeness;
  if (s == "clustered") return Ordering::clustered;
  throw JsonFormatError("unknown ordering tag: '" + std::string(s) + "'");
}

bool KeyphraseList::has_hit_counts() const {
  return std::all_of(keyphrases.begin(), keyphrases.end(),
                     [](const Keyphrase& k) { return k.hit_count.has_value(); });
}

std::vector<Phrase> KeyphraseList::phrases() const {
  std::vector<Phrase> out;
  out.reserve(keyphrases.size());
  for (const auto& k : keyphrases) out.push_back(k.phrase);
  return out;
}

nlohmann::ordered_json to_json(const KeyphraseList& list) {
  nlohmann::ordered_json j;
  j["doc_id"] = list.doc_id;
  j["ordering"] = std::string(to_string(list.ordering));
  if (!list.warning.empty()) j["warning"] = list.warning;
  auto& arr = j["keyphrases"] = nlohmann::ordered_json::array();
  for (const auto& k : list.keyphrases) {
    nlohmann::ordered_json entry;
    entry["text"] = k.phrase.text();
    entry["rank"] = k.extractor_rank;
    entry["score"] = k.score;
    if (k.hit_count) entry["hit_count"] = *k.hit_count;
    arr.push_back(std::move(entry));
  }
  return j;
}

KeyphraseList keyphrase_list_from_json(const nlohmann::json& j) {
  try {
    KeyphraseList list;
    list.doc_id = j.at("doc_id").get<std::string>();
    list.ordering = ordering_from_string(j.at("ordering").get<std::string>());
    if (j.contains("warning")) list.warning = j["warning"].get<std::string>();
    std::unordered_set<std::string> seen_texts;
    std::vector<bool> rank_seen;
    for (const auto& entry : j.at("keyphrases")) {
      Keyphrase k;
      k.phrase = Phrase::parse(entry.at("text").get<std::string>());
      k.extractor_rank = entry.at("rank").get<std::uint32_t>();
      k.score = entry.at("score").get<double>();
      if (entry.contains("hit_count")) k.hit_count = entry["hit_count"].get<std::uint64_t>();
      if (!seen_texts.insert(k.phrase.text()).second)
        throw JsonFormatError("duplicate keyphrase: '" + k.phrase.text() + "'");
      list.keyphrases.push_back(std::move(k));
    }
    rank_seen.assign(list.keyphrases.size() + 1, false);
    for (const auto& k : list.keyphrases) {
      if (k.extractor_rank == 0 || k.extractor_rank > list.keyphrases.size() ||
          rank_seen[k.extractor_rank])
        throw JsonFormatError("keyphrase ranks are not a permutation of 1.." +
                              std::to_string(list.keyphrases.size()));
      rank_seen[k.extractor_rank] = true;
    }
    return list;
  } catch (const nlohmann::json::exception& e) {
    throw JsonFormatError(std::string("malformed keyphrase list: ") + e.what());
  } catch (const ParameterError& e) {
    throw JsonFormatError(std::string("malformed keyphrase list: ") + e.what());
  }
}

KeyphraseList load_keyphrase_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw JsonFormatError("cannot read keyphrase list: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw JsonFormatError("malformed JSON in " + path.string() + ": " + e.what());
  }
  try {
    return keyphrase_list_from_json(j);
  } catch (const JsonFormatError& e) {
    throw JsonFormatError(path.string() + ": " + e.what());
  }
}

void write_json_file(const nlohmann::ordered_json& j, const std::filesystem::path& path) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw IoError("failed writing " + path.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace keylift
