#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "keylift/phrase.hpp"

namespace keylift {

// Identifies the normalization rules an index was built with. Stored in the
// index file; counts from an index with a different fingerprint are rejected.
inline constexpr std::string_view kNormalizationFingerprint =
    "keylift/norm1:ascii-lower,alnum-tokens";

// Lowercases ASCII letters, treats every other ASCII non-alphanumeric byte as
// a separator, keeps non-ASCII bytes as token characters, and drops empty
// tokens. Idempotent token-wise.
std::vector<std::string> normalize(std::string_view text);

struct TokenizedDocument {
  std::string doc_id;
  std::vector<std::string> tokens;
  // Token indices where a new sentence starts (never 0, strictly increasing).
  // A candidate phrase may not span one of these boundaries.
  std::vector<std::size_t> sentence_breaks;
};

// Tokenizes raw text, recording sentence boundaries at '.', '!', '?', ':' and
// newline.
TokenizedDocument tokenize_document(std::string doc_id, std::string_view text);

// Fixed plural suffix-stripper used only when comparing phrases for
// duplicates or stemmed matches, never for index queries.
std::string stem(std::string_view token);

// Stemmed tokens joined by spaces; the dedup key for a phrase.
std::string stem_key(const Phrase& phrase);

class Stoplist {
 public:
  Stoplist() = default;
  explicit Stoplist(std::vector<std::string> words);

  // The built-in list of ~120 English function words.
  static const Stoplist& builtin();
  // One word per line, '#' lines are comments. Throws IoError.
  static Stoplist from_file(const std::filesystem::path& path);

  bool contains(std::string_view token) const;
  std::size_t size() const noexcept { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

}  // namespace keylift
