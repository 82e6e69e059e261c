#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "keylift/phrase.hpp"
#include "keylift/text.hpp"

namespace keylift {

// Immutable inverted index over a document collection. Supplies the document
// frequencies and co-document frequencies every probability estimate in this
// library is derived from. Safe for concurrent reads once built.
class CorpusIndex {
 public:
  // Throws ParameterError on an empty collection, DuplicateDocIdError on a
  // repeated doc_id.
  static CorpusIndex build(const std::vector<TokenizedDocument>& docs);

  std::size_t doc_count() const noexcept { return doc_ids_.size(); }
  const std::vector<std::string>& doc_ids() const noexcept { return doc_ids_; }
  const std::string& fingerprint() const noexcept { return fingerprint_; }

  // Number of documents containing the phrase as a contiguous token sequence.
  // A document counts once regardless of repeats; unseen phrases yield 0.
  std::uint32_t doc_frequency(const Phrase& p) const;

  // Number of documents containing both phrases. Symmetric;
  // co_document_frequency(p, p) == doc_frequency(p).
  std::uint32_t co_document_frequency(const Phrase& p, const Phrase& q) const;

  // Sorted internal ids of the documents matching the phrase. The building
  // block for batched pair queries.
  std::vector<std::uint32_t> matching_docs(const Phrase& p) const;

  // Binary little-endian file, magic "KLIX", format version byte, embedded
  // normalization fingerprint.
  void save(const std::filesystem::path& path) const;
  // Throws IndexFormatError on a missing/corrupt file and
  // FingerprintMismatchError when the stored fingerprint differs from the
  // library's.
  static CorpusIndex load(const std::filesystem::path& path);

 private:
  struct Posting {
    std::uint32_t doc = 0;
    std::vector<std::uint32_t> positions;  // ascending token offsets
  };

  const std::vector<Posting>* postings_for(const std::string& token) const;
  static bool doc_has_phrase_at(const std::vector<const std::vector<Posting>*>& lists,
                                std::uint32_t doc);

  std::vector<std::string> doc_ids_;
  std::vector<std::uint32_t> doc_lengths_;
  std::unordered_map<std::string, std::vector<Posting>> postings_;  // docs ascending
  std::string fingerprint_{kNormalizationFingerprint};
};

}  // namespace keylift
