#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "keylift/text.hpp"

namespace keylift::fixtures {

// Deterministic synthetic corpora for the test and acceptance suites. All
// generators use a self-contained splitmix64 stream so outputs are identical
// across platforms and standard libraries.

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform-ish value in [0, n); n must be > 0.
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

// n_docs documents of random tokens over a small vocabulary; exercises
// df/co_df against a full-scan oracle.
std::vector<TokenizedDocument> count_oracle_corpus(std::uint64_t seed = 7, std::size_t n_docs = 200);

// Vocabulary the count-oracle corpus draws from, for sampling query phrases.
std::vector<std::string> count_oracle_vocabulary();

// rows×cols grid corpus: document (r, c) holds tokens "row_r" and "col_c"
// plus a unique filler. Every (row, col) token pair satisfies
// co_df * N == df * df', i.e. exact statistical independence.
std::vector<TokenizedDocument> independence_corpus(std::size_t rows = 16, std::size_t cols = 16);

struct RawDocument {
  std::string doc_id;
  std::string text;
  std::vector<std::string> gold;  // author-style keyphrases, possibly not all in text
};

// Themed multi-sentence documents with gold keyphrase sets; three of them
// (the first three) are small enough to hand-check extraction scores.
std::vector<RawDocument> extraction_fixture(std::uint64_t seed = 11, std::size_t n_docs = 20);

// Extra background documents indexed alongside the extraction fixture so
// document frequencies are non-trivial. Includes one document holding only a
// misspelled token, giving that token a document frequency of exactly 1.
std::vector<RawDocument> background_corpus(std::uint64_t seed = 23, std::size_t n_docs = 40);

inline constexpr const char* kMisspelledToken = "zebrafsih";

// Writes corpus/, docs/ and gold/ under dir: the full fixture corpus as
// plain-text files, the documents to run the pipeline on, and per-document
// gold files.
void write_pipeline_fixture(const std::filesystem::path& dir, std::uint64_t seed = 11);

}  // namespace keylift::fixtures
