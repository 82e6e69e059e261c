#include "keylift/fixtures.hpp"

#include <array>
#include <fstream>
#include <set>
#include <string>

#include "keylift/errors.hpp"

namespace keylift::fixtures {

namespace {

constexpr std::array<const char*, 50> kCountVocabulary = {
    "ocean",   "coral",   "reef",    "tide",     "kelp",    "seal",    "otter",   "current",
    "shore",   "wave",    "harbor",  "vessel",   "anchor",  "sailor",  "chart",   "compass",
    "island",  "lagoon",  "basalt",  "granite",  "glacier", "moraine", "valley",  "ridge",
    "summit",  "meadow",  "forest",  "canopy",   "lichen",  "moss",    "falcon",  "heron",
    "plover",  "sandbar", "estuary", "plankton", "herring", "salmon",  "driftwood", "foam",
    "breeze",  "squall",  "fog",     "swell",    "buoy",    "jetty",   "pier",    "cove",
    "channel", "strait"};

struct Theme {
  std::vector<std::string> words;
  std::vector<std::string> bigrams;
  std::string absent;  // plausible gold phrase never generated into text
};

const std::vector<Theme>& themes() {
  static const std::vector<Theme> all = {
      {{"telescope", "nebula", "orbit", "star", "comet", "survey", "lens", "night"},
       {"radio telescope", "dwarf planet", "star cluster", "night sky", "orbital period"},
       "dark matter"},
      {{"flour", "yeast", "oven", "dough", "flavor", "salt", "butter", "recipe"},
       {"bread dough", "wild yeast", "stone oven", "pastry chef", "olive oil"},
       "tasting menu"},
      {{"reef", "coral", "tide", "kelp", "seal", "fish", "current", "shore"},
       {"coral reef", "tide pool", "kelp forest", "sea otter", "rocky shore"},
       "ocean trench"},
      {{"summit", "ridge", "glacier", "rope", "anchor", "route", "crag", "belay"},
       {"summit ridge", "ice axe", "base camp", "rock face", "alpine start"},
       "weather window"}};
  return all;
}

const std::vector<std::string>& glue_words() {
  static const std::vector<std::string> glue = {"the", "of", "and", "a", "in"};
  return glue;
}

std::string padded(std::size_t value, int width) {
  std::string s = std::to_string(value);
  while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
  return s;
}

// One generated sentence; used bigrams are collected for gold sampling.
std::string make_sentence(Rng& rng, const Theme& theme, std::vector<std::string>& used_bigrams) {
  const std::size_t n_units = 3 + rng.below(4);
  std::string sentence;
  for (std::size_t u = 0; u < n_units; ++u) {
    const std::uint64_t roll = rng.below(100);
    std::string unit;
    if (roll < 50) {
      unit = theme.words[rng.below(theme.words.size())];
    } else if (roll < 85) {
      unit = theme.bigrams[rng.below(theme.bigrams.size())];
      used_bigrams.push_back(unit);
    } else {
      unit = glue_words()[rng.below(glue_words().size())];
    }
    if (!sentence.empty()) sentence += ' ';
    sentence += unit;
  }
  sentence += '.';
  return sentence;
}

RawDocument make_generated_doc(Rng& rng, std::string doc_id, std::size_t min_sentences,
                               bool with_gold) {
  const Theme& theme = themes()[rng.below(themes().size())];
  RawDocument doc;
  doc.doc_id = std::move(doc_id);
  std::vector<std::string> used_bigrams;
  const std::size_t n_sentences = min_sentences + rng.below(3);
  for (std::size_t s = 0; s < n_sentences; ++s) {
    if (!doc.text.empty()) doc.text += ' ';
    doc.text += make_sentence(rng, theme, used_bigrams);
  }
  if (with_gold) {
    std::set<std::string> distinct(used_bigrams.begin(), used_bigrams.end());
    std::size_t taken = 0;
    for (const auto& phrase : distinct) {
      if (taken == 4) break;
      doc.gold.push_back(phrase);
      ++taken;
    }
    if (doc.gold.empty()) doc.gold.push_back(theme.words[rng.below(theme.words.size())]);
    if (rng.below(5) == 0) doc.gold.push_back(theme.absent);
  }
  return doc;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write fixture file: " + path.string());
  out << content;
  if (content.empty() || content.back() != '\n') out << '\n';
}

}  // namespace

std::uint64_t Rng::next() {
  // splitmix64: stable across platforms, unlike std:: distributions.
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) { return next() % n; }

std::vector<std::string> count_oracle_vocabulary() {
  return {kCountVocabulary.begin(), kCountVocabulary.end()};
}

std::vector<TokenizedDocument> count_oracle_corpus(std::uint64_t seed, std::size_t n_docs) {
  const auto vocab = count_oracle_vocabulary();
  Rng rng(seed);
  std::vector<TokenizedDocument> docs;
  docs.reserve(n_docs);
  for (std::size_t i = 0; i < n_docs; ++i) {
    TokenizedDocument doc;
    doc.doc_id = "count" + padded(i, 3);
    const std::size_t len = 30 + rng.below(51);
    doc.tokens.reserve(len + 1);
    for (std::size_t t = 0; t < len; ++t) doc.tokens.push_back(vocab[rng.below(vocab.size())]);
    // Round-robin injection guarantees every vocabulary token is attested.
    doc.tokens.push_back(vocab[i % vocab.size()]);
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<TokenizedDocument> independence_corpus(std::size_t rows, std::size_t cols) {
  std::vector<TokenizedDocument> docs;
  docs.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      TokenizedDocument doc;
      doc.doc_id = "grid" + std::to_string(r) + "x" + std::to_string(c);
      doc.tokens = {"row" + std::to_string(r), "col" + std::to_string(c),
                    "fill" + std::to_string(r) + "x" + std::to_string(c)};
      docs.push_back(std::move(doc));
    }
  }
  return docs;
}

std::vector<RawDocument> extraction_fixture(std::uint64_t seed, std::size_t n_docs) {
  std::vector<RawDocument> docs;
  docs.reserve(n_docs);

  // The first three documents are fixed literals small enough to score by
  // hand; the acceptance suite pins their expected top ranks.
  docs.push_back(
      {"fx001",
       "Harbor seals rest on the rocky shore. The harbor seals dive for herring near the kelp "
       "forest. Kelp forest canopies shelter young herring. Fishermen watch the harbor from the "
       "pier.",
       {"harbor seals", "kelp forest", "herring", "rocky shore"}});
  docs.push_back(
      {"fx002",
       "Sourdough bread needs a lively starter culture. The starter culture ferments flour and "
       "water overnight. Bakers fold the dough before the final proof. A hot oven gives "
       "sourdough bread its dark crust.",
       {"sourdough bread", "starter culture", "dough", "oven", "crusts"}});
  docs.push_back(
      {"fx003",
       "The glacier carves a deep valley. Meltwater from the glacier feeds a braided river. "
       "Climbers cross the braided river at dawn. Moraine ridges mark the old glacier edge.",
       {"glacier", "braided river", "meltwater", "moraine ridges", "ice sheet"}});

  Rng rng(seed);
  for (std::size_t i = docs.size(); i < n_docs; ++i)
    docs.push_back(make_generated_doc(rng, "fx" + padded(i + 1, 3), 3, /*with_gold=*/true));
  return docs;
}

std::vector<RawDocument> background_corpus(std::uint64_t seed, std::size_t n_docs) {
  std::vector<RawDocument> docs;
  docs.reserve(n_docs);
  // A document holding nothing but the misspelling pins its document
  // frequency to exactly 1 with zero co-occurrences.
  docs.push_back({"bg000", kMisspelledToken, {}});
  Rng rng(seed);
  for (std::size_t i = 1; i < n_docs; ++i)
    docs.push_back(make_generated_doc(rng, "bg" + padded(i, 3), 2, /*with_gold=*/false));
  return docs;
}

void write_pipeline_fixture(const std::filesystem::path& dir, std::uint64_t seed) {
  const auto extraction = extraction_fixture(seed);
  const auto background = background_corpus(seed + 12);

  std::filesystem::create_directories(dir / "corpus");
  std::filesystem::create_directories(dir / "docs");
  std::filesystem::create_directories(dir / "gold");

  for (const auto& doc : extraction) {
    write_text_file(dir / "corpus" / (doc.doc_id + ".txt"), doc.text);
    write_text_file(dir / "docs" / (doc.doc_id + ".txt"), doc.text);
    std::string gold_lines;
    for (const auto& phrase : doc.gold) gold_lines += phrase + "\n";
    write_text_file(dir / "gold" / (doc.doc_id + ".gold"), gold_lines);
  }
  for (const auto& doc : background)
    write_text_file(dir / "corpus" / (doc.doc_id + ".txt"), doc.text);
}

}  // namespace keylift::fixtures
