#include <array>
#include <string>
#include <vector>

#include "keylift/text.hpp"

namespace keylift {

namespace {

// English function words; boundary tokens of candidate phrases are checked
// against this list.
constexpr std::array kDefaultStopwords = {
    "a",       "about",   "above",   "after",   "again",  "against", "all",    "am",
    "an",      "and",     "any",     "are",     "as",     "at",      "be",     "because",
    "been",    "before",  "being",   "below",   "between", "both",   "but",    "by",
    "can",     "could",   "did",     "do",      "does",   "doing",   "down",   "during",
    "each",    "else",    "few",     "for",     "from",   "further", "had",    "has",
    "have",    "having",  "he",      "her",     "here",   "hers",    "him",    "his",
    "how",     "i",       "if",      "in",      "into",   "is",      "it",     "its",
    "itself",  "just",    "me",      "more",    "most",   "my",      "myself", "no",
    "nor",     "not",     "now",     "of",      "off",    "on",      "once",   "only",
    "or",      "other",   "ought",   "our",     "ours",   "out",     "over",   "own",
    "same",    "she",     "should",  "so",      "some",   "such",    "than",   "that",
    "the",     "their",   "theirs",  "them",    "then",   "there",   "these",  "they",
    "this",    "those",   "through", "to",      "too",    "under",   "until",  "up",
    "very",    "was",     "we",      "were",    "what",   "when",    "where",  "which",
    "while",   "who",     "whom",    "why",     "will",   "with",    "would",  "you",
    "your",    "yours",
};

}  // namespace

const Stoplist& Stoplist::builtin() {
  static const Stoplist instance{
      std::vector<std::string>(kDefaultStopwords.begin(), kDefaultStopwords.end())};
  return instance;
}

}  // namespace keylift
