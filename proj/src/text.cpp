#include "keylift/text.hpp"

#include <array>
#include <cctype>
#include <fstream>

#include "keylift/errors.hpp"

namespace keylift {

namespace {

bool is_token_char(unsigned char c) {
  // Non-ASCII bytes stay inside tokens so UTF-8 words survive untouched.
  return std::isalnum(c) != 0 || c >= 0x80;
}

bool is_sentence_end(unsigned char c) {
  return c == '.' || c == '!' || c == '?' || c == ':' || c == '\n';
}

char fold(unsigned char c) {
  return c < 0x80 ? static_cast<char>(std::tolower(c)) : static_cast<char>(c);
}

template <typename OnToken>
void scan(std::string_view text, OnToken&& on_token) {
  std::string current;
  bool pending_break = false;
  for (unsigned char c : text) {
    if (is_token_char(c)) {
      current.push_back(fold(c));
      continue;
    }
    if (!current.empty()) {
      on_token(std::move(current), pending_break);
      pending_break = false;
      current.clear();
    }
    if (is_sentence_end(c)) pending_break = true;
  }
  if (!current.empty()) on_token(std::move(current), pending_break);
}

}  // namespace

std::vector<std::string> normalize(std::string_view text) {
  std::vector<std::string> tokens;
  scan(text, [&](std::string token, bool) { tokens.push_back(std::move(token)); });
  return tokens;
}

TokenizedDocument tokenize_document(std::string doc_id, std::string_view text) {
  TokenizedDocument doc;
  doc.doc_id = std::move(doc_id);
  scan(text, [&](std::string token, bool sentence_start) {
    if (sentence_start && !doc.tokens.empty()) doc.sentence_breaks.push_back(doc.tokens.size());
    doc.tokens.push_back(std::move(token));
  });
  return doc;
}

std::string stem(std::string_view t) {
  auto ends = [&](std::string_view suffix) {
    return t.size() >= suffix.size() && t.substr(t.size() - suffix.size()) == suffix;
  };
  if (t.size() < 4) return std::string(t);
  if (ends("sses")) return std::string(t.substr(0, t.size() - 2));
  if (ends("ies")) return std::string(t.substr(0, t.size() - 3)) + "y";
  if (ends("ches") || ends("shes") || ends("xes") || ends("zes") || ends("oes"))
    return std::string(t.substr(0, t.size() - 2));
  if (ends("ss") || ends("us") || ends("is")) return std::string(t);
  if (ends("s")) return std::string(t.substr(0, t.size() - 1));
  return std::string(t);
}

std::string stem_key(const Phrase& phrase) {
  std::string key;
  for (const auto& token : phrase.tokens()) {
    if (!key.empty()) key.push_back(' ');
    key += stem(token);
  }
  return key;
}

Stoplist::Stoplist(std::vector<std::string> words) {
  for (auto& w : words) words_.insert(std::move(w));
}

Stoplist Stoplist::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read stoplist: " + path.string());
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    for (auto& token : normalize(line)) words.push_back(std::move(token));
  }
  return Stoplist(std::move(words));
}

bool Stoplist::contains(std::string_view token) const {
  return words_.find(std::string(token)) != words_.end();
}

}  // namespace keylift
