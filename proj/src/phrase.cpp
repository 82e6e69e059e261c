#include "keylift/phrase.hpp"

#include <cctype>

#include "keylift/errors.hpp"
#include "keylift/text.hpp"

namespace keylift {

Phrase::Phrase(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty() || tokens_.size() > kMaxTokens)
    throw ParameterError("phrase must have 1 to " + std::to_string(kMaxTokens) + " tokens, got " +
                         std::to_string(tokens_.size()));
  for (const auto& t : tokens_) {
    if (t.empty()) throw ParameterError("phrase contains an empty token");
    for (unsigned char c : t)
      if (std::isspace(c)) throw ParameterError("phrase token contains whitespace: '" + t + "'");
  }
}

Phrase Phrase::parse(std::string_view text) { return Phrase(normalize(text)); }

std::string Phrase::text() const {
  std::string out;
  for (const auto& t : tokens_) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

}  // namespace keylift
