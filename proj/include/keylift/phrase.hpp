#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace keylift {

// A normalized token sequence of one to five tokens. Phrases are the unit
// the index counts and every similarity score is computed over.
class Phrase {
 public:
  static constexpr std::size_t kMaxTokens = 5;

  Phrase() = default;
  // Tokens must already be normalized (non-empty, no whitespace).
  // Throws ParameterError when the token count is outside [1, kMaxTokens].
  explicit Phrase(std::vector<std::string> tokens);

  // Normalizes free text and builds a phrase from the resulting tokens.
  static Phrase parse(std::string_view text);

  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  std::size_t size() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }

  // Tokens joined by single spaces; the display and JSON form.
  std::string text() const;

  bool operator==(const Phrase&) const = default;
  auto operator<=>(const Phrase&) const = default;

 private:
  std::vector<std::string> tokens_;
};

struct PhraseHash {
  std::size_t operator()(const Phrase& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const auto& t : p.tokens()) {
      h ^= std::hash<std::string>{}(t);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace keylift
