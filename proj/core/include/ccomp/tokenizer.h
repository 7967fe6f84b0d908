#ifndef CCOMP_TOKENIZER_H_
#define CCOMP_TOKENIZER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ccomp {

enum class TokenKind { kWord, kPunctuation, kSentinel };

struct Token {
  std::string text;
  TokenKind kind = TokenKind::kWord;

  friend bool operator==(const Token&, const Token&) = default;
};

using TokenList = std::vector<Token>;

// Fixed sentinel vocabulary.
inline constexpr std::string_view kSepToken = "<sep>";
inline constexpr std::string_view kLinkToken = "_LINK_";
inline constexpr std::string_view kNumToken = "_NUM_";
inline constexpr std::string_view kRefToken = "_REF_";
inline constexpr std::string_view kStartToken = "<s>";

// Bumped whenever Tokenize() output changes for some input.
inline constexpr std::string_view kTokenizerVersion = "ccomp-words-1";

std::string MaskToken(int index);  // "<mask_N>"

bool IsSentinel(std::string_view text);

// Classifies an already-split token text.
TokenKind ClassifyToken(std::string_view text);

// Splits text into word, punctuation and sentinel tokens. Sentinels are kept
// whole, runs of letters/digits (and bytes >= 0x80) form words, and every
// other non-space character is its own punctuation token.
TokenList Tokenize(std::string_view text);

// Number of non-punctuation tokens.
int CountWordTokens(std::span<const Token> tokens);

std::vector<std::string> TokenTexts(std::span<const Token> tokens);
TokenList FromTexts(std::span<const std::string> texts);

// Joins token texts with single spaces.
std::string JoinTokens(std::span<const Token> tokens);
std::string JoinTexts(std::span<const std::string> texts);

}  // namespace ccomp

#endif  // CCOMP_TOKENIZER_H_
