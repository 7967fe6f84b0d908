#include "ccomp/tokenizer.h"

#include <array>
#include <cctype>

namespace ccomp {
namespace {

constexpr std::array<std::string_view, 5> kFixedSentinels = {
    kSepToken, kLinkToken, kNumToken, kRefToken, kStartToken};

bool IsWordByte(unsigned char c) {
  return std::isalnum(c) != 0 || c >= 0x80;
}

bool IsSpaceByte(unsigned char c) { return std::isspace(c) != 0; }

// Length of the sentinel starting at text[pos], or 0.
std::size_t SentinelAt(std::string_view text, std::size_t pos) {
  std::string_view rest = text.substr(pos);
  for (std::string_view s : kFixedSentinels) {
    if (rest.starts_with(s)) return s.size();
  }
  constexpr std::string_view kMaskPrefix = "<mask_";
  if (rest.starts_with(kMaskPrefix)) {
    std::size_t i = kMaskPrefix.size();
    std::size_t digits = 0;
    while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) {
      ++i;
      ++digits;
    }
    if (digits > 0 && i < rest.size() && rest[i] == '>') return i + 1;
  }
  return 0;
}

}  // namespace

std::string MaskToken(int index) {
  return "<mask_" + std::to_string(index) + ">";
}

bool IsSentinel(std::string_view text) {
  return !text.empty() && SentinelAt(text, 0) == text.size();
}

TokenKind ClassifyToken(std::string_view text) {
  if (IsSentinel(text)) return TokenKind::kSentinel;
  if (!text.empty() && IsWordByte(static_cast<unsigned char>(text[0]))) {
    return TokenKind::kWord;
  }
  return TokenKind::kPunctuation;
}

TokenList Tokenize(std::string_view text) {
  TokenList out;
  std::size_t i = 0;
  while (i < text.size()) {
    auto c = static_cast<unsigned char>(text[i]);
    if (IsSpaceByte(c)) {
      ++i;
      continue;
    }
    if (std::size_t len = SentinelAt(text, i); len > 0) {
      out.push_back({std::string(text.substr(i, len)), TokenKind::kSentinel});
      i += len;
      continue;
    }
    if (IsWordByte(c)) {
      std::size_t start = i;
      while (i < text.size() && IsWordByte(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      out.push_back({std::string(text.substr(start, i - start)), TokenKind::kWord});
      continue;
    }
    out.push_back({std::string(1, text[i]), TokenKind::kPunctuation});
    ++i;
  }
  return out;
}

int CountWordTokens(std::span<const Token> tokens) {
  int n = 0;
  for (const Token& t : tokens) {
    if (t.kind != TokenKind::kPunctuation) ++n;
  }
  return n;
}

std::vector<std::string> TokenTexts(std::span<const Token> tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.text);
  return out;
}

TokenList FromTexts(std::span<const std::string> texts) {
  TokenList out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back({t, ClassifyToken(t)});
  return out;
}

std::string JoinTexts(std::span<const std::string> texts) {
  std::string out;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    if (i > 0) out += ' ';
    out += texts[i];
  }
  return out;
}

std::string JoinTokens(std::span<const Token> tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens[i].text;
  }
  return out;
}

}  // namespace ccomp
