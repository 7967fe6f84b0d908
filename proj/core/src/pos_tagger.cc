#include "ccomp/pos_tagger.h"

#include <cctype>
#include <set>
#include <unordered_map>

#include "ccomp/tokenizer.h"
#include "text_util.h"

namespace ccomp {
namespace {

using Lexicon = std::unordered_map<std::string, PosTag>;

const Lexicon& ClosedClass() {
  static const Lexicon kLexicon = [] {
    Lexicon lex;
    auto add = [&](PosTag tag, std::initializer_list<const char*> words) {
      for (const char* w : words) lex.emplace(w, tag);
    };
    add(PosTag::kDet, {"the", "a", "an", "this", "that", "these", "those", "each", "every",
                       "any", "some", "no", "all", "both", "either", "neither", "another",
                       "such", "whatever"});
    add(PosTag::kPron, {"i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us",
                        "them", "my", "your", "his", "its", "our", "their", "mine", "yours",
                        "itself", "themselves", "himself", "herself", "ourselves", "yourself",
                        "who", "whom", "whose", "which", "what", "something", "anything",
                        "nothing", "everything", "someone", "anyone", "everyone", "none"});
    add(PosTag::kAdp, {"of", "in", "on", "at", "by", "for", "with", "from", "into", "onto",
                       "over", "under", "about", "after", "before", "between", "through",
                       "during", "without", "within", "against", "among", "upon", "via", "per",
                       "like", "than", "since", "because", "if", "whether", "while", "until",
                       "unless", "although", "though", "as", "across", "along", "around",
                       "behind", "below", "above", "beyond", "despite", "except", "inside",
                       "outside", "toward", "towards", "near", "throughout", "whereas"});
    add(PosTag::kConj, {"and", "or", "but", "nor", "plus"});
    add(PosTag::kPrt, {"to"});
    add(PosTag::kNum, {"zero", "one", "two", "three", "four", "five", "six", "seven", "eight",
                       "nine", "ten", "eleven", "twelve", "hundred", "thousand", "million",
                       "billion"});
    add(PosTag::kAdv, {"not", "also", "only", "just", "then", "now", "very", "too", "already",
                       "always", "never", "often", "here", "there", "where", "when", "how",
                       "why", "again", "still", "even", "however", "otherwise", "instead",
                       "else", "rather", "quite", "almost", "soon", "later", "once", "twice",
                       "perhaps", "maybe", "more", "most", "less", "least", "well", "ever",
                       "so", "thus", "hence", "therefore", "yet", "anyway", "sometimes",
                       "together", "away", "back", "up", "down", "out", "first"});
    add(PosTag::kAdj, {"new", "old", "current", "empty", "true", "false", "valid", "invalid",
                       "given", "same", "other", "different", "last", "next", "previous",
                       "default", "specific", "whole", "full", "single", "multiple",
                       "possible", "available", "large", "small", "big", "long", "short",
                       "high", "low", "good", "bad", "simple", "main", "final", "public",
                       "private", "static", "local", "global", "unique", "correct",
                       "necessary", "optional", "required", "internal", "external",
                       "original", "actual", "real", "few", "many", "much", "several", "own",
                       "certain", "particular", "left", "right", "top", "bottom", "initial",
                       "additional", "appropriate", "proper", "relevant", "entire", "able",
                       "unable", "ready", "sure", "due", "null", "non", "negative",
                       "positive", "maximum", "minimum", "safe", "unsafe", "same", "exact",
                       "raw", "whole", "free", "busy", "dirty", "clean", "fresh", "blank",
                       "abstract", "concrete", "generic", "common", "special", "standard",
                       "various", "similar", "temporary", "permanent", "early", "late",
                       "underlying", "following", "remaining", "existing", "missing",
                       "pending", "nested", "sorted", "cached"});
    add(PosTag::kVerb, {"is", "are", "was", "were", "be", "been", "being", "am", "has", "have",
                        "had", "do", "does", "did", "can", "could", "will", "would", "shall",
                        "should", "may", "might", "must"});
    return lex;
  }();
  return kLexicon;
}

const std::set<std::string, std::less<>>& VerbStems() {
  static const std::set<std::string, std::less<>> kStems = {
      "get", "set", "return", "create", "compute", "check", "add", "remove", "find", "use",
      "make", "take", "give", "call", "throw", "read", "write", "load", "save", "parse",
      "convert", "update", "initialize", "initialise", "build", "handle", "process",
      "validate", "run", "start", "stop", "open", "close", "send", "receive", "print",
      "append", "apply", "store", "fetch", "copy", "move", "sort", "filter", "merge", "split",
      "clear", "reset", "register", "resolve", "render", "format", "generate", "determine",
      "contain", "represent", "indicate", "ensure", "need", "allow", "try", "wrap", "ignore",
      "skip", "iterate", "increment", "decrement", "calculate", "compare", "match", "test",
      "verify", "wait", "notify", "lock", "unlock", "delete", "insert", "replace",
      "construct", "invoke", "execute", "perform", "fill", "keep", "put", "provide",
      "support", "accept", "reject", "assign", "encode", "decode", "serialize",
      "deserialize", "configure", "retrieve", "override", "implement", "extend", "specify",
      "define", "describe", "say", "know", "see", "look", "want", "go", "come", "happen",
      "exist", "fail", "succeed", "change", "show", "hide", "enable", "disable", "select",
      "mark", "count", "collect", "reuse", "release", "flush", "emit", "trigger", "cache",
      "log", "report", "let", "create", "close", "connect", "disconnect", "listen", "map",
      "reduce", "scan", "search", "query", "consume", "produce", "print", "display", "draw",
      "schedule", "cancel", "refresh", "transform", "normalize", "sanitize", "escape",
      "truncate", "trim", "pad", "join", "concatenate", "compress", "decompress", "hash",
      "sign", "encrypt", "decrypt", "authenticate", "authorize", "respond", "request",
      "declare", "mean", "require", "depend", "belong", "include", "exclude", "prevent",
      "avoid", "handle", "catch", "raise", "signal", "visit", "traverse", "walk", "expand",
      "collapse", "attach", "detach", "bind", "unbind", "mount", "wrap", "unwrap", "align",
      "grow", "shrink", "resize", "fit", "drop", "push", "pop", "peek", "poll", "offer",
      "become", "remain", "seem", "hold", "contain", "leave", "stay", "begin", "end",
      "finish", "complete", "ask", "tell", "note", "print", "dump", "lookup", "compile",
      "install", "deploy", "notify", "advance", "swap", "reverse", "shift", "rotate"};
  return kStems;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() + 1 && s.ends_with(suffix);
}

bool IsAllDigits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return !s.empty();
}

// camelCase, PascalCase with inner capitals, or letters mixed with digits.
bool LooksLikeIdentifier(std::string_view s) {
  bool has_lower = false;
  bool inner_upper = false;
  bool has_digit = false;
  bool has_alpha = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::islower(c)) has_lower = true;
    if (std::isupper(c) && i > 0 && has_lower) inner_upper = true;
    if (std::isdigit(c)) has_digit = true;
    if (std::isalpha(c)) has_alpha = true;
  }
  return inner_upper || (has_digit && has_alpha);
}

bool IsVerbForm(const std::string& w) {
  if (VerbStems().contains(w)) return true;
  if (w.size() > 3 && w.ends_with("ies") && VerbStems().contains(w.substr(0, w.size() - 3) + "y")) {
    return true;
  }
  if (w.size() > 2 && w.ends_with("es") && VerbStems().contains(w.substr(0, w.size() - 2))) {
    return true;
  }
  if (w.size() > 1 && w.ends_with('s') && VerbStems().contains(w.substr(0, w.size() - 1))) {
    return true;
  }
  return false;
}

// Tag without context, plus whether the decision came from a suffix guess.
std::pair<PosTag, bool> TagWord(const std::string& token) {
  if (IsSentinel(token)) return {PosTag::kX, false};
  if (ClassifyToken(token) == TokenKind::kPunctuation) return {PosTag::kPunct, false};
  if (IsAllDigits(token)) return {PosTag::kNum, false};
  if (LooksLikeIdentifier(token)) return {PosTag::kX, false};

  const std::string w = ToLower(token);
  if (auto it = ClosedClass().find(w); it != ClosedClass().end()) return {it->second, false};
  if (IsVerbForm(w)) return {PosTag::kVerb, false};
  if (w.size() == 1) return {PosTag::kX, false};  // single-letter variable

  if (EndsWith(w, "ly")) return {PosTag::kAdv, true};
  if (EndsWith(w, "ing") || EndsWith(w, "ed")) return {PosTag::kVerb, true};
  for (std::string_view suffix : {"tion", "sion", "ment", "ness", "ity", "ence", "ance", "ism",
                                  "ship", "er", "or", "ist", "age"}) {
    if (EndsWith(w, suffix)) return {PosTag::kNoun, true};
  }
  for (std::string_view suffix : {"able", "ible", "ful", "ous", "ive", "less", "ic", "al"}) {
    if (EndsWith(w, suffix)) return {PosTag::kAdj, true};
  }
  return {PosTag::kNoun, true};
}

bool IsAuxiliary(const std::string& w) {
  const std::string lower = ToLower(w);
  auto it = ClosedClass().find(lower);
  return it != ClosedClass().end() && it->second == PosTag::kVerb;
}

}  // namespace

std::string_view ToString(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun: return "NOUN";
    case PosTag::kVerb: return "VERB";
    case PosTag::kAdj: return "ADJ";
    case PosTag::kAdv: return "ADV";
    case PosTag::kPron: return "PRON";
    case PosTag::kDet: return "DET";
    case PosTag::kAdp: return "ADP";
    case PosTag::kNum: return "NUM";
    case PosTag::kConj: return "CONJ";
    case PosTag::kPrt: return "PRT";
    case PosTag::kPunct: return "PUNCT";
    case PosTag::kX: return "X";
  }
  return "X";
}

std::optional<PosTag> ParsePosTag(std::string_view text) {
  for (int i = 0; i < kPosTagCount; ++i) {
    auto tag = static_cast<PosTag>(i);
    if (ToString(tag) == text) return tag;
  }
  return std::nullopt;
}

std::vector<PosTag> TagPartsOfSpeech(std::span<const std::string> tokens) {
  std::vector<PosTag> tags;
  tags.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto [tag, guessed] = TagWord(tokens[i]);
    PosTag prev = i > 0 ? tags[i - 1] : PosTag::kPunct;
    if (tag == PosTag::kVerb && !IsAuxiliary(tokens[i])) {
      bool nominal_slot = prev == PosTag::kDet || prev == PosTag::kAdj ||
                          (prev == PosTag::kPron && i > 0 &&
                           ClosedClass().count(ToLower(tokens[i - 1])) &&
                           std::set<std::string>{"its", "my", "your", "his", "her", "our",
                                                 "their", "whose"}
                               .count(ToLower(tokens[i - 1])));
      if (nominal_slot) {
        // "the sorted list" / "the return value"
        bool next_is_word = i + 1 < tokens.size() &&
                            ClassifyToken(tokens[i + 1]) == TokenKind::kWord;
        tag = (guessed && next_is_word) ? PosTag::kAdj : PosTag::kNoun;
      }
    }
    if (prev == PosTag::kPrt && guessed && tag == PosTag::kNoun) tag = PosTag::kVerb;  // "to foo"
    tags.push_back(tag);
  }
  return tags;
}

std::string_view ToString(PosGroup group) {
  switch (group) {
    case PosGroup::kAdj: return "ADJ";
    case PosGroup::kAdv: return "ADV";
    case PosGroup::kDet: return "DET";
    case PosGroup::kPrn: return "PRN";
    case PosGroup::kNoun: return "NOUN";
    case PosGroup::kVerb: return "VERB";
    case PosGroup::kOth: return "OTH";
  }
  return "OTH";
}

PosGroup GroupOf(PosTag tag) {
  switch (tag) {
    case PosTag::kAdj: return PosGroup::kAdj;
    case PosTag::kAdv: return PosGroup::kAdv;
    case PosTag::kDet: return PosGroup::kDet;
    case PosTag::kPron: return PosGroup::kPrn;
    case PosTag::kNoun: return PosGroup::kNoun;
    case PosTag::kVerb: return PosGroup::kVerb;
    default: return PosGroup::kOth;
  }
}

}  // namespace ccomp
