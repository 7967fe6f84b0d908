#include "ccomp/preprocess.h"

#include <algorithm>
#include <array>
#include <regex>
#include <set>
#include <unordered_set>

#include "ccomp/errors.h"
#include "ccomp/tokenizer.h"
#include "json_util.h"
#include "text_util.h"

namespace ccomp {
namespace {

const std::set<std::string, std::less<>>& CodeKeywords() {
  static const std::set<std::string, std::less<>> kKeywords = {
      "if",      "else",    "for",     "while",        "do",       "switch",
      "case",    "return",  "break",   "continue",     "try",      "catch",
      "finally", "throw",   "new",     "int",          "long",     "short",
      "byte",    "char",    "boolean", "float",        "double",   "void",
      "String",  "final",   "static",  "public",       "private",  "protected",
      "this",    "super",   "import",  "package",      "assert",   "synchronized",
      "var"};
  return kKeywords;
}

const std::set<std::string, std::less<>>& TypeKeywords() {
  static const std::set<std::string, std::less<>> kTypes = {
      "int", "long", "short", "byte", "char", "boolean", "float", "double",
      "String", "final", "var"};
  return kTypes;
}

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

std::string_view LeadingIdentifier(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && IsIdentChar(s[i])) ++i;
  return s.substr(0, i);
}

std::string ReplaceAll(const std::string& text, const std::regex& re,
                       std::string_view replacement) {
  return std::regex_replace(text, re, std::string(replacement));
}

// Replaces every match with `token`, adding a space only where the token
// would otherwise touch a letter or digit.
std::string ReplaceWithSentinel(const std::string& text, const std::regex& re,
                                std::string_view token) {
  auto word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  std::string out;
  std::size_t last = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), re);
       it != std::sregex_iterator(); ++it) {
    std::size_t pos = static_cast<std::size_t>(it->position());
    std::size_t end = pos + static_cast<std::size_t>(it->length());
    out.append(text, last, pos - last);
    if (pos > 0 && word(text[pos - 1])) out += ' ';
    out += token;
    if (end < text.size() && word(text[end])) out += ' ';
    last = end;
  }
  out.append(text, last, std::string::npos);
  return out;
}

std::string ReplaceUrls(const std::string& text) {
  static const std::regex kUrl(R"((?:\b(?:https?|ftp)://|\bwww\.)[^\s<>"]+)",
                               std::regex::icase);
  std::string out;
  auto begin = std::sregex_iterator(text.begin(), text.end(), kUrl);
  std::size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    std::size_t pos = static_cast<std::size_t>(it->position());
    std::string_view match(text.data() + pos, static_cast<std::size_t>(it->length()));
    // Sentence punctuation after a URL is not part of it.
    std::size_t keep = match.size();
    while (keep > 0 && std::string_view(".,;:!?)]}'\"").find(match[keep - 1]) !=
                           std::string_view::npos) {
      --keep;
    }
    out.append(text, last, pos - last);
    out += kLinkToken;
    out.append(match.substr(keep));
    last = pos + match.size();
  }
  out.append(text, last);
  return out;
}

std::string ReplaceDates(const std::string& text) {
  static const std::string kMonth =
      "(?:Jan(?:uary)?|Feb(?:ruary)?|Mar(?:ch)?|Apr(?:il)?|May|June?|July?|"
      "Aug(?:ust)?|Sep(?:t(?:ember)?)?|Oct(?:ober)?|Nov(?:ember)?|Dec(?:ember)?)";
  static const std::array<std::regex, 4> kDates = {
      std::regex(R"(\b\d{4}-\d{1,2}-\d{1,2}\b)"),
      std::regex(R"(\b(?:\d{1,2}/\d{1,2}/\d{2,4}|\d{4}/\d{1,2}/\d{1,2})\b)"),
      std::regex("\\b" + kMonth + "\\.?\\s+\\d{1,2}(?:st|nd|rd|th)?,?\\s+\\d{4}\\b"),
      std::regex("\\b\\d{1,2}(?:st|nd|rd|th)?\\s+" + kMonth + "\\.?,?\\s+\\d{4}\\b"),
  };
  std::string out = text;
  for (const std::regex& re : kDates) out = ReplaceAll(out, re, kNumToken);
  return out;
}

std::string StripTags(std::string text) {
  static const std::regex kTag(R"(</?[A-Za-z][A-Za-z0-9]*(?:\s[^<>]*)?/?>)");
  // Stripping can expose a new tag ("<<p>b>"); iterate to a fixpoint.
  while (true) {
    std::string next = ReplaceAll(text, kTag, " ");
    if (next == text) return text;
    text = std::move(next);
  }
}

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

enum class Removal { kNone, kShort, kSatd, kCode };

// Applies `predicate` to every comment of `inst`; drops failing ones.
// Returns the number removed.
template <typename Pred>
int PruneComments(MethodInstance& inst, Pred keep) {
  int removed = 0;
  if (inst.javadoc && !keep(*inst.javadoc, CommentKind::kJavadoc)) {
    inst.javadoc.reset();
    ++removed;
  }
  auto& inner = inst.inner_comments;
  auto it = std::remove_if(inner.begin(), inner.end(), [&](const InnerComment& c) {
    return !keep(c.text, CommentKind::kInner);
  });
  removed += static_cast<int>(inner.end() - it);
  inner.erase(it, inner.end());
  return removed;
}

bool HasComments(const MethodInstance& inst) {
  return inst.javadoc.has_value() || !inst.inner_comments.empty();
}

struct InstanceOutcome {
  std::optional<MethodInstance> kept;
  long long FilterReport::*removed_by = nullptr;
  FilterReport::CommentCounters comments;
};

InstanceOutcome ProcessInstance(MethodInstance inst, const PreprocessConfig& config) {
  InstanceOutcome out;
  if (config.token_budget_filter && !PassesTokenBudget(inst, config.token_budget)) {
    out.removed_by = &FilterReport::removed_token_budget;
    return out;
  }
  if (config.ascii_filter && HasNonAscii(inst)) {
    out.removed_by = &FilterReport::removed_non_ascii;
    return out;
  }

  auto stage = [&](bool enabled, auto keep, long long FilterReport::CommentCounters::*counter,
                   long long FilterReport::*instance_counter) {
    if (!enabled || !HasComments(inst)) return true;
    out.comments.*counter += PruneComments(inst, keep);
    if (!HasComments(inst)) {
      out.removed_by = instance_counter;
      return false;
    }
    return true;
  };
  auto long_enough = [&](const std::string& text, CommentKind) {
    return IsLongEnough(text, config.min_comment_words);
  };
  auto not_satd = [](const std::string& text, CommentKind) { return !IsSatd(text); };
  auto not_code = [](const std::string& text, CommentKind) { return !LooksLikeCode(text); };

  using C = FilterReport::CommentCounters;
  // The comment predicates commute, so their order only decides which
  // counter a comment failing several of them lands in: the more specific
  // SATD and commented-code reasons win over plain shortness.
  auto comment_filters = [&] {
    return stage(config.satd_filter, not_satd, &C::removed_satd, &FilterReport::removed_satd) &&
           stage(config.commented_code_filter, not_code, &C::removed_commented_code,
                 &FilterReport::removed_commented_code) &&
           stage(config.length_filter, long_enough, &C::removed_short_comment,
                 &FilterReport::removed_short_comment);
  };
  if (!comment_filters()) return out;

  if (config.normalize) {
    if (inst.javadoc) *inst.javadoc = NormalizeComment(*inst.javadoc, CommentKind::kJavadoc);
    for (InnerComment& c : inst.inner_comments) {
      c.text = NormalizeComment(c.text, CommentKind::kInner);
    }
    // Normalization can shorten a comment or expose a marker hidden behind
    // markup; the earlier predicates are re-applied to the normalized text.
    if (!comment_filters()) return out;
  }

  if (config.orphan_filter && !inst.inner_comments.empty()) {
    int removed = 0;
    inst = RemoveOrphanComments(inst, &removed);
    out.comments.removed_orphan += removed;
    if (!HasComments(inst)) {
      out.removed_by = &FilterReport::removed_orphan;
      return out;
    }
  }

  if (config.merge_inline && inst.inner_comments.size() > 1) {
    std::size_t before = inst.inner_comments.size();
    inst.inner_comments = MergeAdjacentInlineComments(inst.inner_comments, inst.method_code);
    out.comments.merged_inline += static_cast<long long>(before - inst.inner_comments.size());
  }
  out.kept = std::move(inst);
  return out;
}

std::string DedupeKey(const MethodInstance& m) {
  std::string key = m.method_code;
  key += '\x1f';
  key += m.javadoc ? "J" + *m.javadoc : "-";
  for (const InnerComment& c : m.inner_comments) {
    key += '\x1f';
    key += std::to_string(c.start_line) + ":" + c.text;
  }
  return key;
}

}  // namespace

long long FilterReport::InstanceRemovals() const {
  return removed_token_budget + removed_non_ascii + removed_short_comment +
         removed_satd + removed_commented_code + removed_orphan + removed_duplicate;
}

int CountInstanceTokens(const MethodInstance& instance) {
  int n = static_cast<int>(Tokenize(instance.method_code).size());
  if (instance.javadoc) n += static_cast<int>(Tokenize(*instance.javadoc).size());
  return n;
}

bool PassesTokenBudget(const MethodInstance& instance, int limit) {
  return CountInstanceTokens(instance) < limit;
}

bool HasNonAscii(const MethodInstance& instance) {
  if (!IsAscii(instance.method_code)) return true;
  if (instance.javadoc && !IsAscii(*instance.javadoc)) return true;
  for (const InnerComment& c : instance.inner_comments) {
    if (!IsAscii(c.text)) return true;
  }
  return false;
}

bool IsLongEnough(std::string_view comment, int min_words) {
  return CountWordTokens(Tokenize(comment)) >= min_words;
}

bool IsSatd(std::string_view comment) {
  for (const Token& t : Tokenize(comment)) {
    if (t.kind == TokenKind::kPunctuation) continue;
    std::string upper = ToUpper(t.text);
    return upper == "TODO" || upper == "TOFIX" || upper == "FIXME";
  }
  return false;
}

bool LooksLikeCode(std::string_view comment) {
  std::string_view text = Trim(comment);
  if (text.empty()) return false;
  char last = text.back();
  if (last == ';' || last == '{' || last == '}') return true;

  std::string_view first = LeadingIdentifier(text);
  if (!first.empty() && CodeKeywords().contains(first)) {
    std::string_view rest = LeftTrim(text.substr(first.size()));
    if (rest.empty() && first.size() == text.size()) {
      // A bare keyword ("return", "else") reads as a stub statement.
      return first != "this" && first != "new";
    }
    if (!rest.empty() && std::string_view("({;=[.<").find(rest.front()) != std::string_view::npos) {
      return true;
    }
    // Declarations: "int count = 0", "String name;" and "new Foo(x)".
    std::string_view second = LeadingIdentifier(rest);
    if (!second.empty() && (TypeKeywords().contains(first) || first == "new")) {
      std::string_view after = LeftTrim(rest.substr(second.size()));
      if (!after.empty() && std::string_view("=;(").find(after.front()) != std::string_view::npos) {
        return true;
      }
    }
  }
  // Unspaced assignment with a trailing ';' (e.g. "x=compute();").
  std::size_t eq = text.find('=');
  if (eq != std::string_view::npos && eq > 0 && eq + 1 < text.size() &&
      text[eq - 1] != ' ' && text[eq + 1] != ' ' && last == ';') {
    return true;
  }
  // A lone call chain such as "list.clear()" or "foo.bar(x, y)".
  static const std::regex kCall(R"(^[A-Za-z_$][\w$]*(\.[A-Za-z_$][\w$]*)*\(.*\)$)");
  return std::regex_match(text.begin(), text.end(), kCall);
}

std::string NormalizeComment(std::string_view comment, CommentKind kind) {
  std::string text(comment);
  if (kind == CommentKind::kJavadoc) {
    static const std::regex kLinkRef(R"(\{@link(?:plain)?\s+[^}]*\})");
    text = ReplaceWithSentinel(text, kLinkRef, kRefToken);
    text = StripTags(std::move(text));
  }
  text = ReplaceUrls(text);
  text = ReplaceDates(text);
  return CollapseWhitespace(text);
}

MethodInstance RemoveOrphanComments(const MethodInstance& instance, int* removed) {
  std::vector<std::string> lines = SplitLines(instance.method_code);
  const int line_count = static_cast<int>(lines.size());
  auto blank = [&](int ln) { return ln >= 1 && ln <= line_count && IsBlank(lines[ln - 1]); };
  auto comment_only = [&](int ln) {
    return ln >= 1 && ln <= line_count && Trim(lines[ln - 1]).starts_with("//");
  };

  MethodInstance out = instance;
  out.inner_comments.clear();
  int dropped = 0;
  for (const InnerComment& c : instance.inner_comments) {
    int above = c.start_line - 1;
    int below = c.end_line + 1;
    if (c.style == CommentStyle::kLine && comment_only(c.start_line)) {
      while (comment_only(above)) --above;
      while (comment_only(below)) ++below;
    }
    if (blank(above) && blank(below)) {
      ++dropped;
      continue;
    }
    out.inner_comments.push_back(c);
  }
  if (removed) *removed = dropped;
  return out;
}

std::vector<MethodInstance> Dedupe(const std::vector<MethodInstance>& corpus,
                                   long long* removed) {
  std::unordered_set<std::string> seen;
  std::vector<MethodInstance> out;
  long long dropped = 0;
  for (const MethodInstance& m : corpus) {
    if (seen.insert(DedupeKey(m)).second) {
      out.push_back(m);
    } else {
      ++dropped;
    }
  }
  if (removed) *removed = dropped;
  return out;
}

PreprocessResult RunPipeline(const std::vector<MethodInstance>& corpus,
                             const PreprocessConfig& config) {
  if (config.token_budget < 1) throw UsageError("token budget must be positive");
  if (config.min_comment_words < 0) throw UsageError("minimum comment length must be >= 0");

  PreprocessResult result;
  FilterReport& report = result.report;
  report.input = static_cast<long long>(corpus.size());

  std::vector<MethodInstance> kept;
  for (const MethodInstance& inst : corpus) {
    InstanceOutcome outcome = ProcessInstance(inst, config);
    const auto& c = outcome.comments;
    report.comments.removed_short_comment += c.removed_short_comment;
    report.comments.removed_satd += c.removed_satd;
    report.comments.removed_commented_code += c.removed_commented_code;
    report.comments.removed_orphan += c.removed_orphan;
    report.comments.merged_inline += c.merged_inline;
    if (outcome.kept) {
      kept.push_back(std::move(*outcome.kept));
    } else {
      ++(report.*outcome.removed_by);
    }
  }
  if (config.dedupe) {
    result.corpus = Dedupe(kept, &report.removed_duplicate);
  } else {
    result.corpus = std::move(kept);
  }
  report.output = static_cast<long long>(result.corpus.size());
  return result;
}

std::string FilterReportToJson(const FilterReport& r) {
  Json j;
  j["input"] = r.input;
  j["removed_token_budget"] = r.removed_token_budget;
  j["removed_non_ascii"] = r.removed_non_ascii;
  j["removed_short_comment"] = r.removed_short_comment;
  j["removed_satd"] = r.removed_satd;
  j["removed_commented_code"] = r.removed_commented_code;
  j["removed_orphan"] = r.removed_orphan;
  j["removed_duplicate"] = r.removed_duplicate;
  j["output"] = r.output;
  j["comments"] = {
      {"removed_short_comment", r.comments.removed_short_comment},
      {"removed_satd", r.comments.removed_satd},
      {"removed_commented_code", r.comments.removed_commented_code},
      {"removed_orphan", r.comments.removed_orphan},
      {"merged_inline", r.comments.merged_inline},
  };
  return DumpPretty(j);
}

FilterReport FilterReportFromJson(std::string_view text) {
  Json j = Json::parse(text, nullptr, false);
  if (!j.is_object()) throw InputError("filter report is not a JSON object");
  FilterReport r;
  r.input = RequireInt(j, "input");
  r.removed_token_budget = RequireInt(j, "removed_token_budget");
  r.removed_non_ascii = RequireInt(j, "removed_non_ascii");
  r.removed_short_comment = RequireInt(j, "removed_short_comment");
  r.removed_satd = RequireInt(j, "removed_satd");
  r.removed_commented_code = RequireInt(j, "removed_commented_code");
  r.removed_orphan = RequireInt(j, "removed_orphan");
  r.removed_duplicate = RequireInt(j, "removed_duplicate");
  r.output = RequireInt(j, "output");
  const Json& c = j.at("comments");
  r.comments.removed_short_comment = RequireInt(c, "removed_short_comment");
  r.comments.removed_satd = RequireInt(c, "removed_satd");
  r.comments.removed_commented_code = RequireInt(c, "removed_commented_code");
  r.comments.removed_orphan = RequireInt(c, "removed_orphan");
  r.comments.merged_inline = RequireInt(c, "merged_inline");
  return r;
}

}  // namespace ccomp
