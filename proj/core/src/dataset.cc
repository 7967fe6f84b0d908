#include "ccomp/dataset.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "ccomp/errors.h"
#include "text_util.h"

namespace ccomp {
namespace {

const std::set<std::string, std::less<>>& JavadocTags() {
  static const std::set<std::string, std::less<>> kTags = {
      "param", "return", "returns", "throws", "exception", "see", "since",
      "author", "version", "deprecated", "serial", "serialData", "serialField"};
  return kTags;
}

bool IsTerminal(const Token& t) {
  return t.kind == TokenKind::kPunctuation &&
         (t.text == "." || t.text == "!" || t.text == "?");
}

bool StartsUpper(const Token& t) {
  return t.kind == TokenKind::kWord && std::isupper(static_cast<unsigned char>(t.text[0]));
}

bool IsTagStart(const TokenList& tokens, std::size_t i) {
  return tokens[i].text == "@" && i + 1 < tokens.size() &&
         tokens[i + 1].kind == TokenKind::kWord && JavadocTags().contains(tokens[i + 1].text);
}

// "e.g.", "i.e." and "etc." end with a '.' that does not close a sentence.
bool IsAbbreviationPeriod(const TokenList& current) {
  std::size_t n = current.size();  // current.back() is the '.'
  if (n >= 2 && ToLower(current[n - 2].text) == "etc") return true;
  if (n >= 4 && current[n - 3].text == ".") {
    std::string a = ToLower(current[n - 4].text);
    std::string b = ToLower(current[n - 2].text);
    if ((a == "e" && b == "g") || (a == "i" && b == "e")) return true;
  }
  return false;
}

struct CommentLines {
  std::vector<std::string> stripped;  // code text with comments removed
  std::vector<std::pair<int, int>> comment_spans;
};

CommentLines AnalyseLines(const MethodInstance& instance) {
  CommentLines out;
  try {
    ScannedSource scanned = ScanJavaSource(instance.method_code);
    out.stripped = SplitLines(StripComments(instance.method_code));
    for (const CommentRegion& r : scanned.comments) {
      out.comment_spans.emplace_back(r.start_line, r.end_line);
    }
  } catch (const ParseError&) {
    out.stripped = SplitLines(instance.method_code);
    for (const InnerComment& c : instance.inner_comments) {
      out.comment_spans.emplace_back(c.start_line, c.end_line);
    }
  }
  return out;
}

TokenList Flatten(const std::vector<TokenList>& sentences, int upto) {
  TokenList out;
  for (int i = 0; i < upto; ++i) {
    out.insert(out.end(), sentences[i].begin(), sentences[i].end());
  }
  return out;
}

}  // namespace

std::string_view ToString(TaskKind kind) {
  return kind == TaskKind::kJavadoc ? "javadoc" : "inner";
}

std::optional<TaskKind> ParseTaskKind(std::string_view text) {
  if (text == "javadoc") return TaskKind::kJavadoc;
  if (text == "inner") return TaskKind::kInner;
  return std::nullopt;
}

std::string CompletionTask::SentenceKey() const {
  std::size_t slash = id.rfind("/v");
  return slash == std::string::npos ? id : id.substr(0, slash);
}

std::string_view ToString(SplitLabel label) {
  switch (label) {
    case SplitLabel::kPretrain: return "pretrain";
    case SplitLabel::kTrain: return "finetune-train";
    case SplitLabel::kEval: return "finetune-eval";
    case SplitLabel::kTest: return "finetune-test";
  }
  return "?";
}

std::optional<SplitLabel> ParseSplitLabel(std::string_view text) {
  if (text == "pretrain") return SplitLabel::kPretrain;
  if (text == "finetune-train" || text == "train") return SplitLabel::kTrain;
  if (text == "finetune-eval" || text == "eval") return SplitLabel::kEval;
  if (text == "finetune-test" || text == "test") return SplitLabel::kTest;
  return std::nullopt;
}

void SplitRatios::Validate() const {
  auto check = [](std::initializer_list<double> parts, const char* what) {
    double sum = 0;
    for (double p : parts) {
      if (!(p >= 0.0)) throw UsageError(std::string(what) + " ratios must be non-negative");
      sum += p;
    }
    if (std::fabs(sum - 1.0) > 1e-6) {
      throw UsageError(std::string(what) + " ratios must sum to 1");
    }
  };
  check({pretrain, finetune}, "pretrain/finetune");
  check({train, eval, test}, "train/eval/test");
}

std::map<SplitLabel, int> SplitAssignment::Counts() const {
  std::map<SplitLabel, int> counts = {{SplitLabel::kPretrain, 0},
                                      {SplitLabel::kTrain, 0},
                                      {SplitLabel::kEval, 0},
                                      {SplitLabel::kTest, 0}};
  for (const auto& [id, label] : labels) ++counts[label];
  return counts;
}

TokenList JavadocLink::Serialize() const {
  TokenList out = context;
  out.push_back({std::string(kSepToken), TokenKind::kSentinel});
  out.insert(out.end(), comment.begin(), comment.end());
  out.push_back({std::string(kSepToken), TokenKind::kSentinel});
  return out;
}

std::optional<JavadocLink> LinkJavadocContext(const MethodInstance& instance) {
  if (!instance.javadoc) return std::nullopt;
  return JavadocLink{Tokenize(instance.method_code), Tokenize(*instance.javadoc)};
}

TokenList LinkInnerContext(const MethodInstance& instance, const InnerComment& comment) {
  CommentLines lines = AnalyseLines(instance);
  const int line_count = static_cast<int>(lines.stripped.size());
  std::vector<std::string> raw = SplitLines(instance.method_code);

  auto has_other_comment = [&](int ln) {
    for (auto [s, e] : lines.comment_spans) {
      bool own = s >= comment.start_line && e <= comment.end_line;
      if (!own && s <= ln && ln <= e) return true;
    }
    return false;
  };
  auto is_boundary = [&](int ln) {
    std::string_view text = raw[ln - 1];
    return IsBlank(text) || Trim(text).starts_with('}') || has_other_comment(ln);
  };

  int first = std::clamp(comment.start_line, 1, std::max(1, line_count));
  int last = std::clamp(comment.end_line, first, std::max(1, line_count));
  while (first > 1 && !is_boundary(first - 1)) --first;
  while (last < line_count && !is_boundary(last + 1)) ++last;

  std::string text;
  for (int ln = first; ln <= last && ln <= line_count; ++ln) {
    text += lines.stripped[ln - 1];
    text += '\n';
  }
  return Tokenize(text);
}

std::vector<TokenList> SplitSentences(const TokenList& comment) {
  std::vector<TokenList> sentences;
  TokenList current;
  auto flush = [&] {
    if (!current.empty()) sentences.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < comment.size(); ++i) {
    if (IsTagStart(comment, i)) flush();
    current.push_back(comment[i]);
    if (!IsTerminal(comment[i])) continue;
    bool at_end = i + 1 == comment.size();
    if (!at_end && IsTerminal(comment[i + 1])) continue;  // "?!" or "..."
    bool ends = at_end || StartsUpper(comment[i + 1]);
    if (ends && comment[i].text == "." && IsAbbreviationPeriod(current)) ends = false;
    if (ends) flush();
  }
  flush();
  return sentences;
}

std::vector<CompletionTask> GenerateMaskedVariants(
    const std::vector<TokenList>& sentences, int sentence_index,
    const TokenList& context, const VariantSource& source, Rng& rng,
    int max_variants) {
  const TokenList& sentence = sentences.at(static_cast<std::size_t>(sentence_index));
  const int n = static_cast<int>(sentence.size());
  if (n < 2) return {};
  std::vector<int> visible = rng.SampleWithoutReplacement(1, n - 1, std::min(max_variants, n - 1));
  std::sort(visible.begin(), visible.end());

  TokenList preceding = Flatten(sentences, sentence_index);
  std::vector<CompletionTask> out;
  for (std::size_t v = 0; v < visible.size(); ++v) {
    CompletionTask task;
    task.id = source.id_prefix + "/s" + std::to_string(sentence_index) + "/v" + std::to_string(v);
    task.kind = source.kind;
    task.context = context;
    task.preceding = preceding;
    task.prefix.assign(sentence.begin(), sentence.begin() + visible[v]);
    task.target.assign(sentence.begin() + visible[v], sentence.end());
    task.sentence_index = sentence_index;
    task.variant_index = static_cast<int>(v);
    task.origin = source.origin;
    out.push_back(std::move(task));
  }
  return out;
}

int MaskCount(int comment_tokens, double rate) {
  if (comment_tokens <= 0) return 0;
  // The epsilon keeps exact halves (0.15 * 10) from rounding down.
  int count = static_cast<int>(std::floor(rate * comment_tokens + 0.5 + 1e-9));
  return std::clamp(count, 1, comment_tokens);
}

PretrainInstance GeneratePretrainInstance(const MethodInstance& instance,
                                          double mask_rate, Rng& rng) {
  PretrainInstance out;
  out.origin = instance.id;
  std::string code;
  try {
    code = StripComments(instance.method_code);
  } catch (const ParseError&) {
    code = instance.method_code;
  }
  out.input = Tokenize(code);

  std::vector<TokenList> comments;
  if (instance.javadoc) comments.push_back(Tokenize(*instance.javadoc));
  for (const InnerComment& c : instance.inner_comments) comments.push_back(Tokenize(c.text));

  const Token sep{std::string(kSepToken), TokenKind::kSentinel};
  int next_mask = 0;
  for (const TokenList& comment : comments) {
    out.input.push_back(sep);
    const int n = static_cast<int>(comment.size());
    std::vector<int> positions(static_cast<std::size_t>(n));
    std::iota(positions.begin(), positions.end(), 0);
    rng.Shuffle(positions);
    positions.resize(static_cast<std::size_t>(MaskCount(n, mask_rate)));
    std::sort(positions.begin(), positions.end());
    std::size_t p = 0;
    for (int i = 0; i < n; ++i) {
      if (p < positions.size() && positions[p] == i) {
        Token mask{MaskToken(next_mask++), TokenKind::kSentinel};
        out.input.push_back(mask);
        out.target.push_back(mask);
        out.target.push_back(comment[static_cast<std::size_t>(i)]);
        ++p;
      } else {
        out.input.push_back(comment[static_cast<std::size_t>(i)]);
      }
    }
  }
  out.input.push_back(sep);
  return out;
}

std::vector<PretrainInstance> GeneratePretrainInstances(
    const std::vector<MethodInstance>& corpus, double mask_rate, std::uint64_t seed) {
  std::vector<PretrainInstance> out;
  out.reserve(corpus.size());
  for (const MethodInstance& m : corpus) {
    Rng rng = Rng::ForStream(seed, "pretrain/" + m.id);
    out.push_back(GeneratePretrainInstance(m, mask_rate, rng));
  }
  return out;
}

std::vector<CompletionTask> GenerateTasks(const MethodInstance& instance,
                                          std::uint64_t seed, int max_variants) {
  std::vector<CompletionTask> out;
  Rng rng = Rng::ForStream(seed, "variants/" + instance.id);
  auto emit = [&](const TokenList& context, const TokenList& comment, const VariantSource& src) {
    std::vector<TokenList> sentences = SplitSentences(comment);
    for (int i = 0; i < static_cast<int>(sentences.size()); ++i) {
      for (CompletionTask& t : GenerateMaskedVariants(sentences, i, context, src, rng, max_variants)) {
        out.push_back(std::move(t));
      }
    }
  };
  if (auto link = LinkJavadocContext(instance)) {
    emit(link->context, link->comment, {instance.id + "/jd", instance.id, TaskKind::kJavadoc});
  }
  for (std::size_t c = 0; c < instance.inner_comments.size(); ++c) {
    const InnerComment& comment = instance.inner_comments[c];
    emit(LinkInnerContext(instance, comment), Tokenize(comment.text),
         {instance.id + "/ic" + std::to_string(c), instance.id, TaskKind::kInner});
  }
  return out;
}

std::vector<int> LargestRemainder(int total, const std::vector<double>& weights) {
  double weight_sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  std::vector<int> counts(weights.size(), 0);
  if (total <= 0 || weights.empty() || weight_sum <= 0) return counts;
  std::vector<double> remainders(weights.size());
  int assigned = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    double quota = total * weights[i] / weight_sum;
    // Snap values within rounding noise of an integer (e.g. 2/3 * 300).
    double nearest = std::round(quota);
    if (std::fabs(quota - nearest) < 1e-9) quota = nearest;
    counts[i] = static_cast<int>(std::floor(quota));
    remainders[i] = quota - counts[i];
    assigned += counts[i];
  }
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainders[a] > remainders[b]; });
  for (std::size_t k = 0; assigned < total; k = (k + 1) % order.size()) {
    ++counts[order[k]];
    ++assigned;
  }
  return counts;
}

SplitAssignment SplitCorpus(std::vector<std::string> origin_ids,
                            const SplitRatios& ratios, std::uint64_t seed) {
  ratios.Validate();
  std::sort(origin_ids.begin(), origin_ids.end());
  origin_ids.erase(std::unique(origin_ids.begin(), origin_ids.end()), origin_ids.end());
  Rng rng = Rng::ForStream(seed, "split");
  rng.Shuffle(origin_ids);

  const int total = static_cast<int>(origin_ids.size());
  std::vector<int> top = LargestRemainder(total, {ratios.pretrain, ratios.finetune});
  std::vector<int> fine = LargestRemainder(top[1], {ratios.train, ratios.eval, ratios.test});

  SplitAssignment out;
  std::size_t i = 0;
  auto assign = [&](int count, SplitLabel label) {
    for (int k = 0; k < count; ++k) out.labels[origin_ids[i++]] = label;
  };
  assign(top[0], SplitLabel::kPretrain);
  assign(fine[0], SplitLabel::kTrain);
  assign(fine[1], SplitLabel::kEval);
  assign(fine[2], SplitLabel::kTest);
  return out;
}

const std::vector<CompletionTask>& Dataset::Split(SplitLabel label) const {
  switch (label) {
    case SplitLabel::kTrain: return train;
    case SplitLabel::kEval: return eval;
    case SplitLabel::kTest: return test;
    case SplitLabel::kPretrain: break;
  }
  throw UsageError("the pretrain split holds no completion tasks");
}

Dataset BuildDataset(const std::vector<MethodInstance>& corpus, const DatasetConfig& config) {
  if (config.mask_rate <= 0.0 || config.mask_rate > 1.0) {
    throw UsageError("mask rate must be in (0, 1]");
  }
  if (config.max_variants < 1) throw UsageError("variant count must be >= 1");

  Dataset ds;
  std::vector<std::string> ids;
  ids.reserve(corpus.size());
  for (const MethodInstance& m : corpus) ids.push_back(m.id);
  ds.assignment = SplitCorpus(ids, config.ratios, config.seed);

  for (const MethodInstance& m : corpus) {
    SplitLabel label = ds.assignment.labels.at(m.id);
    if (label == SplitLabel::kPretrain) {
      Rng rng = Rng::ForStream(config.seed, "pretrain/" + m.id);
      ds.pretrain.push_back(GeneratePretrainInstance(m, config.mask_rate, rng));
      continue;
    }
    std::vector<CompletionTask> tasks = GenerateTasks(m, config.seed, config.max_variants);
    auto& dest = label == SplitLabel::kTrain ? ds.train
                 : label == SplitLabel::kEval ? ds.eval
                                              : ds.test;
    for (CompletionTask& t : tasks) dest.push_back(std::move(t));
  }
  return ds;
}

}  // namespace ccomp
