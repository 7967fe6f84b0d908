#ifndef CCOMP_DATASET_H_
#define CCOMP_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccomp/corpus.h"
#include "ccomp/rng.h"
#include "ccomp/tokenizer.h"

namespace ccomp {

enum class TaskKind { kJavadoc, kInner };

std::string_view ToString(TaskKind kind);
std::optional<TaskKind> ParseTaskKind(std::string_view text);

// One completion unit: given context, earlier sentences and a visible prefix,
// predict the masked suffix of the sentence.
struct CompletionTask {
  std::string id;
  TaskKind kind = TaskKind::kJavadoc;
  TokenList context;
  TokenList preceding;
  TokenList prefix;  // m >= 1 tokens
  TokenList target;  // n - m >= 1 tokens
  int sentence_index = 0;
  int variant_index = 0;
  std::string origin;

  // Groups the variants of one sentence: the id without its "/vN" suffix.
  std::string SentenceKey() const;

  friend bool operator==(const CompletionTask&, const CompletionTask&) = default;
};

struct PretrainInstance {
  std::string origin;
  TokenList input;   // code <sep> comment <sep> ... with masks in comments
  TokenList target;  // <mask_i> followed by the hidden token, per mask

  friend bool operator==(const PretrainInstance&, const PretrainInstance&) = default;
};

enum class SplitLabel { kPretrain, kTrain, kEval, kTest };

std::string_view ToString(SplitLabel label);
std::optional<SplitLabel> ParseSplitLabel(std::string_view text);

struct SplitRatios {
  double pretrain = 2.0 / 3.0;
  double finetune = 1.0 / 3.0;
  double train = 0.8;
  double eval = 0.1;
  double test = 0.1;

  // Throws UsageError unless both groups are non-negative and sum to 1.
  void Validate() const;
};

struct SplitAssignment {
  std::map<std::string, SplitLabel> labels;

  std::map<SplitLabel, int> Counts() const;
};

// --- Context linking ---

struct JavadocLink {
  TokenList context;  // the whole method
  TokenList comment;

  // context <sep> comment <sep>
  TokenList Serialize() const;
};

// std::nullopt when the instance has no Javadoc.
std::optional<JavadocLink> LinkJavadocContext(const MethodInstance& instance);

// Lines around the comment, expanding up and down until a blank line, a line
// opening with '}', or a line holding another comment. The signature line is
// the upward limit and is included. The comment's own text is excluded.
TokenList LinkInnerContext(const MethodInstance& instance, const InnerComment& comment);

// --- Sentences and masking ---

std::vector<TokenList> SplitSentences(const TokenList& comment);

struct VariantSource {
  std::string id_prefix;  // e.g. "Foo.java#L10/jd"
  std::string origin;
  TaskKind kind = TaskKind::kJavadoc;
};

// min(max_variants, n - 1) tasks for sentence `sentence_index`, with distinct
// visible-prefix lengths drawn uniformly from [1, n - 1], ordered by length.
std::vector<CompletionTask> GenerateMaskedVariants(
    const std::vector<TokenList>& sentences, int sentence_index,
    const TokenList& context, const VariantSource& source, Rng& rng,
    int max_variants = 5);

// round-half-up(rate * n), at least 1 for n > 0.
int MaskCount(int comment_tokens, double rate);

PretrainInstance GeneratePretrainInstance(const MethodInstance& instance,
                                          double mask_rate, Rng& rng);

std::vector<PretrainInstance> GeneratePretrainInstances(
    const std::vector<MethodInstance>& corpus, double mask_rate,
    std::uint64_t seed);

// Every task for one instance (Javadoc first, then inner comments).
std::vector<CompletionTask> GenerateTasks(const MethodInstance& instance,
                                          std::uint64_t seed,
                                          int max_variants = 5);

// --- Splitting ---

// Integer parts proportional to weights summing to `total`; leftover units
// go to the largest fractional remainders, ties to the earlier weight.
std::vector<int> LargestRemainder(int total, const std::vector<double>& weights);

// Seeded shuffle of the sorted ids, then contiguous slices: pretrain/finetune
// first, then the finetune slice into train/eval/test.
SplitAssignment SplitCorpus(std::vector<std::string> origin_ids,
                            const SplitRatios& ratios, std::uint64_t seed);

// --- Whole dataset ---

struct DatasetConfig {
  std::uint64_t seed = 42;
  SplitRatios ratios;
  double mask_rate = 0.15;
  int max_variants = 5;
};

struct Dataset {
  SplitAssignment assignment;
  std::vector<PretrainInstance> pretrain;
  std::vector<CompletionTask> train;
  std::vector<CompletionTask> eval;
  std::vector<CompletionTask> test;

  const std::vector<CompletionTask>& Split(SplitLabel label) const;
};

Dataset BuildDataset(const std::vector<MethodInstance>& corpus,
                     const DatasetConfig& config);

struct DatasetMetadata {
  std::string format;
  std::uint64_t seed = 0;
  SplitRatios ratios;
  double mask_rate = 0.15;
  std::string tokenizer;
  std::string corpus_fingerprint;
  std::string config_fingerprint;
  std::string dataset_fingerprint;  // over all split files
  std::map<std::string, int> origins;                          // split -> n
  std::map<std::string, std::map<std::string, int>> tasks;     // kind -> split -> n
  int pretrain_instances = 0;
};

// Writes metadata.json, splits.jsonl, pretrain.jsonl and one file per
// fine-tuning split (train/eval/test.jsonl) into `dir`.
DatasetMetadata WriteDataset(const std::filesystem::path& dir, const Dataset& dataset,
                             const DatasetConfig& config,
                             const std::string& corpus_fingerprint,
                             const std::string& config_fingerprint);

DatasetMetadata ReadDatasetMetadata(const std::filesystem::path& dir);

// split is one of "train", "eval", "test"; throws InputError otherwise.
std::vector<CompletionTask> ReadSplit(const std::filesystem::path& dir,
                                      std::string_view split);

std::string SerializeTasks(const std::vector<CompletionTask>& tasks);
std::vector<CompletionTask> ReadTasks(const std::filesystem::path& path);
std::vector<PretrainInstance> ReadPretrain(const std::filesystem::path& path);
SplitAssignment ReadSplitAssignment(const std::filesystem::path& path);

}  // namespace ccomp

#endif  // CCOMP_DATASET_H_
