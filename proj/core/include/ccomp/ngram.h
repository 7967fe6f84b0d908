#ifndef CCOMP_NGRAM_H_
#define CCOMP_NGRAM_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccomp/dataset.h"
#include "ccomp/prediction.h"

namespace ccomp {

using Sequence = std::vector<std::string>;

struct NextToken {
  std::string token;
  double probability = 0.0;
  std::uint64_t count = 0;
  std::uint64_t total = 0;
};

// Greedy continuation that stops at the first unseen history.
struct Continuation {
  std::vector<std::string> tokens;
  std::vector<double> probabilities;
};

// Unsmoothed order-n count model. Histories are the n-1 preceding tokens,
// left-padded with start sentinels; unseen histories yield no prediction.
// Immutable after training and safe to query from many threads.
class NgramModel {
 public:
  static constexpr std::string_view kFormatTag = "ccomp-ngram";
  static constexpr int kFormatVersion = 1;

  // Throws UsageError for order < 2 and InputError when the sequences hold no
  // tokens. Counting is sharded over `threads` workers (0 = hardware).
  static NgramModel Train(std::span<const Sequence> sequences, int order,
                          unsigned threads = 0);

  NgramModel(NgramModel&&) noexcept;
  NgramModel& operator=(NgramModel&&) noexcept;
  ~NgramModel();

  int order() const;
  std::size_t vocabulary_size() const;
  std::size_t history_count() const;
  std::uint64_t token_count() const;
  const std::string& fingerprint() const;

  // Most frequent next token for the last n-1 history tokens; count ties go
  // to the lexicographically smallest token.
  std::optional<NextToken> PredictNext(std::span<const std::string> history) const;

  // Next-token counts for the history (empty when unseen).
  std::map<std::string, std::uint64_t> Counts(std::span<const std::string> history) const;

  // Visits every stored history (already padded to n-1 tokens).
  void ForEachHistory(
      const std::function<void(const std::vector<std::string>& history,
                               const std::map<std::string, std::uint64_t>& next)>& fn) const;

  Continuation Continue(std::span<const std::string> history, int max_tokens) const;

  // Chains `length` greedy steps; any unseen history aborts the whole
  // prediction. Confidence is the geometric mean of the step probabilities.
  Prediction PredictSequence(std::span<const std::string> prefix, int length,
                             std::string task_id = {}, std::string model = {}) const;

  void Save(std::ostream& out) const;
  void SaveFile(const std::filesystem::path& path) const;
  static NgramModel Load(std::istream& in);
  static NgramModel LoadFile(const std::filesystem::path& path);

 private:
  struct Impl;
  explicit NgramModel(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;
};

// One sequence per sentence: preceding sentences plus the whole sentence.
std::vector<Sequence> TrainingSequences(std::span<const CompletionTask> tasks);

// Model input for a task: preceding sentences followed by the visible prefix.
Sequence TaskHistory(const CompletionTask& task);

// Predicts min(|target|, max_tokens) tokens (max_tokens <= 0: full target).
Prediction PredictTask(const NgramModel& model, const CompletionTask& task,
                       const std::string& model_label, int max_tokens = 0);

std::vector<Prediction> PredictTasks(const NgramModel& model,
                                     std::span<const CompletionTask> tasks,
                                     const std::string& model_label,
                                     int max_tokens = 0);

struct SweepRow {
  int order = 0;
  std::vector<double> rates;  // perfect-prediction rate for k = 1..10, >10
  std::vector<long long> applicable;
  double score = 0.0;         // mean rate over non-empty k buckets
};

struct SweepResult {
  std::vector<SweepRow> rows;
  int best_order = 0;
};

// Trains one model per order on `train`, scores perfect predictions on
// `eval`, and picks the highest score (ties: smallest order).
SweepResult SweepOrders(std::span<const CompletionTask> train,
                        std::span<const CompletionTask> eval,
                        const std::vector<int>& orders);

}  // namespace ccomp

#endif  // CCOMP_NGRAM_H_
