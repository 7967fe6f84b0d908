#include "ccomp/errors.h"
#include "ccomp/metrics.h"
#include "ccomp/ngram.h"

namespace ccomp {

SweepResult SweepOrders(std::span<const CompletionTask> train,
                        std::span<const CompletionTask> eval,
                        const std::vector<int>& orders) {
  if (orders.empty()) throw UsageError("no n-gram orders to sweep");
  std::vector<Sequence> sequences = TrainingSequences(train);
  SweepResult result;
  double best_score = -1.0;
  for (int order : orders) {
    NgramModel model = NgramModel::Train(sequences, order);
    SweepRow row;
    row.order = order;
    std::vector<long long> perfect(kBucketCount, 0);
    row.applicable.assign(kBucketCount, 0);
    for (const CompletionTask& task : eval) {
      Prediction p = PredictTask(model, task, "");
      std::vector<std::string> target = TokenTexts(task.target);
      for (int b = 0; b < kBucketCount; ++b) {
        std::optional<std::size_t> k = BucketLength(b, target.size());
        if (!k) continue;
        ++row.applicable[b];
        if (*PerfectAtK(target, p, *k)) ++perfect[b];
      }
    }
    int non_empty = 0;
    for (int b = 0; b < kBucketCount; ++b) {
      double rate = row.applicable[b] > 0
                        ? static_cast<double>(perfect[b]) / static_cast<double>(row.applicable[b])
                        : 0.0;
      row.rates.push_back(rate);
      if (row.applicable[b] > 0) {
        row.score += rate;
        ++non_empty;
      }
    }
    if (non_empty > 0) row.score /= non_empty;
    bool better = row.score > best_score ||
                  (row.score == best_score && order < result.best_order);
    if (better) {
      best_score = row.score;
      result.best_order = order;
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace ccomp
