#ifndef CCOMP_REPORT_H_
#define CCOMP_REPORT_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccomp/dataset.h"
#include "ccomp/metrics.h"
#include "ccomp/ngram.h"
#include "ccomp/pos_tagger.h"
#include "ccomp/prediction.h"

namespace ccomp {

enum class Panel { kJavadoc, kInner, kOverall };
inline constexpr std::array<Panel, 3> kPanels = {Panel::kJavadoc, Panel::kInner,
                                                 Panel::kOverall};
std::string_view ToString(Panel panel);

// Counters for one (panel, k bucket) cell. Bucket k compares the first k
// target tokens with the first k predicted tokens; ">10" compares whole
// targets longer than 10 tokens.
struct ReportCell {
  long long count = 0;
  long long perfect = 0;
  std::array<double, 4> bleu_sum{};  // BLEU-n only over references of >= n tokens
  std::array<long long, 4> bleu_count{};
  double bleu_a_sum = 0.0;
  long long bleu_a_count = 0;
  double levenshtein_sum = 0.0;
  ConfidenceCell confidence;

  bool empty() const { return count == 0; }
  std::optional<double> PerfectRate() const;
  std::optional<double> MeanBleu(int n) const;
  std::optional<double> MeanBleuA() const;
  std::optional<double> MeanLevenshtein() const;
  void Merge(const ReportCell& other);
};

struct PosCell {
  long long positions = 0;
  long long correct = 0;
  std::optional<double> Accuracy() const;
};

struct ModelReport {
  std::string model;
  long long tasks = 0;
  long long no_predictions = 0;
  std::array<std::array<ReportCell, kBucketCount>, 3> cells{};
  // Target positions the prediction covers, by the target token's POS group.
  std::array<PosCell, kPosGroups.size()> pos{};

  const ReportCell& cell(Panel panel, int bucket) const {
    return cells[static_cast<int>(panel)][bucket];
  }
};

// Paired statistics on whole-target perfect predictions, per panel.
struct PanelComparison {
  long long tasks = 0;
  Overlap overlap;
  McNemarResult mcnemar;
};

struct PairedComparison {
  std::string model_a;
  std::string model_b;
  std::array<PanelComparison, 3> panels{};
};

struct EvalReport {
  std::string split;
  std::string corpus_fingerprint;
  std::string dataset_fingerprint;
  std::string config_fingerprint;
  long long tasks = 0;
  std::vector<ModelReport> models;
  std::optional<PairedComparison> comparison;
};

struct ModelPredictions {
  std::string label;
  std::vector<Prediction> predictions;
};

// Matches predictions to tasks by id. Tasks without a prediction count as
// no-predictions; predictions for unknown tasks and duplicate or colliding
// model labels throw InputError. Two models add the paired comparison.
EvalReport BuildReport(std::span<const CompletionTask> tasks,
                       std::span<const ModelPredictions> models);

ModelReport EvaluateModel(std::span<const CompletionTask> tasks,
                          std::span<const Prediction> aligned, std::string label);

PairedComparison ComparePerfect(std::span<const CompletionTask> tasks,
                                std::span<const Prediction> a,
                                std::span<const Prediction> b, std::string label_a,
                                std::string label_b);

std::string ReportToJson(const EvalReport& report);
std::string ReportToText(const EvalReport& report);

std::string SweepToJson(const SweepResult& sweep);
std::string SweepToText(const SweepResult& sweep);

}  // namespace ccomp

#endif  // CCOMP_REPORT_H_
