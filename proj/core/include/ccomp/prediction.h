#ifndef CCOMP_PREDICTION_H_
#define CCOMP_PREDICTION_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ccomp {

enum class PredictionStatus { kOk, kNoPrediction };

std::string_view ToString(PredictionStatus status);
std::optional<PredictionStatus> ParsePredictionStatus(std::string_view text);

// A model's output for one task. A no-prediction carries no tokens and zero
// confidence.
struct Prediction {
  std::string task_id;
  std::vector<std::string> tokens;
  double confidence = 0.0;  // [0, 1]
  std::string model;
  PredictionStatus status = PredictionStatus::kNoPrediction;
  // Optional per-token probabilities; when present, ConfidenceAt(k) is the
  // geometric mean of the first k.
  std::vector<double> step_probabilities;

  bool ok() const { return status == PredictionStatus::kOk; }
  double ConfidenceAt(std::size_t k) const;

  static Prediction None(std::string task_id, std::string model);

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

}  // namespace ccomp

#endif  // CCOMP_PREDICTION_H_
