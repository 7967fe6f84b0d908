#include "ccomp/prediction.h"

#include <cmath>

namespace ccomp {

std::string_view ToString(PredictionStatus status) {
  return status == PredictionStatus::kOk ? "ok" : "no-prediction";
}

std::optional<PredictionStatus> ParsePredictionStatus(std::string_view text) {
  if (text == "ok") return PredictionStatus::kOk;
  if (text == "no-prediction") return PredictionStatus::kNoPrediction;
  return std::nullopt;
}

double Prediction::ConfidenceAt(std::size_t k) const {
  if (!ok()) return 0.0;
  if (k == 0 || step_probabilities.size() < k) return confidence;
  double log_sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    if (step_probabilities[i] <= 0.0) return 0.0;
    log_sum += std::log(step_probabilities[i]);
  }
  return std::exp(log_sum / static_cast<double>(k));
}

Prediction Prediction::None(std::string task_id, std::string model) {
  Prediction p;
  p.task_id = std::move(task_id);
  p.model = std::move(model);
  return p;
}

}  // namespace ccomp
