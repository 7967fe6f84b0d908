#ifndef CCOMP_ADAPTER_H_
#define CCOMP_ADAPTER_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccomp/dataset.h"
#include "ccomp/prediction.h"

namespace ccomp {

// Model-input view of a task with the target removed:
//   context <sep> preceding prefix <sep>
struct TaskExport {
  std::string task_id;
  std::string input;
  int expected_length = 0;
};

TaskExport MakeTaskExport(const CompletionTask& task);

// Provenance carried next to every exchange file in "<file>.meta.json".
struct ExchangeMeta {
  std::string split;
  std::string model;  // empty for task exports
  long long count = 0;
  std::string corpus_fingerprint;
  std::string dataset_fingerprint;
  std::string config_fingerprint;
  std::string tokenizer;
  std::uint64_t seed = 0;
};

std::filesystem::path MetaPath(const std::filesystem::path& file);

// Writes one record per task, sorted by task id, plus the manifest sidecar.
std::vector<TaskExport> ExportTasks(std::span<const CompletionTask> tasks,
                                    const std::filesystem::path& out,
                                    const ExchangeMeta& manifest);

std::vector<TaskExport> ReadTaskExports(const std::filesystem::path& path);

struct ImportOptions {
  std::optional<std::string> model_label;  // overrides the records' labels
};

struct ImportResult {
  std::vector<Prediction> predictions;  // one per task, in task order
  std::string model;
  int clamped = 0;    // confidences forced into [0, 1]
  int malformed = 0;  // skipped records
  int missing = 0;    // tasks without a record, now no-prediction
  std::vector<std::string> diagnostics;
};

// Reads externally produced predictions. Unknown or duplicate task ids throw
// InputError; malformed records are skipped and counted; tasks without a
// record become no-predictions so the result always covers the split.
ImportResult ImportPredictions(const std::filesystem::path& source,
                               std::span<const CompletionTask> tasks,
                               const ImportOptions& options = {});

void WritePredictions(const std::filesystem::path& path,
                      std::span<const Prediction> predictions,
                      const ExchangeMeta& meta);
std::string SerializePredictions(std::span<const Prediction> predictions);

// Strict reader for prediction files; any schema violation throws.
std::vector<Prediction> ReadPredictions(const std::filesystem::path& path);

std::optional<ExchangeMeta> ReadExchangeMeta(const std::filesystem::path& file);
void WriteExchangeMeta(const std::filesystem::path& file, const ExchangeMeta& meta);

}  // namespace ccomp

#endif  // CCOMP_ADAPTER_H_
