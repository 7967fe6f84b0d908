#include "ccomp/adapter.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include "ccomp/errors.h"
#include "ccomp/tokenizer.h"
#include "json_util.h"
#include "text_util.h"

namespace ccomp {
namespace {

Json PredictionToJson(const Prediction& p) {
  Json j;
  j["task_id"] = p.task_id;
  j["model"] = p.model;
  j["status"] = std::string(ToString(p.status));
  j["tokens"] = p.tokens;
  j["confidence"] = p.confidence;
  if (!p.step_probabilities.empty()) j["step_probabilities"] = p.step_probabilities;
  return j;
}

std::vector<std::string> StringArray(const Json& value, const char* field) {
  if (!value.is_array()) throw InputError(std::string("field '") + field + "' must be an array");
  std::vector<std::string> out;
  for (const Json& item : value) {
    if (!item.is_string()) throw InputError(std::string("field '") + field + "' must hold strings");
    const std::string& s = item.get_ref<const std::string&>();
    if (s.empty() || Trim(s).size() != s.size() || s.find_first_of(" \t\n\r") != std::string::npos) {
      throw InputError(std::string("field '") + field + "' holds an empty or spaced token");
    }
    out.push_back(s);
  }
  return out;
}

std::vector<double> Probabilities(const Json& j) {
  std::vector<double> out;
  auto it = j.find("step_probabilities");
  if (it == j.end() || it->is_null()) return out;
  if (!it->is_array()) throw InputError("field 'step_probabilities' must be an array");
  for (const Json& v : *it) {
    if (!v.is_number()) throw InputError("field 'step_probabilities' must hold numbers");
    double p = v.get<double>();
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("step probability outside [0, 1]");
    out.push_back(p);
  }
  return out;
}

double Confidence(const Json& j) {
  auto it = j.find("confidence");
  if (it == j.end() || !it->is_number()) throw InputError("missing or non-numeric 'confidence'");
  double c = it->get<double>();
  if (std::isnan(c)) throw InputError("confidence is NaN");
  return c;
}

}  // namespace

TaskExport MakeTaskExport(const CompletionTask& task) {
  TokenList input = task.context;
  input.push_back({std::string(kSepToken), TokenKind::kSentinel});
  input.insert(input.end(), task.preceding.begin(), task.preceding.end());
  input.insert(input.end(), task.prefix.begin(), task.prefix.end());
  input.push_back({std::string(kSepToken), TokenKind::kSentinel});
  return {task.id, JoinTokens(input), static_cast<int>(task.target.size())};
}

std::filesystem::path MetaPath(const std::filesystem::path& file) {
  std::filesystem::path p = file;
  p += ".meta.json";
  return p;
}

void WriteExchangeMeta(const std::filesystem::path& file, const ExchangeMeta& meta) {
  Json j;
  j["split"] = meta.split;
  if (!meta.model.empty()) j["model"] = meta.model;
  j["count"] = meta.count;
  j["corpus_fingerprint"] = meta.corpus_fingerprint;
  j["dataset_fingerprint"] = meta.dataset_fingerprint;
  j["config_fingerprint"] = meta.config_fingerprint;
  j["tokenizer"] = meta.tokenizer;
  j["tokenizer_rule"] =
      "whitespace-separated; sentinels whole; letter/digit runs are words; "
      "every other character is a punctuation token";
  j["seed"] = meta.seed;
  WriteText(MetaPath(file), DumpPretty(j));
}

std::optional<ExchangeMeta> ReadExchangeMeta(const std::filesystem::path& file) {
  std::filesystem::path path = MetaPath(file);
  if (!std::filesystem::exists(path)) return std::nullopt;
  Json j = Json::parse(ReadText(path), nullptr, false);
  if (!j.is_object()) throw InputError(path.string() + ": not a JSON object");
  ExchangeMeta meta;
  try {
    meta.split = RequireString(j, "split");
    meta.model = j.value("model", "");
    meta.count = RequireInt(j, "count");
    meta.corpus_fingerprint = RequireString(j, "corpus_fingerprint");
    meta.dataset_fingerprint = RequireString(j, "dataset_fingerprint");
    meta.config_fingerprint = RequireString(j, "config_fingerprint");
    meta.tokenizer = RequireString(j, "tokenizer");
    meta.seed = j.at("seed").get<std::uint64_t>();
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return meta;
}

std::vector<TaskExport> ExportTasks(std::span<const CompletionTask> tasks,
                                    const std::filesystem::path& out,
                                    const ExchangeMeta& manifest) {
  std::vector<TaskExport> exports;
  exports.reserve(tasks.size());
  for (const CompletionTask& t : tasks) exports.push_back(MakeTaskExport(t));
  std::sort(exports.begin(), exports.end(),
            [](const TaskExport& a, const TaskExport& b) { return a.task_id < b.task_id; });
  std::string text;
  for (const TaskExport& e : exports) {
    Json j;
    j["task_id"] = e.task_id;
    j["input"] = e.input;
    j["expected_length"] = e.expected_length;
    text += DumpLine(j) + "\n";
  }
  WriteText(out, text);
  ExchangeMeta meta = manifest;
  meta.count = static_cast<long long>(exports.size());
  meta.tokenizer = std::string(kTokenizerVersion);
  WriteExchangeMeta(out, meta);
  return exports;
}

std::vector<TaskExport> ReadTaskExports(const std::filesystem::path& path) {
  std::vector<TaskExport> out;
  ForEachJsonLine(path, [&](const Json& j, int) {
    out.push_back({RequireString(j, "task_id"), RequireString(j, "input"),
                   static_cast<int>(RequireInt(j, "expected_length"))});
  });
  return out;
}

ImportResult ImportPredictions(const std::filesystem::path& source,
                               std::span<const CompletionTask> tasks,
                               const ImportOptions& options) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < tasks.size(); ++i) index.emplace(tasks[i].id, i);

  ImportResult result;
  std::vector<std::optional<Prediction>> slots(tasks.size());
  std::set<std::string> labels;

  std::ifstream in(source, std::ios::binary);
  if (!in) throw InputError("cannot read " + source.string());
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    const std::string where = source.string() + ":" + std::to_string(line_no);
    Json j = Json::parse(line, nullptr, false);
    if (!j.is_object() || !j.contains("task_id") || !j["task_id"].is_string()) {
      ++result.malformed;
      result.diagnostics.push_back(where + ": malformed record");
      continue;
    }
    const std::string task_id = j["task_id"].get<std::string>();
    auto it = index.find(task_id);
    if (it == index.end()) throw InputError(where + ": unknown task id '" + task_id + "'");
    if (slots[it->second]) throw InputError(where + ": duplicate task id '" + task_id + "'");

    Prediction p;
    try {
      p.task_id = task_id;
      p.tokens = StringArray(RequireArray(j, "tokens"), "tokens");
      p.confidence = Confidence(j);
      p.step_probabilities = Probabilities(j);
      if (options.model_label) {
        p.model = *options.model_label;
      } else {
        p.model = RequireString(j, "model");
      }
      p.status = p.tokens.empty() ? PredictionStatus::kNoPrediction : PredictionStatus::kOk;
      if (auto s = j.find("status"); s != j.end()) {
        auto status = s->is_string() ? ParsePredictionStatus(s->get<std::string>()) : std::nullopt;
        if (!status) throw InputError("bad 'status'");
        if (*status == PredictionStatus::kNoPrediction) p.status = *status;
      }
    } catch (const InputError& e) {
      ++result.malformed;
      result.diagnostics.push_back(where + ": " + e.what());
      continue;
    }
    if (p.confidence < 0.0 || p.confidence > 1.0) {
      p.confidence = std::clamp(p.confidence, 0.0, 1.0);
      ++result.clamped;
    }
    if (!p.ok()) {
      p.tokens.clear();
      p.step_probabilities.clear();
      p.confidence = 0.0;
    }
    labels.insert(p.model);
    slots[it->second] = std::move(p);
  }

  if (labels.size() > 1) {
    throw InputError(source.string() + ": records carry more than one model label");
  }
  result.model = options.model_label ? *options.model_label
                 : labels.empty()    ? source.stem().string()
                                     : *labels.begin();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (slots[i]) {
      result.predictions.push_back(std::move(*slots[i]));
    } else {
      ++result.missing;
      result.predictions.push_back(Prediction::None(tasks[i].id, result.model));
    }
  }
  return result;
}

std::string SerializePredictions(std::span<const Prediction> predictions) {
  std::string text;
  for (const Prediction& p : predictions) text += DumpLine(PredictionToJson(p)) + "\n";
  return text;
}

void WritePredictions(const std::filesystem::path& path,
                      std::span<const Prediction> predictions, const ExchangeMeta& meta) {
  WriteText(path, SerializePredictions(predictions));
  ExchangeMeta m = meta;
  m.count = static_cast<long long>(predictions.size());
  m.tokenizer = std::string(kTokenizerVersion);
  WriteExchangeMeta(path, m);
}

std::vector<Prediction> ReadPredictions(const std::filesystem::path& path) {
  std::vector<Prediction> out;
  std::set<std::string> seen;
  ForEachJsonLine(path, [&](const Json& j, int) {
    Prediction p;
    p.task_id = RequireString(j, "task_id");
    p.model = RequireString(j, "model");
    auto status = ParsePredictionStatus(RequireString(j, "status"));
    if (!status) throw InputError("field 'status' must be 'ok' or 'no-prediction'");
    p.status = *status;
    p.tokens = StringArray(RequireArray(j, "tokens"), "tokens");
    p.confidence = Confidence(j);
    p.step_probabilities = Probabilities(j);
    if (p.confidence < 0.0 || p.confidence > 1.0) throw InputError("confidence outside [0, 1]");
    if (!p.ok() && (!p.tokens.empty() || p.confidence != 0.0)) {
      throw InputError("no-prediction records must have no tokens and zero confidence");
    }
    if (!seen.insert(p.task_id).second) throw InputError("duplicate task id '" + p.task_id + "'");
    out.push_back(std::move(p));
  });
  return out;
}

}  // namespace ccomp
