#include "ccomp/dataset.h"
#include "ccomp/errors.h"
#include "ccomp/fingerprint.h"
#include "json_util.h"

namespace ccomp {
namespace {

constexpr std::string_view kDatasetFormat = "ccomp-dataset-1";

Json TaskToJson(const CompletionTask& t) {
  Json j;
  j["id"] = t.id;
  j["task_kind"] = std::string(ToString(t.kind));
  j["context"] = TokensToJson(t.context);
  j["preceding"] = TokensToJson(t.preceding);
  j["prefix"] = TokensToJson(t.prefix);
  j["target"] = TokensToJson(t.target);
  j["sentence_index"] = t.sentence_index;
  j["variant_index"] = t.variant_index;
  j["origin"] = t.origin;
  return j;
}

CompletionTask TaskFromJson(const Json& j) {
  CompletionTask t;
  t.id = RequireString(j, "id");
  auto kind = ParseTaskKind(RequireString(j, "task_kind"));
  if (!kind) throw InputError("field 'task_kind' must be 'javadoc' or 'inner'");
  t.kind = *kind;
  t.context = TokensFromJson(RequireArray(j, "context"), "context");
  t.preceding = TokensFromJson(RequireArray(j, "preceding"), "preceding");
  t.prefix = TokensFromJson(RequireArray(j, "prefix"), "prefix");
  t.target = TokensFromJson(RequireArray(j, "target"), "target");
  t.sentence_index = static_cast<int>(RequireInt(j, "sentence_index"));
  t.variant_index = static_cast<int>(RequireInt(j, "variant_index"));
  t.origin = RequireString(j, "origin");
  if (t.prefix.empty()) throw InputError("field 'prefix' must not be empty");
  if (t.target.empty()) throw InputError("field 'target' must not be empty");
  return t;
}

std::string SplitFileName(SplitLabel label) {
  switch (label) {
    case SplitLabel::kTrain: return "train.jsonl";
    case SplitLabel::kEval: return "eval.jsonl";
    case SplitLabel::kTest: return "test.jsonl";
    case SplitLabel::kPretrain: return "pretrain.jsonl";
  }
  return {};
}

std::string ShortSplitName(SplitLabel label) {
  switch (label) {
    case SplitLabel::kTrain: return "train";
    case SplitLabel::kEval: return "eval";
    case SplitLabel::kTest: return "test";
    case SplitLabel::kPretrain: return "pretrain";
  }
  return {};
}

}  // namespace

std::string SerializeTasks(const std::vector<CompletionTask>& tasks) {
  std::string out;
  for (const CompletionTask& t : tasks) {
    out += DumpLine(TaskToJson(t));
    out += '\n';
  }
  return out;
}

std::vector<CompletionTask> ReadTasks(const std::filesystem::path& path) {
  std::vector<CompletionTask> out;
  ForEachJsonLine(path, [&](const Json& j, int) { out.push_back(TaskFromJson(j)); });
  return out;
}

std::vector<PretrainInstance> ReadPretrain(const std::filesystem::path& path) {
  std::vector<PretrainInstance> out;
  ForEachJsonLine(path, [&](const Json& j, int) {
    PretrainInstance p;
    p.origin = RequireString(j, "origin");
    p.input = TokensFromJson(RequireArray(j, "input"), "input");
    p.target = TokensFromJson(RequireArray(j, "target"), "target");
    out.push_back(std::move(p));
  });
  return out;
}

SplitAssignment ReadSplitAssignment(const std::filesystem::path& path) {
  SplitAssignment out;
  ForEachJsonLine(path, [&](const Json& j, int) {
    auto label = ParseSplitLabel(RequireString(j, "split"));
    if (!label) throw InputError("unknown split label");
    if (!out.labels.emplace(RequireString(j, "origin"), *label).second) {
      throw InputError("origin listed twice");
    }
  });
  return out;
}

DatasetMetadata WriteDataset(const std::filesystem::path& dir, const Dataset& dataset,
                             const DatasetConfig& config,
                             const std::string& corpus_fingerprint,
                             const std::string& config_fingerprint) {
  std::filesystem::create_directories(dir);
  Fingerprint fp;

  std::string splits;
  for (const auto& [origin, label] : dataset.assignment.labels) {
    Json j;
    j["origin"] = origin;
    j["split"] = std::string(ToString(label));
    splits += DumpLine(j) + "\n";
  }
  WriteText(dir / "splits.jsonl", splits);
  fp.Update(splits);

  std::string pretrain;
  for (const PretrainInstance& p : dataset.pretrain) {
    Json j;
    j["origin"] = p.origin;
    j["input"] = TokensToJson(p.input);
    j["target"] = TokensToJson(p.target);
    pretrain += DumpLine(j) + "\n";
  }
  WriteText(dir / "pretrain.jsonl", pretrain);
  fp.Update(pretrain);

  DatasetMetadata meta;
  meta.format = std::string(kDatasetFormat);
  meta.seed = config.seed;
  meta.ratios = config.ratios;
  meta.mask_rate = config.mask_rate;
  meta.tokenizer = std::string(kTokenizerVersion);
  meta.corpus_fingerprint = corpus_fingerprint;
  meta.config_fingerprint = config_fingerprint;
  meta.pretrain_instances = static_cast<int>(dataset.pretrain.size());
  for (const auto& [label, n] : dataset.assignment.Counts()) {
    meta.origins[ShortSplitName(label)] = n;
  }
  for (TaskKind kind : {TaskKind::kJavadoc, TaskKind::kInner}) {
    for (SplitLabel label : {SplitLabel::kTrain, SplitLabel::kEval, SplitLabel::kTest}) {
      meta.tasks[std::string(ToString(kind))][ShortSplitName(label)] = 0;
      meta.tasks["total"][ShortSplitName(label)] = 0;
    }
  }
  for (SplitLabel label : {SplitLabel::kTrain, SplitLabel::kEval, SplitLabel::kTest}) {
    const auto& tasks = dataset.Split(label);
    std::string text = SerializeTasks(tasks);
    WriteText(dir / SplitFileName(label), text);
    fp.Update(text);
    for (const CompletionTask& t : tasks) {
      ++meta.tasks[std::string(ToString(t.kind))][ShortSplitName(label)];
      ++meta.tasks["total"][ShortSplitName(label)];
    }
  }
  meta.dataset_fingerprint = fp.Hex();

  Json j;
  j["format"] = meta.format;
  j["seed"] = meta.seed;
  j["ratios"] = {{"pretrain", meta.ratios.pretrain},
                 {"finetune", meta.ratios.finetune},
                 {"train", meta.ratios.train},
                 {"eval", meta.ratios.eval},
                 {"test", meta.ratios.test}};
  j["mask_rate"] = meta.mask_rate;
  j["max_variants"] = config.max_variants;
  j["tokenizer"] = meta.tokenizer;
  j["corpus_fingerprint"] = meta.corpus_fingerprint;
  j["config_fingerprint"] = meta.config_fingerprint;
  j["dataset_fingerprint"] = meta.dataset_fingerprint;
  j["origins"] = meta.origins;
  Json tasks;
  for (std::string kind : {"javadoc", "inner", "total"}) tasks[kind] = meta.tasks[kind];
  j["tasks"] = tasks;
  j["pretrain_instances"] = meta.pretrain_instances;
  WriteText(dir / "metadata.json", DumpPretty(j));
  return meta;
}

DatasetMetadata ReadDatasetMetadata(const std::filesystem::path& dir) {
  Json j = Json::parse(ReadText(dir / "metadata.json"), nullptr, false);
  if (!j.is_object()) throw InputError((dir / "metadata.json").string() + ": not a JSON object");
  DatasetMetadata meta;
  try {
    meta.format = RequireString(j, "format");
    if (meta.format != kDatasetFormat) throw InputError("unsupported dataset format " + meta.format);
    meta.seed = j.at("seed").get<std::uint64_t>();
    const Json& r = j.at("ratios");
    meta.ratios = {r.at("pretrain").get<double>(), r.at("finetune").get<double>(),
                   r.at("train").get<double>(), r.at("eval").get<double>(),
                   r.at("test").get<double>()};
    meta.mask_rate = j.at("mask_rate").get<double>();
    meta.tokenizer = RequireString(j, "tokenizer");
    meta.corpus_fingerprint = RequireString(j, "corpus_fingerprint");
    meta.config_fingerprint = RequireString(j, "config_fingerprint");
    meta.dataset_fingerprint = RequireString(j, "dataset_fingerprint");
    meta.origins = j.at("origins").get<std::map<std::string, int>>();
    meta.tasks = j.at("tasks").get<std::map<std::string, std::map<std::string, int>>>();
    meta.pretrain_instances = static_cast<int>(RequireInt(j, "pretrain_instances"));
  } catch (const nlohmann::json::exception& e) {
    throw InputError((dir / "metadata.json").string() + ": " + e.what());
  }
  return meta;
}

std::vector<CompletionTask> ReadSplit(const std::filesystem::path& dir, std::string_view split) {
  auto label = ParseSplitLabel(split);
  if (!label || *label == SplitLabel::kPretrain) {
    throw InputError("unknown split '" + std::string(split) + "' (expected train, eval or test)");
  }
  return ReadTasks(dir / SplitFileName(*label));
}

}  // namespace ccomp
