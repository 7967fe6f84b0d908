#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ccomp/adapter.h"
#include "ccomp/corpus.h"
#include "ccomp/dataset.h"
#include "ccomp/errors.h"
#include "ccomp/fingerprint.h"
#include "ccomp/ngram.h"
#include "ccomp/preprocess.h"
#include "ccomp/report.h"
#include "ccomp/tokenizer.h"

namespace ccomp::cli {
namespace fs = std::filesystem;

namespace {

// Flags shared by the subcommands. Each flag also reads CCOMP_<NAME>.
struct RunConfig {
  std::uint64_t seed = 42;
  int token_budget = 256;
  int min_comment_words = 3;
  double mask_rate = 0.15;
  int max_variants = 5;
  std::vector<double> ratios = {2.0 / 3.0, 1.0 / 3.0, 0.8, 0.1, 0.1};
  int order = 5;
  std::vector<int> orders = {3, 5, 7};
  int k = 0;
  std::string split = "test";
  std::string format = "machine";
  std::string label;
  unsigned threads = 0;
  bool interactive = false;

  std::string source;
  std::string input;
  std::string dataset;
  std::string model;
  std::vector<std::string> predictions;
  std::string out;
  std::string report;
};

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Stable digest of the settings that shape a command's output.
class ConfigDigest {
 public:
  explicit ConfigDigest(std::string_view command) { Add("command", command); }
  ConfigDigest& Add(std::string_view key, std::string_view value) {
    text_ += key;
    text_ += '=';
    text_ += value;
    text_ += ';';
    return *this;
  }
  ConfigDigest& Add(std::string_view key, double value) { return Add(key, FormatDouble(value)); }
  ConfigDigest& Add(std::string_view key, long long value) {
    return Add(key, std::to_string(value));
  }
  std::string Hex() const { return FingerprintBytes(text_); }

 private:
  std::string text_;
};

void RequireFile(const std::string& path, const char* what) {
  if (!fs::exists(path)) throw InputError(std::string(what) + " not found: " + path);
}

std::string Stem(const std::string& path) { return fs::path(path).stem().string(); }

void WriteOutput(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream file(p, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << text;
}

void CheckFormat(const std::string& format) {
  if (format != "machine" && format != "text") {
    throw UsageError("--format must be 'machine' or 'text', got '" + format + "'");
  }
}

void CheckSplit(const std::string& split) {
  if (split != "train" && split != "eval" && split != "test") {
    throw UsageError("--split must be train, eval or test, got '" + split + "'");
  }
}

SplitRatios RatiosFrom(const std::vector<double>& values) {
  if (values.size() != 5) {
    throw UsageError("--ratios takes five values: pretrain,finetune,train,eval,test");
  }
  SplitRatios r{values[0], values[1], values[2], values[3], values[4]};
  r.Validate();
  return r;
}

// --- commands ---

int Ingest(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (!fs::exists(c.source)) throw InputError("source not found: " + c.source);
  LoadResult loaded = LoadCorpus(c.source);
  WriteCorpus(c.out, loaded.instances);
  ExchangeMeta meta;
  meta.split = "corpus";
  meta.count = static_cast<long long>(loaded.instances.size());
  meta.corpus_fingerprint = FingerprintFile(c.out);
  meta.config_fingerprint = ConfigDigest("ingest").Hex();
  meta.tokenizer = std::string(kTokenizerVersion);
  meta.seed = c.seed;
  WriteExchangeMeta(c.out, meta);
  for (const std::string& d : loaded.diagnostics) err << "skipped: " << d << "\n";
  out << "ingested " << loaded.instances.size() << " instances (" << loaded.skipped
      << " skipped) -> " << c.out << "\n";
  return kExitOk;
}

int Preprocess(const RunConfig& c, const std::map<std::string, bool>& disabled,
               std::ostream& out) {
  RequireFile(c.input, "corpus");
  PreprocessConfig config;
  config.token_budget = c.token_budget;
  config.min_comment_words = c.min_comment_words;
  config.token_budget_filter = !disabled.at("token-budget");
  config.ascii_filter = !disabled.at("ascii");
  config.length_filter = !disabled.at("length");
  config.satd_filter = !disabled.at("satd");
  config.commented_code_filter = !disabled.at("commented-code");
  config.normalize = !disabled.at("normalize");
  config.orphan_filter = !disabled.at("orphan");
  config.merge_inline = !disabled.at("merge");
  config.dedupe = !disabled.at("dedupe");
  if (config.token_budget < 1) throw UsageError("--token-budget must be positive");

  ConfigDigest digest("preprocess");
  digest.Add("token_budget", static_cast<long long>(config.token_budget))
      .Add("min_comment_words", static_cast<long long>(config.min_comment_words));
  for (const auto& [name, off] : disabled) digest.Add(name, off ? "off" : "on");

  std::vector<MethodInstance> corpus = ReadCorpus(c.input);
  PreprocessResult result = RunPipeline(corpus, config);
  WriteCorpus(c.out, result.corpus);
  std::string report_path = c.report.empty() ? c.out + ".filter.json" : c.report;
  WriteOutput(report_path, FilterReportToJson(result.report), out);

  ExchangeMeta meta;
  meta.split = "corpus";
  meta.count = static_cast<long long>(result.corpus.size());
  meta.corpus_fingerprint = FingerprintFile(c.out);
  meta.config_fingerprint = digest.Hex();
  meta.tokenizer = std::string(kTokenizerVersion);
  meta.seed = c.seed;
  WriteExchangeMeta(c.out, meta);

  const FilterReport& r = result.report;
  out << "preprocessed " << r.input << " -> " << r.output << " instances"
      << " (token budget " << r.removed_token_budget << ", non-ascii " << r.removed_non_ascii
      << ", short " << r.removed_short_comment << ", satd " << r.removed_satd
      << ", commented code " << r.removed_commented_code << ", orphan " << r.removed_orphan
      << ", duplicate " << r.removed_duplicate << ") -> " << c.out << "\n";
  return kExitOk;
}

int BuildDatasetCommand(const RunConfig& c, std::ostream& out) {
  RequireFile(c.input, "corpus");
  DatasetConfig config;
  config.seed = c.seed;
  config.ratios = RatiosFrom(c.ratios);
  config.mask_rate = c.mask_rate;
  config.max_variants = c.max_variants;
  if (config.mask_rate <= 0.0 || config.mask_rate > 1.0) {
    throw UsageError("--mask-rate must be in (0, 1]");
  }
  if (config.max_variants < 1) throw UsageError("--max-variants must be positive");
  ConfigDigest digest("build-dataset");
  digest.Add("seed", static_cast<long long>(config.seed))
      .Add("pretrain", config.ratios.pretrain)
      .Add("finetune", config.ratios.finetune)
      .Add("train", config.ratios.train)
      .Add("eval", config.ratios.eval)
      .Add("test", config.ratios.test)
      .Add("mask_rate", config.mask_rate)
      .Add("max_variants", static_cast<long long>(config.max_variants));

  std::vector<MethodInstance> corpus = ReadCorpus(c.input);
  Dataset dataset = BuildDataset(corpus, config);
  DatasetMetadata meta =
      WriteDataset(c.out, dataset, config, FingerprintFile(c.input), digest.Hex());
  out << "dataset: " << dataset.assignment.labels.size() << " origins, "
      << dataset.pretrain.size() << " pretraining instances, " << dataset.train.size()
      << "/" << dataset.eval.size() << "/" << dataset.test.size()
      << " train/eval/test tasks -> " << c.out << " [" << meta.dataset_fingerprint << "]\n";
  return kExitOk;
}

DatasetMetadata RequireDataset(const std::string& dir) {
  if (!fs::is_directory(dir)) throw InputError("dataset directory not found: " + dir);
  return ReadDatasetMetadata(dir);
}

int Train(const RunConfig& c, std::ostream& out) {
  DatasetMetadata meta = RequireDataset(c.dataset);
  std::vector<CompletionTask> train = ReadSplit(c.dataset, "train");
  NgramModel model = NgramModel::Train(TrainingSequences(train), c.order, c.threads);
  model.SaveFile(c.out);

  ExchangeMeta sidecar;
  sidecar.split = "train";
  sidecar.model = c.label.empty() ? "ngram-" + std::to_string(c.order) : c.label;
  sidecar.count = static_cast<long long>(model.history_count());
  sidecar.corpus_fingerprint = meta.corpus_fingerprint;
  sidecar.dataset_fingerprint = meta.dataset_fingerprint;
  sidecar.config_fingerprint =
      ConfigDigest("train").Add("order", static_cast<long long>(c.order)).Hex();
  sidecar.tokenizer = std::string(kTokenizerVersion);
  sidecar.seed = meta.seed;
  WriteExchangeMeta(c.out, sidecar);
  out << "trained " << c.order << "-gram model: " << model.vocabulary_size() << " types, "
      << model.history_count() << " histories, " << model.token_count() << " tokens -> "
      << c.out << "\n";
  return kExitOk;
}

int Sweep(const RunConfig& c, std::ostream& out, std::ostream& err) {
  CheckFormat(c.format);
  RequireDataset(c.dataset);
  std::vector<CompletionTask> train = ReadSplit(c.dataset, "train");
  std::vector<CompletionTask> eval = ReadSplit(c.dataset, "eval");
  SweepResult sweep = SweepOrders(train, eval, c.orders);
  WriteOutput(c.out, c.format == "text" ? SweepToText(sweep) : SweepToJson(sweep), out);
  if (!c.out.empty() && c.out != "-") {
    err << "sweep over " << sweep.rows.size() << " orders; best order " << sweep.best_order
        << " -> " << c.out << "\n";
  }
  return kExitOk;
}

ExchangeMeta SplitMeta(const DatasetMetadata& meta, const std::string& split,
                       const std::string& config_fingerprint) {
  ExchangeMeta m;
  m.split = split;
  m.corpus_fingerprint = meta.corpus_fingerprint;
  m.dataset_fingerprint = meta.dataset_fingerprint;
  m.config_fingerprint = config_fingerprint;
  m.seed = meta.seed;
  return m;
}

int Predict(const RunConfig& c, std::ostream& out) {
  CheckSplit(c.split);
  RequireFile(c.model, "model");
  DatasetMetadata meta = RequireDataset(c.dataset);
  NgramModel model = NgramModel::LoadFile(c.model);
  std::vector<CompletionTask> tasks = ReadSplit(c.dataset, c.split);
  std::string label = c.label.empty() ? "ngram-" + std::to_string(model.order()) : c.label;
  std::vector<Prediction> predictions = PredictTasks(model, tasks, label, c.k);
  ExchangeMeta m = SplitMeta(meta, c.split,
                             ConfigDigest("predict")
                                 .Add("k", static_cast<long long>(c.k))
                                 .Add("model", model.fingerprint())
                                 .Add("split", c.split)
                                 .Hex());
  m.model = label;
  WritePredictions(c.out, predictions, m);
  long long ok = std::count_if(predictions.begin(), predictions.end(),
                               [](const Prediction& p) { return p.ok(); });
  out << "predicted " << ok << "/" << predictions.size() << " " << c.split << " tasks with "
      << label << " -> " << c.out << "\n";
  return kExitOk;
}

int ExportTasksCommand(const RunConfig& c, std::ostream& out) {
  CheckSplit(c.split);
  DatasetMetadata meta = RequireDataset(c.dataset);
  std::vector<CompletionTask> tasks = ReadSplit(c.dataset, c.split);
  ExchangeMeta m =
      SplitMeta(meta, c.split, ConfigDigest("export-tasks").Add("split", c.split).Hex());
  std::vector<TaskExport> exports = ExportTasks(tasks, c.out, m);
  out << "exported " << exports.size() << " " << c.split << " tasks -> " << c.out << "\n";
  return kExitOk;
}

int ImportPredictionsCommand(const RunConfig& c, std::ostream& out, std::ostream& err) {
  CheckSplit(c.split);
  RequireFile(c.input, "predictions");
  DatasetMetadata meta = RequireDataset(c.dataset);
  std::vector<CompletionTask> tasks = ReadSplit(c.dataset, c.split);
  ImportOptions options;
  if (!c.label.empty()) options.model_label = c.label;
  ImportResult result = ImportPredictions(c.input, tasks, options);
  ExchangeMeta m = SplitMeta(
      meta, c.split,
      ConfigDigest("import-predictions").Add("split", c.split).Add("label", c.label).Hex());
  m.model = result.model;
  WritePredictions(c.out, result.predictions, m);
  for (const std::string& d : result.diagnostics) err << d << "\n";
  out << "imported " << result.predictions.size() - result.missing << "/" << tasks.size()
      << " predictions for " << result.model << " (" << result.malformed << " malformed, "
      << result.clamped << " clamped, " << result.missing << " missing) -> " << c.out << "\n";
  return kExitOk;
}

std::string LabelFor(const std::string& path, const std::vector<Prediction>& predictions,
                     const std::optional<ExchangeMeta>& meta) {
  if (meta && !meta->model.empty()) return meta->model;
  for (const Prediction& p : predictions) {
    if (!p.model.empty()) return p.model;
  }
  return Stem(path);
}

int Evaluate(const RunConfig& c, std::ostream& out, std::ostream& err, bool compare) {
  CheckSplit(c.split);
  CheckFormat(c.format);
  if (compare && c.predictions.size() != 2) {
    throw UsageError("compare takes exactly two prediction files");
  }
  if (c.predictions.empty() || c.predictions.size() > 2) {
    throw UsageError("evaluate takes one or two prediction files");
  }
  DatasetMetadata meta = RequireDataset(c.dataset);
  std::vector<CompletionTask> tasks = ReadSplit(c.dataset, c.split);
  std::vector<ModelPredictions> models;
  ConfigDigest digest(compare ? "compare" : "evaluate");
  digest.Add("split", c.split);
  for (const std::string& path : c.predictions) {
    RequireFile(path, "predictions");
    std::optional<ExchangeMeta> pm = ReadExchangeMeta(path);
    if (pm) {
      if (!pm->corpus_fingerprint.empty() &&
          pm->corpus_fingerprint != meta.corpus_fingerprint) {
        throw InputError(path + ": corpus fingerprint " + pm->corpus_fingerprint +
                         " does not match the dataset's " + meta.corpus_fingerprint);
      }
      if (!pm->dataset_fingerprint.empty() &&
          pm->dataset_fingerprint != meta.dataset_fingerprint) {
        throw InputError(path + ": dataset fingerprint " + pm->dataset_fingerprint +
                         " does not match " + meta.dataset_fingerprint);
      }
      if (!pm->split.empty() && pm->split != c.split) {
        throw InputError(path + ": predictions are for split '" + pm->split +
                         "', not '" + c.split + "'");
      }
    } else {
      err << "warning: " << path << " has no metadata sidecar; fingerprints not checked\n";
    }
    ModelPredictions mp;
    mp.predictions = ReadPredictions(path);
    mp.label = LabelFor(path, mp.predictions, pm);
    digest.Add("predictions", FingerprintFile(path));
    models.push_back(std::move(mp));
  }
  EvalReport report = BuildReport(tasks, models);
  report.split = c.split;
  report.corpus_fingerprint = meta.corpus_fingerprint;
  report.dataset_fingerprint = meta.dataset_fingerprint;
  report.config_fingerprint = digest.Hex();
  WriteOutput(c.out, c.format == "text" ? ReportToText(report) : ReportToJson(report), out);
  if (!c.out.empty() && c.out != "-") {
    err << "report for " << models.size() << " model(s) over " << tasks.size() << " "
        << c.split << " tasks -> " << c.out << "\n";
  }
  return kExitOk;
}

int Complete(const RunConfig& c, std::istream& in, std::ostream& out) {
  RequireFile(c.model, "model");
  NgramModel model = NgramModel::LoadFile(c.model);
  int k = c.k > 0 ? c.k : 10;
  std::string line;
  for (;;) {
    if (c.interactive) out << "> " << std::flush;
    if (!std::getline(in, line)) break;
    std::vector<std::string> history = TokenTexts(Tokenize(line));
    if (history.empty()) continue;
    Continuation cont = model.Continue(history, k);
    if (cont.tokens.empty()) {
      out << "<no-prediction>\n";
      continue;
    }
    double log_sum = 0.0;
    for (double p : cont.probabilities) log_sum += std::log(p);
    double confidence = std::exp(log_sum / static_cast<double>(cont.probabilities.size()));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", confidence);
    out << JoinTexts(cont.tokens) << "\t" << buf << "\n";
  }
  if (c.interactive) out << "\n";
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"ccomp: code comment completion toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");
  RunConfig c;

  auto seed = [&](CLI::App* sub) {
    sub->add_option("--seed", c.seed, "Random seed")->envname("CCOMP_SEED");
  };
  auto format = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format: machine or text")
        ->envname("CCOMP_FORMAT");
  };
  auto split = [&](CLI::App* sub) {
    sub->add_option("--split", c.split, "Dataset split: train, eval or test")
        ->envname("CCOMP_SPLIT");
  };
  auto output = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-o,--out", c.out, "Output path");
    if (required) opt->required();
  };

  CLI::App* ingest = app.add_subcommand("ingest", "Extract method/comment instances");
  ingest->add_option("source", c.source, "Java file, directory or JSONL dump")->required();
  output(ingest, true);
  seed(ingest);

  CLI::App* preprocess = app.add_subcommand("preprocess", "Filter and normalize a corpus");
  preprocess->add_option("input", c.input, "Corpus file")->required();
  output(preprocess, true);
  seed(preprocess);
  preprocess->add_option("--token-budget", c.token_budget, "Maximum instance tokens (exclusive)")
      ->envname("CCOMP_TOKEN_BUDGET");
  preprocess->add_option("--min-words", c.min_comment_words, "Minimum comment words")
      ->envname("CCOMP_MIN_WORDS");
  preprocess->add_option("--report", c.report, "Filter report path (default <out>.filter.json)");
  const std::vector<std::string> filters = {"token-budget", "ascii",  "length",
                                            "satd",         "commented-code", "normalize",
                                            "orphan",       "merge",  "dedupe"};
  std::map<std::string, bool> disabled;
  for (const std::string& f : filters) disabled[f] = false;
  for (const std::string& f : filters) {
    preprocess->add_flag("--no-" + f, disabled[f], "Disable the " + f + " step");
  }

  CLI::App* build = app.add_subcommand("build-dataset", "Split a corpus and generate tasks");
  build->add_option("input", c.input, "Preprocessed corpus file")->required();
  output(build, true);
  seed(build);
  build->add_option("--mask-rate", c.mask_rate, "Pretraining mask rate")
      ->envname("CCOMP_MASK_RATE");
  build->add_option("--max-variants", c.max_variants, "Masked variants per sentence")
      ->envname("CCOMP_MAX_VARIANTS");
  build->add_option("--ratios", c.ratios, "pretrain,finetune,train,eval,test")
      ->delimiter(',')
      ->expected(5)
      ->envname("CCOMP_RATIOS");

  CLI::App* train = app.add_subcommand("train", "Train an n-gram model on the train split");
  train->add_option("dataset", c.dataset, "Dataset directory")->required();
  output(train, true);
  train->add_option("--order", c.order, "n-gram order")->envname("CCOMP_ORDER");
  train->add_option("--label", c.label, "Model label");
  train->add_option("--threads", c.threads, "Counting threads (0 = all cores)");

  CLI::App* sweep = app.add_subcommand("sweep", "Pick the n-gram order on the eval split");
  sweep->add_option("dataset", c.dataset, "Dataset directory")->required();
  output(sweep, false);
  format(sweep);
  sweep->add_option("--orders", c.orders, "Orders to try")
      ->delimiter(',')
      ->envname("CCOMP_ORDERS");

  CLI::App* predict = app.add_subcommand("predict", "Predict a split with an n-gram model");
  predict->add_option("model", c.model, "Model file")->required();
  predict->add_option("dataset", c.dataset, "Dataset directory")->required();
  output(predict, true);
  split(predict);
  predict->add_option("--k", c.k, "Predict at most k tokens (0 = whole target)")
      ->envname("CCOMP_K");
  predict->add_option("--label", c.label, "Model label");

  CLI::App* export_tasks = app.add_subcommand("export-tasks", "Write model inputs for a split");
  export_tasks->add_option("dataset", c.dataset, "Dataset directory")->required();
  output(export_tasks, true);
  split(export_tasks);

  CLI::App* import = app.add_subcommand("import-predictions", "Import external predictions");
  import->add_option("input", c.input, "Prediction records (JSONL)")->required();
  import->add_option("dataset", c.dataset, "Dataset directory")->required();
  output(import, true);
  split(import);
  import->add_option("--label", c.label, "Override the model label");

  CLI::App* evaluate = app.add_subcommand("evaluate", "Report metrics for one or two models");
  evaluate->add_option("dataset", c.dataset, "Dataset directory")->required();
  evaluate->add_option("predictions", c.predictions, "Prediction files")->required();
  output(evaluate, false);
  split(evaluate);
  format(evaluate);

  CLI::App* compare = app.add_subcommand("compare", "Paired comparison of two models");
  compare->add_option("dataset", c.dataset, "Dataset directory")->required();
  compare->add_option("predictions", c.predictions, "Two prediction files")
      ->required()
      ->expected(2);
  output(compare, false);
  split(compare);
  format(compare);

  CLI::App* complete = app.add_subcommand("complete", "Complete comment prefixes from input");
  complete->add_option("model", c.model, "Model file")->required();
  complete->add_flag("--interactive", c.interactive, "Prompt for each line");
  complete->add_option("--k", c.k, "Maximum tokens to suggest (default 10)")
      ->envname("CCOMP_K");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (ingest->parsed()) return Ingest(c, out, err);
    if (preprocess->parsed()) return Preprocess(c, disabled, out);
    if (build->parsed()) return BuildDatasetCommand(c, out);
    if (train->parsed()) return Train(c, out);
    if (sweep->parsed()) return Sweep(c, out, err);
    if (predict->parsed()) return Predict(c, out);
    if (export_tasks->parsed()) return ExportTasksCommand(c, out);
    if (import->parsed()) return ImportPredictionsCommand(c, out, err);
    if (evaluate->parsed()) return Evaluate(c, out, err, false);
    if (compare->parsed()) return Evaluate(c, out, err, true);
    if (complete->parsed()) return Complete(c, in, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace ccomp::cli
