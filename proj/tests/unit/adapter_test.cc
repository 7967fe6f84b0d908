#include "ccomp/adapter.h"

#include <gtest/gtest.h>

#include "ccomp/errors.h"
#include "test_support.h"

namespace ccomp {
namespace {

using testing::ReadBytes;
using testing::Words;
using testing::WriteBytes;

CompletionTask MakeTask(const std::string& id, const std::string& prefix,
                        const std::string& target) {
  CompletionTask t;
  t.id = id;
  t.origin = "m";
  t.context = FromTexts(Words("int f ( ) { return 1 ; }"));
  t.prefix = FromTexts(Words(prefix));
  t.target = FromTexts(Words(target));
  return t;
}

std::vector<CompletionTask> TenTasks() {
  std::vector<CompletionTask> tasks;
  for (int i = 0; i < 10; ++i) {
    tasks.push_back(MakeTask("m/jd/s0/v" + std::to_string(i), "returns", "the sum ."));
  }
  return tasks;
}

std::string Record(const std::string& id, const std::string& tokens, double confidence,
                   const std::string& model = "ext") {
  std::string list;
  for (const std::string& w : Words(tokens)) {
    list += (list.empty() ? "\"" : ",\"") + w + "\"";
  }
  return "{\"task_id\":\"" + id + "\",\"tokens\":[" + list +
         "],\"confidence\":" + std::to_string(confidence) + ",\"model\":\"" + model + "\"}\n";
}

TEST(TaskExport, InputHidesTargetAndRecordsLength) {
  CompletionTask t = MakeTask("m/jd/s0/v0", "returns the", "sum of both .");
  t.preceding = FromTexts(Words("Adds ."));
  TaskExport e = MakeTaskExport(t);
  EXPECT_EQ(e.task_id, "m/jd/s0/v0");
  EXPECT_EQ(e.input, "int f ( ) { return 1 ; } <sep> Adds . returns the <sep>");
  EXPECT_EQ(e.expected_length, 4);
  EXPECT_EQ(e.input.find("sum"), std::string::npos);
}

TEST(TaskExport, SortedWithManifest) {
  auto dir = testing::MakeTempDir("export");
  std::vector<CompletionTask> tasks = {MakeTask("b", "x", "y"), MakeTask("a", "x", "y z"),
                                       MakeTask("c", "x", "y")};
  ExchangeMeta meta;
  meta.split = "test";
  meta.corpus_fingerprint = "c1";
  meta.dataset_fingerprint = "d1";
  meta.config_fingerprint = "f1";
  meta.seed = 42;
  ExportTasks(tasks, dir / "tasks.jsonl", meta);
  std::vector<TaskExport> back = ReadTaskExports(dir / "tasks.jsonl");
  ASSERT_EQ(back.size(), 3u);
  EXPECT_EQ(back[0].task_id, "a");
  EXPECT_EQ(back[0].expected_length, 2);
  EXPECT_EQ(back[2].task_id, "c");
  auto manifest = ReadExchangeMeta(dir / "tasks.jsonl");
  ASSERT_TRUE(manifest);
  EXPECT_EQ(manifest->count, 3);
  EXPECT_EQ(manifest->split, "test");
  EXPECT_EQ(manifest->dataset_fingerprint, "d1");
  EXPECT_EQ(manifest->tokenizer, kTokenizerVersion);
  EXPECT_EQ(manifest->seed, 42u);
  EXPECT_FALSE(ReadExchangeMeta(dir / "absent.jsonl"));
}

TEST(Import, ClampsConfidence) {
  auto dir = testing::MakeTempDir("clamp");
  std::vector<CompletionTask> tasks = {MakeTask("t1", "x", "a b")};
  WriteBytes(dir / "p.jsonl", Record("t1", "a b", 1.3));
  ImportResult r = ImportPredictions(dir / "p.jsonl", tasks);
  ASSERT_EQ(r.predictions.size(), 1u);
  EXPECT_EQ(r.predictions[0].confidence, 1.0);
  EXPECT_EQ(r.clamped, 1);
  EXPECT_EQ(r.model, "ext");
}

TEST(Import, UnknownAndDuplicateIdsAreErrors) {
  auto dir = testing::MakeTempDir("ids");
  std::vector<CompletionTask> tasks = {MakeTask("t1", "x", "a")};
  WriteBytes(dir / "unknown.jsonl", Record("nope", "a", 0.5));
  EXPECT_THROW(ImportPredictions(dir / "unknown.jsonl", tasks), InputError);
  WriteBytes(dir / "dup.jsonl", Record("t1", "a", 0.5) + Record("t1", "a", 0.5));
  EXPECT_THROW(ImportPredictions(dir / "dup.jsonl", tasks), InputError);
  EXPECT_THROW(ImportPredictions(dir / "missing.jsonl", tasks), InputError);
}

TEST(Import, MissingTasksBecomeNoPredictions) {
  auto dir = testing::MakeTempDir("missing");
  std::vector<CompletionTask> tasks = TenTasks();
  std::string text;
  for (int i = 0; i < 8; ++i) text += Record(tasks[i].id, "the sum .", 0.7);
  WriteBytes(dir / "p.jsonl", text);
  ImportResult r = ImportPredictions(dir / "p.jsonl", tasks);
  ASSERT_EQ(r.predictions.size(), 10u);
  EXPECT_EQ(r.missing, 2);
  EXPECT_FALSE(r.predictions[8].ok());
  EXPECT_FALSE(r.predictions[9].ok());
  EXPECT_EQ(r.predictions[9].task_id, tasks[9].id);
  EXPECT_EQ(r.predictions[9].model, "ext");
  for (int i = 0; i < 8; ++i) EXPECT_TRUE(r.predictions[i].ok());
}

TEST(Import, MalformedRecordsAreSkippedAndCounted) {
  auto dir = testing::MakeTempDir("malformed");
  std::vector<CompletionTask> tasks = {MakeTask("t1", "x", "a"), MakeTask("t2", "x", "b"),
                                       MakeTask("t3", "x", "c")};
  std::string text = Record("t1", "a", 0.5) + "{ not json\n" +
                     "{\"task_id\":\"t2\",\"tokens\":\"a\",\"confidence\":0.5,\"model\":\"ext\"}\n" +
                     "\n" + Record("t3", "c", 0.25);
  WriteBytes(dir / "p.jsonl", text);
  ImportResult r = ImportPredictions(dir / "p.jsonl", tasks);
  EXPECT_EQ(r.malformed, 2);
  EXPECT_EQ(r.missing, 1);
  EXPECT_TRUE(r.predictions[0].ok());
  EXPECT_FALSE(r.predictions[1].ok());
  EXPECT_TRUE(r.predictions[2].ok());
  EXPECT_EQ(r.diagnostics.size(), 2u);
}

TEST(Import, LabelOverrideAndMixedLabels) {
  auto dir = testing::MakeTempDir("labels");
  std::vector<CompletionTask> tasks = {MakeTask("t1", "x", "a"), MakeTask("t2", "x", "b")};
  WriteBytes(dir / "p.jsonl", Record("t1", "a", 0.5, "one") + Record("t2", "b", 0.5, "two"));
  EXPECT_THROW(ImportPredictions(dir / "p.jsonl", tasks), InputError);
  ImportResult r = ImportPredictions(dir / "p.jsonl", tasks, {.model_label = "mine"});
  EXPECT_EQ(r.model, "mine");
  EXPECT_EQ(r.predictions[1].model, "mine");
}

TEST(Import, EmptyTokensMeanNoPrediction) {
  auto dir = testing::MakeTempDir("empty");
  std::vector<CompletionTask> tasks = {MakeTask("t1", "x", "a")};
  WriteBytes(dir / "p.jsonl", Record("t1", "", 0.9));
  ImportResult r = ImportPredictions(dir / "p.jsonl", tasks);
  EXPECT_FALSE(r.predictions[0].ok());
  EXPECT_EQ(r.predictions[0].confidence, 0.0);
}

TEST(Import, EchoRoundTrip) {
  auto dir = testing::MakeTempDir("echo");
  std::vector<CompletionTask> tasks = TenTasks();
  std::string text;
  for (const CompletionTask& t : tasks) {
    text += Record(t.id, JoinTokens(t.target), 1.0, "echo");
  }
  WriteBytes(dir / "p.jsonl", text);
  ImportResult r = ImportPredictions(dir / "p.jsonl", tasks);
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    EXPECT_EQ(r.predictions[i].tokens, TokenTexts(tasks[i].target));
  }
}

TEST(Predictions, WriteReadRoundTripIsByteStable) {
  auto dir = testing::MakeTempDir("preds");
  Prediction ok;
  ok.task_id = "t1";
  ok.tokens = {"a", "b"};
  ok.confidence = 0.125;
  ok.model = "ngram-5";
  ok.status = PredictionStatus::kOk;
  ok.step_probabilities = {0.5, 0.25};
  std::vector<Prediction> preds = {ok, Prediction::None("t2", "ngram-5")};
  ExchangeMeta meta;
  meta.split = "test";
  meta.model = "ngram-5";
  WritePredictions(dir / "p.jsonl", preds, meta);
  std::vector<Prediction> back = ReadPredictions(dir / "p.jsonl");
  EXPECT_EQ(back, preds);
  EXPECT_EQ(SerializePredictions(back), ReadBytes(dir / "p.jsonl"));
  EXPECT_EQ(ReadExchangeMeta(dir / "p.jsonl")->model, "ngram-5");
}

TEST(Predictions, StrictReaderRejectsViolations) {
  auto dir = testing::MakeTempDir("strict");
  WriteBytes(dir / "a.jsonl",
             "{\"task_id\":\"t\",\"model\":\"m\",\"status\":\"ok\",\"tokens\":[\"a\"],"
             "\"confidence\":1.5}\n");
  EXPECT_THROW(ReadPredictions(dir / "a.jsonl"), InputError);
  WriteBytes(dir / "b.jsonl",
             "{\"task_id\":\"t\",\"model\":\"m\",\"status\":\"no-prediction\",\"tokens\":[\"a\"],"
             "\"confidence\":0}\n");
  EXPECT_THROW(ReadPredictions(dir / "b.jsonl"), InputError);
}

}  // namespace
}  // namespace ccomp
