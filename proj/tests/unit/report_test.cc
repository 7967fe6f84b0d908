#include "ccomp/report.h"

#include <gtest/gtest.h>

#include <random>

#include "ccomp/errors.h"
#include "test_support.h"
#include "json.hpp"

namespace ccomp {
namespace {

using testing::Words;

CompletionTask MakeTask(const std::string& id, TaskKind kind, const std::string& target) {
  CompletionTask t;
  t.id = id;
  t.origin = id;
  t.kind = kind;
  t.context = FromTexts(Words("void f ( ) { }"));
  t.prefix = FromTexts(Words("the"));
  t.target = FromTexts(Words(target));
  return t;
}

Prediction Ok(const std::string& id, std::vector<std::string> tokens, double conf = 0.5) {
  Prediction p;
  p.task_id = id;
  p.tokens = std::move(tokens);
  p.status = PredictionStatus::kOk;
  p.confidence = conf;
  p.model = "m";
  return p;
}

// Targets of every length 1..14 in both comment kinds.
std::vector<CompletionTask> Tasks() {
  std::vector<CompletionTask> tasks;
  for (int n = 1; n <= 14; ++n) {
    std::string target;
    for (int i = 0; i < n; ++i) target += "w" + std::to_string(i) + " ";
    tasks.push_back(MakeTask("jd" + std::to_string(n), TaskKind::kJavadoc, target));
    tasks.push_back(MakeTask("ic" + std::to_string(n), TaskKind::kInner, target));
  }
  return tasks;
}

std::vector<Prediction> Echo(const std::vector<CompletionTask>& tasks) {
  std::vector<Prediction> out;
  for (const CompletionTask& t : tasks) out.push_back(Ok(t.id, TokenTexts(t.target), 1.0));
  return out;
}

TEST(Report, EchoIsPerfectEverywhere) {
  auto tasks = Tasks();
  ModelReport r = EvaluateModel(tasks, Echo(tasks), "echo");
  for (Panel panel : kPanels) {
    for (int b = 0; b < kBucketCount; ++b) {
      const ReportCell& c = r.cell(panel, b);
      ASSERT_FALSE(c.empty());
      EXPECT_EQ(c.PerfectRate(), 1.0);
      EXPECT_EQ(c.MeanLevenshtein(), 0.0);
      if (b >= 3) {
        EXPECT_EQ(c.MeanBleuA(), 1.0);
      } else {
        EXPECT_FALSE(c.MeanBleuA());
      }
    }
  }
  // bucket k counts targets with at least k tokens: 14 - k + 1 per kind.
  EXPECT_EQ(r.cell(Panel::kJavadoc, 0).count, 14);
  EXPECT_EQ(r.cell(Panel::kJavadoc, 9).count, 5);
  EXPECT_EQ(r.cell(Panel::kJavadoc, kOverflowBucket).count, 4);
  EXPECT_EQ(r.cell(Panel::kOverall, 9).count, 10);
  EXPECT_FALSE(r.cell(Panel::kJavadoc, 0).MeanBleu(2));
}

TEST(Report, EmptyModelIsNeverPerfect) {
  auto tasks = Tasks();
  std::vector<ModelPredictions> models = {{"echo", Echo(tasks)}, {"empty", {}}};
  EvalReport r = BuildReport(tasks, models);
  ASSERT_EQ(r.models.size(), 2u);
  const ModelReport& empty = r.models[1];
  EXPECT_EQ(empty.no_predictions, static_cast<long long>(tasks.size()));
  for (Panel panel : kPanels) {
    for (int b = 0; b < kBucketCount; ++b) EXPECT_EQ(empty.cell(panel, b).PerfectRate(), 0.0);
  }
  ASSERT_TRUE(r.comparison);
  for (Panel panel : kPanels) {
    const Overlap& o = r.comparison->panels[static_cast<int>(panel)].overlap;
    EXPECT_EQ(o.shared, 0.0);
    EXPECT_EQ(o.only_a, 1.0);
    EXPECT_EQ(o.only_b, 0.0);
  }
  for (PosGroup g : kPosGroups) EXPECT_EQ(empty.pos[static_cast<int>(g)].positions, 0);
}

TEST(Report, BuildReportValidation) {
  auto tasks = Tasks();
  std::vector<ModelPredictions> same = {{"m", {}}, {"m", {}}};
  EXPECT_THROW(BuildReport(tasks, same), InputError);
  std::vector<ModelPredictions> unknown = {{"m", {Ok("nope", {"a"})}}};
  EXPECT_THROW(BuildReport(tasks, unknown), InputError);
  std::vector<ModelPredictions> dup = {{"m", {Ok("jd1", {"a"}), Ok("jd1", {"a"})}}};
  EXPECT_THROW(BuildReport(tasks, dup), InputError);
  std::vector<ModelPredictions> none;
  EXPECT_THROW(BuildReport(tasks, none), UsageError);
  std::vector<ModelPredictions> three = {{"a", {}}, {"b", {}}, {"c", {}}};
  EXPECT_THROW(BuildReport(tasks, three), UsageError);
}

std::vector<Prediction> RandomPredictions(const std::vector<CompletionTask>& tasks,
                                          std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<Prediction> out;
  for (const CompletionTask& t : tasks) {
    if (gen() % 5 == 0) {
      out.push_back(Prediction::None(t.id, "m"));
      continue;
    }
    std::vector<std::string> tokens = TokenTexts(t.target);
    std::size_t cut = gen() % (tokens.size() + 3);
    if (cut < tokens.size()) tokens[cut] = "zz";
    if (gen() % 4 == 0) tokens.resize(gen() % tokens.size() + 1);
    out.push_back(Ok(t.id, tokens, (gen() % 100) / 100.0));
  }
  return out;
}

TEST(Report, CountsMatchIndependentRecount) {
  auto tasks = Tasks();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto preds = RandomPredictions(tasks, seed);
    ModelReport r = EvaluateModel(tasks, preds, "m");
    for (Panel panel : kPanels) {
      for (int b = 0; b < kBucketCount; ++b) {
        long long count = 0;
        long long perfect = 0;
        double lev = 0.0;
        for (std::size_t i = 0; i < tasks.size(); ++i) {
          bool in_panel = panel == Panel::kOverall ||
                          (panel == Panel::kJavadoc) == (tasks[i].kind == TaskKind::kJavadoc);
          if (!in_panel) continue;
          std::vector<std::string> target = TokenTexts(tasks[i].target);
          std::size_t k;
          if (b == kOverflowBucket) {
            if (target.size() <= 10) continue;
            k = target.size();
          } else {
            k = static_cast<std::size_t>(b + 1);
            if (target.size() < k) continue;
          }
          ++count;
          std::vector<std::string> want(target.begin(), target.begin() + k);
          std::vector<std::string> got = preds[i].tokens;
          if (got.size() > k) got.resize(k);
          if (preds[i].ok() && got == want) ++perfect;
          lev += testing::ReferenceLevenshtein(got, want);
        }
        const ReportCell& c = r.cell(panel, b);
        ASSERT_EQ(c.count, count);
        ASSERT_EQ(c.perfect, perfect) << "seed " << seed << " bucket " << b;
        ASSERT_NEAR(c.levenshtein_sum, lev, 1e-9);
      }
    }
  }
}

TEST(Report, OverallIsSumOfPanels) {
  auto tasks = Tasks();
  ModelReport r = EvaluateModel(tasks, RandomPredictions(tasks, 99), "m");
  for (int b = 0; b < kBucketCount; ++b) {
    const ReportCell& jd = r.cell(Panel::kJavadoc, b);
    const ReportCell& ic = r.cell(Panel::kInner, b);
    const ReportCell& all = r.cell(Panel::kOverall, b);
    EXPECT_EQ(all.count, jd.count + ic.count);
    EXPECT_EQ(all.perfect, jd.perfect + ic.perfect);
    EXPECT_NEAR(all.levenshtein_sum, jd.levenshtein_sum + ic.levenshtein_sum, 1e-9);
    EXPECT_NEAR(all.bleu_a_sum, jd.bleu_a_sum + ic.bleu_a_sum, 1e-9);
  }
}

TEST(Report, PosAccuracyPerGroup) {
  std::vector<CompletionTask> tasks = {MakeTask("a", TaskKind::kJavadoc, "the sum")};
  std::vector<Prediction> preds = {Ok("a", {"the", "max"})};
  ModelReport r = EvaluateModel(tasks, preds, "m");
  EXPECT_EQ(r.pos[static_cast<int>(PosGroup::kDet)].Accuracy(), 1.0);
  EXPECT_EQ(r.pos[static_cast<int>(PosGroup::kNoun)].Accuracy(), 0.0);
  EXPECT_FALSE(r.pos[static_cast<int>(PosGroup::kVerb)].Accuracy());
}

TEST(Report, PosCountsOnlyCoveredPositions) {
  std::vector<CompletionTask> tasks = {MakeTask("a", TaskKind::kJavadoc, "the sum returns"),
                                       MakeTask("b", TaskKind::kJavadoc, "the sum")};
  std::vector<Prediction> preds = {Ok("a", {"the"}), Prediction::None("b", "m")};
  ModelReport r = EvaluateModel(tasks, preds, "m");
  EXPECT_EQ(r.pos[static_cast<int>(PosGroup::kDet)].positions, 1);
  EXPECT_EQ(r.pos[static_cast<int>(PosGroup::kNoun)].positions, 0);
  EXPECT_EQ(r.pos[static_cast<int>(PosGroup::kVerb)].positions, 0);
}

TEST(Report, ConfidenceSplitsByOutcome) {
  std::vector<CompletionTask> tasks = {MakeTask("a", TaskKind::kJavadoc, "x y"),
                                       MakeTask("b", TaskKind::kJavadoc, "x y")};
  std::vector<Prediction> preds = {Ok("a", {"x", "y"}, 0.9), Ok("b", {"q", "y"}, 0.2)};
  ModelReport r = EvaluateModel(tasks, preds, "m");
  const ReportCell& c = r.cell(Panel::kJavadoc, 1);
  EXPECT_DOUBLE_EQ(*c.confidence.PerfectMean(), 0.9);
  EXPECT_DOUBLE_EQ(*c.confidence.WrongMean(), 0.2);
}

TEST(Report, JsonAndTextRendering) {
  auto tasks = Tasks();
  std::vector<ModelPredictions> models = {{"echo", Echo(tasks)}, {"rand", RandomPredictions(tasks, 3)}};
  EvalReport r = BuildReport(tasks, models);
  r.split = "test";
  auto j = nlohmann::json::parse(ReportToJson(r));
  EXPECT_EQ(j["format"], "ccomp-report-1");
  EXPECT_EQ(j["models"].size(), 2u);
  EXPECT_EQ(j["models"][0]["panels"]["javadoc"].size(), static_cast<std::size_t>(kBucketCount));
  EXPECT_EQ(j["models"][0]["panels"]["javadoc"][10]["k"], ">10");
  EXPECT_FALSE(j["comparison"].is_null());
  EXPECT_EQ(ReportToJson(r), ReportToJson(r));
  std::string text = ReportToText(r);
  EXPECT_NE(text.find("echo"), std::string::npos);
  EXPECT_NE(text.find(">10"), std::string::npos);
}

TEST(Report, SweepRendering) {
  SweepResult sweep;
  sweep.best_order = 5;
  auto j = nlohmann::json::parse(SweepToJson(sweep));
  EXPECT_EQ(j["best_order"], 5);
  EXPECT_NE(SweepToText(sweep).find("5"), std::string::npos);
}

}  // namespace
}  // namespace ccomp
