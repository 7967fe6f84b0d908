// Runs every acceptance criterion and prints one PASS/FAIL line for each.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ccomp/adapter.h"
#include "ccomp/corpus.h"
#include "ccomp/dataset.h"
#include "ccomp/metrics.h"
#include "ccomp/ngram.h"
#include "ccomp/preprocess.h"
#include "cli.h"
#include "json.hpp"
#include "test_support.h"

namespace ccomp {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using nlohmann::json;

constexpr double kBleuTolerance = 1e-9;
constexpr double kOverlapTolerance = 1e-12;
constexpr double kOracleSeconds = 30.0;
constexpr double kDeskSeconds = 60.0;

struct Check {
  std::ostringstream detail;
  bool ok = true;

  void Expect(bool condition, const std::string& what) {
    if (!condition && ok) detail << what;
    ok = ok && condition;
  }
};

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int CallCli(const std::vector<std::string>& args, const std::string& input = "",
            std::string* captured = nullptr) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::Run(args, in, out, err);
  if (captured) *captured = out.str();
  if (code != cli::kExitOk) {
    std::fprintf(stderr, "ccomp");
    for (const std::string& a : args) std::fprintf(stderr, " %s", a.c_str());
    std::fprintf(stderr, " -> exit %d\n%s", code, err.str().c_str());
  }
  return code;
}

// --- 1 ---

void NgramOracle(Check& check) {
  Clock::time_point start = Clock::now();
  long long queries = 0;
  for (std::uint64_t seed = 1; seed <= 50 && check.ok; ++seed) {
    std::vector<Sequence> seqs = testing::RandomSequences(seed, 10000);
    int order = 2 + static_cast<int>(seed % 4);
    NgramModel model = NgramModel::Train(seqs, order, 1 + seed % 4);
    std::mt19937_64 gen(seed * 7919);
    std::vector<std::vector<std::string>> histories;
    for (int q = 0; q < 150; ++q) {
      const Sequence& s = seqs[gen() % seqs.size()];
      std::size_t end = gen() % (s.size() + 1);
      std::size_t begin = end >= static_cast<std::size_t>(order) ? end - order + 1 : 0;
      std::vector<std::string> h(s.begin() + begin, s.begin() + end);
      if (q % 10 == 0 && !h.empty()) h.back() = "unseen";
      histories.push_back(h);
    }
    for (const auto& h : histories) {
      ++queries;
      std::optional<NextToken> got = model.PredictNext(h);
      std::optional<testing::OracleNext> want = testing::RecountPredictNext(seqs, order, h);
      check.Expect(got.has_value() == want.has_value(), "presence differs");
      if (!got || !want) continue;
      double p = static_cast<double>(want->count) / static_cast<double>(want->total);
      check.Expect(got->token == want->token && got->probability == p &&
                       got->count == want->count && got->total == want->total,
                   "seed " + std::to_string(seed) + ": token/probability differ");
    }
  }
  double seconds = SecondsSince(start);
  check.Expect(seconds < kOracleSeconds, "took too long");
  check.detail << (check.ok ? "" : "; ") << queries << " queries, 50 corpora, "
               << seconds << " s";
}

// --- 2 ---

void MetricOracles(Check& check) {
  std::vector<std::vector<std::string>> all = {{}};
  for (std::size_t begin = 0, len = 1; len <= 4; ++len) {
    std::size_t end = all.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (const char* s : {"a", "b", "c"}) {
        auto next = all[i];
        next.push_back(s);
        all.push_back(next);
      }
    }
    begin = end;
  }
  long long pairs = 0;
  for (const auto& a : all) {
    for (const auto& b : all) {
      ++pairs;
      check.Expect(LevenshteinWords(a, b) == testing::ReferenceLevenshtein(a, b),
                   "Levenshtein differs from the reference");
    }
  }
  double worst = 0.0;
  for (const testing::BleuCase& c : testing::BleuFixture()) {
    double got = BleuN(testing::Words(c.candidate), testing::Words(c.reference), c.n);
    worst = std::max(worst, std::abs(got - c.expected));
  }
  check.Expect(worst <= kBleuTolerance, "BLEU fixture off");
  double cat = BleuN(testing::Words("the cat"), testing::Words("the cat sat"), 1);
  check.Expect(std::abs(cat - 0.6065) < 1e-4, "the cat BLEU-1");
  check.detail << (check.ok ? "" : "; ") << pairs << " Levenshtein pairs, "
               << testing::BleuFixture().size() << " BLEU cases, max error " << worst;
}

// --- 3 ---

void StatisticsFixture(Check& check) {
  McNemarResult r = McNemarFromCounts(10, 2);
  check.Expect(r.chi_square && *r.chi_square == 49.0 / 12.0, "chi-square != 49/12");
  check.Expect(r.odds_ratio && *r.odds_ratio == 5.0, "OR != 5");
  McNemarResult h = McNemarFromCounts(3, 0);
  check.Expect(h.odds_ratio && *h.odds_ratio == 7.0, "Haldane OR != 7");
  check.detail << "chi2=" << (r.chi_square ? *r.chi_square : -1) << " OR="
               << (r.odds_ratio ? *r.odds_ratio : -1) << " Haldane OR="
               << (h.odds_ratio ? *h.odds_ratio : -1);
}

// --- 4 ---

void OverlapIdentity(Check& check) {
  std::mt19937_64 gen(2024);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    std::set<std::string> a;
    std::set<std::string> b;
    int universe = 1 + static_cast<int>(gen() % 60);
    for (int j = 0; j < universe; ++j) {
      if (gen() % 3 == 0) a.insert(std::to_string(j));
      if (gen() % 2 == 0) b.insert(std::to_string(j));
    }
    Overlap o = OverlapMetrics(a, b);
    if (!o.empty) worst = std::max(worst, std::abs(o.shared + o.only_a + o.only_b - 1.0));
    Overlap same = OverlapMetrics(a, a);
    if (!a.empty()) {
      check.Expect(same.shared == 1.0 && same.only_a == 0.0 && same.only_b == 0.0,
                   "A=B is not (1,0,0)");
    }
  }
  check.Expect(worst <= kOverlapTolerance, "sum differs from 1");
  check.detail << (check.ok ? "" : "; ") << "100 pairs, max |sum-1| " << worst;
}

// --- 5 ---

void DatasetInvariants(Check& check) {
  LoadResult loaded = LoadCorpus(testing::MiniCorpusDir());
  PreprocessResult pre = RunPipeline(loaded.instances, PreprocessConfig{});
  DatasetConfig config;
  Dataset dataset = BuildDataset(pre.corpus, config);
  std::vector<std::string> problems =
      testing::ValidateDataset(pre.corpus, dataset, config.max_variants);
  std::size_t tasks = dataset.train.size() + dataset.eval.size() + dataset.test.size();
  check.Expect(problems.empty(), problems.empty() ? "" : problems.front());
  check.Expect(tasks > 0, "no tasks generated");
  check.detail << (check.ok ? "" : "; ") << pre.corpus.size() << " methods, " << tasks
               << " tasks validated";
}

// --- 6, 7, 8 share the CLI chain ---

struct ChainRun {
  fs::path dir;
  double seconds = 0.0;  // preprocess through evaluate
  bool ok = false;
};

ChainRun RunChain(const fs::path& dir) {
  ChainRun run;
  run.dir = dir;
  auto p = [&](const char* name) { return (dir / name).string(); };
  if (CallCli({"ingest", testing::MiniCorpusDir().string(), "-o", p("corpus.jsonl")}) != 0) {
    return run;
  }
  Clock::time_point start = Clock::now();
  run.ok = CallCli({"preprocess", p("corpus.jsonl"), "-o", p("clean.jsonl"), "--seed", "42"}) == 0 &&
           CallCli({"build-dataset", p("clean.jsonl"), "-o", p("dataset"), "--seed", "42"}) == 0 &&
           CallCli({"train", p("dataset"), "-o", p("model.ngram"), "--order", "5"}) == 0 &&
           CallCli({"predict", p("model.ngram"), p("dataset"), "-o", p("pred.jsonl")}) == 0 &&
           CallCli({"evaluate", p("dataset"), p("pred.jsonl"), "-o", p("report.json")}) == 0;
  run.seconds = SecondsSince(start);
  return run;
}

std::vector<fs::path> ChainFiles(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) files.push_back(fs::relative(e.path(), dir));
  }
  std::sort(files.begin(), files.end());
  return files;
}

void Determinism(Check& check, const ChainRun& a, const ChainRun& b) {
  check.Expect(a.ok && b.ok, "CLI chain failed");
  if (!check.ok) return;
  std::vector<fs::path> files = ChainFiles(a.dir);
  check.Expect(files == ChainFiles(b.dir), "different file sets");
  for (const char* required : {"corpus.jsonl", "clean.jsonl", "model.ngram", "pred.jsonl",
                               "report.json"}) {
    check.Expect(fs::exists(a.dir / required), std::string("missing ") + required);
  }
  for (const fs::path& f : files) {
    check.Expect(testing::ReadBytes(a.dir / f) == testing::ReadBytes(b.dir / f),
                 f.string() + " differs");
  }
  check.detail << (check.ok ? "" : "; ") << files.size() << " files byte-identical";
}

void EchoRoundTrip(Check& check, const ChainRun& run) {
  check.Expect(run.ok, "CLI chain failed");
  if (!check.ok) return;
  auto p = [&](const char* name) { return (run.dir / name).string(); };
  check.Expect(CallCli({"export-tasks", p("dataset"), "-o", p("tasks.jsonl")}) == 0,
               "export-tasks failed");
  std::vector<CompletionTask> tasks = ReadSplit(run.dir / "dataset", "test");
  std::map<std::string, std::string> target;
  for (const CompletionTask& t : tasks) target[t.id] = JoinTokens(t.target);
  // The echo model sees only the exported record and looks its answer up by id.
  std::string echo;
  for (const TaskExport& e : ReadTaskExports(run.dir / "tasks.jsonl")) {
    json r;
    r["task_id"] = e.task_id;
    r["tokens"] = testing::Words(target.at(e.task_id));
    r["confidence"] = 1.0;
    r["model"] = "echo";
    echo += r.dump() + "\n";
  }
  testing::WriteBytes(run.dir / "echo-raw.jsonl", echo);
  check.Expect(CallCli({"import-predictions", p("echo-raw.jsonl"), p("dataset"), "-o",
                        p("echo.jsonl")}) == 0,
               "import failed");
  std::string report_text;
  check.Expect(CallCli({"evaluate", p("dataset"), p("echo.jsonl")}, "", &report_text) == 0,
               "evaluate failed");
  if (!check.ok) return;
  json report = json::parse(report_text);
  int cells = 0;
  for (const auto& [panel, rows] : report["models"][0]["panels"].items()) {
    for (const json& row : rows) {
      if (row["count"] == 0) continue;
      ++cells;
      std::string where = panel + " k=" + row["k"].get<std::string>();
      check.Expect(row["perfect_rate"] == 1.0, where + " perfect rate");
      check.Expect(row["levenshtein"] == 0.0, where + " Levenshtein");
      bool long_enough = row["k"] == ">10" || std::stoi(row["k"].get<std::string>()) >= 4;
      if (long_enough) check.Expect(row["bleu_a"] == 1.0, where + " BLEU-A");
    }
  }
  check.Expect(cells > 0, "no applicable cells");
  check.detail << (check.ok ? "" : "; ") << tasks.size() << " tasks, " << cells
               << " non-empty cells";
}

void DeskScale(Check& check, const ChainRun& run) {
  check.Expect(run.ok, "CLI chain failed");
  if (!check.ok) return;
  check.Expect(run.seconds < kDeskSeconds, "too slow");
  json report = json::parse(testing::ReadBytes(run.dir / "report.json"));
  const json& panels = report["models"][0]["panels"];
  const std::vector<std::string> labels = {"1", "2", "3", "4", "5", "6",
                                           "7", "8", "9", "10", ">10"};
  for (const char* panel : {"javadoc", "inner", "overall"}) {
    check.Expect(panels.contains(panel), std::string("missing panel ") + panel);
    if (!panels.contains(panel)) continue;
    const json& rows = panels[panel];
    check.Expect(rows.size() == labels.size(), std::string(panel) + " row count");
    for (std::size_t i = 0; i < rows.size() && i < labels.size(); ++i) {
      check.Expect(rows[i]["k"] == labels[i], std::string(panel) + " row label");
    }
  }
  const json& overall = panels["overall"];
  double pp1 = overall[0]["perfect_rate"].is_null() ? 0.0 : overall[0]["perfect_rate"].get<double>();
  check.Expect(pp1 > 0.0, "PP@1 is zero");
  for (const char* panel : {"javadoc", "inner", "overall"}) {
    const json& rows = panels[panel];
    for (int k = 1; k < kMaxK; ++k) {
      check.Expect(rows[k]["perfect"] <= rows[k - 1]["perfect"],
                   std::string(panel) + " PP@k grows at k=" + std::to_string(k + 1));
    }
  }
  // The sets themselves must nest: perfect at k+1 implies perfect at k.
  std::vector<CompletionTask> tasks = ReadSplit(run.dir / "dataset", "test");
  std::vector<Prediction> predictions = ReadPredictions(run.dir / "pred.jsonl");
  std::map<std::string, const Prediction*> by_id;
  for (const Prediction& p : predictions) by_id[p.task_id] = &p;
  std::set<std::string> previous;
  std::ostringstream sizes;
  for (std::size_t k = 1; k <= static_cast<std::size_t>(kMaxK); ++k) {
    std::set<std::string> perfect;
    for (const CompletionTask& t : tasks) {
      std::vector<std::string> target = TokenTexts(t.target);
      std::optional<bool> hit = PerfectAtK(target, *by_id.at(t.id), k);
      if (hit && *hit) perfect.insert(t.id);
    }
    if (k > 1) {
      check.Expect(std::includes(previous.begin(), previous.end(), perfect.begin(), perfect.end()),
                   "PP@" + std::to_string(k) + " not within PP@" + std::to_string(k - 1));
    }
    sizes << (k > 1 ? " " : "") << perfect.size();
    previous = std::move(perfect);
  }
  std::ostringstream rates;
  for (int k = 0; k < kMaxK; ++k) {
    rates << (k ? " " : "");
    if (overall[k]["perfect_rate"].is_null()) {
      rates << "-";
    } else {
      char buf[16];
      std::snprintf(buf, sizeof buf, "%.3f", overall[k]["perfect_rate"].get<double>());
      rates << buf;
    }
  }
  check.detail << (check.ok ? "" : "; ") << run.seconds << " s, |PP@1..10| = " << sizes.str()
               << ", rate = " << rates.str();
}

// --- 9 ---

CompletionTask Task(const std::string& id, const std::string& prefix, const std::string& target) {
  CompletionTask t;
  t.id = id + "/jd/s0/v0";
  t.origin = id;
  t.prefix = FromTexts(testing::Words(prefix));
  t.target = FromTexts(testing::Words(target));
  return t;
}

// Each eval sentence occurs in training only after an extra leading word, so
// its 4-token histories are known while the 6-token ones are not; two
// competing sentences make the 2-token history after the prefix point
// elsewhere.
void OrderSweep(Check& check) {
  std::vector<CompletionTask> train;
  std::vector<CompletionTask> eval;
  for (int i = 0; i < 12; ++i) {
    std::string w = "w" + std::to_string(i) + "_";
    std::string p = w + "p", q = w + "q", r = w + "r", s = w + "s";
    std::string t = w + "t", u = w + "u", v = w + "v";
    train.push_back(Task("lead" + std::to_string(i), "z " + p + " " + q,
                         r + " " + s + " " + t + " " + u));
    train.push_back(Task("alt" + std::to_string(i) + "a", r + " " + s, v));
    train.push_back(Task("alt" + std::to_string(i) + "b", "y " + r + " " + s, v));
    eval.push_back(Task("eval" + std::to_string(i), p + " " + q + " " + r + " " + s, t + " " + u));
  }
  SweepResult sweep = SweepOrders(train, eval, {3, 5, 7});
  std::map<int, double> score;
  for (const SweepRow& row : sweep.rows) score[row.order] = row.score;
  check.Expect(sweep.best_order == 5, "best order is " + std::to_string(sweep.best_order));
  check.Expect(score[5] > score[3] && score[5] > score[7], "5-gram not strictly first");
  check.detail << (check.ok ? "" : "; ") << "scores 3:" << score[3] << " 5:" << score[5]
               << " 7:" << score[7];
}

}  // namespace
}  // namespace ccomp

int main() {
  using namespace ccomp;
  fs::path root = testing::MakeTempDir("acceptance");
  ChainRun first;
  ChainRun second;
  bool chains_done = false;
  auto chains = [&]() {
    if (chains_done) return;
    chains_done = true;
    fs::create_directories(root / "run1");
    fs::create_directories(root / "run2");
    first = RunChain(root / "run1");
    second = RunChain(root / "run2");
  };

  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"n-gram oracle equivalence", NgramOracle},
      {"metric oracles", MetricOracles},
      {"statistics fixture", StatisticsFixture},
      {"overlap identity", OverlapIdentity},
      {"dataset invariants", DatasetInvariants},
      {"determinism", [&](Check& c) { chains(); Determinism(c, first, second); }},
      {"echo round-trip", [&](Check& c) { chains(); EchoRoundTrip(c, second); }},
      {"desk-scale end-to-end", [&](Check& c) { chains(); DeskScale(c, first); }},
      {"order sweep", OrderSweep},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      criteria[i].run(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    if (!check.ok) ++failures;
    std::printf("%s %zu %s: %s\n", check.ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                check.detail.str().c_str());
    std::fflush(stdout);
  }
  fs::remove_all(root);
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
