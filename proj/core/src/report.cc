#include "ccomp/report.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "ccomp/errors.h"
#include "json_util.h"

namespace ccomp {
namespace {

std::optional<double> Ratio(double num, long long den) {
  if (den <= 0) return std::nullopt;
  return num / static_cast<double>(den);
}

Json Optional(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string Fixed(const std::optional<double>& v, int precision = 3) {
  if (!v) return "-";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, *v);
  return buf;
}

std::string Pad(const std::string& s, std::size_t width, bool left = false) {
  if (s.size() >= width) return s;
  std::string fill(width - s.size(), ' ');
  return left ? s + fill : fill + s;
}

int PanelIndex(TaskKind kind) {
  return kind == TaskKind::kJavadoc ? static_cast<int>(Panel::kJavadoc)
                                    : static_cast<int>(Panel::kInner);
}

std::vector<std::string> Prefix(const std::vector<std::string>& tokens, std::size_t k) {
  return {tokens.begin(), tokens.begin() + static_cast<std::ptrdiff_t>(std::min(k, tokens.size()))};
}

bool WholePerfect(const CompletionTask& task, const Prediction& p) {
  std::vector<std::string> target = TokenTexts(task.target);
  return PerfectAtK(target, p, target.size()).value_or(false);
}

Json CellToJson(const ReportCell& c) {
  Json j;
  j["count"] = c.count;
  j["empty"] = c.empty();
  j["perfect"] = c.perfect;
  j["perfect_rate"] = Optional(c.PerfectRate());
  Json bleu = Json::array();
  for (int n = 1; n <= 4; ++n) bleu.push_back(Optional(c.MeanBleu(n)));
  j["bleu"] = bleu;
  j["bleu_a"] = Optional(c.MeanBleuA());
  j["bleu_a_count"] = c.bleu_a_count;
  j["levenshtein"] = Optional(c.MeanLevenshtein());
  j["confidence_perfect"] = Optional(c.confidence.PerfectMean());
  j["confidence_wrong"] = Optional(c.confidence.WrongMean());
  j["confidence_perfect_count"] = c.confidence.perfect_count;
  j["confidence_wrong_count"] = c.confidence.wrong_count;
  return j;
}

Json McNemarToJson(const McNemarResult& m) {
  Json j;
  j["b"] = m.b;
  j["c"] = m.c;
  j["chi_square"] = Optional(m.chi_square);
  j["p_value"] = Optional(m.p_value);
  j["odds_ratio"] = Optional(m.odds_ratio);
  return j;
}

}  // namespace

std::string_view ToString(Panel panel) {
  switch (panel) {
    case Panel::kJavadoc: return "javadoc";
    case Panel::kInner: return "inner";
    case Panel::kOverall: return "overall";
  }
  return "overall";
}

std::optional<double> ReportCell::PerfectRate() const {
  return Ratio(static_cast<double>(perfect), count);
}

std::optional<double> ReportCell::MeanBleu(int n) const {
  if (n < 1 || n > 4) return std::nullopt;
  return Ratio(bleu_sum[n - 1], bleu_count[n - 1]);
}

std::optional<double> ReportCell::MeanBleuA() const { return Ratio(bleu_a_sum, bleu_a_count); }

std::optional<double> ReportCell::MeanLevenshtein() const {
  return Ratio(levenshtein_sum, count);
}

void ReportCell::Merge(const ReportCell& other) {
  count += other.count;
  perfect += other.perfect;
  for (int i = 0; i < 4; ++i) {
    bleu_sum[i] += other.bleu_sum[i];
    bleu_count[i] += other.bleu_count[i];
  }
  bleu_a_sum += other.bleu_a_sum;
  bleu_a_count += other.bleu_a_count;
  levenshtein_sum += other.levenshtein_sum;
  confidence.perfect_sum += other.confidence.perfect_sum;
  confidence.perfect_count += other.confidence.perfect_count;
  confidence.wrong_sum += other.confidence.wrong_sum;
  confidence.wrong_count += other.confidence.wrong_count;
}

std::optional<double> PosCell::Accuracy() const {
  return Ratio(static_cast<double>(correct), positions);
}

ModelReport EvaluateModel(std::span<const CompletionTask> tasks,
                          std::span<const Prediction> aligned, std::string label) {
  if (tasks.size() != aligned.size()) {
    throw InputError("prediction count does not match task count");
  }
  ModelReport report;
  report.model = std::move(label);
  report.tasks = static_cast<long long>(tasks.size());
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const CompletionTask& task = tasks[t];
    const Prediction& p = aligned[t];
    if (!p.ok()) ++report.no_predictions;
    std::vector<std::string> target = TokenTexts(task.target);
    auto& row = report.cells[PanelIndex(task.kind)];
    for (int b = 0; b < kBucketCount; ++b) {
      std::optional<std::size_t> k = BucketLength(b, target.size());
      if (!k) continue;
      ReportCell& cell = row[b];
      bool perfect = *PerfectAtK(target, p, *k);
      std::vector<std::string> reference = Prefix(target, *k);
      std::vector<std::string> candidate =
          p.ok() ? Prefix(p.tokens, *k) : std::vector<std::string>{};
      ++cell.count;
      if (perfect) ++cell.perfect;
      for (int n = 1; n <= 4 && reference.size() >= static_cast<std::size_t>(n); ++n) {
        cell.bleu_sum[n - 1] += BleuN(candidate, reference, n);
        ++cell.bleu_count[n - 1];
      }
      if (std::optional<double> a = BleuA(candidate, reference)) {
        cell.bleu_a_sum += *a;
        ++cell.bleu_a_count;
      }
      cell.levenshtein_sum += LevenshteinWords(candidate, reference);
      if (p.ok()) cell.confidence.Add(perfect, p.ConfidenceAt(*k));
    }
    std::vector<PosTag> tags = TagPartsOfSpeech(target);
    std::size_t covered = p.ok() ? std::min(target.size(), p.tokens.size()) : 0;
    for (std::size_t i = 0; i < covered; ++i) {
      PosCell& pos = report.pos[static_cast<int>(GroupOf(tags[i]))];
      ++pos.positions;
      if (p.tokens[i] == target[i]) ++pos.correct;
    }
  }
  auto& overall = report.cells[static_cast<int>(Panel::kOverall)];
  for (Panel panel : {Panel::kJavadoc, Panel::kInner}) {
    for (int b = 0; b < kBucketCount; ++b) {
      overall[b].Merge(report.cells[static_cast<int>(panel)][b]);
    }
  }
  return report;
}

PairedComparison ComparePerfect(std::span<const CompletionTask> tasks,
                                std::span<const Prediction> a,
                                std::span<const Prediction> b, std::string label_a,
                                std::string label_b) {
  if (tasks.size() != a.size() || tasks.size() != b.size()) {
    throw InputError("prediction count does not match task count");
  }
  PairedComparison result;
  result.model_a = std::move(label_a);
  result.model_b = std::move(label_b);
  std::array<std::set<std::string>, 3> set_a;
  std::array<std::set<std::string>, 3> set_b;
  std::array<std::vector<std::pair<bool, bool>>, 3> outcomes;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    bool pa = WholePerfect(tasks[t], a[t]);
    bool pb = WholePerfect(tasks[t], b[t]);
    for (int panel : {PanelIndex(tasks[t].kind), static_cast<int>(Panel::kOverall)}) {
      outcomes[panel].emplace_back(pa, pb);
      if (pa) set_a[panel].insert(tasks[t].id);
      if (pb) set_b[panel].insert(tasks[t].id);
    }
  }
  for (int panel = 0; panel < 3; ++panel) {
    PanelComparison& pc = result.panels[panel];
    pc.tasks = static_cast<long long>(outcomes[panel].size());
    pc.overlap = OverlapMetrics(set_a[panel], set_b[panel]);
    pc.mcnemar = McNemarAndOddsRatio(outcomes[panel]);
  }
  return result;
}

EvalReport BuildReport(std::span<const CompletionTask> tasks,
                       std::span<const ModelPredictions> models) {
  if (models.empty() || models.size() > 2) {
    throw UsageError("a report covers one or two models");
  }
  if (models.size() == 2 && models[0].label == models[1].label) {
    throw InputError("model label collision: both inputs are labelled '" + models[0].label +
                     "'");
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!index.emplace(tasks[i].id, i).second) {
      throw InputError("duplicate task id in split: " + tasks[i].id);
    }
  }
  EvalReport report;
  report.tasks = static_cast<long long>(tasks.size());
  std::vector<std::vector<Prediction>> aligned;
  for (const ModelPredictions& m : models) {
    std::vector<Prediction> row;
    row.reserve(tasks.size());
    for (const CompletionTask& task : tasks) row.push_back(Prediction::None(task.id, m.label));
    std::vector<bool> seen(tasks.size(), false);
    for (const Prediction& p : m.predictions) {
      auto it = index.find(p.task_id);
      if (it == index.end()) {
        throw InputError("prediction for unknown task id: " + p.task_id);
      }
      if (seen[it->second]) throw InputError("duplicate prediction for task id: " + p.task_id);
      seen[it->second] = true;
      row[it->second] = p;
    }
    report.models.push_back(EvaluateModel(tasks, row, m.label));
    aligned.push_back(std::move(row));
  }
  if (models.size() == 2) {
    report.comparison =
        ComparePerfect(tasks, aligned[0], aligned[1], models[0].label, models[1].label);
  }
  return report;
}

std::string ReportToJson(const EvalReport& report) {
  Json j;
  j["format"] = "ccomp-report-1";
  j["split"] = report.split;
  j["corpus_fingerprint"] = report.corpus_fingerprint;
  j["dataset_fingerprint"] = report.dataset_fingerprint;
  j["config_fingerprint"] = report.config_fingerprint;
  j["tasks"] = report.tasks;
  j["applicability"] =
      "bucket k counts only tasks whose target has at least k tokens; '>10' counts targets "
      "longer than 10 tokens compared in full; BLEU-A only where k >= 4";
  Json models = Json::array();
  for (const ModelReport& m : report.models) {
    Json mj;
    mj["model"] = m.model;
    mj["tasks"] = m.tasks;
    mj["no_predictions"] = m.no_predictions;
    Json panels;
    for (Panel panel : kPanels) {
      Json rows = Json::array();
      for (int b = 0; b < kBucketCount; ++b) {
        Json cell = CellToJson(m.cell(panel, b));
        Json row;
        row["k"] = BucketLabel(b);
        row.update(cell);
        rows.push_back(row);
      }
      panels[std::string(ToString(panel))] = rows;
    }
    mj["panels"] = panels;
    Json pos;
    for (PosGroup g : kPosGroups) {
      const PosCell& c = m.pos[static_cast<int>(g)];
      pos[std::string(ToString(g))] = {{"positions", c.positions},
                                       {"correct", c.correct},
                                       {"accuracy", Optional(c.Accuracy())}};
    }
    mj["pos"] = pos;
    models.push_back(mj);
  }
  j["models"] = models;
  if (report.comparison) {
    const PairedComparison& pc = *report.comparison;
    Json cj;
    cj["model_a"] = pc.model_a;
    cj["model_b"] = pc.model_b;
    cj["outcome"] = "perfect prediction of the whole target";
    for (Panel panel : kPanels) {
      const PanelComparison& p = pc.panels[static_cast<int>(panel)];
      Json pj;
      pj["tasks"] = p.tasks;
      pj["overlap"] = {{"shared", p.overlap.shared},
                       {"only_a", p.overlap.only_a},
                       {"only_b", p.overlap.only_b},
                       {"empty", p.overlap.empty}};
      pj["mcnemar"] = McNemarToJson(p.mcnemar);
      cj[std::string(ToString(panel))] = pj;
    }
    j["comparison"] = cj;
  } else {
    j["comparison"] = nullptr;
  }
  return DumpPretty(j);
}

std::string ReportToText(const EvalReport& report) {
  std::ostringstream out;
  out << "split: " << report.split << "  tasks: " << report.tasks << "\n";
  out << "corpus: " << report.corpus_fingerprint << "  dataset: " << report.dataset_fingerprint
      << "  config: " << report.config_fingerprint << "\n";
  out << "bucket k counts tasks with |target| >= k; >10 compares whole targets; "
         "BLEU-A only for k >= 4\n";
  const std::vector<std::pair<std::string, std::size_t>> columns = {
      {"k", 4},      {"count", 7},  {"perfect", 8}, {"rate", 7},    {"BLEU-1", 7},
      {"BLEU-2", 7}, {"BLEU-3", 7}, {"BLEU-4", 7},  {"BLEU-A", 7},  {"lev", 7},
      {"conf+", 7},  {"conf-", 7}};
  for (const ModelReport& m : report.models) {
    out << "\nmodel: " << m.model << "  no-predictions: " << m.no_predictions << "/" << m.tasks
        << "\n";
    for (Panel panel : kPanels) {
      out << "\n[" << ToString(panel) << "]\n";
      for (std::size_t i = 0; i < columns.size(); ++i) {
        out << (i ? " " : "") << Pad(columns[i].first, columns[i].second, i == 0);
      }
      out << "\n";
      for (int b = 0; b < kBucketCount; ++b) {
        const ReportCell& c = m.cell(panel, b);
        std::vector<std::string> values = {
            BucketLabel(b),
            std::to_string(c.count),
            std::to_string(c.perfect),
            Fixed(c.PerfectRate()),
            Fixed(c.MeanBleu(1)),
            Fixed(c.MeanBleu(2)),
            Fixed(c.MeanBleu(3)),
            Fixed(c.MeanBleu(4)),
            Fixed(c.MeanBleuA()),
            Fixed(c.MeanLevenshtein(), 2),
            Fixed(c.confidence.PerfectMean()),
            Fixed(c.confidence.WrongMean())};
        for (std::size_t i = 0; i < columns.size(); ++i) {
          out << (i ? " " : "") << Pad(values[i], columns[i].second, i == 0);
        }
        out << "\n";
      }
    }
    out << "\n[pos]\n";
    for (PosGroup g : kPosGroups) {
      const PosCell& c = m.pos[static_cast<int>(g)];
      out << Pad(std::string(ToString(g)), 5, true) << Pad(std::to_string(c.correct), 8) << "/"
          << Pad(std::to_string(c.positions), 8, true) << " " << Fixed(c.Accuracy()) << "\n";
    }
  }
  if (report.comparison) {
    const PairedComparison& pc = *report.comparison;
    out << "\ncomparison: A=" << pc.model_a << " B=" << pc.model_b
        << " (whole-target perfect predictions)\n";
    out << Pad("panel", 8, true) << Pad("tasks", 7) << Pad("shared", 8) << Pad("onlyA", 8)
        << Pad("onlyB", 8) << Pad("b", 6) << Pad("c", 6) << Pad("chi2", 9) << Pad("p", 8)
        << Pad("OR", 8) << "\n";
    for (Panel panel : kPanels) {
      const PanelComparison& p = pc.panels[static_cast<int>(panel)];
      auto overlap = [&](double v) {
        return p.overlap.empty ? std::string("-") : Fixed(v);
      };
      out << Pad(std::string(ToString(panel)), 8, true) << Pad(std::to_string(p.tasks), 7)
          << Pad(overlap(p.overlap.shared), 8) << Pad(overlap(p.overlap.only_a), 8)
          << Pad(overlap(p.overlap.only_b), 8) << Pad(std::to_string(p.mcnemar.b), 6)
          << Pad(std::to_string(p.mcnemar.c), 6) << Pad(Fixed(p.mcnemar.chi_square, 4), 9)
          << Pad(Fixed(p.mcnemar.p_value, 4), 8) << Pad(Fixed(p.mcnemar.odds_ratio, 3), 8)
          << "\n";
    }
  }
  return out.str();
}

std::string SweepToJson(const SweepResult& sweep) {
  Json j;
  j["format"] = "ccomp-sweep-1";
  j["best_order"] = sweep.best_order;
  Json rows = Json::array();
  for (const SweepRow& row : sweep.rows) {
    Json r;
    r["order"] = row.order;
    r["score"] = row.score;
    Json cells = Json::array();
    for (int b = 0; b < kBucketCount; ++b) {
      cells.push_back({{"k", BucketLabel(b)},
                       {"applicable", row.applicable[b]},
                       {"rate", row.applicable[b] > 0 ? Json(row.rates[b]) : Json(nullptr)}});
    }
    r["buckets"] = cells;
    rows.push_back(r);
  }
  j["rows"] = rows;
  return DumpPretty(j);
}

std::string SweepToText(const SweepResult& sweep) {
  std::ostringstream out;
  out << Pad("order", 6, true);
  for (int b = 0; b < kBucketCount; ++b) out << Pad("k=" + BucketLabel(b), 7);
  out << Pad("score", 8) << "\n";
  for (const SweepRow& row : sweep.rows) {
    out << Pad(std::to_string(row.order), 6, true);
    for (int b = 0; b < kBucketCount; ++b) {
      std::optional<double> rate;
      if (row.applicable[b] > 0) rate = row.rates[b];
      out << Pad(Fixed(rate), 7);
    }
    out << Pad(Fixed(row.score, 4), 8) << "\n";
  }
  out << "best order: " << sweep.best_order << "\n";
  return out.str();
}

}  // namespace ccomp
