#include "test_support.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <unistd.h>

#include "ccomp/tokenizer.h"

namespace ccomp::testing {
namespace fs = std::filesystem;

fs::path SourceDir() { return CCOMP_SOURCE_DIR; }
fs::path FixtureDir() { return CCOMP_FIXTURE_DIR; }
fs::path MiniCorpusDir() { return SourceDir() / "data" / "minicorpus"; }

fs::path MakeTempDir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() /
                 ("ccomp-test-" + std::to_string(::getpid()) + "-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string ReadBytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteBytes(const fs::path& path, const std::string& bytes) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << bytes;
}

std::map<std::string, std::uint64_t> RecountNext(
    const std::vector<std::vector<std::string>>& sequences, int order,
    const std::vector<std::string>& history) {
  const std::size_t h = static_cast<std::size_t>(order - 1);
  std::vector<std::string> want(h, "<s>");
  for (std::size_t i = 0; i < h && i < history.size(); ++i) {
    want[h - 1 - i] = history[history.size() - 1 - i];
  }
  std::map<std::string, std::uint64_t> counts;
  for (const auto& seq : sequences) {
    std::vector<std::string> padded(h, "<s>");
    padded.insert(padded.end(), seq.begin(), seq.end());
    for (std::size_t end = h; end < padded.size(); ++end) {
      if (std::equal(want.begin(), want.end(), padded.begin() + (end - h))) {
        ++counts[padded[end]];
      }
    }
  }
  return counts;
}

std::optional<OracleNext> RecountPredictNext(
    const std::vector<std::vector<std::string>>& sequences, int order,
    const std::vector<std::string>& history) {
  std::map<std::string, std::uint64_t> counts = RecountNext(sequences, order, history);
  if (counts.empty()) return std::nullopt;
  OracleNext best;
  for (const auto& [token, count] : counts) {
    best.total += count;
    // std::map iterates in lexicographic order, so strict > keeps the
    // smallest token among equal counts.
    if (count > best.count) {
      best.count = count;
      best.token = token;
    }
  }
  return best;
}

std::vector<std::vector<std::string>> RandomSequences(std::uint64_t seed,
                                                      std::size_t max_tokens) {
  std::mt19937_64 gen(seed);
  std::vector<std::string> vocab;
  std::size_t vocab_size = 5 + gen() % 40;
  for (std::size_t i = 0; i < vocab_size; ++i) vocab.push_back("w" + std::to_string(i));
  std::vector<double> weights;
  for (std::size_t i = 0; i < vocab_size; ++i) weights.push_back(1.0 / static_cast<double>(i + 1));
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::uniform_int_distribution<std::size_t> length(1, 25);
  std::size_t budget = 200 + gen() % (max_tokens - 200);
  std::vector<std::vector<std::string>> out;
  std::size_t used = 0;
  while (used < budget) {
    std::size_t n = std::min(length(gen), budget - used);
    std::vector<std::string> seq;
    for (std::size_t i = 0; i < n; ++i) seq.push_back(vocab[pick(gen)]);
    used += n;
    out.push_back(std::move(seq));
  }
  return out;
}

int ReferenceLevenshtein(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::vector<int>> d(a.size() + 1, std::vector<int>(b.size() + 1, 0));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = static_cast<int>(i);
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      int cost = a[i - 1] == b[j - 1] ? 0 : 1;
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + cost});
    }
  }
  return d[a.size()][b.size()];
}

namespace {

std::vector<std::string> Concat(std::initializer_list<const TokenList*> parts) {
  std::vector<std::string> out;
  for (const TokenList* p : parts) {
    for (const Token& t : *p) out.push_back(t.text);
  }
  return out;
}

bool ContainsRun(const std::vector<std::string>& hay, const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() > hay.size()) return false;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

bool IsTerminal(const std::string& t) { return t == "." || t == "!" || t == "?"; }

}  // namespace

std::vector<std::string> ValidateDataset(const std::vector<MethodInstance>& corpus,
                                         const Dataset& dataset, int max_variants) {
  std::vector<std::string> problems;
  auto fail = [&](const std::string& id, const std::string& what) {
    if (problems.size() < 50) problems.push_back(id + ": " + what);
  };

  std::map<std::string, const MethodInstance*> by_id;
  for (const MethodInstance& m : corpus) by_id[m.id] = &m;

  // Every origin labelled exactly once, and only corpus origins.
  if (dataset.assignment.labels.size() != by_id.size()) {
    fail("assignment", "labels " + std::to_string(dataset.assignment.labels.size()) +
                           " origins, corpus has " + std::to_string(by_id.size()));
  }
  for (const auto& [origin, label] : dataset.assignment.labels) {
    if (!by_id.contains(origin)) fail(origin, "labelled origin not in corpus");
  }
  for (const PretrainInstance& p : dataset.pretrain) {
    auto it = dataset.assignment.labels.find(p.origin);
    if (it == dataset.assignment.labels.end() || it->second != SplitLabel::kPretrain) {
      fail(p.origin, "pretraining instance from a non-pretraining origin");
    }
  }

  struct Group {
    std::vector<std::string> preceding;
    std::vector<std::string> sentence;
    std::set<std::size_t> split_points;
    int tasks = 0;
  };
  std::map<std::string, Group> groups;
  std::map<std::string, SplitLabel> origin_split;

  const std::pair<SplitLabel, const std::vector<CompletionTask>*> splits[] = {
      {SplitLabel::kTrain, &dataset.train},
      {SplitLabel::kEval, &dataset.eval},
      {SplitLabel::kTest, &dataset.test}};
  for (const auto& [label, tasks] : splits) {
    for (const CompletionTask& t : *tasks) {
      auto m = by_id.find(t.origin);
      if (m == by_id.end()) {
        fail(t.id, "unknown origin");
        continue;
      }
      auto assigned = dataset.assignment.labels.find(t.origin);
      if (assigned == dataset.assignment.labels.end() || assigned->second != label) {
        fail(t.id, "task stored in a split its origin is not assigned to");
      }
      auto [it, inserted] = origin_split.emplace(t.origin, label);
      if (!inserted && it->second != label) fail(t.id, "origin spans two splits");

      if (t.prefix.empty()) fail(t.id, "empty prefix");
      if (t.target.empty()) fail(t.id, "empty target");

      // Recover the raw comment from the id and the corpus record.
      if (t.id.rfind(t.origin + "/", 0) != 0) {
        fail(t.id, "id does not start with its origin");
        continue;
      }
      std::string rest = t.id.substr(t.origin.size() + 1);
      std::string comment_text;
      if (rest.rfind("jd/", 0) == 0) {
        if (t.kind != TaskKind::kJavadoc || !m->second->javadoc) {
          fail(t.id, "javadoc id without a javadoc task/comment");
          continue;
        }
        comment_text = *m->second->javadoc;
      } else if (rest.rfind("ic", 0) == 0) {
        std::size_t index = std::stoul(rest.substr(2));
        if (t.kind != TaskKind::kInner || index >= m->second->inner_comments.size()) {
          fail(t.id, "inner id without a matching inner comment");
          continue;
        }
        comment_text = m->second->inner_comments[index].text;
      } else {
        fail(t.id, "unrecognised id shape");
        continue;
      }
      std::vector<std::string> comment = TokenTexts(Tokenize(comment_text));
      std::vector<std::string> seen = Concat({&t.preceding, &t.prefix, &t.target});

      // preceding ++ prefix ++ target is the comment up to a sentence end.
      if (seen.size() > comment.size() ||
          !std::equal(seen.begin(), seen.end(), comment.begin())) {
        fail(t.id, "task text is not a prefix of its comment");
        continue;
      }
      if (seen.size() < comment.size()) {
        const std::string& last = seen.back();
        const std::string& next = comment[seen.size()];
        if (!IsTerminal(last) && next.front() != '@') {
          fail(t.id, "sentence ends mid-sentence before '" + next + "'");
        }
        // Later sentences must not leak into the code context either.
        std::vector<std::string> later(comment.begin() + seen.size(), comment.end());
        std::vector<std::string> context = TokenTexts(t.context);
        for (std::size_t i = 0; i + 4 <= later.size(); ++i) {
          std::vector<std::string> run(later.begin() + i, later.begin() + i + 4);
          if (ContainsRun(context, run) && !ContainsRun(seen, run)) {
            fail(t.id, "context contains later-sentence text");
            break;
          }
        }
      }

      Group& g = groups[t.SentenceKey()];
      std::vector<std::string> preceding = TokenTexts(t.preceding);
      std::vector<std::string> sentence = Concat({&t.prefix, &t.target});
      if (g.tasks == 0) {
        g.preceding = preceding;
        g.sentence = sentence;
      } else if (g.preceding != preceding || g.sentence != sentence) {
        fail(t.id, "variants disagree on the sentence");
      }
      if (!g.split_points.insert(t.prefix.size()).second) fail(t.id, "repeated split point");
      ++g.tasks;
    }
  }

  for (const auto& [key, g] : groups) {
    int n = static_cast<int>(g.sentence.size());
    int expected = std::min(max_variants, n - 1);
    if (g.tasks != expected) {
      fail(key, "has " + std::to_string(g.tasks) + " variants, expected " +
                    std::to_string(expected));
    }
    if (!g.split_points.empty() &&
        (*g.split_points.begin() < 1 || *g.split_points.rbegin() > std::size_t(n - 1))) {
      fail(key, "split point outside [1, n-1]");
    }
  }
  return problems;
}

std::vector<std::string> Words(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// Values worked out by hand: clipped matches / candidate n-grams, times
// exp(min(0, 1 - |ref|/|cand|)).
const std::vector<BleuCase>& BleuFixture() {
  static const std::vector<BleuCase> cases = {
    {"the cat", "the cat sat", 1, std::exp(1.0 - 1.5)},
    {"the cat", "the cat sat", 2, std::exp(1.0 - 1.5)},
    {"the cat", "the cat sat", 3, 0.0},
    {"a b c d e", "a b c d e", 1, 1.0},
    {"a b c d e", "a b c d e", 2, 1.0},
    {"a b c d e", "a b c d e", 3, 1.0},
    {"a b c d e", "a b c d e", 4, 1.0},
    {"the the the the", "the cat the mat", 1, 0.5},
    {"x y z", "a b c", 1, 0.0},
    {"a b c d e f", "a b c", 1, 0.5},
    {"a b c d e f", "a b c", 2, 0.4},
    {"a b x c d", "a b c d", 2, 0.5},
    {"a b x c d", "a b c d", 3, 0.0},
    {"a b x c d", "a b c d", 1, 0.8},
    {"a a b", "a b b", 1, 2.0 / 3.0},
    {"a a b", "a b b", 2, 0.5},
    {"x", "x y z w", 1, std::exp(-3.0)},
    {"the cat sat on mat", "the cat sat on the mat", 4, 0.5 * std::exp(-0.2)},
    {"the cat sat on mat", "the cat sat on the mat", 3, 2.0 / 3.0 * std::exp(-0.2)},
    {"the cat sat on mat", "the cat sat on the mat", 2, 0.75 * std::exp(-0.2)},
  };
  return cases;
}

}  // namespace ccomp::testing
