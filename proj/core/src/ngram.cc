#include "ccomp/ngram.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "ccomp/errors.h"
#include "ccomp/fingerprint.h"
#include "ccomp/tokenizer.h"

namespace ccomp {
namespace {

using TokenId = std::uint32_t;
using Key = std::vector<TokenId>;

struct KeyHash {
  std::size_t operator()(const Key& key) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (TokenId id : key) {
      h ^= id;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

using LocalCounts = std::unordered_map<Key, std::unordered_map<TokenId, std::uint64_t>, KeyHash>;

bool ValidTokenText(const std::string& token) {
  if (token.empty()) return false;
  for (unsigned char c : token) {
    if (std::isspace(c)) return false;
  }
  return true;
}

}  // namespace

struct NgramModel::Impl {
  struct Entry {
    std::vector<std::pair<TokenId, std::uint64_t>> next;  // sorted by id
    std::uint64_t total = 0;
    TokenId best = 0;
    std::uint64_t best_count = 0;
  };

  int order = 0;
  std::vector<std::string> vocab;
  std::unordered_map<std::string, TokenId> ids;
  std::unordered_map<Key, Entry, KeyHash> table;
  std::uint64_t tokens = 0;
  std::string fingerprint;

  TokenId Intern(const std::string& token) {
    auto [it, inserted] = ids.emplace(token, static_cast<TokenId>(vocab.size()));
    if (inserted) vocab.push_back(token);
    return it->second;
  }

  void Finalize(Entry& e) const {
    std::sort(e.next.begin(), e.next.end());
    e.total = 0;
    e.best_count = 0;
    for (auto [id, count] : e.next) {
      e.total += count;
      if (count > e.best_count ||
          (count == e.best_count && vocab[id] < vocab[e.best])) {
        e.best = id;
        e.best_count = count;
      }
    }
  }

  // Padded, id-mapped key for the last order-1 tokens; nullopt if any token
  // was never seen in training.
  std::optional<Key> HistoryKey(std::span<const std::string> history) const {
    const std::size_t width = static_cast<std::size_t>(order - 1);
    Key key(width, ids.at(std::string(kStartToken)));
    std::size_t take = std::min(width, history.size());
    for (std::size_t i = 0; i < take; ++i) {
      auto it = ids.find(history[history.size() - take + i]);
      if (it == ids.end()) return std::nullopt;
      key[width - take + i] = it->second;
    }
    return key;
  }

  const Entry* Find(std::span<const std::string> history) const {
    std::optional<Key> key = HistoryKey(history);
    if (!key) return nullptr;
    auto it = table.find(*key);
    return it == table.end() ? nullptr : &it->second;
  }
};

NgramModel::NgramModel(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
NgramModel::NgramModel(NgramModel&&) noexcept = default;
NgramModel& NgramModel::operator=(NgramModel&&) noexcept = default;
NgramModel::~NgramModel() = default;

int NgramModel::order() const { return impl_->order; }
std::size_t NgramModel::vocabulary_size() const { return impl_->vocab.size(); }
std::size_t NgramModel::history_count() const { return impl_->table.size(); }
std::uint64_t NgramModel::token_count() const { return impl_->tokens; }
const std::string& NgramModel::fingerprint() const { return impl_->fingerprint; }

NgramModel NgramModel::Train(std::span<const Sequence> sequences, int order, unsigned threads) {
  if (order < 2) throw UsageError("n-gram order must be >= 2");
  auto impl = std::make_unique<Impl>();
  impl->order = order;
  const TokenId start = impl->Intern(std::string(kStartToken));

  Fingerprint fp;
  fp.Update(static_cast<std::uint64_t>(order));
  std::vector<std::vector<TokenId>> encoded;
  encoded.reserve(sequences.size());
  for (const Sequence& seq : sequences) {
    std::vector<TokenId> ids(static_cast<std::size_t>(order - 1), start);
    for (const std::string& token : seq) {
      if (!ValidTokenText(token)) {
        throw InputError("training token is empty or contains whitespace");
      }
      ids.push_back(impl->Intern(token));
      fp.Update(token).Update(" ");
    }
    fp.Update("\n");
    impl->tokens += seq.size();
    encoded.push_back(std::move(ids));
  }
  if (impl->tokens == 0) throw InputError("cannot train an n-gram model on an empty corpus");
  impl->fingerprint = fp.Hex();

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(1, encoded.size() / 512)));
  std::vector<LocalCounts> shards(threads);
  auto count_shard = [&](unsigned shard) {
    const std::size_t width = static_cast<std::size_t>(order - 1);
    for (std::size_t s = shard; s < encoded.size(); s += threads) {
      const auto& ids = encoded[s];
      for (std::size_t i = width; i < ids.size(); ++i) {
        Key key(ids.begin() + static_cast<std::ptrdiff_t>(i - width),
                ids.begin() + static_cast<std::ptrdiff_t>(i));
        ++shards[shard][key][ids[i]];
      }
    }
  };
  if (threads == 1) {
    count_shard(0);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) workers.emplace_back(count_shard, t);
    for (std::thread& w : workers) w.join();
  }

  // Summation is order-independent, so the merged table is deterministic.
  LocalCounts merged = std::move(shards[0]);
  for (unsigned t = 1; t < threads; ++t) {
    for (auto& [key, next] : shards[t]) {
      auto& dest = merged[key];
      for (auto [id, count] : next) dest[id] += count;
    }
  }
  impl->table.reserve(merged.size());
  for (auto& [key, next] : merged) {
    Impl::Entry entry;
    entry.next.assign(next.begin(), next.end());
    impl->Finalize(entry);
    impl->table.emplace(key, std::move(entry));
  }
  return NgramModel(std::move(impl));
}

std::optional<NextToken> NgramModel::PredictNext(std::span<const std::string> history) const {
  const Impl::Entry* e = impl_->Find(history);
  if (e == nullptr) return std::nullopt;
  NextToken out;
  out.token = impl_->vocab[e->best];
  out.count = e->best_count;
  out.total = e->total;
  out.probability = static_cast<double>(e->best_count) / static_cast<double>(e->total);
  return out;
}

std::map<std::string, std::uint64_t> NgramModel::Counts(std::span<const std::string> history) const {
  std::map<std::string, std::uint64_t> out;
  if (const Impl::Entry* e = impl_->Find(history)) {
    for (auto [id, count] : e->next) out[impl_->vocab[id]] = count;
  }
  return out;
}

void NgramModel::ForEachHistory(
    const std::function<void(const std::vector<std::string>&,
                             const std::map<std::string, std::uint64_t>&)>& fn) const {
  for (const auto& [key, entry] : impl_->table) {
    std::vector<std::string> history;
    for (TokenId id : key) history.push_back(impl_->vocab[id]);
    std::map<std::string, std::uint64_t> next;
    for (auto [id, count] : entry.next) next[impl_->vocab[id]] = count;
    fn(history, next);
  }
}

Continuation NgramModel::Continue(std::span<const std::string> history, int max_tokens) const {
  Continuation out;
  std::vector<std::string> context(history.begin(), history.end());
  for (int step = 0; step < max_tokens; ++step) {
    std::optional<NextToken> next = PredictNext(context);
    if (!next) break;
    out.tokens.push_back(next->token);
    out.probabilities.push_back(next->probability);
    context.push_back(std::move(next->token));
  }
  return out;
}

Prediction NgramModel::PredictSequence(std::span<const std::string> prefix, int length,
                                       std::string task_id, std::string model) const {
  if (length < 1) throw UsageError("prediction length must be >= 1");
  Continuation c = Continue(prefix, length);
  if (static_cast<int>(c.tokens.size()) < length) {
    return Prediction::None(std::move(task_id), std::move(model));
  }
  Prediction p;
  p.task_id = std::move(task_id);
  p.model = std::move(model);
  p.status = PredictionStatus::kOk;
  p.tokens = std::move(c.tokens);
  p.step_probabilities = std::move(c.probabilities);
  p.confidence = p.ConfidenceAt(p.tokens.size());
  return p;
}

void NgramModel::Save(std::ostream& out) const {
  const Impl& m = *impl_;
  std::vector<std::string> vocab = m.vocab;
  std::sort(vocab.begin(), vocab.end());

  struct Line {
    std::string history;
    std::string next;
    std::uint64_t count;
  };
  std::vector<Line> lines;
  for (const auto& [key, entry] : m.table) {
    std::string history;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i > 0) history += ' ';
      history += m.vocab[key[i]];
    }
    for (auto [id, count] : entry.next) lines.push_back({history, m.vocab[id], count});
  }
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    return std::tie(a.history, a.next) < std::tie(b.history, b.next);
  });

  out << kFormatTag << ' ' << kFormatVersion << '\n'
      << "order " << m.order << '\n'
      << "vocab " << vocab.size() << '\n'
      << "histories " << m.table.size() << '\n'
      << "entries " << lines.size() << '\n'
      << "tokens " << m.tokens << '\n'
      << "fingerprint " << m.fingerprint << '\n';
  for (const std::string& token : vocab) out << token << '\n';
  for (const Line& line : lines) {
    out << line.history << '\t' << line.next << '\t' << line.count << '\n';
  }
}

void NgramModel::SaveFile(const std::filesystem::path& path) const {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  Save(out);
}

NgramModel NgramModel::Load(std::istream& in) {
  auto fail = [](const std::string& what) -> InputError {
    return InputError("malformed n-gram model: " + what);
  };
  std::string line;
  auto header = [&](const std::string& name) {
    if (!std::getline(in, line)) throw fail("missing '" + name + "'");
    std::istringstream ss(line);
    std::string key;
    std::string value;
    if (!(ss >> key >> value) || key != name) throw fail("expected '" + name + "'");
    return value;
  };
  auto number = [&](const std::string& name) -> std::uint64_t {
    std::string v = header(name);
    try {
      return std::stoull(v);
    } catch (const std::exception&) {
      throw fail("bad value for '" + name + "'");
    }
  };

  if (header(std::string(kFormatTag)) != std::to_string(kFormatVersion)) {
    throw fail("unsupported version");
  }
  auto impl = std::make_unique<Impl>();
  impl->order = static_cast<int>(number("order"));
  if (impl->order < 2) throw fail("order < 2");
  const std::uint64_t vocab = number("vocab");
  const std::uint64_t histories = number("histories");
  const std::uint64_t entries = number("entries");
  impl->tokens = number("tokens");
  impl->fingerprint = header("fingerprint");

  for (std::uint64_t i = 0; i < vocab; ++i) {
    if (!std::getline(in, line) || !ValidTokenText(line)) throw fail("bad vocabulary entry");
    impl->Intern(line);
  }
  if (!impl->ids.contains(std::string(kStartToken))) throw fail("start sentinel missing");
  for (std::uint64_t i = 0; i < entries; ++i) {
    if (!std::getline(in, line)) throw fail("truncated count table");
    std::size_t t1 = line.find('\t');
    std::size_t t2 = line.find('\t', t1 == std::string::npos ? t1 : t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) throw fail("bad count line");
    Key key;
    std::istringstream hs(line.substr(0, t1));
    std::string token;
    while (hs >> token) {
      auto it = impl->ids.find(token);
      if (it == impl->ids.end()) throw fail("unknown history token '" + token + "'");
      key.push_back(it->second);
    }
    if (static_cast<int>(key.size()) != impl->order - 1) throw fail("history width mismatch");
    auto next = impl->ids.find(line.substr(t1 + 1, t2 - t1 - 1));
    if (next == impl->ids.end()) throw fail("unknown next token");
    std::uint64_t count = 0;
    try {
      count = std::stoull(line.substr(t2 + 1));
    } catch (const std::exception&) {
      throw fail("bad count");
    }
    if (count == 0) throw fail("zero count");
    impl->table[key].next.emplace_back(next->second, count);
  }
  if (impl->table.size() != histories) throw fail("history count mismatch");
  for (auto& [key, entry] : impl->table) impl->Finalize(entry);
  return NgramModel(std::move(impl));
}

NgramModel NgramModel::LoadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read model " + path.string());
  try {
    return Load(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::vector<Sequence> TrainingSequences(std::span<const CompletionTask> tasks) {
  std::vector<Sequence> out;
  std::set<std::string> seen;
  for (const CompletionTask& t : tasks) {
    if (!seen.insert(t.SentenceKey()).second) continue;
    Sequence seq = TokenTexts(t.preceding);
    for (const Token& tok : t.prefix) seq.push_back(tok.text);
    for (const Token& tok : t.target) seq.push_back(tok.text);
    out.push_back(std::move(seq));
  }
  return out;
}

Sequence TaskHistory(const CompletionTask& task) {
  Sequence history = TokenTexts(task.preceding);
  for (const Token& tok : task.prefix) history.push_back(tok.text);
  return history;
}

Prediction PredictTask(const NgramModel& model, const CompletionTask& task,
                       const std::string& model_label, int max_tokens) {
  int length = static_cast<int>(task.target.size());
  if (max_tokens > 0) length = std::min(length, max_tokens);
  return model.PredictSequence(TaskHistory(task), length, task.id, model_label);
}

std::vector<Prediction> PredictTasks(const NgramModel& model,
                                     std::span<const CompletionTask> tasks,
                                     const std::string& model_label, int max_tokens) {
  std::vector<Prediction> out;
  out.reserve(tasks.size());
  for (const CompletionTask& t : tasks) out.push_back(PredictTask(model, t, model_label, max_tokens));
  return out;
}

}  // namespace ccomp
