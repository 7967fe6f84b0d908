#include "ccomp/metrics.h"

#include <algorithm>
#include <cmath>
#include <map>

namespace ccomp {

std::string BucketLabel(int bucket) {
  return bucket == kOverflowBucket ? ">10" : std::to_string(bucket + 1);
}

std::optional<std::size_t> BucketLength(int bucket, std::size_t target_length) {
  if (bucket == kOverflowBucket) {
    if (target_length > static_cast<std::size_t>(kMaxK)) return target_length;
    return std::nullopt;
  }
  std::size_t k = static_cast<std::size_t>(bucket) + 1;
  if (target_length < k) return std::nullopt;
  return k;
}

std::optional<bool> PerfectAtK(std::span<const std::string> target,
                               const Prediction& prediction, std::size_t k) {
  if (k == 0 || target.size() < k) return std::nullopt;
  if (!prediction.ok() || prediction.tokens.size() < k) return false;
  return std::equal(target.begin(), target.begin() + static_cast<std::ptrdiff_t>(k),
                    prediction.tokens.begin());
}

double BleuN(std::span<const std::string> candidate,
             std::span<const std::string> reference, int n) {
  if (n < 1 || candidate.size() < static_cast<std::size_t>(n)) return 0.0;
  using Gram = std::vector<std::string>;
  auto grams = [n](std::span<const std::string> seq) {
    std::map<Gram, int> counts;
    for (std::size_t i = 0; i + n <= seq.size(); ++i) {
      ++counts[Gram(seq.begin() + i, seq.begin() + i + n)];
    }
    return counts;
  };
  std::map<Gram, int> cand = grams(candidate);
  std::map<Gram, int> ref = grams(reference);
  long long matched = 0;
  long long total = 0;
  for (const auto& [gram, count] : cand) {
    total += count;
    auto it = ref.find(gram);
    if (it != ref.end()) matched += std::min(count, it->second);
  }
  if (matched == 0) return 0.0;
  double precision = static_cast<double>(matched) / static_cast<double>(total);
  double ratio = static_cast<double>(reference.size()) / static_cast<double>(candidate.size());
  double brevity = std::exp(std::min(0.0, 1.0 - ratio));
  return precision * brevity;
}

std::optional<double> BleuA(std::span<const std::string> candidate,
                            std::span<const std::string> reference) {
  if (reference.size() < 4) return std::nullopt;
  double log_sum = 0.0;
  for (int n = 1; n <= 4; ++n) {
    double b = BleuN(candidate, reference, n);
    if (b <= 0.0) return 0.0;
    log_sum += std::log(b);
  }
  return std::exp(log_sum / 4.0);
}

int LevenshteinWords(std::span<const std::string> a, std::span<const std::string> b) {
  std::vector<int> prev(b.size() + 1);
  std::vector<int> cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= b.size(); ++j) {
      int substitute = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, substitute});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

Overlap OverlapMetrics(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::size_t both = 0;
  for (const std::string& id : a) both += b.count(id);
  std::size_t united = a.size() + b.size() - both;
  Overlap out;
  if (united == 0) return out;
  out.empty = false;
  const double u = static_cast<double>(united);
  out.shared = static_cast<double>(both) / u;
  out.only_a = static_cast<double>(a.size() - both) / u;
  out.only_b = static_cast<double>(b.size() - both) / u;
  return out;
}

McNemarResult McNemarFromCounts(long long b, long long c) {
  McNemarResult out;
  out.b = b;
  out.c = c;
  if (b + c == 0) return out;
  double diff = std::fabs(static_cast<double>(b - c)) - 1.0;
  double chi = diff * diff / static_cast<double>(b + c);
  out.chi_square = chi;
  out.p_value = std::erfc(std::sqrt(chi / 2.0));
  double bb = static_cast<double>(b);
  double cc = static_cast<double>(c);
  if (b == 0 || c == 0) {
    bb += 0.5;
    cc += 0.5;
  }
  out.odds_ratio = bb / cc;
  return out;
}

McNemarResult McNemarAndOddsRatio(std::span<const std::pair<bool, bool>> outcomes) {
  long long b = 0;
  long long c = 0;
  for (auto [a_ok, b_ok] : outcomes) {
    if (a_ok && !b_ok) ++b;
    if (!a_ok && b_ok) ++c;
  }
  return McNemarFromCounts(b, c);
}

void ConfidenceCell::Add(bool perfect, double confidence) {
  if (perfect) {
    perfect_sum += confidence;
    ++perfect_count;
  } else {
    wrong_sum += confidence;
    ++wrong_count;
  }
}

std::optional<double> ConfidenceCell::PerfectMean() const {
  if (perfect_count == 0) return std::nullopt;
  return perfect_sum / static_cast<double>(perfect_count);
}

std::optional<double> ConfidenceCell::WrongMean() const {
  if (wrong_count == 0) return std::nullopt;
  return wrong_sum / static_cast<double>(wrong_count);
}

}  // namespace ccomp
