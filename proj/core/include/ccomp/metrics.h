#ifndef CCOMP_METRICS_H_
#define CCOMP_METRICS_H_

#include <array>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ccomp/prediction.h"

namespace ccomp {

// Length buckets: k = 1..10 plus the ">10" bucket, where the whole target
// (longer than 10 tokens) must be predicted.
inline constexpr int kMaxK = 10;
inline constexpr int kBucketCount = kMaxK + 1;
inline constexpr int kOverflowBucket = kMaxK;

std::string BucketLabel(int bucket);

// Number of target tokens bucket `bucket` compares, or std::nullopt when the
// target is too short for it.
std::optional<std::size_t> BucketLength(int bucket, std::size_t target_length);

// std::nullopt when |target| < k. A no-prediction is never perfect.
std::optional<bool> PerfectAtK(std::span<const std::string> target,
                               const Prediction& prediction, std::size_t k);

// Clipped n-gram precision times the brevity penalty
// exp(min(0, 1 - |reference| / |candidate|)); 0 when nothing matches or the
// candidate has fewer than n tokens. Single reference, no smoothing.
double BleuN(std::span<const std::string> candidate,
             std::span<const std::string> reference, int n);

// Geometric mean of BLEU-1..4; std::nullopt when |reference| < 4.
std::optional<double> BleuA(std::span<const std::string> candidate,
                            std::span<const std::string> reference);

// Unit-cost word edit distance.
int LevenshteinWords(std::span<const std::string> a, std::span<const std::string> b);

struct Overlap {
  double shared = 0.0;
  double only_a = 0.0;
  double only_b = 0.0;
  bool empty = true;  // union is empty; the three fractions are 0
};

Overlap OverlapMetrics(const std::set<std::string>& a, const std::set<std::string>& b);

struct McNemarResult {
  long long b = 0;  // A correct, B wrong
  long long c = 0;  // A wrong, B correct
  std::optional<double> chi_square;  // continuity-corrected; undefined if b + c == 0
  std::optional<double> p_value;     // chi-square, one degree of freedom
  std::optional<double> odds_ratio;  // b / c, Haldane 0.5 when a cell is 0
};

McNemarResult McNemarFromCounts(long long b, long long c);
McNemarResult McNemarAndOddsRatio(std::span<const std::pair<bool, bool>> outcomes);

// Running mean split by outcome.
struct ConfidenceCell {
  double perfect_sum = 0.0;
  long long perfect_count = 0;
  double wrong_sum = 0.0;
  long long wrong_count = 0;

  void Add(bool perfect, double confidence);
  std::optional<double> PerfectMean() const;
  std::optional<double> WrongMean() const;
};

}  // namespace ccomp

#endif  // CCOMP_METRICS_H_
