#ifndef CCOMP_RNG_H_
#define CCOMP_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace ccomp {

// Seeded generator with platform-independent draws. The engine is
// std::mt19937_64, whose output sequence is fixed by the standard; bounded
// draws and shuffles are implemented here because the standard distributions
// are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for one named unit (e.g. an origin id).
  static Rng ForStream(std::uint64_t seed, std::string_view stream);

  std::uint64_t Next() { return engine_(); }

  // Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t Below(std::uint64_t bound);

  // Fisher-Yates.
  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(Below(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

  // `count` distinct values from [lo, hi], in draw order.
  std::vector<int> SampleWithoutReplacement(int lo, int hi, int count);

 private:
  std::mt19937_64 engine_;
};

}  // namespace ccomp

#endif  // CCOMP_RNG_H_
