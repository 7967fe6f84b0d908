#include "ccomp/rng.h"

#include <limits>
#include <numeric>

#include "ccomp/fingerprint.h"

namespace ccomp {
namespace {

// splitmix64 finalizer; decorrelates nearby seeds before they reach the engine.
std::uint64_t Mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng Rng::ForStream(std::uint64_t seed, std::string_view stream) {
  Fingerprint fp;
  fp.Update(seed).Update(stream);
  return Rng(Mix(fp.value()));
}

std::uint64_t Rng::Below(std::uint64_t bound) {
  // Rejection sampling over the largest multiple of bound.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::vector<int> Rng::SampleWithoutReplacement(int lo, int hi, int count) {
  std::vector<int> pool(static_cast<std::size_t>(hi - lo + 1));
  std::iota(pool.begin(), pool.end(), lo);
  if (count > static_cast<int>(pool.size())) count = static_cast<int>(pool.size());
  // Partial Fisher-Yates from the front.
  for (int i = 0; i < count; ++i) {
    std::size_t j = i + static_cast<std::size_t>(Below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(count));
  return pool;
}

}  // namespace ccomp
