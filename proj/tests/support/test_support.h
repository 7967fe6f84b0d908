#ifndef CCOMP_TESTS_TEST_SUPPORT_H_
#define CCOMP_TESTS_TEST_SUPPORT_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccomp/corpus.h"
#include "ccomp/dataset.h"

namespace ccomp::testing {

std::filesystem::path SourceDir();
std::filesystem::path FixtureDir();
std::filesystem::path MiniCorpusDir();

// Fresh, empty directory under the system temp dir.
std::filesystem::path MakeTempDir(const std::string& name);

std::string ReadBytes(const std::filesystem::path& path);
void WriteBytes(const std::filesystem::path& path, const std::string& bytes);

// Brute-force n-gram recount: scans every padded sequence window directly.
struct OracleNext {
  std::string token;
  std::uint64_t count = 0;
  std::uint64_t total = 0;
};

std::map<std::string, std::uint64_t> RecountNext(
    const std::vector<std::vector<std::string>>& sequences, int order,
    const std::vector<std::string>& history);

std::optional<OracleNext> RecountPredictNext(
    const std::vector<std::vector<std::string>>& sequences, int order,
    const std::vector<std::string>& history);

// Seeded random token sequences over a small skewed vocabulary.
std::vector<std::vector<std::string>> RandomSequences(std::uint64_t seed,
                                                      std::size_t max_tokens);

// Full-table edit distance.
int ReferenceLevenshtein(const std::vector<std::string>& a, const std::vector<std::string>& b);

// Every violated dataset invariant, described; empty when the dataset is
// consistent with the corpus it was built from.
std::vector<std::string> ValidateDataset(const std::vector<MethodInstance>& corpus,
                                         const Dataset& dataset, int max_variants);

std::vector<std::string> Words(const std::string& text);

struct BleuCase {
  const char* candidate;
  const char* reference;
  int n;
  double expected;
};

// Hand-worked BLEU-n values for a single reference.
const std::vector<BleuCase>& BleuFixture();

}  // namespace ccomp::testing

#endif  // CCOMP_TESTS_TEST_SUPPORT_H_
