#ifndef CCOMP_FINGERPRINT_H_
#define CCOMP_FINGERPRINT_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace ccomp {

// 64-bit FNV-1a. Used to fingerprint artifacts and derive RNG streams.
class Fingerprint {
 public:
  Fingerprint() = default;

  Fingerprint& Update(std::string_view bytes);
  Fingerprint& Update(std::uint64_t value);

  std::uint64_t value() const { return state_; }
  std::string Hex() const;

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

std::string FingerprintBytes(std::string_view bytes);
std::string FingerprintFile(const std::filesystem::path& path);

}  // namespace ccomp

#endif  // CCOMP_FINGERPRINT_H_
