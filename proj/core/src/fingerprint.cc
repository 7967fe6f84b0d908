#include "ccomp/fingerprint.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ccomp/errors.h"

namespace ccomp {

Fingerprint& Fingerprint::Update(std::string_view bytes) {
  for (unsigned char c : bytes) {
    state_ ^= c;
    state_ *= 0x100000001b3ULL;
  }
  return *this;
}

Fingerprint& Fingerprint::Update(std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    state_ ^= (value >> (8 * i)) & 0xffU;
    state_ *= 0x100000001b3ULL;
  }
  return *this;
}

std::string Fingerprint::Hex() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(state_));
  return buf;
}

std::string FingerprintBytes(std::string_view bytes) {
  return Fingerprint().Update(bytes).Hex();
}

std::string FingerprintFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return FingerprintBytes(ss.str());
}

}  // namespace ccomp
