#ifndef CCOMP_SRC_TEXT_UTIL_H_
#define CCOMP_SRC_TEXT_UTIL_H_

#include <cctype>
#include <string>
#include <string_view>

namespace ccomp {

inline std::string_view LeftTrim(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

inline std::string_view RightTrim(std::string_view s) {
  std::size_t n = s.size();
  while (n > 0 && std::isspace(static_cast<unsigned char>(s[n - 1]))) --n;
  return s.substr(0, n);
}

inline std::string_view Trim(std::string_view s) { return RightTrim(LeftTrim(s)); }

inline bool IsBlank(std::string_view s) { return Trim(s).empty(); }

inline std::string ToUpper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

inline std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline bool IsAscii(std::string_view s) {
  for (unsigned char c : s) {
    if (c >= 0x80) return false;
  }
  return true;
}

}  // namespace ccomp

#endif  // CCOMP_SRC_TEXT_UTIL_H_
