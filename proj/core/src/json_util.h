#ifndef CCOMP_SRC_JSON_UTIL_H_
#define CCOMP_SRC_JSON_UTIL_H_

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "ccomp/corpus.h"
#include "ccomp/tokenizer.h"
#include "json.hpp"

namespace ccomp {

// Insertion-ordered so serialized records keep a stable, readable field order.
using Json = nlohmann::ordered_json;

Json TokensToJson(const TokenList& tokens);
TokenList TokensFromJson(const Json& value, const char* field);

Json MethodToJson(const MethodInstance& m);
MethodInstance MethodFromJson(const Json& record);

// Calls `fn(record, line_no)` for each non-blank line. Lines that are not
// JSON objects throw InputError naming the line.
void ForEachJsonLine(const std::filesystem::path& path,
                     const std::function<void(const Json&, int)>& fn);

// Compact single-line dump; invalid UTF-8 is replaced rather than thrown.
inline std::string DumpLine(const Json& value) {
  return value.dump(-1, ' ', false, Json::error_handler_t::replace);
}

// Indented dump for sidecar metadata and reports.
inline std::string DumpPretty(const Json& value) {
  return value.dump(2, ' ', false, Json::error_handler_t::replace) + "\n";
}

std::string ReadText(const std::filesystem::path& path);
void WriteText(const std::filesystem::path& path, const std::string& text);

// Typed field accessors; violations throw InputError mentioning the field.
std::string RequireString(const Json& record, const char* field);
long long RequireInt(const Json& record, const char* field);
const Json& RequireArray(const Json& record, const char* field);

}  // namespace ccomp

#endif  // CCOMP_SRC_JSON_UTIL_H_
