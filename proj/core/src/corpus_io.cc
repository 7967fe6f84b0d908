#include <fstream>
#include <sstream>

#include "ccomp/corpus.h"
#include "ccomp/errors.h"
#include "json_util.h"
#include "text_util.h"

namespace ccomp {

Json TokensToJson(const TokenList& tokens) {
  Json arr = Json::array();
  for (const Token& t : tokens) arr.push_back(t.text);
  return arr;
}

TokenList TokensFromJson(const Json& value, const char* field) {
  if (!value.is_array()) {
    throw InputError(std::string("field '") + field + "' must be an array");
  }
  TokenList out;
  out.reserve(value.size());
  for (const Json& item : value) {
    if (!item.is_string() || item.get_ref<const std::string&>().empty()) {
      throw InputError(std::string("field '") + field +
                       "' must hold non-empty strings");
    }
    const std::string& text = item.get_ref<const std::string&>();
    out.push_back({text, ClassifyToken(text)});
  }
  return out;
}

std::string RequireString(const Json& record, const char* field) {
  auto it = record.find(field);
  if (it == record.end() || !it->is_string()) {
    throw InputError(std::string("missing or non-string field '") + field + "'");
  }
  return it->get<std::string>();
}

long long RequireInt(const Json& record, const char* field) {
  auto it = record.find(field);
  if (it == record.end() || !it->is_number_integer()) {
    throw InputError(std::string("missing or non-integer field '") + field + "'");
  }
  return it->get<long long>();
}

const Json& RequireArray(const Json& record, const char* field) {
  auto it = record.find(field);
  if (it == record.end() || !it->is_array()) {
    throw InputError(std::string("missing or non-array field '") + field + "'");
  }
  return *it;
}

Json MethodToJson(const MethodInstance& m) {
  Json j;
  j["id"] = m.id;
  j["source"] = m.source;
  j["method_code"] = m.method_code;
  j["javadoc"] = m.javadoc ? Json(*m.javadoc) : Json(nullptr);
  Json comments = Json::array();
  for (const InnerComment& c : m.inner_comments) {
    comments.push_back({{"text", c.text},
                        {"start_line", c.start_line},
                        {"end_line", c.end_line},
                        {"style", std::string(ToString(c.style))}});
  }
  j["inner_comments"] = std::move(comments);
  return j;
}

MethodInstance MethodFromJson(const Json& record) {
  MethodInstance m;
  m.id = RequireString(record, "id");
  m.source = RequireString(record, "source");
  m.method_code = RequireString(record, "method_code");
  if (IsBlank(m.method_code)) throw InputError("empty 'method_code'");
  auto doc = record.find("javadoc");
  if (doc != record.end() && !doc->is_null()) {
    if (!doc->is_string()) throw InputError("field 'javadoc' must be string or null");
    m.javadoc = doc->get<std::string>();
  }
  int line_count = static_cast<int>(SplitLines(m.method_code).size());
  int last_end = 0;
  for (const Json& c : RequireArray(record, "inner_comments")) {
    InnerComment ic;
    ic.text = RequireString(c, "text");
    ic.start_line = static_cast<int>(RequireInt(c, "start_line"));
    ic.end_line = static_cast<int>(RequireInt(c, "end_line"));
    auto style = ParseCommentStyle(RequireString(c, "style"));
    if (!style) throw InputError("field 'style' must be 'line' or 'block'");
    ic.style = *style;
    if (ic.start_line < 1 || ic.start_line > ic.end_line || ic.end_line > line_count) {
      throw InputError("inner comment span out of range");
    }
    if (ic.start_line <= last_end && last_end > 0) {
      throw InputError("inner comments overlap or are unsorted");
    }
    last_end = ic.end_line;
    m.inner_comments.push_back(std::move(ic));
  }
  return m;
}

std::string ReadText(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteText(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("write failed: " + path.string());
}

void ForEachJsonLine(const std::filesystem::path& path,
                     const std::function<void(const Json&, int)>& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    Json record = Json::parse(line, nullptr, false);
    if (!record.is_object()) {
      throw InputError(path.string() + ":" + std::to_string(line_no) +
                       ": record is not a JSON object");
    }
    try {
      fn(record, line_no);
    } catch (const InputError& e) {
      throw InputError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

std::string SerializeCorpus(const std::vector<MethodInstance>& corpus) {
  std::string out;
  for (const MethodInstance& m : corpus) {
    out += DumpLine(MethodToJson(m));
    out += '\n';
  }
  return out;
}

void WriteCorpus(const std::filesystem::path& path,
                 const std::vector<MethodInstance>& corpus) {
  WriteText(path, SerializeCorpus(corpus));
}

std::vector<MethodInstance> ReadCorpus(const std::filesystem::path& path) {
  std::vector<MethodInstance> out;
  ForEachJsonLine(path, [&](const Json& record, int) {
    out.push_back(MethodFromJson(record));
  });
  return out;
}

}  // namespace ccomp
