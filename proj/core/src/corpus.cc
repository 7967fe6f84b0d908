#include "ccomp/corpus.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ccomp/errors.h"
#include "json_util.h"
#include "text_util.h"

namespace ccomp {
namespace {

enum class Frame { kType, kMethod, kOther };

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

// `kw Name` as a whole word ahead of any parameter list.
bool DeclaresType(std::string_view header, std::string_view kw) {
  std::size_t limit = std::min(header.find('('), header.size());
  std::size_t pos = 0;
  while ((pos = header.find(kw, pos)) != std::string_view::npos && pos < limit) {
    bool left_ok = pos == 0 || (!IsIdentChar(header[pos - 1]) && header[pos - 1] != '.');
    std::size_t after = pos + kw.size();
    std::size_t name = after;
    while (name < header.size() && std::isspace(static_cast<unsigned char>(header[name]))) {
      ++name;
    }
    bool right_ok = after < header.size() && !IsIdentChar(header[after]) && name > after &&
                    name < header.size() && IsIdentChar(header[name]);
    if (left_ok && right_ok) return true;
    pos = after;
  }
  return false;
}

std::string_view FirstWord(std::string_view text) {
  text = LeftTrim(text);
  std::size_t i = 0;
  while (i < text.size() &&
         (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
    ++i;
  }
  return text.substr(0, i);
}

bool HasTopLevelAssignment(std::string_view header) {
  int depth = 0;
  for (std::size_t i = 0; i < header.size(); ++i) {
    char c = header[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '=' && depth == 0) return true;
  }
  return false;
}

Frame ClassifyHeader(std::string_view header) {
  for (std::string_view kw : {"class", "interface", "enum", "record"}) {
    if (DeclaresType(header, kw) && !HasTopLevelAssignment(header) &&
        header.find("new ") == std::string_view::npos) {
      return Frame::kType;
    }
  }
  if (header.find('(') == std::string_view::npos ||
      header.find(')') == std::string_view::npos) {
    return Frame::kOther;
  }
  if (HasTopLevelAssignment(header) || header.find("->") != std::string_view::npos) {
    return Frame::kOther;
  }
  static const std::set<std::string, std::less<>> kStatementWords = {
      "if", "for", "while", "switch", "catch", "synchronized", "do",
      "try", "else", "new", "return", "throw"};
  if (kStatementWords.contains(FirstWord(header))) return Frame::kOther;
  return Frame::kMethod;
}

int LineOf(const std::vector<std::size_t>& line_starts, std::size_t offset) {
  auto it = std::upper_bound(line_starts.begin(), line_starts.end(), offset);
  return static_cast<int>(it - line_starts.begin());
}

// Strips the indentation shared by every non-blank line.
std::string Dedent(const std::vector<std::string>& lines) {
  std::size_t common = std::string::npos;
  for (const std::string& line : lines) {
    if (IsBlank(line)) continue;
    std::size_t indent = 0;
    while (indent < line.size() && (line[indent] == ' ' || line[indent] == '\t')) {
      ++indent;
    }
    common = std::min(common, indent);
  }
  if (common == std::string::npos) common = 0;
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) out += '\n';
    std::string_view line = lines[i];
    if (IsBlank(line)) continue;
    out += line.substr(std::min(common, line.size()));
  }
  return out;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Removes a leading "/** ... */" from CodeSearchNet-style function text.
std::string DropLeadingDocComment(const std::string& function) {
  std::string_view view = LeftTrim(function);
  if (!view.starts_with("/*")) return function;
  std::size_t close = view.find("*/");
  if (close == std::string_view::npos) return function;
  view.remove_prefix(close + 2);
  std::size_t nl = view.find_first_not_of(" \t\r\n");
  if (nl == std::string_view::npos) return {};
  // Keep the text from the start of the first non-blank line.
  std::size_t line_start = view.rfind('\n', nl);
  return std::string(line_start == std::string_view::npos
                         ? view.substr(nl)
                         : view.substr(line_start + 1));
}

std::string StringField(const Json& record, const char* key) {
  auto it = record.find(key);
  if (it == record.end() || !it->is_string()) return {};
  return it->get<std::string>();
}

}  // namespace

std::vector<MethodInstance> ExtractMethods(std::string_view java_source,
                                           const std::string& source_name) {
  ScannedSource scanned = ScanJavaSource(java_source);
  const std::string& code = scanned.code_only;
  std::vector<std::string> lines = SplitLines(java_source);
  std::vector<std::size_t> line_starts = {0};
  for (std::size_t i = 0; i < java_source.size(); ++i) {
    if (java_source[i] == '\n') line_starts.push_back(i + 1);
  }

  struct Open {
    Frame frame;
    std::size_t header_begin;
  };
  std::vector<Open> stack;
  std::size_t header_begin = 0;
  std::vector<std::pair<int, MethodInstance>> out;

  for (std::size_t i = 0; i < code.size(); ++i) {
    char c = code[i];
    bool declaration_level = stack.empty() || stack.back().frame == Frame::kType;
    if (c == ';' && declaration_level) {
      header_begin = i + 1;
    } else if (c == '{') {
      Frame frame = Frame::kOther;
      if (declaration_level) {
        frame = ClassifyHeader(std::string_view(code).substr(header_begin, i - header_begin));
      }
      stack.push_back({frame, header_begin});
      if (declaration_level) header_begin = i + 1;
    } else if (c == '}') {
      if (stack.empty()) continue;  // unbalanced; ignore
      Open open = stack.back();
      stack.pop_back();
      bool now_declaration_level = stack.empty() || stack.back().frame == Frame::kType;
      if (now_declaration_level) header_begin = i + 1;
      if (open.frame != Frame::kMethod) continue;

      // Signature starts at the first non-blank, non-annotation header line.
      int first = LineOf(line_starts, open.header_begin);
      int body_close = LineOf(line_starts, i);
      int sig_line = first;
      std::vector<int> candidates;
      for (int ln = first; ln <= body_close; ++ln) {
        std::size_t from = std::max(line_starts[ln - 1], open.header_begin);
        std::size_t to = ln < static_cast<int>(line_starts.size()) ? line_starts[ln] : code.size();
        if (!IsBlank(std::string_view(code).substr(from, to - from))) {
          candidates.push_back(ln);
        }
        if (to > i) break;
      }
      sig_line = candidates.empty() ? first : candidates.front();
      for (std::size_t k = 0; k + 1 < candidates.size(); ++k) {
        std::size_t from = std::max(line_starts[candidates[k] - 1], open.header_begin);
        std::size_t to = line_starts[candidates[k]];
        std::string_view text = Trim(std::string_view(code).substr(from, to - from));
        if (!text.starts_with('@')) break;
        // Annotation-only line: nothing but "@Name" or "@Name(...)".
        sig_line = candidates[k + 1];
      }

      MethodInstance inst;
      inst.source = source_name;
      inst.id = source_name + "#L" + std::to_string(sig_line);
      std::vector<std::string> body(lines.begin() + (sig_line - 1),
                                    lines.begin() + body_close);
      inst.method_code = Dedent(body);
      std::size_t sig_offset = line_starts[sig_line - 1];
      for (const CommentRegion& region : scanned.comments) {
        if (region.is_doc && region.begin >= open.header_begin &&
            region.end <= sig_offset) {
          inst.javadoc = region.text;
        }
      }
      inst.inner_comments = ExtractInnerComments(inst.method_code);
      out.emplace_back(sig_line, std::move(inst));
    }
  }
  // Methods close inner-first; report them in declaration order.
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first < b.first;
  });
  std::vector<MethodInstance> methods;
  methods.reserve(out.size());
  for (auto& entry : out) methods.push_back(std::move(entry.second));
  return methods;
}

LoadResult LoadCorpus(const std::filesystem::path& source) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::exists(source, ec)) {
    throw InputError("no such file or directory: " + source.string());
  }

  LoadResult result;
  auto load_java = [&](const fs::path& file, const std::string& name) {
    std::string text = ReadFile(file);
    try {
      for (MethodInstance& m : ExtractMethods(text, name)) {
        result.instances.push_back(std::move(m));
      }
    } catch (const ParseError& e) {
      ++result.skipped;
      result.diagnostics.push_back(name + ": " + e.what());
    }
  };

  if (fs::is_directory(source)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(source)) {
      if (entry.is_regular_file() && entry.path().extension() == ".java") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& file : files) {
      load_java(file, fs::relative(file, source).generic_string());
    }
    return result;
  }

  if (source.extension() == ".java") {
    load_java(source, source.filename().generic_string());
    return result;
  }

  std::ifstream in(source);
  if (!in) throw InputError("cannot read " + source.string());
  std::set<std::string> seen_ids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    Json record = Json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (!record.is_object()) {
      ++result.skipped;
      result.diagnostics.push_back("line " + std::to_string(line_no) + ": not a JSON object");
      continue;
    }
    MethodInstance inst;
    try {
      if (record.contains("method_code")) {
        inst = MethodFromJson(record);
      } else {
        std::string function = StringField(record, "function");
        if (function.empty()) function = StringField(record, "code");
        function = DropLeadingDocComment(function);
        if (IsBlank(function)) throw InputError("missing method field");
        inst.method_code = function;
        std::string doc = StringField(record, "docstring");
        if (!IsBlank(doc)) inst.javadoc = doc;
        inst.id = StringField(record, "id");
        inst.source = StringField(record, "path");
        if (inst.source.empty()) inst.source = StringField(record, "url");
        if (inst.source.empty()) inst.source = source.filename().generic_string();
        if (inst.id.empty()) inst.id = inst.source + "#" + std::to_string(line_no);
        inst.inner_comments = ExtractInnerComments(inst.method_code);
      }
    } catch (const InputError& e) {
      ++result.skipped;
      result.diagnostics.push_back("line " + std::to_string(line_no) + ": " + e.what());
      continue;
    }
    if (IsBlank(inst.method_code)) {
      ++result.skipped;
      result.diagnostics.push_back("line " + std::to_string(line_no) + ": empty method");
      continue;
    }
    std::string base = inst.id;
    for (int n = 2; seen_ids.contains(inst.id); ++n) {
      inst.id = base + "~" + std::to_string(n);
    }
    seen_ids.insert(inst.id);
    result.instances.push_back(std::move(inst));
  }
  return result;
}

}  // namespace ccomp
