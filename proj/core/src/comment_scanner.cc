#include <algorithm>
#include <cctype>

#include "ccomp/corpus.h"
#include "ccomp/errors.h"
#include "text_util.h"

namespace ccomp {
namespace {

std::string CleanLineComment(std::string_view body) {
  std::size_t i = 0;
  while (i < body.size() && body[i] == '/') ++i;
  return std::string(Trim(body.substr(i)));
}

std::string CleanBlockComment(std::string_view body) {
  std::size_t i = 0;
  while (i < body.size() && body[i] == '*') ++i;  // "/**" and "/***" banners
  std::vector<std::string> lines = SplitLines(body.substr(i));
  std::vector<std::string> cleaned;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    std::string_view line = lines[n];
    if (n > 0) {
      line = LeftTrim(line);
      if (line.starts_with('*')) {
        line.remove_prefix(1);
        if (line.starts_with(' ')) line.remove_prefix(1);
      }
    }
    cleaned.emplace_back(RightTrim(line));
  }
  while (!cleaned.empty() && Trim(cleaned.back()).empty()) cleaned.pop_back();
  std::size_t first = 0;
  while (first < cleaned.size() && Trim(cleaned[first]).empty()) ++first;
  std::string out;
  for (std::size_t n = first; n < cleaned.size(); ++n) {
    if (n > first) out += '\n';
    out += cleaned[n];
  }
  return std::string(Trim(out));
}

}  // namespace

std::string_view ToString(CommentStyle style) {
  return style == CommentStyle::kLine ? "line" : "block";
}

std::optional<CommentStyle> ParseCommentStyle(std::string_view text) {
  if (text == "line") return CommentStyle::kLine;
  if (text == "block") return CommentStyle::kBlock;
  return std::nullopt;
}

std::vector<std::string> SplitLines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (true) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  for (std::string& line : lines) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
  }
  return lines;
}

ScannedSource ScanJavaSource(std::string_view text) {
  ScannedSource out;
  out.code_only.assign(text);
  auto blank = [&](std::size_t from, std::size_t to) {
    for (std::size_t k = from; k < to; ++k) {
      if (out.code_only[k] != '\n') out.code_only[k] = ' ';
    }
  };

  int line = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '/') {
      std::size_t end = text.find('\n', i);
      if (end == std::string_view::npos) end = n;
      CommentRegion region;
      region.begin = i;
      region.end = end;
      region.start_line = region.end_line = line;
      region.style = CommentStyle::kLine;
      region.text = CleanLineComment(text.substr(i + 2, end - i - 2));
      blank(i, end);
      out.comments.push_back(std::move(region));
      i = end;
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '*') {
      std::size_t close = text.find("*/", i + 2);
      if (close == std::string_view::npos) {
        throw ParseError("unterminated block comment", line);
      }
      CommentRegion region;
      region.begin = i;
      region.end = close + 2;
      region.start_line = line;
      line += static_cast<int>(
          std::count(text.begin() + i, text.begin() + close, '\n'));
      region.end_line = line;
      region.style = CommentStyle::kBlock;
      region.is_doc = close > i + 2 && text[i + 2] == '*';
      region.text = CleanBlockComment(text.substr(i + 2, close - i - 2));
      blank(i, region.end);
      out.comments.push_back(std::move(region));
      i = close + 2;
      continue;
    }
    if (c == '"' && text.substr(i, 3) == "\"\"\"") {
      std::size_t j = i + 3;
      while (j < n && text.substr(j, 3) != "\"\"\"") {
        if (text[j] == '\\') ++j;
        ++j;
      }
      std::size_t end = std::min(j, n);
      line += static_cast<int>(
          std::count(text.begin() + i, text.begin() + end, '\n'));
      blank(i + 3, end);
      i = std::min(end + 3, n);
      continue;
    }
    if (c == '"' || c == '\'') {
      // Java string and char literals cannot span lines.
      std::size_t j = i + 1;
      while (j < n && text[j] != c && text[j] != '\n') {
        if (text[j] == '\\' && j + 1 < n && text[j + 1] != '\n') ++j;
        ++j;
      }
      blank(i + 1, j);
      i = (j < n && text[j] == c) ? j + 1 : j;
      continue;
    }
    ++i;
  }
  return out;
}

std::vector<InnerComment> ExtractInnerComments(std::string_view method_code) {
  ScannedSource scanned = ScanJavaSource(method_code);
  std::vector<InnerComment> out;
  out.reserve(scanned.comments.size());
  for (CommentRegion& region : scanned.comments) {
    out.push_back({std::move(region.text), region.start_line, region.end_line,
                   region.style});
  }
  return out;
}

std::vector<InnerComment> MergeAdjacentInlineComments(
    const std::vector<InnerComment>& comments, std::string_view method_code) {
  std::vector<std::string> lines = SplitLines(method_code);
  auto comment_only = [&](int line_no) {
    if (line_no < 1 || line_no > static_cast<int>(lines.size())) return false;
    return Trim(lines[line_no - 1]).starts_with("//");
  };

  std::vector<InnerComment> out;
  for (const InnerComment& c : comments) {
    if (!out.empty()) {
      InnerComment& prev = out.back();
      bool mergeable = prev.style == CommentStyle::kLine &&
                       c.style == CommentStyle::kLine &&
                       c.start_line == prev.end_line + 1 &&
                       comment_only(prev.end_line) && comment_only(c.start_line);
      if (mergeable) {
        if (!c.text.empty()) {
          if (!prev.text.empty()) prev.text += ' ';
          prev.text += c.text;
        }
        prev.end_line = c.end_line;
        continue;
      }
    }
    out.push_back(c);
  }
  return out;
}

std::string StripComments(std::string_view method_code) {
  ScannedSource scanned = ScanJavaSource(method_code);
  std::string out(method_code);
  for (auto it = scanned.comments.rbegin(); it != scanned.comments.rend(); ++it) {
    std::string replacement;
    for (std::size_t k = it->begin; k < it->end; ++k) {
      if (method_code[k] == '\n') replacement += '\n';
    }
    out.replace(it->begin, it->end - it->begin, replacement);
  }
  return out;
}

}  // namespace ccomp
