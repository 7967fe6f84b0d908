#ifndef CCOMP_CORPUS_H_
#define CCOMP_CORPUS_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ccomp {

enum class CommentStyle { kLine, kBlock };

std::string_view ToString(CommentStyle style);
std::optional<CommentStyle> ParseCommentStyle(std::string_view text);

// A comment inside a method body. Lines are 1-based within the method code;
// text has its delimiters stripped.
struct InnerComment {
  std::string text;
  int start_line = 0;
  int end_line = 0;
  CommentStyle style = CommentStyle::kLine;

  friend bool operator==(const InnerComment&, const InnerComment&) = default;
};

struct MethodInstance {
  std::string id;
  std::string source;
  std::string method_code;  // first line holds the signature
  std::optional<std::string> javadoc;
  std::vector<InnerComment> inner_comments;  // sorted, non-overlapping

  friend bool operator==(const MethodInstance&, const MethodInstance&) = default;
};

// Comment found by the lexical scanner. Offsets index the scanned text;
// [begin, end) includes delimiters.
struct CommentRegion {
  std::size_t begin = 0;
  std::size_t end = 0;
  int start_line = 0;
  int end_line = 0;
  CommentStyle style = CommentStyle::kLine;
  bool is_doc = false;  // "/**" block
  std::string text;     // delimiters stripped, trimmed
};

struct ScannedSource {
  std::vector<CommentRegion> comments;
  // Same length as the input. Comment and literal contents are replaced by
  // spaces; newlines are kept so line numbers stay valid.
  std::string code_only;
};

// Character-level state machine aware of string, char and text-block
// literals. Throws ParseError on an unterminated block comment.
ScannedSource ScanJavaSource(std::string_view text);

std::vector<std::string> SplitLines(std::string_view text);

// Every comment in the method code, in source order.
std::vector<InnerComment> ExtractInnerComments(std::string_view method_code);

// Merges runs of line comments that sit alone on consecutive lines.
std::vector<InnerComment> MergeAdjacentInlineComments(
    const std::vector<InnerComment>& comments, std::string_view method_code);

// Method code with every comment removed.
std::string StripComments(std::string_view method_code);

// Methods with bodies declared directly inside type bodies. Javadoc is the
// nearest preceding "/** */" comment within the declaration header.
std::vector<MethodInstance> ExtractMethods(std::string_view java_source,
                                           const std::string& source_name);

struct LoadResult {
  std::vector<MethodInstance> instances;
  int skipped = 0;
  std::vector<std::string> diagnostics;
};

// Accepts a directory of .java files (recursive, path-sorted), a single .java
// file, or a line-delimited record stream in either the corpus format or the
// CodeSearchNet style (function/code + docstring fields).
LoadResult LoadCorpus(const std::filesystem::path& source);

// Strict corpus file I/O; schema violations throw InputError naming the line.
void WriteCorpus(const std::filesystem::path& path,
                 const std::vector<MethodInstance>& corpus);
std::string SerializeCorpus(const std::vector<MethodInstance>& corpus);
std::vector<MethodInstance> ReadCorpus(const std::filesystem::path& path);

}  // namespace ccomp

#endif  // CCOMP_CORPUS_H_
