#ifndef CCOMP_PREPROCESS_H_
#define CCOMP_PREPROCESS_H_

#include <string>
#include <string_view>
#include <vector>

#include "ccomp/corpus.h"

namespace ccomp {

enum class CommentKind { kJavadoc, kInner };

struct PreprocessConfig {
  int token_budget = 256;
  int min_comment_words = 3;

  bool token_budget_filter = true;
  bool ascii_filter = true;
  bool length_filter = true;
  bool satd_filter = true;
  bool commented_code_filter = true;
  bool normalize = true;
  bool orphan_filter = true;
  bool merge_inline = true;
  bool dedupe = true;
};

// Attrition counters. The instance-level removals reconcile:
//   input == output + sum(removed_*)
// Comment-level counters track comments pruned from surviving instances.
struct FilterReport {
  long long input = 0;
  long long removed_token_budget = 0;
  long long removed_non_ascii = 0;
  long long removed_short_comment = 0;
  long long removed_satd = 0;
  long long removed_commented_code = 0;
  long long removed_orphan = 0;  // no comment left after orphan removal
  long long removed_duplicate = 0;
  long long output = 0;

  struct CommentCounters {
    long long removed_short_comment = 0;
    long long removed_satd = 0;
    long long removed_commented_code = 0;
    long long removed_orphan = 0;
    long long merged_inline = 0;

    friend bool operator==(const CommentCounters&, const CommentCounters&) = default;
  } comments;

  long long InstanceRemovals() const;
  bool Reconciles() const { return input == output + InstanceRemovals(); }

  friend bool operator==(const FilterReport&, const FilterReport&) = default;
};

// Tokens of the method code (inner comments included) plus the Javadoc.
int CountInstanceTokens(const MethodInstance& instance);

// True when the instance fits under the budget (count < limit).
bool PassesTokenBudget(const MethodInstance& instance, int limit = 256);

bool HasNonAscii(const MethodInstance& instance);

// True when the comment has at least `min_words` non-punctuation tokens.
bool IsLongEnough(std::string_view comment, int min_words = 3);

// First word token, uppercased, is TODO, TOFIX or FIXME.
bool IsSatd(std::string_view comment);

// Code-likeness heuristic for commented-out statements.
bool LooksLikeCode(std::string_view comment);

// URLs -> _LINK_, dates -> _NUM_; for Javadoc also {@link X} -> _REF_ and
// HTML/XML tags stripped. Whitespace is collapsed to single spaces.
std::string NormalizeComment(std::string_view comment, CommentKind kind);

// Drops inner comments with a blank line directly above and below. A run of
// comment-only "//" lines is judged as one block.
MethodInstance RemoveOrphanComments(const MethodInstance& instance,
                                    int* removed = nullptr);

// Keeps the first occurrence of each (code, comments) combination.
std::vector<MethodInstance> Dedupe(const std::vector<MethodInstance>& corpus,
                                   long long* removed = nullptr);

struct PreprocessResult {
  std::vector<MethodInstance> corpus;
  FilterReport report;
};

// Order: token budget, ASCII/length, SATD, commented code, normalization,
// orphan removal, inline merging, dedupe.
PreprocessResult RunPipeline(const std::vector<MethodInstance>& corpus,
                             const PreprocessConfig& config = {});

std::string FilterReportToJson(const FilterReport& report);
FilterReport FilterReportFromJson(std::string_view json);

}  // namespace ccomp

#endif  // CCOMP_PREPROCESS_H_
