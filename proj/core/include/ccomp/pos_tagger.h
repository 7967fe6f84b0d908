#ifndef CCOMP_POS_TAGGER_H_
#define CCOMP_POS_TAGGER_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ccomp {

// Universal 12-category tag set.
enum class PosTag { kNoun, kVerb, kAdj, kAdv, kPron, kDet, kAdp, kNum, kConj, kPrt, kPunct, kX };

inline constexpr int kPosTagCount = 12;

std::string_view ToString(PosTag tag);
std::optional<PosTag> ParsePosTag(std::string_view text);

// Closed-class lexicon, a verb stem list and suffix rules, with a small
// amount of left context. Sentinels and code identifiers map to X.
std::vector<PosTag> TagPartsOfSpeech(std::span<const std::string> tokens);

// Reporting groups: ADJ, ADV, DET, PRN, NOUN, VERB individually; the rest
// (ADP, NUM, CONJ, PRT, X, PUNCT) fold into OTH.
enum class PosGroup { kAdj, kAdv, kDet, kPrn, kNoun, kVerb, kOth };

inline constexpr std::array<PosGroup, 7> kPosGroups = {
    PosGroup::kAdj, PosGroup::kAdv, PosGroup::kDet, PosGroup::kPrn,
    PosGroup::kNoun, PosGroup::kVerb, PosGroup::kOth};

std::string_view ToString(PosGroup group);
PosGroup GroupOf(PosTag tag);

}  // namespace ccomp

#endif  // CCOMP_POS_TAGGER_H_
