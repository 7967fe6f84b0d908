#include "ccomp/pos_tagger.h"

#include <gtest/gtest.h>

#include <sstream>

#include "test_support.h"

namespace ccomp {
namespace {

using testing::Words;

std::vector<PosTag> Tags(const std::string& text) { return TagPartsOfSpeech(Words(text)); }

TEST(PosTagger, SingleTokens) {
  EXPECT_EQ(Tags("the"), std::vector<PosTag>{PosTag::kDet});
  EXPECT_EQ(Tags("returns quickly"), (std::vector<PosTag>{PosTag::kVerb, PosTag::kAdv}));
  EXPECT_EQ(Tags("_LINK_"), std::vector<PosTag>{PosTag::kX});
  EXPECT_EQ(Tags("."), std::vector<PosTag>{PosTag::kPunct});
  EXPECT_EQ(Tags("42"), std::vector<PosTag>{PosTag::kNum});
  EXPECT_EQ(Tags("getValue"), std::vector<PosTag>{PosTag::kX});
  EXPECT_TRUE(Tags("").empty());
}

TEST(PosTagger, TagNamesRoundTrip) {
  for (int i = 0; i < kPosTagCount; ++i) {
    PosTag tag = static_cast<PosTag>(i);
    EXPECT_EQ(ParsePosTag(ToString(tag)), tag);
  }
  EXPECT_EQ(ParsePosTag("nope"), std::nullopt);
}

TEST(PosTagger, Groups) {
  EXPECT_EQ(GroupOf(PosTag::kDet), PosGroup::kDet);
  EXPECT_EQ(GroupOf(PosTag::kPron), PosGroup::kPrn);
  EXPECT_EQ(GroupOf(PosTag::kAdp), PosGroup::kOth);
  EXPECT_EQ(GroupOf(PosTag::kPunct), PosGroup::kOth);
  EXPECT_EQ(GroupOf(PosTag::kX), PosGroup::kOth);
  EXPECT_EQ(ToString(PosGroup::kPrn), "PRN");
  EXPECT_EQ(ToString(PosGroup::kOth), "OTH");
}

// Hand-labelled comment sentences, word/TAG.
const char* const kLabelled[] = {
    "Returns/VERB the/DET sum/NOUN of/ADP the/DET two/NUM values/NOUN ./PUNCT",
    "Adds/VERB one/NUM to/ADP the/DET counter/NOUN ./PUNCT",
    "Checks/VERB whether/CONJ the/DET given/VERB record/NOUN is/VERB valid/ADJ ./PUNCT",
    "Loads/VERB the/DET configuration/NOUN from/ADP the/DET local/ADJ file/NOUN ./PUNCT",
    "This/DET method/NOUN is/VERB not/ADV thread/NOUN safe/ADJ ./PUNCT",
    "We/PRON need/VERB to/PRT update/VERB the/DET cache/NOUN before/ADP returning/VERB ./PUNCT",
    "It/PRON always/ADV returns/VERB a/DET new/ADJ list/NOUN ./PUNCT",
    "The/DET result/NOUN may/VERB be/VERB empty/ADJ if/CONJ no/DET items/NOUN match/VERB ./PUNCT",
    "Sets/VERB the/DET name/NOUN of/ADP this/DET user/NOUN ./PUNCT",
    "Compute/VERB the/DET total/ADJ price/NOUN and/CONJ apply/VERB the/DET discount/NOUN ./PUNCT",
    "Removes/VERB all/DET expired/VERB entries/NOUN from/ADP the/DET map/NOUN ./PUNCT",
    "Creates/VERB a/DET copy/NOUN of/ADP the/DET current/ADJ state/NOUN ./PUNCT",
    "Throws/VERB an/DET exception/NOUN when/ADV the/DET input/NOUN is/VERB null/ADJ ./PUNCT",
    "Parses/VERB the/DET date/NOUN and/CONJ stores/VERB it/PRON in/ADP the/DET field/NOUN ./PUNCT",
    "Skip/VERB the/DET first/ADJ line/NOUN because/ADP it/PRON is/VERB a/DET header/NOUN ./PUNCT",
    "Returns/VERB true/ADJ if/CONJ the/DET account/NOUN is/VERB active/ADJ ./PUNCT",
    "The/DET index/NOUN must/VERB be/VERB positive/ADJ ./PUNCT",
    "Close/VERB the/DET stream/NOUN quietly/ADV ./PUNCT",
    "Writes/VERB the/DET report/NOUN to/ADP the/DET given/VERB output/NOUN ./PUNCT",
    "Finds/VERB the/DET largest/ADJ element/NOUN in/ADP the/DET array/NOUN ./PUNCT",
    "Gets/VERB the/DET value/NOUN for/ADP the/DET key/NOUN or/CONJ null/ADJ ./PUNCT",
    "They/PRON should/VERB call/VERB this/DET method/NOUN only/ADV once/ADV ./PUNCT",
    "Build/VERB a/DET simple/ADJ request/NOUN with/ADP default/ADJ headers/NOUN ./PUNCT",
    "Validates/VERB the/DET password/NOUN and/CONJ updates/VERB the/DET login/NOUN time/NOUN ./PUNCT",
    "Converts/VERB the/DET amount/NOUN into/ADP cents/NOUN ./PUNCT",
    "Returns/VERB the/DET number/NOUN of/ADP open/ADJ connections/NOUN ./PUNCT",
    "Wait/VERB until/ADP the/DET worker/NOUN has/VERB finished/VERB ./PUNCT",
    "Store/VERB the/DET previous/ADJ value/NOUN so/ADV we/PRON can/VERB restore/VERB it/PRON ./PUNCT",
};

TEST(PosTagger, HandLabelledSampleAccuracy) {
  int total = 0;
  int correct = 0;
  std::ostringstream misses;
  for (const char* line : kLabelled) {
    std::vector<std::string> words;
    std::vector<PosTag> gold;
    for (const std::string& pair : Words(line)) {
      std::size_t slash = pair.rfind('/');
      words.push_back(pair.substr(0, slash));
      auto tag = ParsePosTag(pair.substr(slash + 1));
      ASSERT_TRUE(tag) << pair;
      gold.push_back(*tag);
    }
    std::vector<PosTag> got = TagPartsOfSpeech(words);
    ASSERT_EQ(got.size(), words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      ++total;
      if (got[i] == gold[i]) {
        ++correct;
      } else {
        misses << words[i] << ":" << ToString(got[i]) << "!=" << ToString(gold[i]) << " ";
      }
    }
  }
  ASSERT_GE(total, 200);
  double accuracy = static_cast<double>(correct) / total;
  EXPECT_GE(accuracy, 0.85) << misses.str();
}

}  // namespace
}  // namespace ccomp
