#include "ccomp/dataset.h"

#include <gtest/gtest.h>

#include <set>

#include "ccomp/errors.h"
#include "ccomp/preprocess.h"
#include "ccomp/rng.h"
#include "test_support.h"

namespace ccomp {
namespace {

using testing::Words;

TokenList Toks(const std::string& text) { return Tokenize(text); }

MethodInstance Method(std::string code, std::optional<std::string> javadoc = std::nullopt) {
  MethodInstance m;
  m.id = "M.java#L1";
  m.source = "M.java";
  m.method_code = std::move(code);
  m.javadoc = std::move(javadoc);
  m.inner_comments = ExtractInnerComments(m.method_code);
  return m;
}

TEST(LinkJavadoc, ContextSepCommentSep) {
  MethodInstance m = Method("int f() { return 0; }", "Returns zero _REF_.");
  std::optional<JavadocLink> link = LinkJavadocContext(m);
  ASSERT_TRUE(link);
  EXPECT_EQ(TokenTexts(link->Serialize()),
            Words("int f ( ) { return 0 ; } <sep> Returns zero _REF_ . <sep>"));
  EXPECT_EQ(link->comment[2].kind, TokenKind::kSentinel);
  EXPECT_FALSE(LinkJavadocContext(Method("void g() {}")));
}

TEST(LinkInner, BlankAboveStopsUpwardAndBraceStopsDownward) {
  MethodInstance m = Method(
      "void f() {\n"
      "  setup();\n"
      "\n"
      "  // process every item\n"
      "  for (Item i : items) {\n"
      "    handle(i);\n"
      "  }\n"
      "  done();\n"
      "}");
  EXPECT_EQ(TokenTexts(LinkInnerContext(m, m.inner_comments[0])),
            Words("for ( Item i : items ) { handle ( i ) ;"));
}

TEST(LinkInner, FirstBodyLineIncludesSignature) {
  MethodInstance m = Method("int g(int x) {\n  // double it\n  return 2 * x;\n}");
  EXPECT_EQ(TokenTexts(LinkInnerContext(m, m.inner_comments[0])),
            Words("int g ( int x ) { return 2 * x ;"));
}

TEST(LinkInner, SandwichedBetweenCommentsHasNoContext) {
  MethodInstance m = Method(
      "void f() {\n  a();\n  // first note\n  // second note\n  // third note\n  b();\n}");
  ASSERT_EQ(m.inner_comments.size(), 3u);
  EXPECT_TRUE(LinkInnerContext(m, m.inner_comments[1]).empty());
}

TEST(LinkInner, TrailingCommentKeepsItsCodeLine) {
  MethodInstance m = Method("void f() {\n  a();\n  b(); // call b\n  c();\n}");
  EXPECT_EQ(TokenTexts(LinkInnerContext(m, m.inner_comments[0])),
            Words("void f ( ) { a ( ) ; b ( ) ; c ( ) ;"));
}

std::vector<std::string> Joined(const std::vector<TokenList>& sentences) {
  std::vector<std::string> out;
  for (const TokenList& s : sentences) out.push_back(JoinTokens(s));
  return out;
}

TEST(SplitSentences, Rules) {
  EXPECT_EQ(Joined(SplitSentences(Toks("Returns the sum. Never null."))),
            (std::vector<std::string>{"Returns the sum .", "Never null ."}));
  EXPECT_EQ(SplitSentences(Toks("Computes e.g. the mean")).size(), 1u);
  EXPECT_EQ(SplitSentences(Toks("Uses lists, i.e. arrays etc. for storage")).size(), 1u);
  EXPECT_EQ(Joined(SplitSentences(Toks("Sorts input @param list the data"))),
            (std::vector<std::string>{"Sorts input", "@ param list the data"}));
  EXPECT_EQ(SplitSentences(Toks("Version 2.5 is used. Done")).size(), 2u);
  EXPECT_EQ(SplitSentences(Toks("Stop here. lower case continues")).size(), 1u);
  EXPECT_EQ(Joined(SplitSentences(Toks("Really?! Yes."))),
            (std::vector<std::string>{"Really ? !", "Yes ."}));
  EXPECT_TRUE(SplitSentences({}).empty());
}

TEST(MaskedVariants, CountsAndDistinctSplitPoints) {
  for (int n : {12, 6, 4, 2, 1}) {
    std::vector<std::string> words;
    for (int i = 0; i < n; ++i) words.push_back("w" + std::to_string(i));
    std::vector<TokenList> sentences = {Toks("Earlier one ."), FromTexts(words),
                                        Toks("Later sentence here .")};
    Rng rng(11);
    std::vector<CompletionTask> tasks = GenerateMaskedVariants(
        sentences, 1, Toks("ctx"), {"M#L1/jd", "M#L1", TaskKind::kJavadoc}, rng);
    ASSERT_EQ(tasks.size(), static_cast<std::size_t>(std::min(5, n - 1))) << n;
    std::set<std::size_t> points;
    for (const CompletionTask& t : tasks) {
      points.insert(t.prefix.size());
      std::vector<std::string> full = TokenTexts(t.prefix);
      for (const Token& tok : t.target) full.push_back(tok.text);
      EXPECT_EQ(full, words);
      EXPECT_EQ(TokenTexts(t.preceding), Words("Earlier one ."));
      EXPECT_EQ(t.sentence_index, 1);
      EXPECT_EQ(t.SentenceKey(), "M#L1/jd/s1");
    }
    EXPECT_EQ(points.size(), tasks.size());
    if (n == 4) {
      EXPECT_EQ(points, (std::set<std::size_t>{1, 2, 3}));
    }
  }
}

TEST(MaskCount, RoundHalfUpWithMinimumOne) {
  EXPECT_EQ(MaskCount(20, 0.15), 3);
  EXPECT_EQ(MaskCount(3, 0.15), 1);
  EXPECT_EQ(MaskCount(10, 0.15), 2);
  EXPECT_EQ(MaskCount(0, 0.15), 0);
}

TEST(Pretrain, MasksOnlyCommentTokensPerComment) {
  MethodInstance m = Method(
      "int f(int x) {\n  // one two three four five six seven eight nine ten\n  return x;\n}",
      "a b c d e f g h i j");
  Rng rng(5);
  PretrainInstance p = GeneratePretrainInstance(m, 0.15, rng);
  int masks = 0;
  for (const Token& t : p.input) {
    if (t.text.rfind("<mask_", 0) == 0) ++masks;
  }
  EXPECT_EQ(masks, 4);  // round(1.5) = 2 per comment
  EXPECT_EQ(p.target.size(), 8u);
  // Code tokens come first, untouched.
  EXPECT_EQ(TokenTexts(p.input).front(), "int");
  std::vector<std::string> in = TokenTexts(p.input);
  EXPECT_EQ(std::count(in.begin(), in.end(), "<sep>"), 3);
}

TEST(SplitCorpus, Proportions) {
  auto ids = [](int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back("o" + std::to_string(i));
    return out;
  };
  auto counts = SplitCorpus(ids(300), {}, 42).Counts();
  EXPECT_EQ(counts[SplitLabel::kPretrain], 200);
  EXPECT_EQ(counts[SplitLabel::kTrain] + counts[SplitLabel::kEval] + counts[SplitLabel::kTest],
            100);
  EXPECT_EQ(counts[SplitLabel::kTrain], 80);
  EXPECT_EQ(LargestRemainder(100, {0.8, 0.1, 0.1}), (std::vector<int>{80, 10, 10}));
  EXPECT_EQ(LargestRemainder(101, {0.8, 0.1, 0.1}), (std::vector<int>{81, 10, 10}));
  EXPECT_EQ(LargestRemainder(300, {2.0 / 3.0, 1.0 / 3.0}), (std::vector<int>{200, 100}));
}

TEST(SplitCorpus, SeededAndOrderIndependent) {
  std::vector<std::string> ids;
  for (int i = 0; i < 50; ++i) ids.push_back("id" + std::to_string(i));
  SplitAssignment a = SplitCorpus(ids, {}, 7);
  std::reverse(ids.begin(), ids.end());
  EXPECT_EQ(SplitCorpus(ids, {}, 7).labels, a.labels);
  EXPECT_NE(SplitCorpus(ids, {}, 8).labels, a.labels);
}

TEST(SplitRatios, Validation) {
  SplitRatios bad;
  bad.train = 0.9;
  EXPECT_THROW(bad.Validate(), UsageError);
  EXPECT_NO_THROW(SplitRatios{}.Validate());
}

class MiniCorpusDataset : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    corpus_ = new std::vector<MethodInstance>(
        RunPipeline(LoadCorpus(testing::MiniCorpusDir()).instances).corpus);
    dataset_ = new Dataset(BuildDataset(*corpus_, {}));
  }
  static void TearDownTestSuite() {
    delete corpus_;
    delete dataset_;
  }
  static std::vector<MethodInstance>* corpus_;
  static Dataset* dataset_;
};

std::vector<MethodInstance>* MiniCorpusDataset::corpus_ = nullptr;
Dataset* MiniCorpusDataset::dataset_ = nullptr;

TEST_F(MiniCorpusDataset, IndependentValidatorFindsNothing) {
  std::vector<std::string> problems = testing::ValidateDataset(*corpus_, *dataset_, 5);
  for (const std::string& p : problems) ADD_FAILURE() << p;
  EXPECT_GT(dataset_->train.size(), 100u);
  EXPECT_FALSE(dataset_->eval.empty());
  EXPECT_FALSE(dataset_->test.empty());
}

TEST_F(MiniCorpusDataset, ValidatorCatchesPlantedViolations) {
  Dataset broken = *dataset_;
  broken.test.push_back(broken.train.front());  // origin in two splits
  broken.train.front().target.push_back({"leak", TokenKind::kWord});
  EXPECT_GE(testing::ValidateDataset(*corpus_, broken, 5).size(), 2u);
}

TEST_F(MiniCorpusDataset, PretrainMaskCountsFollowTheRoundingRule) {
  for (const PretrainInstance& p : dataset_->pretrain) {
    std::vector<std::string> in = TokenTexts(p.input);
    auto sep = std::find(in.begin(), in.end(), "<sep>");
    ASSERT_NE(sep, in.end());
    for (auto it = in.begin(); it != sep; ++it) EXPECT_NE(it->rfind("<mask_", 0), 0u);
    // Each comment segment between separators masks MaskCount(|segment|).
    auto start = sep + 1;
    while (start < in.end()) {
      auto end = std::find(start, in.end(), "<sep>");
      int n = static_cast<int>(end - start);
      int masks = static_cast<int>(std::count_if(
          start, end, [](const std::string& t) { return t.rfind("<mask_", 0) == 0; }));
      EXPECT_EQ(masks, MaskCount(n, 0.15)) << p.origin;
      start = end + 1;
    }
  }
}

TEST_F(MiniCorpusDataset, DeterministicForSeed) {
  Dataset again = BuildDataset(*corpus_, {});
  EXPECT_EQ(SerializeTasks(again.train), SerializeTasks(dataset_->train));
  EXPECT_EQ(SerializeTasks(again.test), SerializeTasks(dataset_->test));
  DatasetConfig other;
  other.seed = 7;
  EXPECT_NE(SerializeTasks(BuildDataset(*corpus_, other).test), SerializeTasks(dataset_->test));
}

TEST_F(MiniCorpusDataset, FilesRoundTrip) {
  auto dir = testing::MakeTempDir("dataset-files");
  DatasetMetadata meta = WriteDataset(dir, *dataset_, {}, "c0ffee", "config");
  DatasetMetadata read = ReadDatasetMetadata(dir);
  EXPECT_EQ(read.dataset_fingerprint, meta.dataset_fingerprint);
  EXPECT_EQ(read.tasks["total"]["test"], static_cast<int>(dataset_->test.size()));
  EXPECT_EQ(ReadSplit(dir, "test"), dataset_->test);
  EXPECT_EQ(ReadSplit(dir, "train"), dataset_->train);
  EXPECT_EQ(ReadSplitAssignment(dir / "splits.jsonl").labels, dataset_->assignment.labels);
  EXPECT_THROW(ReadSplit(dir, "validation"), InputError);
}

}  // namespace
}  // namespace ccomp
