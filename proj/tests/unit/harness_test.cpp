#include <gtest/gtest.h>

#include <set>

#include "qnring/harness.hpp"

namespace qnring {
namespace {

Corpus small_corpus() {
  CorpusParams p;
  p.max_order = 64;
  p.families = {"zmod", "field", "matrix", "triangular"};
  return generate_corpus(p);
}

TEST(Corpus, GenerationIsDeterministic) {
  CorpusParams p;
  p.max_order = 64;
  const auto a = write_corpus(generate_corpus(p));
  const auto b = write_corpus(generate_corpus(p));
  EXPECT_EQ(a, b);
  p.seed = 7;
  EXPECT_EQ(write_corpus(generate_corpus(p)), write_corpus(generate_corpus(p)));
}

TEST(Corpus, ZmodFamily) {
  CorpusParams p;
  p.max_order = 20;
  p.families = {"zmod"};
  const auto c = generate_corpus(p);
  ASSERT_EQ(c.entries.size(), 19u);
  EXPECT_EQ(c.entries.front().text, "Z(2)");
  EXPECT_EQ(c.entries.back().text, "Z(20)");
}

TEST(Corpus, RespectsMaxOrderAndFamilies) {
  const auto c = small_corpus();
  std::set<std::string> texts;
  for (const auto& e : c.entries) {
    EXPECT_LE(e.ring().order(), 64u) << e.text;
    EXPECT_GT(e.ring().order(), 1u) << e.text;
    EXPECT_TRUE(texts.insert(e.text).second) << "duplicate " << e.text;
  }
  CorpusParams bad;
  bad.families = {"nope"};
  EXPECT_THROW(generate_corpus(bad), InvalidArgument);
}

TEST(Corpus, WriteReadRoundTrip) {
  const auto c = small_corpus();
  const auto text = write_corpus(c);
  EXPECT_EQ(text.rfind("# seed=20240601\n", 0), 0u);
  const auto back = read_corpus(text);
  EXPECT_EQ(back.seed, c.seed);
  ASSERT_EQ(back.entries.size(), c.entries.size());
  for (std::size_t i = 0; i < c.entries.size(); ++i)
    EXPECT_EQ(back.entries[i].text, c.entries[i].text);
  EXPECT_EQ(write_corpus(back), text);
}

TEST(Corpus, MalformedLineReportsLineNumber) {
  try {
    read_corpus("# seed=1\nZ(2)\n\nM(2, Z(2)\n");
    FAIL();
  } catch (const CorpusError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  EXPECT_THROW(read_corpus("Z(100000)\n"), CorpusError);
}

TEST(Checks, CatalogIsComplete) {
  const auto& cat = check_catalog();
  EXPECT_EQ(cat.size(), 28u);
  EXPECT_TRUE(is_known_check("C-2.20"));
  EXPECT_TRUE(is_known_check("C-DEF"));
  EXPECT_FALSE(is_known_check("C-9.9"));
  EXPECT_THROW(run_check("C-9.9", small_corpus()), InvalidArgument);
}

TEST(Checks, ZmodLaw) {
  CorpusParams p;
  p.max_order = 36;
  p.families = {"zmod"};
  const auto r = run_check("C-2.20", generate_corpus(p));
  EXPECT_EQ(r.status, CheckStatus::kPass);
  EXPECT_EQ(r.rings_tested, 35u);
}

TEST(Checks, MatrixObstructionRecordsWitness) {
  const auto c = read_corpus("M(2, Z(2))\n");
  const auto r = run_check("C-2.7", c);
  EXPECT_EQ(r.status, CheckStatus::kPass);
  EXPECT_EQ(r.rings_tested, 1u);
  ASSERT_FALSE(r.evidence.empty());
  // {u, u^2 - 1}; for [[1,1],[1,0]] both are the same matrix.
  EXPECT_EQ(r.evidence.front().witness, (std::vector<Elem>{7, 7}));
}

TEST(Checks, SkippedWhenHypothesisAbsent) {
  const auto c = read_corpus("Z(2)\n");
  const auto r = run_check("C-2.7", c);
  EXPECT_EQ(r.status, CheckStatus::kSkipped);
  EXPECT_FALSE(r.skip_reason.empty());
}

TEST(Checks, RunAllOnSmallCorpusPasses) {
  const auto results = run_all(small_corpus());
  EXPECT_EQ(results.size(), check_catalog().size());
  for (const auto& r : results) EXPECT_NE(r.status, CheckStatus::kFail) << r.id;
  const auto some = run_all(small_corpus(), {"C-3.7", "C-2.20"});
  ASSERT_EQ(some.size(), 2u);
  EXPECT_EQ(some[0].id, "C-2.20");  // catalog order
}

TEST(Checks, SmoothPredicate) {
  EXPECT_TRUE(is_2_3_smooth(2));
  EXPECT_TRUE(is_2_3_smooth(72));
  EXPECT_FALSE(is_2_3_smooth(1));
  EXPECT_FALSE(is_2_3_smooth(10));
}

}  // namespace
}  // namespace qnring
