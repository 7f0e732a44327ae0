#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "qnring/classify.hpp"
#include "qnring/dsl.hpp"

namespace qnring {
namespace {

std::vector<std::string> names(const BuiltRing& b, const ElementSet& s) {
  std::vector<std::string> out;
  for (Elem e : s.members()) out.push_back(element_name(b, e));
  return out;
}

TEST(Parse, CanonicalPrinting) {
  EXPECT_EQ(to_string(parse_spec("M(2,Z(2))")), "M(2, Z(2))");
  EXPECT_EQ(to_string(parse_spec("  Quot( Z(12) , [ 6 ,4 ] )")), "Quot(Z(12), [6, 4])");
  EXPECT_EQ(to_string(parse_spec("GroupRing(Z(2),GProd(C(2),Klein()))")),
            "GroupRing(Z(2), GProd(C(2), Klein))");
  EXPECT_EQ(to_string(parse_group_spec("S3()")), "S3");
}

TEST(Parse, RoundTrip) {
  for (const char* text :
       {"Z(7)", "GF(3, 2)", "Prod(Z(2), Z(3), GF(2, 2))", "M(2, Z(4))", "T(3, Z(2))",
        "TrivExt(Z(5))", "PolyMod(GF(2, 2), 3)", "GroupRing(Z(3), S3)",
        "GroupRing(Z(2), GProd(C(2), C(4)))", "Quot(M(2, Z(2)), [1])",
        "Corner(Prod(Z(2), Z(3)), 1)", "Quot(Corner(Z(12), 4), [2])"}) {
    const auto spec = parse_spec(text);
    EXPECT_EQ(to_string(spec), text);
    EXPECT_EQ(parse_spec(to_string(spec)), spec);
  }
}

TEST(Parse, SyntaxErrorPositions) {
  try {
    parse_spec("M(2, Z(2)");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 10u);
  }
  try {
    parse_spec("Prod(Z(2),\n  Foo(3))");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(parse_spec(""), SyntaxError);
  EXPECT_THROW(parse_spec("Z(2) Z(3)"), SyntaxError);
  EXPECT_THROW(parse_spec("Z(-1)"), SyntaxError);
  EXPECT_THROW(parse_spec("Quot(Z(4), 2)"), SyntaxError);
}

TEST(Elaborate, SemanticErrors) {
  EXPECT_THROW(build_from_text("Z(0)"), SemanticError);
  EXPECT_THROW(build_from_text("GF(4, 1)"), SemanticError);
  EXPECT_THROW(build_from_text("M(0, Z(2))"), SemanticError);
  EXPECT_THROW(build_from_text("M(65, Z(2))"), SemanticError);
  EXPECT_THROW(build_from_text("Corner(Z(6), 2)"), SemanticError);
  EXPECT_THROW(build_from_text("Quot(Z(6), [9])"), SemanticError);
  EXPECT_THROW(build_from_text("GroupRing(Z(2), C(0))"), SemanticError);
  EXPECT_THROW(build_from_text("GroupRing(Z(2), A5)"), SyntaxError);
}

TEST(Elaborate, CapViolations) {
  EXPECT_THROW(build_from_text("Z(100000)"), CapExceeded);
  EXPECT_THROW(build_from_text("M(3, Z(4))"), CapExceeded);
  EXPECT_THROW(build_from_text("M(2, Z(4))", {100, true}), CapExceeded);
  EXPECT_EQ(build_from_text("M(2, Z(4))", {256, true}).ring->order(), 256u);
}

TEST(Elaborate, LabelsAreCanonicalText) {
  const auto b = build_from_text("Prod(Z(2),Z(3))");
  EXPECT_EQ(b.ring->label(), "Prod(Z(2), Z(3))");
  EXPECT_EQ(b.children.size(), 2u);
}

TEST(Elaborate, QuotientAndCorner) {
  const auto q = build_from_text("Quot(Z(12), [6])");
  EXPECT_EQ(q.ring->order(), 6u);
  const auto c = build_from_text("Corner(Z(6), 3)");
  EXPECT_EQ(c.ring->order(), 2u);
  EXPECT_EQ(c.parent_index, (std::vector<Elem>{0, 3}));
}

TEST(ElementNames, Renderings) {
  const auto gf = build_from_text("GF(2, 2)");
  EXPECT_EQ(names(gf, gf.ring->units()), (std::vector<std::string>{"1", "x", "x+1"}));
  const auto p = build_from_text("Prod(Z(2), Z(3))");
  EXPECT_EQ(names(p, p.ring->units()), (std::vector<std::string>{"(1, 1)", "(1, 2)"}));
  const auto m = build_from_text("M(2, Z(2))");
  EXPECT_EQ(element_name(m, 7), "[[1, 1], [1, 0]]");
  const auto pm = build_from_text("PolyMod(Z(3), 2)");
  EXPECT_EQ(element_name(pm, 7), "1 + 2*x");
  const auto g = build_from_text("GroupRing(Z(2), C(2))");
  EXPECT_EQ(names(g, g.ring->units()), (std::vector<std::string>{"e", "g"}));
  const auto q = build_from_text("Quot(Z(12), [6])");
  EXPECT_EQ(element_name(q, 5), "5 + I");
  const auto c = build_from_text("Corner(Z(6), 3)");
  EXPECT_EQ(element_name(c, 1), "3");
  const auto t = build_from_text("TrivExt(Z(2))");
  EXPECT_EQ(element_name(t, 3), "(1, 1)");
}

TEST(Elaborate, BuiltRingsClassify) {
  const auto b = build_from_text("T(2, Z(3))");
  EXPECT_EQ(b.ring->units().count(), 12u);
  EXPECT_TRUE(classify(*b.ring).flag(Flag::k2UQ));
}

}  // namespace
}  // namespace qnring
