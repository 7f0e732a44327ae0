#include <gtest/gtest.h>

#include <random>

#include "qnring/classify.hpp"
#include "qnring/constructions.hpp"
#include "qnring/harness.hpp"

namespace qnring {
namespace {

const Corpus& corpus() {
  static const Corpus c = [] {
    CorpusParams p;
    p.max_order = 128;
    return generate_corpus(p);
  }();
  return c;
}

class CorpusProperty : public ::testing::Test {
 protected:
  template <class F>
  void each(F&& f) {
    for (const auto& e : corpus().entries) {
      SCOPED_TRACE(e.text);
      f(e.ring());
    }
  }
};

TEST_F(CorpusProperty, RingAxioms) {
  each([](const FiniteRing& r) {
    const auto v = validate(r);
    EXPECT_TRUE(v.ok()) << v.message;
  });
}

TEST_F(CorpusProperty, RadicalsInsideQuasiNilpotents) {
  each([](const FiniteRing& r) {
    const auto& qn = r.quasi_nilpotents();
    EXPECT_TRUE(r.nilpotents().is_subset_of(qn));
    EXPECT_TRUE(r.jacobson_radical().members().is_subset_of(qn));
    EXPECT_FALSE(r.units().intersects(qn));
  });
}

TEST_F(CorpusProperty, OnePlusJacobsonIsUnits) {
  each([](const FiniteRing& r) {
    r.jacobson_radical().members().for_each(
        [&](Elem j) { EXPECT_TRUE(r.is_unit(r.add(r.one(), j))) << j; });
  });
}

TEST_F(CorpusProperty, CentralQuasiNilpotentsAreRadical) {
  each([](const FiniteRing& r) {
    const auto central_qn = r.quasi_nilpotents() & r.center();
    EXPECT_TRUE(central_qn.is_subset_of(r.jacobson_radical().members()));
  });
}

TEST_F(CorpusProperty, QuasiNilpotentsClosedUnderNegation) {
  each([](const FiniteRing& r) {
    r.quasi_nilpotents().for_each(
        [&](Elem q) { EXPECT_TRUE(r.quasi_nilpotents().contains(r.neg(q))) << q; });
  });
}

TEST_F(CorpusProperty, JacobsonIsNilpotentIdealAndQuotientIsSemiprimitive) {
  each([](const FiniteRing& r) {
    const auto& j = r.jacobson_radical().members();
    EXPECT_TRUE(is_ideal(r, j));
    EXPECT_GE(nilpotency_index(r, j), 1u);
    EXPECT_TRUE(j.is_subset_of(r.nilpotents()));
    EXPECT_EQ(r.radical_quotient().ring.jacobson_radical().size(), 1u);
  });
}

TEST_F(CorpusProperty, ClassificationIsConsistent) {
  for (const auto& e : corpus().entries) {
    SCOPED_TRACE(e.text);
    const auto& rep = e.report();
    EXPECT_FALSE(lattice_violation(rep).has_value());
    for (Flag f : all_flags())
      EXPECT_EQ(rep.flag(f), rep.witnesses.count(f) == 0) << flag_name(f);
    EXPECT_EQ(unit_property(e.ring(), UnitProperty::k2UQ).holds,
              two_uq_strong_form(e.ring()).holds);
  }
}

TEST_F(CorpusProperty, CornerQuasiNilpotentInclusion) {
  std::size_t corners = 0;
  for (const auto& e : corpus().entries) {
    if (e.ring().order() > 64) continue;
    const auto& r = e.ring();
    r.idempotents().for_each([&](Elem idem) {
      const auto c = corner_ring(r, idem);
      for (Elem x = 0; x < c.ring.order(); ++x)
        if (r.quasi_nilpotents().contains(c.embedding[x]))
          EXPECT_TRUE(c.ring.quasi_nilpotents().contains(x)) << e.text << " e=" << idem;
      ++corners;
    });
  }
  EXPECT_GT(corners, 100u);
}

TEST(ProductProperty, QuasiNilpotentsFactor) {
  std::mt19937_64 rng(1234);
  const auto& entries = corpus().entries;
  for (int i = 0; i < 20; ++i) {
    const auto& a = entries[rng() % entries.size()].ring();
    const auto& b = entries[rng() % entries.size()].ring();
    if (a.order() * b.order() > 1024) continue;
    const auto p = direct_product(a, b);
    for (Elem x = 0; x < p.order(); ++x) {
      const Elem xa = static_cast<Elem>(x % a.order());
      const Elem xb = static_cast<Elem>(x / a.order());
      ASSERT_EQ(p.quasi_nilpotents().contains(x),
                a.quasi_nilpotents().contains(xa) && b.quasi_nilpotents().contains(xb))
          << a.label() << " x " << b.label();
    }
  }
}

std::vector<FiniteRing> bases() {
  return {zmod(2), zmod(3), zmod(4), zmod(6), finite_field(2, 2)};
}

TEST(ConstructionProperty, EveryBuilderSatisfiesAxioms) {
  for (const auto& base : bases()) {
    SCOPED_TRACE(base.label());
    std::vector<FiniteRing> rings;
    rings.push_back(matrix_ring(2, base));
    rings.push_back(upper_triangular(2, base));
    rings.push_back(trivial_extension(base));
    rings.push_back(truncated_poly(base, 3));
    rings.push_back(direct_product(base, zmod(5)));
    rings.push_back(group_ring(base, cyclic_group(3)).ring);
    if (base.order() <= 4) rings.push_back(group_ring(base, builtin_group("S3")).ring);
    auto ptr = std::make_shared<const FiniteRing>(base);
    rings.push_back(morita_ring(scalar_context(ptr, base.one())).ring);
    rings.push_back(morita_ring(scalar_context(ptr, base.zero())).ring);
    for (const auto& r : rings) {
      const auto v = validate(r);
      EXPECT_TRUE(v.ok()) << r.label() << ": " << v.message;
    }
  }
}

TEST(ConstructionProperty, TrivialExtensionUnits) {
  for (const auto& base : bases()) {
    const auto t = trivial_extension(base);
    for (Elem x = 0; x < t.order(); ++x)
      EXPECT_EQ(t.is_unit(x), base.is_unit(static_cast<Elem>(x % base.order())));
  }
}

TEST(ConstructionProperty, AugmentationIdealInRadicalForPGroups) {
  const std::vector<std::pair<std::size_t, FiniteGroup>> cases = {
      {2, cyclic_group(2)}, {2, cyclic_group(4)}, {2, builtin_group("Klein")},
      {3, cyclic_group(3)}, {4, cyclic_group(2)}};
  for (const auto& [m, g] : cases) {
    const auto gr = group_ring(zmod(m), g);
    EXPECT_TRUE(
        gr.augmentation_ideal.members().is_subset_of(gr.ring.jacobson_radical().members()))
        << m << " " << g.label();
    EXPECT_EQ(gr.augmentation_ideal.size() * m, gr.ring.order());
  }
}

}  // namespace
}  // namespace qnring
