#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qnring/classify.hpp"
#include "qnring/constructions.hpp"

namespace qnring {
namespace {

TEST(UnitProperty, Z12IsTwoUq) {
  EXPECT_TRUE(unit_property(zmod(12), UnitProperty::k2UQ).holds);
  EXPECT_TRUE(two_uq_strong_form(zmod(12)).holds);
}

TEST(UnitProperty, Z5FailsWithWitnessTwo) {
  const auto r = unit_property(zmod(5), UnitProperty::k2UQ);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, 2);
}

TEST(UnitProperty, M2Z2WitnessIsSelfSquareMinusOne) {
  const auto m = matrix_ring(2, zmod(2));
  const auto r = unit_property(m, UnitProperty::k2UQ);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
  const Elem a = *r.witness;
  EXPECT_EQ(a, 7);  // [[1,1],[1,0]]
  EXPECT_EQ(m.sub(m.mul(a, a), m.one()), a);
  EXPECT_FALSE(m.quasi_nilpotents().contains(a));
}

TEST(UnitProperty, F3) {
  const auto f = zmod(3);
  const auto uu = unit_property(f, UnitProperty::kUU);
  EXPECT_FALSE(uu.holds);
  EXPECT_EQ(uu.witness, Elem{2});
  EXPECT_TRUE(unit_property(f, UnitProperty::k2UU).holds);
}

TEST(UnitProperty, F4FailsBothForms) {
  const auto f = finite_field(2, 2);
  EXPECT_FALSE(unit_property(f, UnitProperty::k2UQ).holds);
  EXPECT_FALSE(two_uq_strong_form(f).holds);
}

TEST(UnitProperty, AgreesWithOracleOnSmallRings) {
  for (std::size_t m = 2; m <= 60; ++m)
    EXPECT_EQ(unit_property(zmod(m), UnitProperty::k2UQ).holds,
              oracle::is_2uq(oracle::zmod(m)))
        << m;
  for (std::size_t n : {2, 3})
    EXPECT_EQ(unit_property(matrix_ring(2, zmod(n)), UnitProperty::k2UQ).holds,
              oracle::is_2uq(oracle::mat2(n)));
}

TEST(UnitProperty, WitnessIsSmallestFailure) {
  const auto r = zmod(35);
  const auto res = unit_property(r, UnitProperty::k2UQ);
  ASSERT_TRUE(res.witness.has_value());
  for (Elem u = 0; u < *res.witness; ++u)
    if (r.is_unit(u))
      EXPECT_TRUE(r.quasi_nilpotents().contains(r.sub(r.mul(u, u), r.one()))) << u;
}

TEST(Predicates, Clean) {
  EXPECT_TRUE(is_clean(zmod(4)));
  EXPECT_TRUE(is_clean(zmod(2)));
  EXPECT_TRUE(is_clean(matrix_ring(2, zmod(2))));
  EXPECT_TRUE(is_exchange(zmod(12)));
  EXPECT_TRUE(is_semiregular(upper_triangular(2, zmod(3))));
}

TEST(Predicates, RegularFamily) {
  const auto f = regular_family(direct_product(zmod(2), zmod(3)));
  EXPECT_TRUE(f.regular && f.strongly_regular && f.unit_regular && f.pi_regular &&
              f.strongly_pi_regular);
  const auto z4 = regular_family(zmod(4));
  EXPECT_FALSE(z4.regular);
  EXPECT_TRUE(z4.pi_regular);
  EXPECT_EQ(find_non_regular(zmod(4)), Elem{2});
  const auto m = regular_family(matrix_ring(2, zmod(2)));
  EXPECT_TRUE(m.regular);
  EXPECT_FALSE(m.strongly_regular);
  EXPECT_TRUE(m.unit_regular);
}

TEST(Predicates, Tripotence) {
  EXPECT_TRUE(is_tripotent(zmod(6)));
  EXPECT_FALSE(is_tripotent(zmod(12)));
  EXPECT_TRUE(is_semitripotent(zmod(12)));
  EXPECT_FALSE(is_semitripotent(zmod(5)));
  EXPECT_TRUE(is_boolean(zmod(2)));
  EXPECT_FALSE(is_boolean(zmod(3)));
}

TEST(Predicates, ReducedAbelianTwoPrimal) {
  const auto t = upper_triangular(2, zmod(2));
  EXPECT_FALSE(is_reduced(t));
  EXPECT_FALSE(is_abelian(t));
  EXPECT_TRUE(is_2primal(t));
  EXPECT_TRUE(is_reduced(zmod(6)));
  EXPECT_TRUE(is_abelian(zmod(12)));
  EXPECT_FALSE(is_2primal(matrix_ring(2, zmod(2))));
}

TEST(Predicates, LocalSemisimpleDivision) {
  EXPECT_TRUE(is_local(zmod(4)));
  EXPECT_FALSE(is_local(zmod(6)));
  EXPECT_TRUE(is_semisimple(matrix_ring(2, zmod(2))));
  EXPECT_FALSE(is_semisimple(zmod(4)));
  EXPECT_TRUE(is_division_ring(finite_field(2, 3)));
  EXPECT_FALSE(is_division_ring(zmod(6)));
  EXPECT_FALSE(is_division_ring(zmod(1)));
}

TEST(Predicates, PotentAndLifting) {
  for (std::size_t m : {4, 6, 12, 36}) {
    EXPECT_TRUE(is_semipotent(zmod(m)));
    EXPECT_TRUE(idempotents_lift(zmod(m)));
    EXPECT_TRUE(is_potent(zmod(m)));
    EXPECT_FALSE(find_unliftable_idempotent(zmod(m)).has_value());
  }
  EXPECT_TRUE(is_dedekind_finite(matrix_ring(2, zmod(3))));
}

TEST(Classify, Z12Report) {
  const auto rep = classify(zmod(12));
  EXPECT_EQ(rep.order, 12u);
  EXPECT_EQ(rep.sizes.units, 4u);
  EXPECT_EQ(rep.sizes.jacobson, 2u);
  EXPECT_EQ(rep.sizes.quasi_nilpotents, 2u);
  EXPECT_TRUE(rep.flag(Flag::k2UQ));
  EXPECT_TRUE(rep.flag(Flag::k2UJ));
  EXPECT_TRUE(rep.flag(Flag::k2UU));
  EXPECT_TRUE(rep.flag(Flag::kClean));
  EXPECT_TRUE(rep.flag(Flag::kSemitripotent));
  EXPECT_FALSE(rep.flag(Flag::kTripotent));
  EXPECT_TRUE(rep.witnesses.count(Flag::kTripotent));
  EXPECT_FALSE(rep.witnesses.count(Flag::k2UQ));
  EXPECT_FALSE(lattice_violation(rep).has_value());
}

TEST(Classify, M2Z2Report) {
  const auto rep = classify(matrix_ring(2, zmod(2)));
  EXPECT_EQ(rep.sizes.units, 6u);
  EXPECT_EQ(rep.sizes.center, 2u);
  EXPECT_EQ(rep.sizes.jacobson, 1u);
  EXPECT_EQ(rep.sizes.quasi_nilpotents, 4u);
  EXPECT_FALSE(rep.flag(Flag::k2UQ));
  ASSERT_TRUE(rep.witnesses.count(Flag::k2UQ));
  EXPECT_EQ(rep.witnesses.at(Flag::k2UQ), (std::vector<Elem>{7}));
}

TEST(Classify, ZeroRingIsVacuouslyTrue) {
  const auto rep = classify(zmod(1));
  for (Flag f : all_flags())
EXPECT_TRUE(rep.flag(f)) << flag_name(f);
}

TEST(Classify, FlagNamesRoundTrip) {
  for (Flag f : all_flags()) EXPECT_EQ(flag_from_name(flag_name(f)), f);
  EXPECT_FALSE(flag_from_name("nope").has_value());
  EXPECT_EQ(flag_name(Flag::k2UQ), "2UQ");
}

TEST(Classify, LatticeViolationDetected) {
  auto rep = classify(zmod(6));
  rep.flags[static_cast<std::size_t>(Flag::kRegular)] = false;
  EXPECT_TRUE(lattice_violation(rep).has_value());
}

TEST(Fingerprint, DistinguishesAndMatches) {
  EXPECT_EQ(fingerprint(trivial_extension(zmod(2))), fingerprint(truncated_poly(zmod(2), 2)));
  EXPECT_NE(fingerprint(zmod(4)), fingerprint(direct_product(zmod(2), zmod(2))));
}

}  // namespace
}  // namespace qnring
