#include <gtest/gtest.h>

#include "test_util.hpp"
#include "toroidal/fuzz.hpp"
#include "toroidal/semigroup.hpp"

namespace toroidal {
namespace {

using testing::lv;
using testing::lvs;
using testing::poly;
using testing::pos;
using testing::single_point_divisor;
using testing::sl2_divisor;

MonomialSemigroup segment_e1() { return MonomialSemigroup(poly(2, {{"0", "0"}, {"1", "0"}})); }

TEST(MonomialSemigroup, Membership) {
    auto s = segment_e1();
    EXPECT_TRUE(semigroup_member(s, lv({0, 1, 0})));    // t1
    EXPECT_FALSE(semigroup_member(s, lv({0, -1, 0})));  // t1^-1 alone
    EXPECT_TRUE(semigroup_member(s, lv({1, -1, 0})));   // s t1^-1
    EXPECT_TRUE(semigroup_member(s, lv({0, 0, -1})));   // t2^-1
    EXPECT_THROW((void)semigroup_member(s, lv({0, 1})), StructuralError);
}

TEST(MonomialSemigroup, TailConditionIsSeparate) {
    MonomialSemigroup s(poly(1, {{"0"}}, {{1}}));
    EXPECT_FALSE(semigroup_member(s, lv({5, -1})));
    EXPECT_TRUE(semigroup_member(s, lv({0, 1})));
}

TEST(HilbertBasis, Sl2PointZero) {
    auto h = hilbert_basis(segment_e1(), 3);
    EXPECT_TRUE(h.complete) << h.diagnostic;
    EXPECT_EQ(h.elements, lvs({{0, 0, -1}, {0, 0, 1}, {0, 1, 0}, {1, -1, 0}}));
    // s = t1 * (s t1^-1) is reducible.
    EXPECT_EQ(std::count(h.elements.begin(), h.elements.end(), lv({1, 0, 0})), 0);
}

TEST(HilbertBasis, FreeMonoid) {
    auto h = hilbert_basis(MonomialSemigroup(poly(1, {{"0"}}, {{1}})), 3);
    EXPECT_TRUE(h.complete);
    EXPECT_EQ(h.elements, lvs({{0, 1}, {1, 0}}));
}

TEST(HilbertBasis, HalfPlaneWithUnits) {
    // Delta = {1} in rank 1, zero tail: {(k,u) : k + u >= 0}. Units are +-(1,-1).
    auto h = hilbert_basis(MonomialSemigroup(poly(1, {{"1"}})), 3);
    EXPECT_TRUE(h.complete);
    EXPECT_EQ(h.elements, lvs({{-1, 1}, {0, 1}, {1, -1}}));
}

TEST(HilbertBasis, PointedWithHalfIntegralVertex) {
    // Delta = conv{0, 1/2} in rank 1: {k >= 0, 2k + u >= 0}, a unimodular cone.
    auto h = hilbert_basis(MonomialSemigroup(poly(1, {{"0"}, {"1/2"}})), 3);
    EXPECT_TRUE(h.complete) << h.diagnostic;
    EXPECT_EQ(h.elements, lvs({{0, 1}, {1, -2}}));
}

TEST(HilbertBasis, BoxZeroIsIncomplete) {
    auto h = hilbert_basis(segment_e1(), 0);
    EXPECT_FALSE(h.complete);
    EXPECT_TRUE(h.witness.has_value());
    EXPECT_TRUE(h.elements.empty());
}

TEST(GradedPieceExponent, Examples) {
    auto d = sl2_divisor();
    EXPECT_EQ(graded_piece_exponent(d, "0", lv({-1, 0})), 1);
    EXPECT_EQ(graded_piece_exponent(d, "0", lv({1, 0})), 0);
    EXPECT_EQ(graded_piece_exponent(single_point_divisor(poly(2, {{"1/2", "0"}})), "P", lv({-1, 0})), 1);
    auto tailed = single_point_divisor(poly(2, {{"0", "0"}}, {{1, 0}}));
    EXPECT_THROW((void)graded_piece_exponent(tailed, "P", lv({-1, 0})), DomainError);
}

TEST(SemigroupSample, Sl2Cones) {
    EXPECT_EQ(cone_from_semigroup_sample(segment_e1(), 3).generators(), lvs({{1, 0, 0}, {1, 1, 0}}));
    auto s1 = MonomialSemigroup(poly(2, {{"0", "0"}, {"0", "1"}}));
    EXPECT_EQ(cone_from_semigroup_sample(s1, 3).generators(), lvs({{1, 0, 0}, {1, 0, 1}}));
}

TEST(SemigroupSample, ProductSemigroup) {
    auto s = MonomialSemigroup(poly(1, {{"0"}}, {{1}}));
    EXPECT_EQ(cone_from_semigroup_sample(s, 2).generators(), lvs({{0, 1}, {1, 0}}));
}

TEST(SemigroupSample, StabilizationAndCap) {
    auto s = MonomialSemigroup(poly(2, {{"1/2", "0"}}));
    auto st = stabilized_semigroup_cone(s);
    ASSERT_TRUE(st.cone);
    EXPECT_EQ(st.cone->generators(), lvs({{2, 1, 0}}));
    EXPECT_FALSE(stabilized_semigroup_cone(s, 1).cone);
}

TEST(HermiteBasis, CanonicalRows) {
    auto rows = detail::hermite_basis(lvs({{2, 0, 1}, {0, 2, 1}, {1, 1, 1}}), 3);
    EXPECT_EQ(rows, lvs({{1, 1, 1}, {0, 2, 1}}));
}

TailedPolyhedron random_coefficient(fuzz::Rng& rng) {
    auto rank = static_cast<std::size_t>(fuzz::uniform(rng, 1, 2));
    Cone tail = fuzz::uniform(rng, 0, 2) == 0 ? Cone::zero(rank) : fuzz::pointed_cone(rng, rank, 2, rank);
    return fuzz::polyhedron(rng, tail, 3, 2, 2);
}

TEST(SemigroupProperties, SampledConeIsTheHomogenization) {
    fuzz::Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        auto p = random_coefficient(rng);
        auto st = stabilized_semigroup_cone(MonomialSemigroup(p));
        ASSERT_TRUE(st.cone);
        EXPECT_TRUE(cone_equal(*st.cone, homogenize(p)));
    }
}

TEST(SemigroupProperties, FloorAndStrictRulesAgree) {
    fuzz::Rng rng(32);
    for (int i = 0; i < 40; ++i) {
        auto p = random_coefficient(rng);
        MonomialSemigroup s(p);
        for_each_box_point(s.rank(), 2, [&](const LatticeVector& v) {
            LatticeVector u(v.begin() + 1, v.end());
            bool in_tail_dual = p.tail_cone().dual().contains(u);
            bool ceil_rule = in_tail_dual && v[0] >= ceil(-support_min(u, p).value());
            EXPECT_EQ(s.contains(v), ceil_rule);
        });
    }
}

TEST(SemigroupProperties, HilbertBasisSoundAndComplete) {
    fuzz::Rng rng(33);
    for (int i = 0; i < 25; ++i) {
        auto p = random_coefficient(rng);
        MonomialSemigroup s(p);
        auto h = hilbert_basis(s, 3);
        for (const auto& e : h.elements) EXPECT_TRUE(s.contains(e));
        if (!h.complete) continue;  // box too small for this coefficient; flagged, not silent
        // No non-unit element splits into two non-units from the box.
        auto sample = s.sample(3);
        for (const auto& e : h.elements) {
            if (s.contains(negate(e))) continue;
            for (const auto& y : sample) {
                if (s.contains(negate(y))) continue;
                auto z = subtract(e, y);
                if (is_zero(z) || s.contains(negate(z))) continue;
                EXPECT_FALSE(s.contains(z)) << testing::show(e) << " = " << testing::show(y) << " + "
                                            << testing::show(z);
            }
        }
    }
}

}  // namespace
}  // namespace toroidal
