#include "hallkit/hall/hall.hpp"

#include <gtest/gtest.h>

using namespace hallkit;

TEST(Hall, ConstantExamples)
{
    auto v = hall_constants(ProtoAbelianInstance::vect(2, 2));
    auto line = v.instance.parse_class("1"), plane = v.instance.parse_class("2");
    EXPECT_EQ(v.constant(line, line, plane), 3);

    auto ab = hall_constants(ProtoAbelianInstance::ab_p_groups(2, 2));
    auto z2 = ab.instance.parse_class("1");
    EXPECT_EQ(ab.constant(z2, z2, ab.instance.parse_class("2")), 1);
    EXPECT_EQ(ab.constant(z2, z2, ab.instance.parse_class("1,1")), 3);

    for (const auto& g : {make_trivial(), make_cyclic(2), make_cyclic(3)}) {
        auto f = hall_constants(ProtoAbelianInstance::f1_free(g, 4));
        for (int n = 0; n <= 4; ++n)
            for (int m = 0; n + m <= 4; ++m)
                EXPECT_EQ(f.constant(f.basis[n], f.basis[m], f.basis[n + m]), Rat(binomial(n + m, n)));
    }
}

TEST(Hall, ProductExamples)
{
    auto f = hall_constants(ProtoAbelianInstance::f1_free(make_trivial(), 3));
    auto d1 = delta(f.basis[1]);
    EXPECT_EQ(hall_product(f, d1, d1), (HallVec{{f.basis[2], Rat(2)}}));
    HallVec mix{{f.basis[1], Rat(1, 2)}, {f.basis[2], Rat(-3)}};
    EXPECT_EQ(hall_product(f, delta(f.basis[0]), mix), mix);

    auto v = hall_constants(ProtoAbelianInstance::vect(2, 2));
    EXPECT_EQ(hall_product(v, delta(v.basis[1]), delta(v.basis[1])), (HallVec{{v.basis[2], Rat(3)}}));
    EXPECT_THROW(hall_product(v, delta(v.basis[2]), delta(v.basis[1])), std::invalid_argument);
}

TEST(Hall, UnitGradingAndAssociativity)
{
    for (auto inst : {ProtoAbelianInstance::vect(2, 3), ProtoAbelianInstance::vect(3, 2),
                      ProtoAbelianInstance::ab_p_groups(2, 4), ProtoAbelianInstance::ab_p_groups(3, 2),
                      ProtoAbelianInstance::f1_free(make_cyclic(2), 4)}) {
        auto t = hall_constants(inst);
        EXPECT_TRUE(check_unit(t).pass) << inst.name();
        EXPECT_TRUE(check_grading(t).pass) << inst.name();
        EXPECT_TRUE(check_associativity(t).pass) << inst.name();
    }
}

TEST(Hall, CorruptedTableFailsWithTriple)
{
    auto t = hall_constants(ProtoAbelianInstance::ab_p_groups(2, 3));
    auto z2 = t.instance.parse_class("1");
    t.constants[{z2, t.instance.parse_class("2"), t.instance.parse_class("2,1")}] += 1;
    auto v = check_associativity(t);
    EXPECT_FALSE(v.pass);
    ASSERT_FALSE(v.witnesses.empty());
    EXPECT_NE(v.witnesses[0].find("[(1)]"), std::string::npos);
}

TEST(Hall, PolynomialInQAtFixedLabels)
{
    for (int q : {2, 3}) {
        auto t = hall_constants(ProtoAbelianInstance::vect(q, 2));
        EXPECT_EQ(t.constant(t.basis[1], t.basis[1], t.basis[2]), Rat(q + 1));
    }
}

TEST(Hall, DividedPowers)
{
    EXPECT_TRUE(divided_powers_iso_check({make_trivial()}, 6).pass);
    EXPECT_TRUE(divided_powers_iso_check({make_trivial(), make_cyclic(2)}, 4).pass);
    auto t = hall_constants(ProtoAbelianInstance::f1_free(make_trivial(), 3));
    for (const auto& c : t.basis)
        EXPECT_EQ(hall_product(t, delta(t.basis[0]), delta(c)), delta(c));
}
