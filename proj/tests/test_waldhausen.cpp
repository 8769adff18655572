#include "hallkit/hall/span_route.hpp"
#include "hallkit/waldhausen/hecke.hpp"
#include "hallkit/waldhausen/mutations.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hallkit;

namespace {

GroupHom sub(const NamedGroup& g, const std::string& spec) { return make_subgroup(g.group, parse_subgroup(g, spec)); }

Verdict run(const Mutation& m)
{
    switch (m.check) {
    case MutationCheck::TwoSegal:
        return check_2segal_degree3(m.x);
    case MutationCheck::Pointed:
        return check_pointed(m.x);
    case MutationCheck::Simplicial:
        break;
    }
    return check_simplicial_identities(m.x);
}

} // namespace

TEST(ActionModel, MatchesActionGroupoidAndRoundTrips)
{
    auto s3 = make_symmetric(3);
    const auto& G = *s3.group;
    ActionModel::Block blk;
    blk.factors = {s3.group, s3.group};
    blk.num_points = G.order();
    blk.act = [&](const GroupElem& g, int x) { return G.mul(G.mul(g[0], x), G.inv(g[1])); };
    ActionModel m({blk});
    EXPECT_EQ(m.groupoid()->num_components(), 1);
    EXPECT_EQ(m.groupoid()->aut_of(0).order(), 6);
    for (int x = 0; x < 6; ++x)
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) {
                GroupElem g{a, b};
                Mor f = m.mor(x, g);
                EXPECT_EQ(f.tgt, G.mul(G.mul(a, x), G.inv(b)));
                EXPECT_EQ(m.element(f), g);
            }
    auto ag = action_groupoid(s3.group, 6, [&](int g, int x) { return G.mul(x, G.inv(g)); });
    ActionModel::Block right{{s3.group}, 6, [&](const GroupElem& g, int x) { return G.mul(x, G.inv(g[0])); }};
    ActionModel rm({right});
    EXPECT_EQ(rm.groupoid()->num_components(), ag->num_components());
    EXPECT_EQ(rm.groupoid()->cardinality(), ag->cardinality());
}

TEST(ActionModel, RejectsNonActions)
{
    auto s3 = make_symmetric(3);
    const auto& G = *s3.group;
    ActionModel::Block blk{{s3.group}, 6, [&](const GroupElem& g, int x) { return G.mul(x, g[0]); }};
    EXPECT_THROW(ActionModel({blk}), std::logic_error);
}

TEST(HeckeWaldhausen, Examples)
{
    auto s3 = make_symmetric(3);
    auto hw = hecke_waldhausen(sub(s3, "sym:2"));
    EXPECT_EQ(hw.simplicial.levels[1]->num_components(), 2);
    EXPECT_EQ(hw.simplicial.levels[3]->num_objects(), 216);
    EXPECT_TRUE(check_simplicial_identities(hw.simplicial).pass);

    for (const auto& g : {make_symmetric(3), make_cyclic(4), make_dihedral(4)}) {
        auto whole = hecke_waldhausen(sub(g, "whole"));
        for (const auto& lv : whole.simplicial.levels) {
            EXPECT_EQ(lv->num_components(), 1);
            EXPECT_EQ(lv->aut_of(0).order(), g.group->order());
        }
        auto triv = hecke_waldhausen(sub(g, "trivial"), 1);
        const auto& x1 = *triv.simplicial.levels[1];
        EXPECT_EQ(x1.num_objects(), g.group->order());
        EXPECT_EQ(x1.num_components(), g.group->order());
    }
    auto bad = GroupHom(make_cyclic(4).group, make_cyclic(2).group, {0, 1, 0, 1});
    EXPECT_THROW(hecke_waldhausen(bad), std::invalid_argument);
    EXPECT_THROW(parse_subgroup(s3, "gens:(1 2 3),(1 2)") .size() == 6 ? throw std::invalid_argument("") : 0,
                 std::invalid_argument);
}

TEST(HeckeWaldhausen, SegalAndPointed)
{
    auto s3 = make_symmetric(3);
    auto s4 = make_symmetric(4);
    for (const auto& h : {sub(s3, "sym:2"), sub(s3, "alt:3"), sub(s4, "sym:3"), sub(s4, "young:2,2")}) {
        auto hw = hecke_waldhausen(h);
        auto v = check_2segal_degree3(hw.simplicial);
        EXPECT_TRUE(v.pass) << (v.witnesses.empty() ? "" : v.witnesses[0]);
        EXPECT_TRUE(check_pointed(hw.simplicial).pass);
    }
}

TEST(HeckeAlgebra, MatchesConvolutionOracle)
{
    auto s3 = make_symmetric(3);
    auto s4 = make_symmetric(4);
    for (const auto& [g, spec] : std::vector<std::pair<NamedGroup, std::string>>{
             {s3, "sym:2"}, {s4, "sym:3"}, {s4, "young:2,2"}, {s3, "trivial"}, {make_dihedral(4), "cyclic:2"}}) {
        auto h = sub(g, spec);
        auto t = hecke_algebra(h);
        auto oracle_table = oracle::convolution_table(*g.group, h.images(), h.images());
        ASSERT_EQ(t.basis.cosets, oracle::double_cosets(*g.group, h.images(), h.images()));
        EXPECT_EQ(t.constants, oracle_table) << spec;
        EXPECT_TRUE(check_hecke_associativity(t).pass);
        EXPECT_TRUE(check_hecke_unit(t).pass);
        EXPECT_TRUE(t.extremal_faithful);
        EXPECT_TRUE(t.integral);
    }
}

TEST(HeckeAlgebra, Examples)
{
    auto s3 = make_symmetric(3);
    auto t = hecke_algebra(sub(s3, "sym:2"));
    ASSERT_EQ(t.dim(), 2);
    EXPECT_EQ(t.unit, 0);
    EXPECT_EQ(t.constants[0][0], (std::vector<Rat>{1, 0}));
    EXPECT_EQ(t.constants[1][1], (std::vector<Rat>{2, 1}));

    // H trivial: the group algebra
    auto c4 = make_cyclic(4);
    auto g = hecke_algebra(sub(c4, "trivial"));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int k = 0; k < 4; ++k)
                EXPECT_EQ(g.constants[a][b][k], Rat(c4.group->mul(a, b) == k ? 1 : 0));
}

TEST(HeckeAlgebra, CorruptedTableFails)
{
    auto s4 = make_symmetric(4);
    auto t = hecke_algebra(sub(s4, "young:2,2"));
    ASSERT_EQ(t.dim(), 3);
    t.constants[1][2][0] += 1;
    auto v = check_hecke_associativity(t);
    EXPECT_FALSE(v.pass);
    EXPECT_FALSE(v.witnesses.empty());
}

TEST(HeckeModule, AxiomsAndOracle)
{
    auto s3 = make_symmetric(3);
    auto s4 = make_symmetric(4);
    for (const auto& [g, hs, ps] : std::vector<std::tuple<NamedGroup, std::string, std::string>>{
             {s3, "sym:2", "alt:3"}, {s3, "sym:2", "sym:2"}, {s3, "sym:2", "whole"}, {s4, "sym:3", "young:2,2"},
             {s4, "young:2,2", "cyclic:3"}}) {
        auto h = sub(g, hs);
        auto p = sub(g, ps);
        auto alg = hecke_algebra(h);
        auto mod = hecke_module(h, p);
        EXPECT_TRUE(check_module_axioms(alg, mod).pass) << hs << " " << ps;
        EXPECT_EQ(mod.action, oracle::convolution_table(*g.group, h.images(), p.images())) << hs << " " << ps;
    }
}

TEST(HeckeModule, RegularAndRankOne)
{
    auto s4 = make_symmetric(4);
    auto h = sub(s4, "sym:3");
    auto alg = hecke_algebra(h);
    EXPECT_EQ(hecke_module(h, h).action, alg.constants);

    auto one = hecke_module(h, sub(s4, "whole"));
    ASSERT_EQ(one.module_basis.cosets.size(), 1u);
    for (int i = 0; i < alg.dim(); ++i)
        EXPECT_EQ(one.action[i][0][0], Rat(static_cast<long>(alg.basis.cosets[i].size()), h.source()->order()));
}

TEST(SConstruction, LowLevels)
{
    auto inst = ProtoAbelianInstance::vect(2, 2);
    auto s = s_construction(inst, 2, 3);
    EXPECT_EQ(s.simplicial.levels[0]->num_objects(), 1);
    EXPECT_EQ(s.simplicial.levels[0]->cardinality(), Rat(1));
    auto core = core_groupoid(inst);
    EXPECT_TRUE(is_equivalence(core_comparison(s, core)).pass);
    for (int n = 0; n <= 3; ++n)
        for (int x = 0; x < s.levels[n]->size(); ++x)
            EXPECT_TRUE(check_flag_diagram(inst.category(), s.levels[n]->diagram(x)).pass);

    auto f = s_construction(ProtoAbelianInstance::f1_free(make_trivial(), 2), 2, 2);
    EXPECT_EQ(f.simplicial.levels[2]->num_components(), 6);
}

TEST(SConstruction, FlagModelIsEquivalent)
{
    for (const auto& inst : {ProtoAbelianInstance::vect(2, 2), ProtoAbelianInstance::f1_free(make_cyclic(2), 2),
                             ProtoAbelianInstance::ab_p_groups(2, 2)}) {
        auto s = s_construction(inst, inst.bound(), 3);
        for (int n = 0; n <= 3; ++n) {
            auto flags = SLevel::build_flags(inst.category_ptr(), n, inst.bound());
            auto v = is_equivalence(flag_comparison(*s.levels[n], *flags));
            EXPECT_TRUE(v.pass) << inst.name() << " n=" << n << (v.witnesses.empty() ? "" : v.witnesses[0]);
        }
    }
}

TEST(SConstruction, SegalAndPointed)
{
    for (const auto& inst : {ProtoAbelianInstance::vect(2, 2), ProtoAbelianInstance::f1_free(make_trivial(), 2),
                             ProtoAbelianInstance::f1_free(make_cyclic(2), 2), ProtoAbelianInstance::vect(3, 2),
                             ProtoAbelianInstance::ab_p_groups(2, 2)}) {
        auto s = s_construction(inst, inst.bound(), 3);
        EXPECT_TRUE(check_simplicial_identities(s.simplicial).pass) << inst.name();
        auto v = check_2segal_degree3(s.simplicial);
        EXPECT_TRUE(v.pass) << inst.name() << (v.witnesses.empty() ? "" : v.witnesses[0]);
        EXPECT_TRUE(check_pointed(s.simplicial).pass) << inst.name();
    }
}

TEST(SConstruction, DiagramCheckRejectsBrokenDiagram)
{
    auto inst = ProtoAbelianInstance::vect(2, 2);
    auto s = s_construction(inst, 2, 2);
    const auto& lv = *s.levels[2];
    for (int x = 0; x < lv.size(); ++x) {
        FlagDiagram d = lv.diagram(x);
        if (d.at(0, 1).size == 1 && d.at(0, 2).size == 2) {
            d.horizontal[pair_index(2, 0, 1)] = inst.category().zero_map(d.at(0, 1));
            EXPECT_FALSE(check_flag_diagram(inst.category(), d).pass);
            return;
        }
    }
    FAIL() << "no diagram with a line in a plane";
}

TEST(SpanRoute, AgreesWithEnumeration)
{
    for (const auto& inst : {ProtoAbelianInstance::vect(2, 2), ProtoAbelianInstance::f1_free(make_trivial(), 3),
                             ProtoAbelianInstance::f1_free(make_cyclic(3), 2), ProtoAbelianInstance::vect(3, 2),
                             ProtoAbelianInstance::ab_p_groups(2, 3), ProtoAbelianInstance::vect(2, 3)}) {
        auto t = hall_constants(inst);
        auto s = s_construction(inst, inst.bound(), 2);
        HallSpan span(s);
        for (const auto& a : t.basis)
            for (const auto& b : t.basis)
                if (a.size + b.size <= inst.bound()) {
                    EXPECT_EQ(span.multiply(delta(a), delta(b)), hall_product(t, delta(a), delta(b)))
                        << inst.name() << " " << inst.label(a) << " " << inst.label(b);
                }
    }
}

TEST(SpanRoute, Examples)
{
    auto f1 = ProtoAbelianInstance::f1_free(make_trivial(), 2);
    auto c1 = f1.parse_class("1"), c0 = f1.parse_class("0");
    EXPECT_EQ(hall_product_via_span(f1, 2, delta(c1), delta(c1)), (HallVec{{f1.parse_class("2"), Rat(2)}}));
    EXPECT_EQ(hall_product_via_span(f1, 2, delta(c0), delta(c0)), delta(c0));
    auto v = ProtoAbelianInstance::vect(2, 2);
    EXPECT_EQ(hall_product_via_span(v, 2, delta(v.parse_class("1")), delta(v.parse_class("1"))),
              (HallVec{{v.parse_class("2"), Rat(3)}}));
    EXPECT_THROW(hall_product_via_span(v, 2, delta(v.parse_class("2")), delta(v.parse_class("1"))),
                 std::invalid_argument);
}

TEST(Mutations, EveryMutationFailsWithWitness)
{
    auto s3 = make_symmetric(3);
    auto hw = hecke_waldhausen(sub(s3, "sym:2"));
    auto sv = s_construction(ProtoAbelianInstance::vect(2, 2), 2, 3);
    auto sf = s_construction(ProtoAbelianInstance::f1_free(make_trivial(), 2), 2, 3);
    auto corpus = mutation_corpus({&hw.simplicial, &sv.simplicial, &sf.simplicial});
    ASSERT_GE(corpus.size(), 5u);
    for (const auto& m : corpus) {
        auto v = run(m);
        EXPECT_FALSE(v.pass) << m.name;
        EXPECT_FALSE(v.witnesses.empty()) << m.name;
    }
    auto pointed_only = duplicate_degenerate_component(sf.simplicial);
    EXPECT_FALSE(check_pointed(pointed_only).pass);
}
