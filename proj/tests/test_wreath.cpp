#include "hallkit/wreath/characters.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hallkit;

namespace {

PartitionMap pm(const LabelSet& labels, std::vector<Partition> vals) { return PartitionMap(labels, std::move(vals)); }

} // namespace

TEST(SymmetricCharacter, Examples)
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& c : partitions_of(n)) {
            EXPECT_EQ(symmetric_character(Partition({n}), c), 1);
            std::vector<int> ones(n, 1);
            EXPECT_EQ(symmetric_character(Partition(ones), c), (n - c.length()) % 2 == 0 ? 1 : -1);
        }
    EXPECT_EQ(symmetric_character(Partition({2, 1}), Partition({1, 1, 1})), 2);
    EXPECT_EQ(symmetric_character(Partition({2, 1}), Partition({2, 1})), 0);
    EXPECT_EQ(symmetric_character(Partition({2, 1}), Partition({3})), -1);
    EXPECT_EQ(symmetric_character(Partition(), Partition()), 1);
    EXPECT_THROW(symmetric_character(Partition({2}), Partition({1})), std::invalid_argument);
}

// Young's rule: the permutation character of M^mu is sum_nu K_{nu mu} chi^nu.
TEST(SymmetricCharacter, YoungRuleOracle)
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : partitions_of(n))
            for (const auto& sigma : permutations_lex(n)) {
                Partition cls(cycle_type(sigma));
                long lhs = 0;
                for (const auto& nu : partitions_of(n))
                    lhs += oracle::kostka(nu, mu) * symmetric_character(nu, cls);
                EXPECT_EQ(lhs, oracle::young_permutation_character(mu, sigma))
                    << "mu=" << mu.to_string() << " class " << cls.to_string();
            }
}

TEST(Wreath, Orders)
{
    EXPECT_EQ(build_wreath(make_cyclic(2), 2).order(), 8);
    EXPECT_EQ(build_wreath(make_cyclic(2), 3).order(), 48);
    EXPECT_EQ(build_wreath(make_cyclic(3), 1).order(), 3);
    EXPECT_EQ(build_wreath(make_cyclic(3), 0).order(), 1);
    EXPECT_THROW(build_wreath(make_cyclic(3), 5), BudgetExceeded);
    EXPECT_NO_THROW(build_wreath(make_cyclic(3), 5, 30000));
}

TEST(Wreath, GroupLaws)
{
    for (const auto& [g, n] : std::vector<std::pair<NamedGroup, int>>{
             {make_cyclic(2), 3}, {make_cyclic(3), 2}, {make_symmetric(3), 2}}) {
        auto w = build_wreath(g, n);
        auto e = w.identity();
        for (int a = 0; a < w.order(); ++a) {
            EXPECT_EQ(w.mul(a, e), a);
            EXPECT_EQ(w.mul(a, w.inv(a)), e);
            EXPECT_EQ(w.index(w.element(a)), a);
        }
        for (int a = 0; a < w.order(); a += 3)
            for (int b = 0; b < w.order(); b += 5)
                for (int c = 0; c < w.order(); c += 7)
                    EXPECT_EQ(w.mul(w.mul(a, b), c), w.mul(a, w.mul(b, c)));
    }
}

TEST(Wreath, ElementOneIsBaseGroup)
{
    auto g = make_symmetric(3);
    auto w = build_wreath(g, 1);
    ASSERT_EQ(w.order(), 6);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            EXPECT_EQ(w.element(w.mul(a, b)).base[0], g.group->mul(a, b));
}

TEST(Wreath, ClassLabelExamples)
{
    auto w = build_wreath(make_cyclic(2), 2);
    const auto& l = w.class_label_set();
    EXPECT_EQ(w.class_label(w.identity()), pm(l, {Partition({1, 1}), Partition()}));
    WreathElement x{{1, 1}, {1, 0}};
    EXPECT_EQ(wreath_class_label(*w.base_group().group, x, l), pm(l, {Partition({2}), Partition()}));
    WreathElement y{{1, 0}, {1, 0}};
    EXPECT_EQ(wreath_class_label(*w.base_group().group, y, l), pm(l, {Partition(), Partition({2})}));
    std::set<std::string> distinct;
    for (int a = 0; a < w.order(); ++a)
        distinct.insert(w.class_label(a).to_string());
    EXPECT_EQ(distinct.size(), 5u);
}

// Labels agree iff elements are conjugate, checked against full conjugation in the multiplication table.
TEST(Wreath, ClassLabelsMatchBruteForceConjugacy)
{
    std::vector<std::pair<NamedGroup, int>> cases{{make_trivial(), 5}, {make_cyclic(2), 3}, {make_cyclic(3), 2},
                                                  {parse_group("klein"), 2}, {make_symmetric(3), 2}};
    for (int n = 0; n <= 3; ++n)
        cases.emplace_back(make_cyclic(2), n);
    for (const auto& [g, n] : cases) {
        auto w = build_wreath(g, n);
        auto minima = oracle::conjugacy_class_minima(*w.as_finite_group());
        std::map<int, std::string> label_of_class;
        std::map<std::string, int> class_of_label;
        for (int a = 0; a < w.order(); ++a) {
            auto s = w.class_label(a).to_string();
            auto [it, fresh] = label_of_class.emplace(minima[a], s);
            EXPECT_EQ(it->second, s) << g.spec << " n=" << n;
            auto [jt, fresh2] = class_of_label.emplace(s, minima[a]);
            EXPECT_EQ(jt->second, minima[a]) << g.spec << " n=" << n;
        }
        EXPECT_EQ(class_of_label.size(), partition_maps(n, w.class_label_set()).size()) << g.spec << " n=" << n;
        EXPECT_EQ(w.conjugacy_classes().size(), class_of_label.size());
    }
}

TEST(WreathCharacters, TablesPassOrthogonality)
{
    std::vector<std::pair<std::string, int>> cases{{"trivial", 5}, {"cyclic:2", 3}, {"cyclic:3", 2},
                                                   {"klein", 2},   {"cyclic:4", 2}, {"cyclic:2", 0}};
    for (const auto& [spec, n] : cases) {
        WreathCharacters wc(parse_group(spec));
        auto t = wc.table(n);
        auto v = check_character_table(*t);
        EXPECT_TRUE(v.pass) << spec << " n=" << n << ": " << (v.witnesses.empty() ? "" : v.witnesses.front());
        const int id = t->class_index(t->group->class_label(t->group->identity()));
        for (std::size_t i = 0; i < t->values.size(); ++i)
            EXPECT_EQ(t->values[i][id], Cyc(Rat(wc.dimension(t->irreducible_labels[i]))));
    }
}

TEST(WreathCharacters, TrivialGroupReducesToSymmetric)
{
    WreathCharacters wc(make_trivial());
    for (int n = 1; n <= 4; ++n) {
        auto t = wc.table(n);
        for (std::size_t i = 0; i < t->irreducible_labels.size(); ++i)
            for (std::size_t c = 0; c < t->class_labels.size(); ++c)
                EXPECT_EQ(t->values[i][c],
                          Cyc(symmetric_character(t->irreducible_labels[i][0], t->class_labels[c][0])));
    }
}

TEST(WreathCharacters, Z2Examples)
{
    WreathCharacters wc(make_cyclic(2));
    auto t = wc.table(2);
    std::multiset<int> dims;
    for (const auto& lambda : t->irreducible_labels)
        dims.insert(static_cast<int>(wc.dimension(lambda)));
    EXPECT_EQ(dims, (std::multiset<int>{1, 1, 1, 1, 2}));
    const auto& l = wc.character_label_set();
    EXPECT_EQ(wc.dimension(pm(l, {Partition({1}), Partition({1})})), 2);
    EXPECT_THROW(WreathCharacters(make_symmetric(3)), Unsupported);
}

TEST(WreathCharacters, InductionProductExamples)
{
    WreathCharacters triv(make_trivial());
    const auto& lt = triv.character_label_set();
    auto one = pm(lt, {Partition({1})});
    auto prod = triv.induction_product(one, one);
    EXPECT_EQ(prod, (std::map<PartitionMap, BigInt>{{pm(lt, {Partition({2})}), 1}, {pm(lt, {Partition({1, 1})}), 1}}));
    auto mu = pm(lt, {Partition({2, 1})});
    EXPECT_EQ(triv.induction_product(pm(lt, {Partition()}), mu), (std::map<PartitionMap, BigInt>{{mu, 1}}));

    WreathCharacters z2(make_cyclic(2));
    const auto& l = z2.character_label_set();
    auto p = z2.induction_product(pm(l, {Partition({1}), Partition()}), pm(l, {Partition(), Partition({1})}));
    EXPECT_EQ(p, (std::map<PartitionMap, BigInt>{{pm(l, {Partition({1}), Partition({1})}), 1}}));
}

TEST(WreathCharacters, ChExamples)
{
    WreathCharacters triv(make_trivial());
    const auto& lt = triv.character_label_set();
    EXPECT_EQ(triv.ch({{pm(lt, {Partition({3})}), 1}}), MultiSymElem::basis(pm(lt, {Partition({3})})));

    WreathCharacters z2(make_cyclic(2));
    const auto& l = z2.character_label_set();
    auto t = z2.table(1);
    ClassFunction sum(t->class_labels.size());
    for (const auto& row : t->values)
        for (std::size_t c = 0; c < row.size(); ++c)
            sum[c] += row[c];
    auto expect = MultiSymElem::basis(pm(l, {Partition({1}), Partition()})) +
                  MultiSymElem::basis(pm(l, {Partition(), Partition({1})}));
    EXPECT_EQ(z2.ch(*t, sum), expect);

    ClassFunction half = t->values[0];
    for (auto& v : half)
        v *= Cyc(Rat(1, 2));
    EXPECT_THROW(z2.ch(*t, half), std::domain_error);
}

TEST(WreathCharacters, ChIsRingHomomorphism)
{
    int pairs = 0;
    auto v = check_ch_homomorphism(WreathCharacters(make_cyclic(2)), 3, &pairs);
    EXPECT_TRUE(v.pass) << (v.witnesses.empty() ? "" : v.witnesses.front());
    EXPECT_GT(pairs, 50);
    EXPECT_TRUE(check_ch_homomorphism(WreathCharacters(make_trivial()), 4).pass);
    EXPECT_TRUE(check_ch_homomorphism(WreathCharacters(make_cyclic(3)), 2).pass);
}

TEST(WreathCharacters, CorruptedTableFails)
{
    WreathCharacters wc(make_cyclic(2));
    auto t = *wc.table(2);
    t.values[1][1] = t.values[1][1] + Cyc(1);
    EXPECT_FALSE(check_character_table(t).pass);
    auto u = *wc.table(2);
    u.values.pop_back();
    u.irreducible_labels.pop_back();
    EXPECT_FALSE(check_character_table(u).pass);
}
