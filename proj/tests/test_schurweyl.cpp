#include "hallkit/schurweyl/schurweyl.hpp"

#include <gtest/gtest.h>

using namespace hallkit;

namespace {

std::vector<NamedGroup> groups()
{
    return {make_trivial(), make_cyclic(2), make_cyclic(3), parse_group("klein")};
}

} // namespace

TEST(SchurWeyl, DimPolyFnsExamples)
{
    EXPECT_EQ(dim_poly_fns(*make_trivial().group, 1, 2), 1);
    EXPECT_EQ(dim_poly_fns(*make_trivial().group, 2, 2), 10);
    EXPECT_EQ(dim_poly_fns(*make_cyclic(2).group, 1, 1), 2);
    for (int n = 0; n <= 6; ++n)
        EXPECT_EQ(dim_poly_fns(*make_trivial().group, 1, n), 1);
    // S_3 has abelianization of order 2
    EXPECT_EQ(dim_poly_fns(*make_symmetric(3).group, 1, 1), 2);
    EXPECT_EQ(dim_poly_fns(*make_symmetric(3).group, 2, 2), multiset_number(8, 2));
}

TEST(SchurWeyl, DimRExamples)
{
    auto lt = WreathCharacters(make_trivial()).character_label_set();
    EXPECT_EQ(dim_R(PartitionMap(lt, {Partition({2})}), 2), 3);
    EXPECT_EQ(dim_R(PartitionMap(lt, {Partition({1, 1})}), 1), 0);
    auto l2 = WreathCharacters(make_cyclic(2)).character_label_set();
    EXPECT_EQ(dim_R(PartitionMap(l2, {Partition({1}), Partition({1})}), 1), 1);
}

TEST(SchurWeyl, IdentityExamples)
{
    EXPECT_TRUE(check_sum_of_squares(make_trivial(), 2, 2).pass);
    EXPECT_TRUE(check_sum_of_squares(make_cyclic(2), 1, 1).pass);
    EXPECT_TRUE(check_sum_of_squares(make_cyclic(3), 2, 2).pass);
    // nine labels: 3 * (3^2 + 1^2) + 3 * (2 * 2)^2 = 78 = ((12, 2))
    BigInt squares = 0;
    for (const auto& lambda : partition_maps(2, WreathCharacters(make_cyclic(3)).character_label_set()))
        squares += dim_R(lambda, 2) * dim_R(lambda, 2);
    EXPECT_EQ(partition_maps(2, WreathCharacters(make_cyclic(3)).character_label_set()).size(), 9u);
    EXPECT_EQ(squares, 78);
    EXPECT_EQ(multiset_number(12, 2), 78);
    EXPECT_TRUE(check_total_dimension(make_trivial(), 2, 2).pass);
    EXPECT_TRUE(check_total_dimension(make_cyclic(2), 1, 1).pass);
    EXPECT_TRUE(check_total_dimension(make_cyclic(2), 2, 2).pass);
    EXPECT_THROW(check_sum_of_squares(make_symmetric(3), 1, 1), Unsupported);
}

TEST(SchurWeyl, IdentitiesHoldOnGrid)
{
    for (const auto& g : groups())
        for (int n = 0; n <= 4; ++n)
            for (int d = 0; d <= 3; ++d) {
                EXPECT_TRUE(check_sum_of_squares(g, n, d).pass) << g.spec << " n=" << n << " d=" << d;
                EXPECT_TRUE(check_total_dimension(g, n, d).pass) << g.spec << " n=" << n << " d=" << d;
            }
}

// dim X_lambda taken from the identity column of the constructed character table.
TEST(SchurWeyl, TotalDimensionWithTableDegrees)
{
    for (const auto& [g, n] : std::vector<std::pair<NamedGroup, int>>{
             {make_trivial(), 4}, {make_cyclic(2), 3}, {make_cyclic(3), 2}, {parse_group("klein"), 2}}) {
        WreathCharacters wc(g);
        auto t = wc.table(n);
        const int id = t->class_index(t->group->class_label(t->group->identity()));
        for (int d = 1; d <= 3; ++d) {
            BigInt total = 0;
            for (std::size_t i = 0; i < t->values.size(); ++i)
                total += numerator(t->values[i][id].to_rational()) * dim_R(t->irreducible_labels[i], d);
            EXPECT_EQ(total, boost::multiprecision::pow(BigInt(d * g.group->order()), n)) << g.spec << " n=" << n;
        }
    }
}

TEST(SchurWeyl, ReportExamples)
{
    auto r = schur_weyl_report(make_trivial(), 2, 1);
    EXPECT_TRUE(r.pass());
    int flagged = 0;
    for (const auto& row : r.rows)
        if (row.kernel) {
            ++flagged;
            EXPECT_EQ(row.label[0], Partition({1, 1}));
        }
    EXPECT_EQ(flagged, 1);

    auto r2 = schur_weyl_report(make_trivial(), 2, 2);
    EXPECT_TRUE(r2.pass());
    for (const auto& row : r2.rows)
        EXPECT_FALSE(row.kernel);

    auto r3 = schur_weyl_report(make_cyclic(2), 3, 1);
    EXPECT_TRUE(r3.pass());
    for (const auto& row : r3.rows) {
        bool multi_row = row.label[0].length() >= 2 || row.label[1].length() >= 2;
        EXPECT_EQ(row.kernel, multi_row) << row.label.to_string();
    }
}

TEST(SchurWeyl, KernelCriterionAndMonotonicity)
{
    for (const auto& g : groups()) {
        WreathCharacters wc(g);
        for (int n = 0; n <= 4; ++n)
            for (const auto& lambda : partition_maps(n, wc.character_label_set()))
                for (int d = 0; d <= 3; ++d) {
                    EXPECT_EQ(dim_R(lambda, d) == 0, kernel_flag(lambda, d));
                    EXPECT_LE(dim_R(lambda, d), dim_R(lambda, d + 1));
                    if (n <= d) {
                        EXPECT_FALSE(kernel_flag(lambda, d));
                    }
                }
    }
}

TEST(SchurWeyl, ReportsPassOnGrid)
{
    for (const auto& g : groups())
        for (int n = 0; n <= 4; ++n)
            for (int d = 0; d <= 3; ++d)
                EXPECT_TRUE(schur_weyl_report(g, n, d).pass()) << g.spec << " n=" << n << " d=" << d;
}
