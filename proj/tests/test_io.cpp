#include "hallkit/groupoid/constructions.hpp"
#include "hallkit/io/json.hpp"

#include <gtest/gtest.h>

using namespace hallkit;
using io::json;

TEST(Json, ValuesRoundTrip)
{
    EXPECT_EQ(io::to_json(Rat(3)), "3/1");
    EXPECT_EQ(io::rat_from_json(io::to_json(Rat(-7, 4))), Rat(-7, 4));
    Cyc z = Cyc::root_of_unity(3, 1) + Cyc(Rat(1, 2));
    EXPECT_EQ(io::cyc_from_json(io::to_json(z)), z);
    Partition p({3, 1, 1});
    EXPECT_EQ(io::to_json(p).dump(), "[3,1,1]");
    EXPECT_EQ(io::partition_from_json(io::to_json(p)), p);

    auto labels = make_labels({"X0", "X1"});
    PartitionMap m(labels, {Partition({2}), Partition()});
    EXPECT_EQ(io::to_json(m).dump(), R"({"X0":[2],"X1":[]})");
    EXPECT_EQ(io::partition_map_from_json(io::to_json(m), labels), m);
    EXPECT_EQ(io::partition_map_from_json(json::parse(R"({"X0":[2]})"), labels), m);
    EXPECT_THROW(io::partition_map_from_json(json::parse(R"({"Y":[1]})"), labels), std::invalid_argument);

    auto e = MultiSymElem::basis(m, Rat(2, 3)) + MultiSymElem::basis(PartitionMap(labels, {Partition(), Partition({1})}));
    EXPECT_EQ(io::multisym_from_json(io::to_json(e), labels), e);
}

TEST(Json, GroupoidRoundTrip)
{
    auto s3 = make_symmetric(3);
    auto g = action_groupoid(
        s3.group, 4, [&](int h, int x) { return x == 3 ? 3 : s3.perms[h][x]; });
    auto j = io::groupoid_to_json(*g);
    auto imp = io::groupoid_from_json(j);
    const auto& h = *imp.groupoid;
    EXPECT_EQ(h.num_objects(), 4);
    EXPECT_EQ(h.num_components(), 2);
    EXPECT_EQ(h.cardinality(), g->cardinality());
    EXPECT_EQ(h.morphism_count(), g->morphism_count());
    // ids compose as the table says
    auto table = j.at("compose").get<std::vector<int>>();
    const int m = static_cast<int>(imp.normal_of_id.size());
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (table[a * m + b] >= 0) {
                EXPECT_EQ(h.compose(imp.normal_of_id[a], imp.normal_of_id[b]), imp.normal_of_id[table[a * m + b]]);
            }
    // a second round trip is a fixed point
    auto j2 = io::groupoid_to_json(h);
    EXPECT_EQ(io::groupoid_to_json(*io::groupoid_from_json(j2).groupoid), j2);
}

TEST(Json, GroupoidImportRejectsBrokenTables)
{
    auto g = classifying_groupoid(make_cyclic(3).group);
    auto j = io::groupoid_to_json(*g);
    auto bad = j;
    bad["compose"][1] = 0; // 0 o 1 := 0
    EXPECT_THROW(io::groupoid_from_json(bad), std::invalid_argument);
    auto short_table = j;
    short_table["compose"].erase(0);
    EXPECT_THROW(io::groupoid_from_json(short_table), std::invalid_argument);
    // a monoid {e, z} with z o z = z has no inverse for z
    json monoid = {{"objects", 1},
                   {"morphisms", json::array({{{"id", 0}, {"src", 0}, {"tgt", 0}}, {{"id", 1}, {"src", 0}, {"tgt", 0}}})},
                   {"compose", {0, 1, 1, 1}}};
    EXPECT_THROW(io::groupoid_from_json(monoid), std::invalid_argument);
    EXPECT_THROW(io::groupoid_to_json(*classifying_groupoid(make_symmetric(4).group), 10), BudgetExceeded);
}

TEST(Json, FunctorRoundTrip)
{
    auto s3 = std::make_shared<const NamedGroup>(make_symmetric(3));
    auto h = make_subgroup(s3->group, parse_subgroup(*s3, "young:2,1"));
    auto f = classifying_functor(h);
    auto a = io::groupoid_from_json(io::groupoid_to_json(*f.source()));
    auto b = io::groupoid_from_json(io::groupoid_to_json(*f.target()));
    auto g = io::functor_from_json(io::functor_to_json(f), a, b);
    EXPECT_EQ(is_equivalence(g).pass, is_equivalence(f).pass);
    EXPECT_EQ(g.aut_images()[0].size(), 2u);
    std::set<int> img;
    for (const auto& m : g.aut_images()[0])
        img.insert(m.aut);
    EXPECT_EQ(img.size(), 2u);

    auto broken = io::functor_to_json(f);
    const int e = a.id(a.groupoid->identity(0));
    broken["morphisms"][e] = broken["morphisms"][1 - e];
    EXPECT_THROW(io::functor_from_json(broken, a, b), std::invalid_argument);
}
