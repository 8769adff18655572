#include "hallkit/group/families.hpp"
#include "hallkit/groupoid/transfer.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hallkit;

namespace {

GroupHom inclusion(const NamedGroup& g, const std::string& sub)
{
    return make_subgroup(g.group, parse_subgroup(g, sub));
}

GroupHom cyclic_hom(int m, int n, int c)
{
    auto zm = make_cyclic(m).group, zn = make_cyclic(n).group;
    std::vector<int> img(m);
    for (int x = 0; x < m; ++x)
        img[x] = (c * x) % n;
    return GroupHom(zm, zn, img);
}

// a groupoid made of components B(Z/m) with several objects each
struct RandomGroupoid {
    GroupoidPtr g;
    std::vector<int> orders; // per component
};

RandomGroupoid random_groupoid(std::mt19937& rng, int ncomp)
{
    static const int choices[] = {1, 2, 3, 4, 6};
    std::uniform_int_distribution<int> pick(0, 4), size(1, 3);
    std::vector<Component> comps;
    std::vector<int> orders;
    int next = 0;
    for (int k = 0; k < ncomp; ++k) {
        int m = choices[pick(rng)];
        int s = size(rng);
        std::vector<int> objs;
        for (int i = 0; i < s; ++i)
            objs.push_back(next++);
        comps.push_back({objs.front(), objs, make_cyclic(m).group});
        orders.push_back(m);
    }
    return {std::make_shared<const FiniteGroupoid>(next, comps), orders};
}

Functor random_functor(std::mt19937& rng, const RandomGroupoid& a, const RandomGroupoid& b)
{
    const auto& A = *a.g;
    const auto& B = *b.g;
    std::vector<int> obj(A.num_objects());
    std::vector<Mor> tr(A.num_objects());
    std::vector<std::vector<Mor>> ai(A.num_components());
    for (int k = 0; k < A.num_components(); ++k) {
        int m = a.orders[k];
        std::uniform_int_distribution<int> pc(0, B.num_components() - 1);
        int j = pc(rng);
        int n = b.orders[j];
        std::vector<int> mults;
        for (int c = 0; c < n; ++c)
            if ((c * m) % n == 0)
                mults.push_back(c);
        int c = mults[std::uniform_int_distribution<int>(0, static_cast<int>(mults.size()) - 1)(rng)];
        const auto& cb = B.component(j);
        auto pick_obj = [&] {
            return cb.objects[std::uniform_int_distribution<int>(0, static_cast<int>(cb.objects.size()) - 1)(rng)];
        };
        const auto& ca = A.component(k);
        int fr = pick_obj();
        for (int x : ca.objects) {
            obj[x] = x == ca.rep ? fr : pick_obj();
            int aut = x == ca.rep ? 0 : std::uniform_int_distribution<int>(0, n - 1)(rng);
            tr[x] = {fr, obj[x], aut};
        }
        for (int s = 0; s < m; ++s)
            ai[k].push_back({fr, fr, (c * s) % n});
    }
    return Functor(a.g, b.g, obj, tr, ai);
}

} // namespace

TEST(Groupoid, Pi0Examples)
{
    auto pt = point_groupoid();
    auto info = pi0(*pt);
    ASSERT_EQ(info.size(), 1u);
    EXPECT_EQ(info[0].aut_order, 1);

    auto bz2 = classifying_groupoid(make_cyclic(2).group);
    auto sum = coproduct(bz2, pt).sum;
    auto i2 = pi0(*sum);
    ASSERT_EQ(i2.size(), 2u);
    EXPECT_EQ(i2[0].aut_order, 2);
    EXPECT_EQ(i2[1].aut_order, 1);

    // S_2 acting on S_3 by right translation x -> x h^{-1}
    auto s3 = make_symmetric(3);
    auto h = inclusion(s3, "sym:2");
    const auto& G = *s3.group;
    auto act = action_groupoid(h.source(), G.order(),
                               [&](int s, int x) { return G.mul(x, G.inv(h(s))); });
    EXPECT_EQ(act->num_components(), 3);
    for (const auto& c : pi0(*act))
        EXPECT_EQ(c.aut_order, 1);
}

TEST(Groupoid, Cardinality)
{
    EXPECT_EQ(cardinality(*classifying_groupoid(make_cyclic(2).group)), Rat(1, 2));
    EXPECT_EQ(cardinality(*discrete_groupoid(5)), Rat(5));
    auto s3 = make_symmetric(3);
    const auto& G = *s3.group;
    auto act = action_groupoid(s3.group, G.order(), [&](int s, int x) { return G.mul(x, G.inv(s)); });
    EXPECT_EQ(act->num_objects(), 6);
    EXPECT_EQ(cardinality(*act), Rat(1));
}

TEST(Groupoid, FiberProductExamples)
{
    auto pt = point_groupoid();
    FiberProduct trivial(Functor::identity(pt), Functor::identity(pt));
    EXPECT_EQ(trivial.groupoid()->num_objects(), 1);
    EXPECT_EQ(trivial.groupoid()->num_components(), 1);

    auto s3 = make_symmetric(3);
    auto h = inclusion(s3, "sym:2");
    auto bh = classifying_groupoid(h.source());
    auto bg = classifying_groupoid(h.target());
    auto f = classifying_functor(h, bh, bg);
    FiberProduct fib(f, point_at(bg, 0));
    EXPECT_EQ(fib.groupoid()->num_objects(), 6);
    EXPECT_EQ(fib.groupoid()->num_components(), 3);
    for (const auto& c : fib.groupoid()->components())
        EXPECT_EQ(c.aut->order(), 1);

    FiberProduct dbl(f, f);
    EXPECT_EQ(dbl.groupoid()->num_components(), 2);
    EXPECT_EQ(cardinality(*dbl.groupoid()), Rat(6, 4));
}

TEST(Groupoid, FiberProductSquareCommutesUpToPhi)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_groupoid(rng, 2), b = random_groupoid(rng, 2), d = random_groupoid(rng, 2);
        auto f = random_functor(rng, a, d), g = random_functor(rng, b, d);
        FiberProduct fp(f, g);
        const auto& P = *fp.groupoid();
        const auto& D = *d.g;
        long expected = 0;
        for (int x = 0; x < a.g->num_objects(); ++x)
            for (int y = 0; y < b.g->num_objects(); ++y)
                expected += D.hom_size(f(x), g(y));
        EXPECT_EQ(P.num_objects(), expected);
        // every morphism of the fiber product satisfies g(beta) phi = phi' f(alpha)
        for (const auto& c : P.components())
            for (int x : c.objects)
                for (int y : c.objects)
                    for (int s = 0; s < c.aut->order(); ++s) {
                        Mor m{x, y, s};
                        Mor al = fp.proj_a().apply(m), be = fp.proj_b().apply(m);
                        EXPECT_EQ(D.compose(g.apply(be), fp.phi(x)), D.compose(fp.phi(y), f.apply(al)));
                        EXPECT_EQ(fp.morphism_from_pair(x, y, al, be), m);
                    }
    }
}

TEST(Groupoid, EquivalenceExamples)
{
    auto bz2 = classifying_groupoid(make_cyclic(2).group);
    EXPECT_TRUE(is_equivalence(Functor::identity(bz2)).pass);

    auto v = is_equivalence(to_point(bz2));
    EXPECT_FALSE(v.pass);
    ASSERT_FALSE(v.witnesses.empty());
    EXPECT_NE(v.witnesses[0].find("size 2"), std::string::npos);

    auto two = std::make_shared<const FiniteGroupoid>(
        2, std::vector<Component>{{0, {0, 1}, make_cyclic(2).group}});
    auto inc = Functor::from_map(bz2, two, {0}, [](const Mor& m) { return m; });
    EXPECT_TRUE(is_equivalence(inc).pass);
    EXPECT_EQ(cardinality(*bz2), cardinality(*two));

    auto missed = is_equivalence(coproduct(bz2, bz2).inj_a);
    EXPECT_FALSE(missed.pass);
    EXPECT_NE(missed.witnesses[0].find("essential image"), std::string::npos);
}

TEST(Groupoid, PullbackExamples)
{
    auto bz2 = classifying_groupoid(make_cyclic(2).group);
    auto sum = coproduct(bz2, point_groupoid()).sum;
    SpanFn phi{sum, {Rat(2), Rat(5)}};
    EXPECT_EQ(pullback_fn(Functor::identity(sum), phi), phi);
    auto to_pt = to_point(sum);
    EXPECT_EQ(pullback_fn(to_pt, SpanFn::constant(to_pt.target(), 7)).values, std::vector<Rat>(2, Rat(7)));

    auto s3 = make_symmetric(3);
    auto f = classifying_functor(inclusion(s3, "sym:2"));
    EXPECT_EQ(pullback_fn(f, SpanFn::delta(f.target(), 0)).values, std::vector<Rat>{Rat(1)});
}

TEST(Groupoid, PushforwardExamples)
{
    auto s3 = make_symmetric(3);
    auto f = classifying_functor(inclusion(s3, "sym:2"));
    EXPECT_EQ(pushforward_fn(f, SpanFn::constant(f.source(), 1)).values, std::vector<Rat>{Rat(3)});

    auto bz2 = classifying_groupoid(make_cyclic(2).group);
    auto sum = coproduct(bz2, point_groupoid()).sum;
    SpanFn phi{sum, {Rat(2), Rat(5)}};
    EXPECT_EQ(pushforward_fn(Functor::identity(sum), phi), phi);

    auto q = classifying_functor(cyclic_hom(4, 2, 1));
    EXPECT_EQ(pushforward_fn(q, SpanFn::constant(q.source(), 1)).values, std::vector<Rat>{Rat(1, 2)});
}

TEST(Groupoid, SpanExamples)
{
    auto a = classifying_groupoid(make_cyclic(3).group);
    SpanFn phi{a, {Rat(4)}};
    auto id = Functor::identity(a);
    EXPECT_EQ(pull_push_span(id, id, phi), phi);

    auto empty = discrete_groupoid(0);
    auto c = Functor::from_map(empty, a, {}, [](const Mor& m) { return m; });
    auto nu = Functor::from_map(empty, a, {}, [](const Mor& m) { return m; });
    EXPECT_EQ(pull_push_span(c, nu, phi).values, std::vector<Rat>{Rat(0)});
}

TEST(Groupoid, PushforwardClosedFormOracle)
{
    // f_!(psi)(b) = sum over components a with f(a) ~ b of psi(a) #Aut(b) / #Aut(a)
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_groupoid(rng, 3), b = random_groupoid(rng, 2);
        auto f = random_functor(rng, a, b);
        SpanFn psi = SpanFn::zero(a.g);
        for (auto& v : psi.values)
            v = Rat(std::uniform_int_distribution<int>(-3, 5)(rng));
        auto pushed = pushforward_fn(f, psi);
        for (int j = 0; j < b.g->num_components(); ++j) {
            Rat expected = 0;
            for (int k = 0; k < a.g->num_components(); ++k)
                if (b.g->component_of(f(a.g->component(k).rep)) == j)
                    expected += psi.values[k] * Rat(b.orders[j], a.orders[k]);
            EXPECT_EQ(pushed.values[j], expected);
        }
    }
}

TEST(Groupoid, Functoriality)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_groupoid(rng, 3), b = random_groupoid(rng, 3), c = random_groupoid(rng, 2);
        auto f = random_functor(rng, a, b), g = random_functor(rng, b, c);
        auto gf = compose(g, f);
        for (int k = 0; k < a.g->num_components(); ++k) {
            auto d = SpanFn::zero(a.g);
            d.values[k] = 1;
            EXPECT_EQ(pushforward_fn(gf, d), pushforward_fn(g, pushforward_fn(f, d)));
        }
        for (int k = 0; k < c.g->num_components(); ++k) {
            auto d = SpanFn::zero(c.g);
            d.values[k] = 1;
            EXPECT_EQ(pullback_fn(gf, d), pullback_fn(f, pullback_fn(g, d)));
        }
    }
}

TEST(Groupoid, BaseChange)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_groupoid(rng, 3), b = random_groupoid(rng, 2), d = random_groupoid(rng, 2);
        auto f = random_functor(rng, a, d), g = random_functor(rng, b, d);
        FiberProduct fp(f, g);
        for (int k = 0; k < a.g->num_components(); ++k) {
            auto phi = SpanFn::zero(a.g);
            phi.values[k] = 1;
            EXPECT_EQ(pushforward_fn(fp.proj_b(), pullback_fn(fp.proj_a(), phi)),
                      pullback_fn(g, pushforward_fn(f, phi)));
        }
    }
}

TEST(Groupoid, NaturalIsomorphismInvariance)
{
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_groupoid(rng, 3), b = random_groupoid(rng, 2);
        auto f = random_functor(rng, a, b);
        std::vector<Mor> eta;
        for (int x = 0; x < a.g->num_objects(); ++x) {
            const auto& cb = b.g->component(b.g->component_of(f(x)));
            int y = cb.objects[std::uniform_int_distribution<int>(0, static_cast<int>(cb.objects.size()) - 1)(rng)];
            int s = std::uniform_int_distribution<int>(0, cb.aut->order() - 1)(rng);
            eta.push_back({f(x), y, s});
        }
        auto f2 = conjugate(f, eta);
        for (int k = 0; k < a.g->num_components(); ++k) {
            auto d = SpanFn::zero(a.g);
            d.values[k] = 1;
            EXPECT_EQ(pushforward_fn(f, d), pushforward_fn(f2, d));
        }
        for (int j = 0; j < b.g->num_components(); ++j) {
            auto d = SpanFn::zero(b.g);
            d.values[j] = 1;
            EXPECT_EQ(pullback_fn(f, d), pullback_fn(f2, d));
        }
    }
}

TEST(Groupoid, FaithfulPushforwardIsIntegral)
{
    auto s4 = make_symmetric(4);
    for (const std::string sub : {"sym:2", "sym:3", "alt:4", "young:2,2", "trivial"}) {
        auto f = classifying_functor(inclusion(s4, sub));
        auto v = pushforward_fn(f, SpanFn::constant(f.source(), 1)).values[0];
        EXPECT_TRUE(is_integer(v)) << sub;
        EXPECT_EQ(v, Rat(24, f.source()->aut_of(0).order()));
    }
}

TEST(Groupoid, ProductsAndRestrictions)
{
    auto bz2 = classifying_groupoid(make_cyclic(2).group);
    auto two = std::make_shared<const FiniteGroupoid>(
        3, std::vector<Component>{{0, {0, 2}, make_cyclic(3).group}, {1, {1}, trivial_group()}});
    auto p = product(bz2, two);
    EXPECT_EQ(p.product->num_objects(), 3);
    EXPECT_EQ(p.product->num_components(), 2);
    EXPECT_EQ(cardinality(*p.product), cardinality(*bz2) * cardinality(*two));
    auto back = pair_functor(p, p.proj_a, p.proj_b);
    EXPECT_EQ(back, Functor::identity(p.product));

    auto r = restrict_components(two, {0});
    EXPECT_EQ(r.sub->num_objects(), 2);
    EXPECT_FALSE(is_equivalence(r.inclusion).pass);
    auto disc = discretization(two);
    EXPECT_EQ(cardinality(*disc.source()), Rat(3));
    EXPECT_FALSE(is_equivalence(disc).pass);
}

TEST(Groupoid, BudgetExceeded)
{
    auto s4 = make_symmetric(4);
    auto bg = classifying_groupoid(s4.group);
    auto pt = point_at(bg, 0);
    EXPECT_THROW(FiberProduct(pt, pt, 10), BudgetExceeded);
}
