/**
 * @file constructions.hpp
 * @brief Products, coproducts, restrictions and the standard small functors.
 */
#pragma once

#include "hallkit/groupoid/functor.hpp"

namespace hallkit {

/// Functor BH -> BG induced by a group homomorphism.
inline Functor classifying_functor(const GroupHom& h, GroupoidPtr bh = nullptr, GroupoidPtr bg = nullptr)
{
    if (!bh)
        bh = classifying_groupoid(h.source());
    if (!bg)
        bg = classifying_groupoid(h.target());
    if (bh->aut_of(0).order() != h.source()->order() || bg->aut_of(0).order() != h.target()->order())
        throw std::invalid_argument("classifying functor: groupoids do not match the homomorphism");
    return Functor::from_map(bh, bg, {0}, [&](const Mor& m) { return Mor{0, 0, h(m.aut)}; });
}

/// The functor from the point picking out object x.
inline Functor point_at(const GroupoidPtr& a, int x)
{
    const int ident = a->aut_of(x).identity();
    return Functor::from_map(point_groupoid(), a, {x}, [&](const Mor&) { return Mor{x, x, ident}; });
}

/// The unique functor to the point.
inline Functor to_point(const GroupoidPtr& a)
{
    auto pt = point_groupoid();
    std::vector<int> obj(a->num_objects(), 0);
    return Functor::from_map(a, pt, obj, [](const Mor&) { return Mor{0, 0, 0}; });
}

namespace detail {

inline GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h)
{
    if (g->order() == 1)
        return h;
    if (h->order() == 1)
        return g;
    const int nh = h->order();
    return std::make_shared<const FiniteGroup>(FiniteGroup::from_function(
        g->order() * nh,
        [&](int x, int y) { return g->mul(x / nh, y / nh) * nh + h->mul(x % nh, y % nh); }));
}

} // namespace detail

/// A x B with object (a, b) numbered a * |B| + b and Aut = Aut(a_r) x Aut(b_r).
struct ProductGroupoid {
    GroupoidPtr a, b, product;
    Functor proj_a, proj_b;

    int object(int x, int y) const { return x * b->num_objects() + y; }
    /// Component of the product containing (rep of comp ka, rep of comp kb).
    int component(int ka, int kb) const
    {
        return product->component_of(object(a->component(ka).rep, b->component(kb).rep));
    }
    Mor pair(const Mor& f, const Mor& g) const
    {
        const int nb = b->aut_of(g.src).order();
        return {object(f.src, g.src), object(f.tgt, g.tgt), f.aut * nb + g.aut};
    }
};

inline ProductGroupoid product(const GroupoidPtr& a, const GroupoidPtr& b, std::size_t budget = kDefaultBudget)
{
    const int na = a->num_objects(), nb = b->num_objects();
    if (static_cast<std::size_t>(na) * nb > budget)
        throw BudgetExceeded("product groupoid exceeds the budget");
    std::vector<Component> comps;
    for (const auto& ca : a->components())
        for (const auto& cb : b->components()) {
            std::vector<int> objs;
            for (int x : ca.objects)
                for (int y : cb.objects)
                    objs.push_back(x * nb + y);
            comps.push_back({ca.rep * nb + cb.rep, std::move(objs), detail::direct_product(ca.aut, cb.aut)});
        }
    auto p = std::make_shared<const FiniteGroupoid>(na * nb, std::move(comps), budget);
    ProductGroupoid out{a, b, p, {}, {}};
    std::vector<int> oa(na * nb), ob(na * nb);
    for (int i = 0; i < na * nb; ++i) {
        oa[i] = i / nb;
        ob[i] = i % nb;
    }
    out.proj_a = Functor::from_map(p, a, oa, [&](const Mor& m) {
        int nbo = b->aut_of(m.src % nb).order();
        return Mor{m.src / nb, m.tgt / nb, m.aut / nbo};
    });
    out.proj_b = Functor::from_map(p, b, ob, [&](const Mor& m) {
        int nbo = b->aut_of(m.src % nb).order();
        return Mor{m.src % nb, m.tgt % nb, m.aut % nbo};
    });
    return out;
}

/// (F, G): X -> A x B.
inline Functor pair_functor(const ProductGroupoid& p, const Functor& f, const Functor& g)
{
    if (f.source() != g.source() || f.target() != p.a || g.target() != p.b)
        throw std::invalid_argument("pair functor: legs do not match the product");
    const int n = f.source()->num_objects();
    std::vector<int> obj(n);
    for (int x = 0; x < n; ++x)
        obj[x] = p.object(f(x), g(x));
    return Functor::from_map(f.source(), p.product, obj,
                             [&](const Mor& m) { return p.pair(f.apply(m), g.apply(m)); });
}

/// Functor between two products, F x G.
inline Functor product_functor(const ProductGroupoid& src, const ProductGroupoid& tgt, const Functor& f,
                               const Functor& g)
{
    return pair_functor(tgt, compose(f, src.proj_a), compose(g, src.proj_b));
}

/// A + B with B's objects shifted by |A|.
struct Coproduct {
    GroupoidPtr a, b, sum;
    Functor inj_a, inj_b;
};

inline Coproduct coproduct(const GroupoidPtr& a, const GroupoidPtr& b)
{
    const int na = a->num_objects();
    std::vector<Component> comps = a->components();
    for (auto c : b->components()) {
        c.rep += na;
        for (int& x : c.objects)
            x += na;
        comps.push_back(std::move(c));
    }
    auto s = std::make_shared<const FiniteGroupoid>(na + b->num_objects(), std::move(comps));
    std::vector<int> ia(na), ib(b->num_objects());
    std::iota(ia.begin(), ia.end(), 0);
    std::iota(ib.begin(), ib.end(), na);
    Coproduct out{a, b, s, {}, {}};
    out.inj_a = Functor::from_map(a, s, ia, [](const Mor& m) { return m; });
    out.inj_b = Functor::from_map(b, s, ib, [na](const Mor& m) { return Mor{m.src + na, m.tgt + na, m.aut}; });
    return out;
}

/// [F, G]: A + B -> C.
inline Functor copair(const Coproduct& c, const Functor& f, const Functor& g)
{
    if (f.source() != c.a || g.source() != c.b || f.target() != g.target())
        throw std::invalid_argument("copair: functors do not match the coproduct");
    const int na = c.a->num_objects();
    std::vector<int> obj(c.sum->num_objects());
    for (int x = 0; x < c.sum->num_objects(); ++x)
        obj[x] = x < na ? f(x) : g(x - na);
    return Functor::from_map(c.sum, f.target(), obj, [&](const Mor& m) {
        return m.src < na ? f.apply(m) : g.apply(Mor{m.src - na, m.tgt - na, m.aut});
    });
}

/// Full subgroupoid on the listed components, with its inclusion.
struct Restriction {
    GroupoidPtr sub;
    Functor inclusion;
    std::vector<int> old_of; // new object -> old object
};

inline Restriction restrict_components(const GroupoidPtr& a, std::vector<int> keep)
{
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> old_of;
    for (int k : keep)
        for (int x : a->component(k).objects)
            old_of.push_back(x);
    std::sort(old_of.begin(), old_of.end());
    std::vector<int> new_of(a->num_objects(), -1);
    for (std::size_t i = 0; i < old_of.size(); ++i)
        new_of[old_of[i]] = static_cast<int>(i);
    std::vector<Component> comps;
    for (int k : keep) {
        const auto& c = a->component(k);
        std::vector<int> objs;
        for (int x : c.objects)
            objs.push_back(new_of[x]);
        comps.push_back({new_of[c.rep], std::move(objs), c.aut});
    }
    auto sub = std::make_shared<const FiniteGroupoid>(static_cast<int>(old_of.size()), std::move(comps));
    auto inc = Functor::from_map(sub, a, old_of,
                                 [&](const Mor& m) { return Mor{old_of[m.src], old_of[m.tgt], m.aut}; });
    return {sub, std::move(inc), std::move(old_of)};
}

/// The discrete groupoid on the objects of A, with its identity-on-objects functor to A.
inline Functor discretization(const GroupoidPtr& a)
{
    auto d = discrete_groupoid(a->num_objects());
    std::vector<int> obj(a->num_objects());
    std::iota(obj.begin(), obj.end(), 0);
    return Functor::from_map(d, a, obj, [&](const Mor& m) { return a->identity(m.src); });
}

} // namespace hallkit
