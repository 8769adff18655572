/**
 * @file functor.hpp
 * @brief Functors between normal-form groupoids and the equivalence test.
 *
 * A functor is determined by its object map, the images F(t_x) of the
 * transports and the homomorphisms Aut(rep) -> Aut(F(rep)); everything else
 * follows from F(t_y rho(a) t_x^{-1}) = F(t_y) F(rho(a)) F(t_x)^{-1}.
 */
#pragma once

#include "hallkit/exact/verdict.hpp"
#include "hallkit/groupoid/groupoid.hpp"

#include <functional>

namespace hallkit {

class Functor {
public:
    Functor() = default;

    Functor(GroupoidPtr src, GroupoidPtr tgt, std::vector<int> obj, std::vector<Mor> transport,
            std::vector<std::vector<Mor>> aut_image)
        : src_(std::move(src)), tgt_(std::move(tgt)), obj_(std::move(obj)),
          transport_(std::move(transport)), aut_image_(std::move(aut_image))
    {
        validate();
    }

    /// Builds from an object map and a morphism map; only the images of
    /// transports and of representative automorphisms are consulted.
    template <class MorFn>
    static Functor from_map(GroupoidPtr src, GroupoidPtr tgt, std::vector<int> obj, MorFn&& mor)
    {
        const FiniteGroupoid& a = *src;
        std::vector<Mor> tr(a.num_objects());
        for (int x = 0; x < a.num_objects(); ++x)
            tr[x] = mor(a.transport(x));
        std::vector<std::vector<Mor>> ai(a.num_components());
        for (int k = 0; k < a.num_components(); ++k) {
            const auto& c = a.component(k);
            ai[k].resize(c.aut->order());
            for (int s = 0; s < c.aut->order(); ++s)
                ai[k][s] = mor(Mor{c.rep, c.rep, s});
        }
        return Functor(std::move(src), std::move(tgt), std::move(obj), std::move(tr), std::move(ai));
    }

    static Functor identity(const GroupoidPtr& a)
    {
        std::vector<int> obj(a->num_objects());
        std::iota(obj.begin(), obj.end(), 0);
        return from_map(a, a, std::move(obj), [](const Mor& m) { return m; });
    }

    const GroupoidPtr& source() const { return src_; }
    const GroupoidPtr& target() const { return tgt_; }
    int operator()(int x) const { return obj_[x]; }
    const std::vector<int>& object_map() const { return obj_; }
    const std::vector<Mor>& transport_images() const { return transport_; }
    const std::vector<std::vector<Mor>>& aut_images() const { return aut_image_; }

    Mor apply(const Mor& m) const
    {
        const FiniteGroupoid& a = *src_;
        int k = a.component_of(m.src);
        if (a.component_of(m.tgt) != k)
            throw std::invalid_argument("morphism between different components");
        const Mor& ty = transport_[m.tgt];
        const Mor& tx = transport_[m.src];
        const Mor& r = aut_image_[k][m.aut];
        const FiniteGroup& g = tgt_->aut_of(ty.tgt);
        return {tx.tgt, ty.tgt, g.mul(g.mul(ty.aut, r.aut), g.inv(tx.aut))};
    }

    friend bool operator==(const Functor& f, const Functor& g)
    {
        return f.src_ == g.src_ && f.tgt_ == g.tgt_ && f.obj_ == g.obj_ &&
               f.transport_ == g.transport_ && f.aut_image_ == g.aut_image_;
    }

private:
    void validate() const
    {
        const FiniteGroupoid& a = *src_;
        const FiniteGroupoid& b = *tgt_;
        if (static_cast<int>(obj_.size()) != a.num_objects() ||
            static_cast<int>(transport_.size()) != a.num_objects() ||
            static_cast<int>(aut_image_.size()) != a.num_components())
            throw std::invalid_argument("functor data has the wrong shape");
        for (int x : obj_)
            if (x < 0 || x >= b.num_objects())
                throw std::invalid_argument("functor object image out of range");
        for (int x = 0; x < a.num_objects(); ++x) {
            const Mor& t = transport_[x];
            if (t.src != obj_[a.rep_of(x)] || t.tgt != obj_[x] || !b.isomorphic(t.src, t.tgt))
                throw std::invalid_argument("functor does not preserve source and target of transports");
            if (t.aut < 0 || t.aut >= b.aut_of(t.src).order())
                throw std::invalid_argument("functor transport image out of range");
        }
        for (int k = 0; k < a.num_components(); ++k) {
            const auto& c = a.component(k);
            if (!(transport_[c.rep] == b.identity(obj_[c.rep])))
                throw std::invalid_argument("functor does not preserve identities");
            const auto& img = aut_image_[k];
            const FiniteGroup& src_g = *c.aut;
            if (static_cast<int>(img.size()) != src_g.order())
                throw std::invalid_argument("functor automorphism image has the wrong size");
            int fr = obj_[c.rep];
            const FiniteGroup& tg = b.aut_of(fr);
            for (const auto& m : img)
                if (m.src != fr || m.tgt != fr || m.aut < 0 || m.aut >= tg.order())
                    throw std::invalid_argument("functor automorphism image is not an endomorphism");
            for (int s = 0; s < src_g.order(); ++s)
                for (int t = 0; t < src_g.order(); ++t)
                    if (img[src_g.mul(s, t)].aut != tg.mul(img[s].aut, img[t].aut))
                        throw std::invalid_argument("functor does not preserve composition");
        }
    }

    GroupoidPtr src_;
    GroupoidPtr tgt_;
    std::vector<int> obj_;
    std::vector<Mor> transport_;
    std::vector<std::vector<Mor>> aut_image_;
};

/// g o f.
inline Functor compose(const Functor& g, const Functor& f)
{
    if (f.target() != g.source())
        throw std::invalid_argument("composing functors with mismatched groupoids");
    std::vector<int> obj(f.object_map().size());
    for (std::size_t x = 0; x < obj.size(); ++x)
        obj[x] = g(f(static_cast<int>(x)));
    return Functor::from_map(f.source(), g.target(), std::move(obj),
                             [&](const Mor& m) { return g.apply(f.apply(m)); });
}

/// The functor x -> eta_x.tgt, m -> eta_y F(m) eta_x^{-1}, naturally isomorphic to F via eta.
inline Functor conjugate(const Functor& f, const std::vector<Mor>& eta)
{
    const FiniteGroupoid& b = *f.target();
    const int n = f.source()->num_objects();
    if (static_cast<int>(eta.size()) != n)
        throw std::invalid_argument("natural transformation needs one component per object");
    std::vector<int> obj(n);
    for (int x = 0; x < n; ++x) {
        if (eta[x].src != f(x) || !b.isomorphic(eta[x].src, eta[x].tgt))
            throw std::invalid_argument("natural transformation component has wrong source");
        obj[x] = eta[x].tgt;
    }
    return Functor::from_map(f.source(), f.target(), std::move(obj), [&](const Mor& m) {
        return b.compose(eta[m.tgt], b.compose(f.apply(m), b.inverse(eta[m.src])));
    });
}

/// Essentially surjective and fully faithful, decided on representatives.
inline Verdict is_equivalence(const Functor& f, std::size_t max_witnesses = 8)
{
    const FiniteGroupoid& a = *f.source();
    const FiniteGroupoid& b = *f.target();
    Verdict v;
    auto note = [&](std::string w) {
        if (v.witnesses.size() < max_witnesses)
            v.fail(std::move(w));
        else
            v.pass = false;
    };
    std::vector<int> hit(b.num_components(), -1);
    for (int k = 0; k < a.num_components(); ++k) {
        const auto& c = a.component(k);
        int fr = f(c.rep);
        int j = b.component_of(fr);
        if (hit[j] >= 0) {
            int other = a.component(hit[j]).rep;
            note("not full: Hom(" + std::to_string(other) + "," + std::to_string(c.rep) +
                 ") has size 0 but Hom(" + std::to_string(f(other)) + "," + std::to_string(fr) +
                 ") has size " + std::to_string(b.aut_of(fr).order()));
            continue;
        }
        hit[j] = k;
        int na = c.aut->order(), nb = b.aut_of(fr).order();
        std::vector<char> seen(nb, 0);
        bool injective = true;
        for (const auto& m : f.aut_images()[k]) {
            if (seen[m.aut])
                injective = false;
            seen[m.aut] = 1;
        }
        if (!injective)
            note("not faithful: Aut(" + std::to_string(c.rep) + ") of size " + std::to_string(na) +
                 " maps non-injectively into Aut(" + std::to_string(fr) + ") of size " +
                 std::to_string(nb));
        else if (na != nb)
            note("not full: Hom(" + std::to_string(c.rep) + "," + std::to_string(c.rep) +
                 ") has size " + std::to_string(na) + " but Hom(" + std::to_string(fr) + "," +
                 std::to_string(fr) + ") has size " + std::to_string(nb));
    }
    for (int j = 0; j < b.num_components(); ++j)
        if (hit[j] < 0)
            note("not essentially surjective: object " + std::to_string(b.component(j).rep) +
                 " is not in the essential image");
    return v;
}

} // namespace hallkit
