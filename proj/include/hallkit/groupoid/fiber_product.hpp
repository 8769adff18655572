/**
 * @file fiber_product.hpp
 * @brief 2-fiber products A x_D B of normal-form groupoids.
 *
 * Objects are triples (a, b, phi) with phi: f(a) -> g(b); since Hom(f(a), g(b))
 * is identified with Aut of the D-component, phi is stored as an element k of
 * that group. Objects are numbered by a, then b, then k. A component is an
 * orbit of Aut(a_r) x Aut(b_r) acting on Hom(f(a_r), g(b_r)) by
 * (alpha, beta).phi = g(beta) phi f(alpha)^{-1}, and its automorphism group is
 * the stabilizer of the orbit minimum.
 */
#pragma once

#include "hallkit/groupoid/functor.hpp"

#include <map>

namespace hallkit {

class FiberProduct {
public:
    FiberProduct(Functor f, Functor g, std::size_t budget = kDefaultBudget)
        : f_(std::move(f)), g_(std::move(g))
    {
        if (f_.target() != g_.target())
            throw std::invalid_argument("fiber product needs functors with a common target");
        build(budget);
    }

    const GroupoidPtr& groupoid() const { return fp_; }
    const Functor& f() const { return f_; }
    const Functor& g() const { return g_; }
    const Functor& proj_a() const { return pa_; }
    const Functor& proj_b() const { return pb_; }

    int a_of(int x) const { return oa_[x]; }
    int b_of(int x) const { return ob_[x]; }
    /// The connecting isomorphism phi_x: f(a) -> g(b).
    Mor phi(int x) const { return {f_(oa_[x]), g_(ob_[x]), ok_[x]}; }

    /// Object (a, b, phi) where phi is given by its Aut element; -1 if f(a), g(b) not isomorphic.
    long object_id(int a, int b, int k) const
    {
        const auto& D = *f_.target();
        if (D.component_of(f_(a)) != D.component_of(g_(b)))
            return -1;
        return offset_[a] + static_cast<long>(rank_b_[b]) * D.aut_of(f_(a)).order() + k;
    }

    /// The morphism (alpha, beta): x -> y; throws unless g(beta) phi_x = phi_y f(alpha).
    Mor morphism_from_pair(int x, int y, const Mor& alpha, const Mor& beta) const
    {
        const auto& A = *f_.source();
        const auto& B = *g_.source();
        const auto& D = *f_.target();
        if (alpha.src != oa_[x] || alpha.tgt != oa_[y] || beta.src != ob_[x] || beta.tgt != ob_[y])
            throw std::invalid_argument("pair does not connect the given fiber-product objects");
        Mor lhs = D.compose(g_.apply(beta), phi(x));
        Mor rhs = D.compose(phi(y), f_.apply(alpha));
        if (!(lhs == rhs))
            throw std::invalid_argument("pair is not a morphism of the fiber product");
        const FiniteGroup& ga = A.aut_of(alpha.src);
        const FiniteGroup& gb = B.aut_of(beta.src);
        int sa = ga.mul(ga.mul(ga.inv(ta_[y]), alpha.aut), ta_[x]);
        int sb = gb.mul(gb.mul(gb.inv(tb_[y]), beta.aut), tb_[x]);
        int comp = fp_->component_of(x);
        long code = static_cast<long>(sa) * gb.order() + sb;
        const auto& codes = stab_codes_[comp];
        auto it = std::lower_bound(codes.begin(), codes.end(), code);
        if (it == codes.end() || *it != code)
            throw std::logic_error("fiber product stabilizer lookup failed");
        return {x, y, static_cast<int>(it - codes.begin())};
    }

    /// The functor X -> A x_D B induced by p, q and a natural isomorphism
    /// theta: f p => g q given by its components theta(x): f(p x) -> g(q x).
    Functor induced(const Functor& p, const Functor& q, const std::function<Mor(int)>& theta) const
    {
        if (p.source() != q.source() || p.target() != f_.source() || q.target() != g_.source())
            throw std::invalid_argument("induced functor: legs do not match the cospan");
        const int n = p.source()->num_objects();
        std::vector<int> obj(n);
        for (int x = 0; x < n; ++x) {
            Mor t = theta(x);
            if (t.src != f_(p(x)) || t.tgt != g_(q(x)))
                throw std::invalid_argument("induced functor: theta has the wrong endpoints");
            obj[x] = static_cast<int>(object_id(p(x), q(x), t.aut));
        }
        return Functor::from_map(p.source(), fp_, obj, [&](const Mor& m) {
            return morphism_from_pair(obj[m.src], obj[m.tgt], p.apply(m), q.apply(m));
        });
    }

private:
    void build(std::size_t budget)
    {
        const auto& A = *f_.source();
        const auto& B = *g_.source();
        const auto& D = *f_.target();

        std::vector<std::vector<int>> b_over(D.num_components());
        std::vector<std::vector<int>> bcomps_over(D.num_components());
        rank_b_.assign(B.num_objects(), 0);
        for (int b = 0; b < B.num_objects(); ++b) {
            auto& lst = b_over[D.component_of(g_(b))];
            rank_b_[b] = static_cast<int>(lst.size());
            lst.push_back(b);
        }
        for (int j = 0; j < B.num_components(); ++j)
            bcomps_over[D.component_of(g_(B.component(j).rep))].push_back(j);

        offset_.assign(A.num_objects(), 0);
        std::size_t total = 0;
        for (int a = 0; a < A.num_objects(); ++a) {
            offset_[a] = static_cast<long>(total);
            int d = D.component_of(f_(a));
            total += b_over[d].size() * static_cast<std::size_t>(D.component(d).aut->order());
            if (total > budget)
                throw BudgetExceeded("fiber product has more than " + std::to_string(budget) + " objects");
        }
        const int n = static_cast<int>(total);
        oa_.assign(n, 0);
        ob_.assign(n, 0);
        ok_.assign(n, 0);
        ta_.assign(n, 0);
        tb_.assign(n, 0);

        struct Raw {
            int rep;
            int ca, cb;
            std::vector<long> codes;
            GroupPtr group;
            std::vector<int> objects;
        };
        std::vector<Raw> raw;

        for (int ca = 0; ca < A.num_components(); ++ca) {
            const auto& CA = A.component(ca);
            const int ar = CA.rep;
            const int d = D.component_of(f_(ar));
            const FiniteGroup& K = *D.component(d).aut;
            const FiniteGroup& Ga = *CA.aut;
            const auto& u = f_.aut_images()[ca];
            for (int cb : bcomps_over[d]) {
                const auto& CB = B.component(cb);
                const FiniteGroup& Gb = *CB.aut;
                const auto& v = g_.aut_images()[cb];
                const int nk = K.order();

                // orbits on K, with a group element carrying the minimum to each point
                std::vector<int> orbit_of(nk, -1);
                std::vector<std::pair<int, int>> gamma(nk);
                std::vector<int> orbit_min;
                const auto gens_a = Ga.generators();
                const auto gens_b = Gb.generators();
                for (int m = 0; m < nk; ++m) {
                    if (orbit_of[m] >= 0)
                        continue;
                    int id = static_cast<int>(orbit_min.size());
                    orbit_min.push_back(m);
                    orbit_of[m] = id;
                    gamma[m] = {Ga.identity(), Gb.identity()};
                    std::vector<int> queue{m};
                    for (std::size_t i = 0; i < queue.size(); ++i) {
                        int k = queue[i];
                        auto [al, be] = gamma[k];
                        for (int s : gens_a) {
                            int k2 = K.mul(k, K.inv(u[s].aut));
                            if (orbit_of[k2] < 0) {
                                orbit_of[k2] = id;
                                gamma[k2] = {Ga.mul(s, al), be};
                                queue.push_back(k2);
                            }
                        }
                        for (int s : gens_b) {
                            int k2 = K.mul(v[s].aut, k);
                            if (orbit_of[k2] < 0) {
                                orbit_of[k2] = id;
                                gamma[k2] = {al, Gb.mul(s, be)};
                                queue.push_back(k2);
                            }
                        }
                    }
                }

                std::vector<std::vector<int>> fiber(nk);
                for (int s = 0; s < Gb.order(); ++s)
                    fiber[v[s].aut].push_back(s);
                std::map<std::vector<long>, GroupPtr> cache;
                const int base = static_cast<int>(raw.size());
                for (int m : orbit_min) {
                    Raw r;
                    r.ca = ca;
                    r.cb = cb;
                    for (int al = 0; al < Ga.order(); ++al)
                        for (int be : fiber[K.mul(K.mul(m, u[al].aut), K.inv(m))])
                            r.codes.push_back(static_cast<long>(al) * Gb.order() + be);
                    std::sort(r.codes.begin(), r.codes.end());
                    auto it = cache.find(r.codes);
                    if (it == cache.end()) {
                        GroupPtr grp;
                        if (r.codes.size() == 1) {
                            grp = trivial_group();
                        } else {
                            const auto& codes = r.codes;
                            const long nbo = Gb.order();
                            auto pos = [&](long c) {
                                return static_cast<int>(std::lower_bound(codes.begin(), codes.end(), c) -
                                                        codes.begin());
                            };
                            grp = std::make_shared<const FiniteGroup>(FiniteGroup::from_function(
                                static_cast<int>(codes.size()), [&](int x, int y) {
                                    long cx = codes[x], cy = codes[y];
                                    return pos(Ga.mul(static_cast<int>(cx / nbo), static_cast<int>(cy / nbo)) * nbo +
                                               Gb.mul(static_cast<int>(cx % nbo), static_cast<int>(cy % nbo)));
                                }));
                        }
                        it = cache.emplace(r.codes, grp).first;
                    }
                    r.group = it->second;
                    raw.push_back(std::move(r));
                }

                for (int a : CA.objects) {
                    const Mor& fta = f_.transport_images()[a];
                    for (int b : CB.objects) {
                        const Mor gtb_inv = D.inverse(g_.transport_images()[b]);
                        for (int k = 0; k < nk; ++k) {
                            Mor ph{f_(a), g_(b), k};
                            // kappa = g(t_b)^{-1} phi f(t_a)
                            Mor kap = D.compose(gtb_inv, D.compose(ph, fta));
                            int x = static_cast<int>(offset_[a] + static_cast<long>(rank_b_[b]) * nk + k);
                            oa_[x] = a;
                            ob_[x] = b;
                            ok_[x] = k;
                            ta_[x] = gamma[kap.aut].first;
                            tb_[x] = gamma[kap.aut].second;
                            raw[base + orbit_of[kap.aut]].objects.push_back(x);
                        }
                    }
                }
                for (std::size_t i = base; i < raw.size(); ++i)
                    raw[i].rep = raw[i].objects.empty() ? -1 : *std::min_element(raw[i].objects.begin(), raw[i].objects.end());
            }
        }

        std::vector<int> order(raw.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int x, int y) { return raw[x].rep < raw[y].rep; });
        std::vector<Component> comps;
        comp_ca_.clear();
        comp_cb_.clear();
        stab_codes_.clear();
        for (int i : order) {
            auto& r = raw[i];
            comps.push_back({r.rep, std::move(r.objects), r.group});
            comp_ca_.push_back(r.ca);
            comp_cb_.push_back(r.cb);
            stab_codes_.push_back(std::move(r.codes));
        }
        fp_ = std::make_shared<const FiniteGroupoid>(n, std::move(comps), budget);

        // projections
        std::vector<Mor> tra(n), trb(n);
        for (int x = 0; x < n; ++x) {
            tra[x] = {A.rep_of(oa_[x]), oa_[x], ta_[x]};
            trb[x] = {B.rep_of(ob_[x]), ob_[x], tb_[x]};
        }
        std::vector<std::vector<Mor>> aia(fp_->num_components()), aib(fp_->num_components());
        for (int c = 0; c < fp_->num_components(); ++c) {
            const int nbo = B.component(comp_cb_[c]).aut->order();
            const int ar = A.component(comp_ca_[c]).rep;
            const int br = B.component(comp_cb_[c]).rep;
            for (long code : stab_codes_[c]) {
                aia[c].push_back({ar, ar, static_cast<int>(code / nbo)});
                aib[c].push_back({br, br, static_cast<int>(code % nbo)});
            }
        }
        pa_ = Functor(fp_, f_.source(), oa_, std::move(tra), std::move(aia));
        pb_ = Functor(fp_, g_.source(), ob_, std::move(trb), std::move(aib));
    }

    Functor f_, g_;
    GroupoidPtr fp_;
    Functor pa_, pb_;
    std::vector<int> oa_, ob_, ok_, ta_, tb_;
    std::vector<long> offset_;
    std::vector<int> rank_b_;
    std::vector<int> comp_ca_, comp_cb_;
    std::vector<std::vector<long>> stab_codes_;
};

} // namespace hallkit
