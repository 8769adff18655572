/**
 * @file hecke.hpp
 * @brief Hecke-Waldhausen simplicial groupoids BK_0 x_BG ... x_BG BK_n, the
 * Hecke algebra of H-biinvariant functions and its module on H\G/P.
 *
 * An object of the iterated fiber product is (phi_1, ..., phi_n) in G^n,
 * numbered in mixed radix with phi_1 most significant, and a morphism is
 * (h_0, ..., h_n) acting by phi_i -> h_i phi_i h_{i-1}^{-1}.
 */
#pragma once

#include "hallkit/groupoid/transfer.hpp"
#include "hallkit/waldhausen/action_model.hpp"
#include "hallkit/waldhausen/simplicial.hpp"

namespace hallkit {

class FiberChain {
public:
    /// P_0 = BK_0 and P_j = P_{j-1} x_BG BK_j for inclusions K_j -> G.
    FiberChain(std::vector<GroupHom> incl, std::size_t budget = kDefaultBudget) : incl_(std::move(incl))
    {
        if (incl_.empty())
            throw std::invalid_argument("fiber chain needs at least one subgroup");
        g_ = incl_.front().target();
        bg_ = classifying_groupoid(g_);
        for (const auto& h : incl_) {
            if (h.target() != g_)
                throw std::invalid_argument("fiber chain subgroups must share the ambient group");
            if (h.kernel_order() != 1)
                throw std::invalid_argument("subgroup map is not injective");
        }
        for (const auto& h : incl_) {
            auto bk = classifying_groupoid(h.source());
            bk_.push_back(bk);
            to_g_.push_back(classifying_functor(h, bk, bg_));
        }
        Functor pi = to_g_[0];
        for (std::size_t j = 1; j < incl_.size(); ++j) {
            fps_.emplace_back(pi, to_g_[j], budget);
            pi = compose(to_g_[j], fps_.back().proj_b());
        }
    }

    int top() const { return static_cast<int>(fps_.size()); }
    const GroupPtr& ambient() const { return g_; }
    const GroupHom& inclusion(int j) const { return incl_[j]; }
    const GroupoidPtr& level(int j) const { return j == 0 ? bk_[0] : fps_[j - 1].groupoid(); }

    std::vector<int> coords(int j, int x) const
    {
        std::vector<int> phi(j);
        for (int i = j; i-- > 0;) {
            phi[i] = x % g_->order();
            x /= g_->order();
        }
        return phi;
    }

    int object(int j, const std::vector<int>& phi) const
    {
        if (static_cast<int>(phi.size()) != j)
            throw std::invalid_argument("wrong number of coordinates");
        long x = 0;
        for (int v : phi)
            x = x * g_->order() + v;
        return static_cast<int>(x);
    }

    /// (h_0, ..., h_j), each an element of its own K_i.
    std::vector<int> elements(int j, const Mor& m) const
    {
        if (j == 0)
            return {m.aut};
        const auto& fp = fps_[j - 1];
        auto h = elements(j - 1, fp.proj_a().apply(m));
        h.push_back(fp.proj_b().apply(m).aut);
        return h;
    }

    Mor morphism(int j, int x, int y, const std::vector<int>& h) const
    {
        if (j == 0)
            return {0, 0, h[0]};
        const auto& fp = fps_[j - 1];
        Mor alpha = morphism(j - 1, fp.a_of(x), fp.a_of(y), std::vector<int>(h.begin(), h.begin() + j));
        return fp.morphism_from_pair(x, y, alpha, Mor{0, 0, h[j]});
    }

    /// The action h.phi with h in K_0 x ... x K_j.
    std::vector<int> act(const std::vector<int>& h, const std::vector<int>& phi) const
    {
        const FiniteGroup& G = *g_;
        std::vector<int> out(phi.size());
        for (std::size_t i = 0; i < phi.size(); ++i)
            out[i] = G.mul(G.mul(incl_[i + 1](h[i + 1]), phi[i]), G.inv(incl_[i](h[i])));
        return out;
    }

private:
    std::vector<GroupHom> incl_;
    GroupPtr g_;
    GroupoidPtr bg_;
    std::vector<GroupoidPtr> bk_;
    std::vector<Functor> to_g_;
    std::vector<FiberProduct> fps_;
};

/// The functor P_j -> Q_k given on coordinates and on group elements.
template <class ObjFn, class ElemFn>
Functor chain_map(const FiberChain& from, int j, const FiberChain& to, int k, ObjFn&& objfn, ElemFn&& elemfn)
{
    const auto& src = from.level(j);
    std::vector<int> obj(src->num_objects());
    for (int x = 0; x < src->num_objects(); ++x)
        obj[x] = to.object(k, objfn(from.coords(j, x)));
    return Functor::from_map(src, to.level(k), obj, [&](const Mor& m) {
        return to.morphism(k, obj[m.src], obj[m.tgt], elemfn(from.elements(j, m)));
    });
}

/// H^{n+1} acting on G^n directly, for the equivalence postcondition.
inline ActionModel hecke_action_model(const FiberChain& chain, int n, std::size_t budget = kDefaultBudget)
{
    ActionModel::Block blk;
    for (int i = 0; i <= n; ++i)
        blk.factors.push_back(chain.inclusion(i).source());
    long pts = 1;
    for (int i = 0; i < n; ++i)
        pts *= chain.ambient()->order();
    blk.num_points = static_cast<int>(pts);
    blk.act = [&chain, n](const GroupElem& h, int x) { return chain.object(n, chain.act(h, chain.coords(n, x))); };
    return ActionModel({std::move(blk)}, budget);
}

struct HeckeWaldhausen {
    std::shared_ptr<const FiberChain> chain;
    TruncatedSimplicialGroupoid simplicial;
};

namespace detail {

inline std::vector<int> drop(std::vector<int> v, int i)
{
    v.erase(v.begin() + i);
    return v;
}

inline std::vector<int> insert_at(std::vector<int> v, int i, int value)
{
    v.insert(v.begin() + i, value);
    return v;
}

} // namespace detail

/// X_n = BH x_BG ... x_BG BH (n+1 factors) for n <= top.
inline HeckeWaldhausen hecke_waldhausen(const GroupHom& incl, int top = 3, std::size_t budget = kDefaultBudget)
{
    if (top < 0 || top > 3)
        throw std::invalid_argument("Hecke-Waldhausen construction is truncated at degree 3");
    auto chain = std::make_shared<const FiberChain>(std::vector<GroupHom>(top + 1, incl), budget);
    const FiberChain& c = *chain;
    const FiniteGroup& G = *c.ambient();
    HeckeWaldhausen hw{chain, {}};
    auto& x = hw.simplicial;
    x.name = "Hecke-Waldhausen(" + std::to_string(G.order()) + ", " + std::to_string(incl.source()->order()) + ")";
    for (int n = 0; n <= top; ++n)
        x.levels.push_back(c.level(n));
    x.faces.resize(top + 1);
    x.degeneracies.resize(top + 1);
    for (int n = 1; n <= top; ++n)
        for (int i = 0; i <= n; ++i)
            x.faces[n].push_back(chain_map(
                c, n, c, n - 1,
                [&](const std::vector<int>& phi) {
                    if (i == 0)
                        return detail::drop(phi, 0);
                    if (i == n)
                        return detail::drop(phi, n - 1);
                    auto out = detail::drop(phi, i);
                    out[i - 1] = G.mul(phi[i], phi[i - 1]);
                    return out;
                },
                [&](const std::vector<int>& h) { return detail::drop(h, i); }));
    for (int n = 0; n < top; ++n)
        for (int i = 0; i <= n; ++i)
            x.degeneracies[n].push_back(chain_map(
                c, n, c, n + 1,
                [&](const std::vector<int>& phi) { return detail::insert_at(phi, i, G.identity()); },
                [&](const std::vector<int>& h) { return detail::insert_at(h, i, h[i]); }));
    auto v = check_simplicial_identities(x);
    if (!v)
        throw std::logic_error("Hecke-Waldhausen construction violates a simplicial identity: " + v.witnesses.front());
    for (int n = 0; n <= top; ++n) {
        auto model = hecke_action_model(c, n, budget);
        auto cmp = Functor::from_map(model.groupoid(), c.level(n), std::vector<int>([&] {
                                         std::vector<int> id(model.groupoid()->num_objects());
                                         std::iota(id.begin(), id.end(), 0);
                                         return id;
                                     }()),
                                     [&](const Mor& m) { return c.morphism(n, m.src, m.tgt, model.element(m)); });
        auto eq = is_equivalence(cmp);
        if (!eq)
            throw std::logic_error("X_" + std::to_string(n) + " is not equivalent to the action groupoid: " +
                                   eq.witnesses.front());
    }
    return hw;
}

inline HeckeWaldhausen hecke_waldhausen(const GroupPtr& g, const std::vector<int>& h, int top = 3,
                                        std::size_t budget = kDefaultBudget)
{
    return hecke_waldhausen(make_subgroup(g, h), top, budget);
}

inline bool is_faithful(const Functor& f)
{
    for (const auto& img : f.aut_images()) {
        std::vector<int> seen;
        for (const auto& m : img)
            seen.push_back(m.aut);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            return false;
    }
    return true;
}

/// A basis of double cosets K\G/L, ordered by least element.
struct DoubleCosets {
    std::vector<std::vector<int>> cosets; // sorted element lists
    std::vector<int> coset_of;            // element -> index
};

inline DoubleCosets double_cosets(const GroupHom& left, const GroupHom& right)
{
    const FiniteGroup& G = *left.target();
    DoubleCosets d;
    d.coset_of.assign(G.order(), -1);
    for (int x = 0; x < G.order(); ++x) {
        if (d.coset_of[x] >= 0)
            continue;
        std::vector<int> c;
        for (int a : left.images())
            for (int b : right.images())
                c.push_back(G.mul(G.mul(a, x), G.inv(b)));
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        for (int y : c)
            d.coset_of[y] = static_cast<int>(d.cosets.size());
        d.cosets.push_back(std::move(c));
    }
    return d;
}

/// T_i T_j = sum_k constants[i][j][k] T_k on the basis of double cosets H\G/H.
struct HeckeTable {
    GroupPtr group;
    int subgroup_order = 0;
    DoubleCosets basis;
    int unit = 0;
    std::vector<std::vector<std::vector<Rat>>> constants;
    bool extremal_faithful = false;
    bool integral = false;

    int dim() const { return static_cast<int>(basis.cosets.size()); }
};

/// Function values on pi0 as a coefficient vector over double cosets of the
/// chain level 1 (objects are single group elements).
inline std::vector<Rat> coefficients_on_cosets(const SpanFn& f, const DoubleCosets& basis)
{
    std::vector<Rat> out(basis.cosets.size());
    for (std::size_t k = 0; k < basis.cosets.size(); ++k)
        out[k] = f.at_object(basis.cosets[k].front());
    return out;
}

inline SpanFn coset_delta(const GroupoidPtr& level1, const DoubleCosets& basis, int k)
{
    return SpanFn::delta(level1, basis.cosets[k].front());
}

/// Structure constants by pull-push along X_1 x X_1 <-(d_0, d_2)- X_2 -d_1-> X_1.
inline HeckeTable hecke_algebra(const GroupHom& incl, std::size_t budget = kDefaultBudget)
{
    auto hw = hecke_waldhausen(incl, 2, budget);
    const auto& x = hw.simplicial;
    HeckeTable t;
    t.group = incl.target();
    t.subgroup_order = incl.source()->order();
    t.basis = double_cosets(incl, incl);
    t.unit = t.basis.coset_of[t.group->identity()];
    auto x1 = x.levels[1];
    auto prod = product(x1, x1, budget);
    auto c = pair_functor(prod, x.d(2, 0), x.d(2, 2));
    const Functor& nu = x.d(2, 1);
    t.extremal_faithful = is_faithful(nu);
    const int n = t.dim();
    t.constants.assign(n, std::vector<std::vector<Rat>>(n));
    t.integral = true;
    Pushforward push(nu, budget);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto phi = external_product(prod, coset_delta(x1, t.basis, i), coset_delta(x1, t.basis, j));
            t.constants[i][j] = coefficients_on_cosets(push(pullback_fn(c, phi)), t.basis);
            for (const auto& r : t.constants[i][j])
                t.integral = t.integral && is_integer(r);
        }
    return t;
}

inline Verdict check_hecke_associativity(const HeckeTable& t)
{
    Verdict v;
    const int n = t.dim();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    Rat lhs = 0, rhs = 0;
                    for (int k = 0; k < n; ++k) {
                        lhs += t.constants[a][b][k] * t.constants[k][c][d];
                        rhs += t.constants[b][c][k] * t.constants[a][k][d];
                    }
                    if (lhs != rhs)
                        v.fail("(T_" + std::to_string(a) + " T_" + std::to_string(b) + ") T_" + std::to_string(c) +
                               " != T_" + std::to_string(a) + " (T_" + std::to_string(b) + " T_" + std::to_string(c) +
                               ") at T_" + std::to_string(d));
                }
    return v;
}

inline Verdict check_hecke_unit(const HeckeTable& t)
{
    Verdict v;
    const int n = t.dim();
    for (int a = 0; a < n; ++a)
        for (int k = 0; k < n; ++k) {
            Rat e = a == k ? 1 : 0;
            if (t.constants[t.unit][a][k] != e || t.constants[a][t.unit][k] != e)
                v.fail("T_" + std::to_string(t.unit) + " is not a unit on T_" + std::to_string(a));
        }
    return v;
}

/// T_i . v_a = sum_b action[i][a][b] v_b, with v_a the double cosets H\G/P.
struct HeckeModuleTable {
    GroupPtr group;
    DoubleCosets algebra_basis;
    DoubleCosets module_basis;
    std::vector<std::vector<std::vector<Rat>>> action;
};

/// Action by pull-push along X_1 x Y_0 <- Y_1 -> Y_0 with Y_n = BP x_BG BH x_BG ... x_BG BH.
inline HeckeModuleTable hecke_module(const GroupHom& h, const GroupHom& p, std::size_t budget = kDefaultBudget)
{
    if (h.target() != p.target())
        throw std::invalid_argument("H and P must be subgroups of the same group");
    const FiniteGroup& G = *h.target();
    FiberChain xc({h, h}, budget);
    FiberChain yc({p, h, h}, budget);
    auto x1 = xc.level(1);
    auto y0 = yc.level(1);
    HeckeModuleTable t;
    t.group = h.target();
    t.algebra_basis = double_cosets(h, h);
    t.module_basis = double_cosets(h, p);
    // Y_1 objects (psi, phi_1) with morphisms (p, h_0, h_1)
    auto to_x1 = chain_map(
        yc, 2, xc, 1, [](const std::vector<int>& c) { return std::vector<int>{c[1]}; },
        [](const std::vector<int>& e) { return std::vector<int>{e[1], e[2]}; });
    auto to_y0 = chain_map(
        yc, 2, yc, 1, [](const std::vector<int>& c) { return std::vector<int>{c[0]}; },
        [](const std::vector<int>& e) { return std::vector<int>{e[0], e[1]}; });
    auto nu = chain_map(
        yc, 2, yc, 1, [&](const std::vector<int>& c) { return std::vector<int>{G.mul(c[1], c[0])}; },
        [](const std::vector<int>& e) { return std::vector<int>{e[0], e[2]}; });
    auto prod = product(x1, y0, budget);
    auto c = pair_functor(prod, to_x1, to_y0);
    const int na = static_cast<int>(t.algebra_basis.cosets.size());
    const int nm = static_cast<int>(t.module_basis.cosets.size());
    t.action.assign(na, std::vector<std::vector<Rat>>(nm));
    Pushforward push(nu, budget);
    for (int i = 0; i < na; ++i)
        for (int a = 0; a < nm; ++a) {
            auto phi = external_product(prod, coset_delta(x1, t.algebra_basis, i),
                                        coset_delta(y0, t.module_basis, a));
            t.action[i][a] = coefficients_on_cosets(push(pullback_fn(c, phi)), t.module_basis);
        }
    return t;
}

/// (T_i T_j) v = T_i (T_j v) and T_unit v = v.
inline Verdict check_module_axioms(const HeckeTable& alg, const HeckeModuleTable& mod)
{
    Verdict v;
    if (alg.basis.cosets != mod.algebra_basis.cosets) {
        v.fail("module and algebra use different double coset bases");
        return v;
    }
    const int na = alg.dim();
    const int nm = static_cast<int>(mod.module_basis.cosets.size());
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            for (int a = 0; a < nm; ++a)
                for (int b = 0; b < nm; ++b) {
                    Rat lhs = 0, rhs = 0;
                    for (int k = 0; k < na; ++k)
                        lhs += alg.constants[i][j][k] * mod.action[k][a][b];
                    for (int c = 0; c < nm; ++c)
                        rhs += mod.action[j][a][c] * mod.action[i][c][b];
                    if (lhs != rhs)
                        v.fail("(T_" + std::to_string(i) + " T_" + std::to_string(j) + ") v_" + std::to_string(a) +
                               " != T_" + std::to_string(i) + " (T_" + std::to_string(j) + " v_" +
                               std::to_string(a) + ") at v_" + std::to_string(b));
                }
    for (int a = 0; a < nm; ++a)
        for (int b = 0; b < nm; ++b)
            if (mod.action[alg.unit][a][b] != Rat(a == b ? 1 : 0))
                v.fail("unit does not act trivially on v_" + std::to_string(a));
    return v;
}

} // namespace hallkit
