/**
 * @file groupoid.hpp
 * @brief Finite groupoids in normal form.
 *
 * Each connected component carries a representative (its least object) and
 * an explicit automorphism group of that representative. Every object x has
 * an implicit transport t_x: rep -> x, and the morphism Mor{x, y, a} stands for
 * t_y o rho(a) o t_x^{-1}. Hom(x, y) is in bijection with Aut(rep) whenever x
 * and y share a component, so all hom-set questions reduce to group questions.
 */
#pragma once

#include "hallkit/group/finite_group.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hallkit {

struct Mor {
    int src = 0;
    int tgt = 0;
    int aut = 0;
    friend bool operator==(const Mor&, const Mor&) = default;
};

struct Component {
    int rep = 0;
    std::vector<int> objects; // sorted, objects.front() == rep
    GroupPtr aut;
};

inline GroupPtr trivial_group()
{
    static const GroupPtr g = std::make_shared<const FiniteGroup>();
    return g;
}

class FiniteGroupoid {
public:
    FiniteGroupoid() = default;

    /// Components may be given in any order; they are sorted by representative.
    FiniteGroupoid(int num_objects, std::vector<Component> comps, std::size_t budget = kDefaultBudget)
        : n_(num_objects), comps_(std::move(comps))
    {
        std::size_t cost = static_cast<std::size_t>(n_);
        for (const auto& c : comps_)
            cost += static_cast<std::size_t>(c.aut->order());
        if (cost > budget)
            throw BudgetExceeded("groupoid needs " + std::to_string(cost) +
                                 " objects plus automorphisms, budget is " + std::to_string(budget));
        std::sort(comps_.begin(), comps_.end(),
                  [](const Component& a, const Component& b) { return a.rep < b.rep; });
        comp_of_.assign(n_, -1);
        for (std::size_t k = 0; k < comps_.size(); ++k) {
            auto& c = comps_[k];
            if (c.objects.empty() || !c.aut)
                throw std::invalid_argument("groupoid component is empty");
            std::sort(c.objects.begin(), c.objects.end());
            if (c.objects.front() != c.rep)
                throw std::invalid_argument("component representative must be its least object");
            for (int x : c.objects) {
                if (x < 0 || x >= n_ || comp_of_[x] >= 0)
                    throw std::invalid_argument("components must partition the objects");
                comp_of_[x] = static_cast<int>(k);
            }
        }
        for (int x = 0; x < n_; ++x)
            if (comp_of_[x] < 0)
                throw std::invalid_argument("object " + std::to_string(x) + " lies in no component");
    }

    int num_objects() const { return n_; }
    int num_components() const { return static_cast<int>(comps_.size()); }
    const std::vector<Component>& components() const { return comps_; }
    const Component& component(int k) const { return comps_[k]; }
    int component_of(int x) const { return comp_of_[x]; }
    int rep_of(int x) const { return comps_[comp_of_[x]].rep; }
    const FiniteGroup& aut_of(int x) const { return *comps_[comp_of_[x]].aut; }

    bool isomorphic(int x, int y) const { return comp_of_[x] == comp_of_[y]; }
    long hom_size(int x, int y) const { return isomorphic(x, y) ? aut_of(x).order() : 0; }

    long long morphism_count() const
    {
        long long total = 0;
        for (const auto& c : comps_)
            total += static_cast<long long>(c.objects.size()) * c.objects.size() * c.aut->order();
        return total;
    }

    Mor identity(int x) const { return {x, x, aut_of(x).identity()}; }
    Mor transport(int x) const { return {rep_of(x), x, aut_of(x).identity()}; }
    Mor morphism(int x, int y, int aut) const
    {
        if (!isomorphic(x, y))
            throw std::invalid_argument("no morphism between objects in different components");
        return {x, y, aut};
    }

    /// g o f.
    Mor compose(const Mor& g, const Mor& f) const
    {
        if (g.src != f.tgt)
            throw std::invalid_argument("composing non-composable morphisms");
        return {f.src, g.tgt, aut_of(f.src).mul(g.aut, f.aut)};
    }
    Mor inverse(const Mor& f) const { return {f.tgt, f.src, aut_of(f.src).inv(f.aut)}; }

    /// Cardinality sum 1/#Aut over components.
    Rat cardinality() const
    {
        Rat r = 0;
        for (const auto& c : comps_)
            r += Rat(1, c.aut->order());
        return r;
    }

private:
    int n_ = 0;
    std::vector<Component> comps_;
    std::vector<int> comp_of_;
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

struct ComponentInfo {
    int rep;
    int size;
    int aut_order;
};

inline std::vector<ComponentInfo> pi0(const FiniteGroupoid& a)
{
    std::vector<ComponentInfo> out;
    for (const auto& c : a.components())
        out.push_back({c.rep, static_cast<int>(c.objects.size()), c.aut->order()});
    return out;
}

inline Rat cardinality(const FiniteGroupoid& a) { return a.cardinality(); }

/// BG: one object with automorphism group g.
inline GroupoidPtr classifying_groupoid(GroupPtr g)
{
    return std::make_shared<const FiniteGroupoid>(1, std::vector<Component>{{0, {0}, std::move(g)}});
}

inline GroupoidPtr point_groupoid() { return classifying_groupoid(trivial_group()); }

/// k objects, no non-identity morphisms.
inline GroupoidPtr discrete_groupoid(int k)
{
    std::vector<Component> comps;
    for (int x = 0; x < k; ++x)
        comps.push_back({x, {x}, trivial_group()});
    return std::make_shared<const FiniteGroupoid>(k, std::move(comps));
}

/// Action groupoid of a group acting on points 0..n-1 by act(g, x), up to
/// the choice of transports: components are orbits, Aut is the stabilizer of
/// the orbit minimum.
template <class Act>
GroupoidPtr action_groupoid(const GroupPtr& g, int n, Act&& act, std::size_t budget = kDefaultBudget)
{
    std::vector<int> seen(n, 0);
    std::vector<Component> comps;
    const auto gens = g->generators();
    for (int x0 = 0; x0 < n; ++x0) {
        if (seen[x0])
            continue;
        std::vector<int> orbit{x0};
        seen[x0] = 1;
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (int s : gens) {
                int y = act(s, orbit[i]);
                if (!seen[y]) {
                    seen[y] = 1;
                    orbit.push_back(y);
                }
            }
        std::vector<int> stab;
        for (int h = 0; h < g->order(); ++h)
            if (act(h, x0) == x0)
                stab.push_back(h);
        auto sub = make_subgroup(g, stab);
        comps.push_back({x0, std::move(orbit), sub.source()});
    }
    return std::make_shared<const FiniteGroupoid>(n, std::move(comps), budget);
}

} // namespace hallkit
