/**
 * @file category.hpp
 * @brief Concrete finitary proto-abelian categories on pointed finite sets.
 *
 * Every object is a finite set of points with a distinguished point 0 (the
 * zero element or the basepoint) and every morphism is the induced map of
 * points, so kernels and images are point subsets. Two instances:
 *   - finite abelian p-groups (vect-F_p is the elementary abelian part);
 *   - free F_1[G]-modules: point 1 + i*|G| + g stands for g.e_i, morphisms are
 *     G-equivariant pointed maps injective away from the preimage of 0.
 */
#pragma once

#include "hallkit/exact/partition.hpp"
#include "hallkit/group/families.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>

namespace hallkit {

/// Iso class key: additive size plus, for p-groups, the type partition.
struct IsoClass {
    int size = 0;
    Partition shape;

    friend bool operator==(const IsoClass&, const IsoClass&) = default;
    friend std::strong_ordering operator<=>(const IsoClass& a, const IsoClass& b)
    {
        if (auto c = a.size <=> b.size; c != 0)
            return c;
        return a.shape <=> b.shape;
    }
};

using PointMap = std::vector<int>;
using Mask = std::uint64_t;

inline Mask kernel_mask(const PointMap& f)
{
    Mask m = 0;
    for (std::size_t x = 0; x < f.size(); ++x)
        if (f[x] == 0)
            m |= Mask(1) << x;
    return m;
}

inline Mask image_mask(const PointMap& f)
{
    Mask m = 0;
    for (int y : f)
        m |= Mask(1) << y;
    return m;
}

/// g o f.
inline PointMap compose_maps(const PointMap& g, const PointMap& f)
{
    PointMap h(f.size());
    for (std::size_t x = 0; x < f.size(); ++x)
        h[x] = g[f[x]];
    return h;
}

inline int popcount(Mask m) { return __builtin_popcountll(m); }

class ConcreteCategory {
public:
    virtual ~ConcreteCategory() = default;

    /// All iso classes with size <= bound, canonical order.
    virtual std::vector<IsoClass> classes(int bound) const = 0;
    virtual int num_points(const IsoClass& c) const = 0;
    virtual std::string label(const IsoClass& c) const = 0;
    /// Closed-form automorphism count.
    virtual BigInt aut_order(const IsoClass& c) const = 0;
    /// Subobjects of c as point masks, each with the classes of U and c/U.
    struct SubInfo {
        Mask points;
        IsoClass sub;
        IsoClass quotient;
    };
    virtual std::vector<SubInfo> subobjects(const IsoClass& c) const = 0;
    virtual void check_class(const IsoClass& c) const = 0;

    IsoClass zero() const { return IsoClass{}; }

    /// Every morphism a -> b, cached.
    const std::vector<PointMap>& homs(const IsoClass& a, const IsoClass& b) const
    {
        std::lock_guard lock(mu_);
        auto key = std::make_pair(a, b);
        auto it = hom_cache_.find(key);
        if (it == hom_cache_.end())
            it = hom_cache_.emplace(key, enumerate_homs(a, b)).first;
        return it->second;
    }

    bool is_mono(const PointMap& f) const { return kernel_mask(f) == 1; }
    bool is_epi(const PointMap& f, const IsoClass& tgt) const
    {
        return popcount(image_mask(f)) == num_points(tgt);
    }
    bool is_iso(const PointMap& f, const IsoClass& tgt) const
    {
        return is_mono(f) && is_epi(f, tgt) && static_cast<int>(f.size()) == num_points(tgt);
    }

    PointMap identity_map(const IsoClass& c) const
    {
        PointMap f(num_points(c));
        std::iota(f.begin(), f.end(), 0);
        return f;
    }
    PointMap zero_map(const IsoClass& a) const { return PointMap(num_points(a), 0); }

    /// Automorphisms of c listed with the identity first, and their group.
    struct AutData {
        std::vector<PointMap> maps;
        std::map<PointMap, int> index;
        GroupPtr group;
    };
    const AutData& automorphisms(const IsoClass& c, std::size_t budget = kDefaultBudget) const
    {
        {
            std::lock_guard lock(mu_);
            auto it = aut_cache_.find(c);
            if (it != aut_cache_.end())
                return it->second;
        }
        if (aut_order(c) * aut_order(c) > BigInt(budget) * 16)
            throw BudgetExceeded("automorphism table of " + label(c) + " exceeds the budget");
        AutData d;
        d.maps.push_back(identity_map(c));
        for (const auto& f : homs(c, c))
            if (is_iso(f, c) && f != d.maps.front())
                d.maps.push_back(f);
        for (std::size_t i = 0; i < d.maps.size(); ++i)
            d.index.emplace(d.maps[i], static_cast<int>(i));
        const auto& maps = d.maps;
        const auto& index = d.index;
        d.group = std::make_shared<const FiniteGroup>(FiniteGroup::from_function(
            static_cast<int>(maps.size()),
            [&](int x, int y) { return index.at(compose_maps(maps[x], maps[y])); }));
        std::lock_guard lock(mu_);
        return aut_cache_.emplace(c, std::move(d)).first->second;
    }

protected:
    virtual std::vector<PointMap> enumerate_homs(const IsoClass& a, const IsoClass& b) const = 0;

private:
    mutable std::mutex mu_;
    mutable std::map<std::pair<IsoClass, IsoClass>, std::vector<PointMap>> hom_cache_;
    mutable std::map<IsoClass, AutData> aut_cache_;
};

/// Finite abelian p-groups; with elementary_only the category is vect-F_p.
class PGroupCategory : public ConcreteCategory {
public:
    PGroupCategory(int p, bool elementary_only) : p_(p), elementary_(elementary_only)
    {
        if (p < 2)
            throw std::invalid_argument("p must be a prime");
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw std::invalid_argument("p must be a prime (prime powers are not supported)");
    }

    int prime() const { return p_; }
    bool elementary_only() const { return elementary_; }

    /// Element count p^size; at most 64 so subobjects fit a 64-bit mask.
    static constexpr int kMaxPoints = 64;

    std::vector<IsoClass> classes(int bound) const override
    {
        std::vector<IsoClass> out;
        for (int n = 0; n <= bound; ++n) {
            if (elementary_) {
                out.push_back(elementary(n));
                continue;
            }
            for (const auto& lam : partitions_of(n))
                out.push_back({n, lam});
        }
        for (const auto& c : out)
            check_class(c);
        return out;
    }

    IsoClass elementary(int n) const { return {n, Partition(std::vector<int>(n, 1))}; }

    void check_class(const IsoClass& c) const override
    {
        if (c.shape.size() != c.size)
            throw std::invalid_argument("p-group class size must equal its type size");
        if (elementary_ && c.shape.length() != c.size)
            throw std::invalid_argument("vect class must be elementary abelian");
        BigInt order = boost::multiprecision::pow(BigInt(p_), static_cast<unsigned>(c.size));
        if (order > kMaxPoints)
            throw BudgetExceeded("p-group of order " + order.str() + " exceeds the 64-element limit");
    }

    int num_points(const IsoClass& c) const override
    {
        int n = 1;
        for (int i = 0; i < c.size; ++i)
            n *= p_;
        return n;
    }

    std::string label(const IsoClass& c) const override
    {
        return elementary_ ? std::to_string(c.size) : c.shape.to_string();
    }

    /// Hillar-Rhea formula.
    BigInt aut_order(const IsoClass& c) const override
    {
        std::vector<int> e(c.shape.parts().rbegin(), c.shape.parts().rend()); // ascending
        const int n = static_cast<int>(e.size());
        BigInt p = p_, r = 1;
        for (int k = 1; k <= n; ++k) {
            int dk = 0, ck = n + 1;
            for (int l = 1; l <= n; ++l)
                if (e[l - 1] == e[k - 1]) {
                    dk = std::max(dk, l);
                    ck = std::min(ck, l);
                }
            r *= boost::multiprecision::pow(p, dk) - boost::multiprecision::pow(p, k - 1);
            r *= boost::multiprecision::pow(boost::multiprecision::pow(p, e[k - 1]), n - dk);
            r *= boost::multiprecision::pow(boost::multiprecision::pow(p, e[k - 1] - 1), n - ck + 1);
        }
        return r;
    }

    /// Coordinates of element x of type c (first coordinate most significant).
    std::vector<int> coords(const IsoClass& c, int x) const
    {
        const auto& parts = c.shape.parts();
        std::vector<int> out(parts.size());
        for (std::size_t i = parts.size(); i-- > 0;) {
            int m = ipow(parts[i]);
            out[i] = x % m;
            x /= m;
        }
        return out;
    }
    int encode(const IsoClass& c, const std::vector<int>& v) const
    {
        int x = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            x = x * ipow(c.shape[i]) + v[i];
        return x;
    }
    int add(const IsoClass& c, int x, int y) const
    {
        auto a = coords(c, x), b = coords(c, y);
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] = (a[i] + b[i]) % ipow(c.shape[i]);
        return encode(c, a);
    }
    int times(const IsoClass& c, int k, int x) const
    {
        auto a = coords(c, x);
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] = static_cast<int>((static_cast<long>(k) * a[i]) % ipow(c.shape[i]));
        return encode(c, a);
    }

    std::vector<SubInfo> subobjects(const IsoClass& c) const override
    {
        check_class(c);
        const int n = num_points(c);
        std::vector<std::vector<int>> add_t(n, std::vector<int>(n));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                add_t[x][y] = add(c, x, y);
        auto closure = [&](Mask m) {
            std::vector<int> elems;
            for (int x = 0; x < n; ++x)
                if (m >> x & 1)
                    elems.push_back(x);
            for (std::size_t i = 0; i < elems.size(); ++i)
                for (std::size_t j = 0; j <= i; ++j) {
                    int z = add_t[elems[i]][elems[j]];
                    if (!(m >> z & 1)) {
                        m |= Mask(1) << z;
                        elems.push_back(z);
                    }
                }
            return m;
        };
        std::vector<Mask> subs{1};
        std::map<Mask, int> seen{{1, 0}};
        for (std::size_t i = 0; i < subs.size(); ++i)
            for (int x = 1; x < n; ++x) {
                if (subs[i] >> x & 1)
                    continue;
                Mask m = closure(subs[i] | (Mask(1) << x));
                if (seen.emplace(m, 0).second)
                    subs.push_back(m);
            }
        std::sort(subs.begin(), subs.end());

        // p^k-torsion and p^k-preimage counts determine the types of U and M/U
        std::vector<std::vector<int>> pk(c.shape[0] + 1, std::vector<int>(n));
        for (int x = 0; x < n; ++x) {
            int y = x;
            for (int k = 0; k <= c.shape[0]; ++k) {
                pk[k][x] = y;
                y = times(c, p_, y);
            }
        }
        std::vector<SubInfo> out;
        for (Mask u : subs) {
            std::vector<long> tors, pre;
            for (int k = 0; k <= c.shape[0]; ++k) {
                long t = 0, q = 0;
                for (int x = 0; x < n; ++x) {
                    bool inside = pk[k][x] == 0;
                    if ((u >> x & 1) && inside)
                        ++t;
                    if (u >> pk[k][x] & 1)
                        ++q;
                }
                tors.push_back(t);
                pre.push_back(q / popcount(u));
            }
            out.push_back({u, type_from_counts(tors), type_from_counts(pre)});
        }
        return out;
    }

protected:
    std::vector<PointMap> enumerate_homs(const IsoClass& a, const IsoClass& b) const override
    {
        check_class(a);
        check_class(b);
        const int na = num_points(a), nb = num_points(b);
        const int k = a.shape.length();
        std::vector<std::vector<int>> cand(k);
        for (int i = 0; i < k; ++i)
            for (int y = 0; y < nb; ++y)
                if (times(b, ipow(a.shape[i]), y) == 0)
                    cand[i].push_back(y);
        std::vector<PointMap> out;
        std::vector<int> img(k);
        auto rec = [&](auto& self, int i) -> void {
            if (i == k) {
                PointMap f(na);
                for (int x = 0; x < na; ++x) {
                    auto cs = coords(a, x);
                    int y = 0;
                    for (int j = 0; j < k; ++j)
                        y = add(b, y, times(b, cs[j], img[j]));
                    f[x] = y;
                }
                out.push_back(std::move(f));
                return;
            }
            for (int y : cand[i]) {
                img[i] = y;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
        return out;
    }

private:
    int ipow(int e) const
    {
        int r = 1;
        for (int i = 0; i < e; ++i)
            r *= p_;
        return r;
    }

    /// Type from n_k = #{x : p^k x = 0}, k = 0, 1, ...
    IsoClass type_from_counts(const std::vector<long>& n) const
    {
        // conjugate partition entry k-1 is log_p(n_k / n_{k-1})
        std::vector<int> conj;
        for (std::size_t k = 1; k < n.size(); ++k) {
            long ratio = n[k] / n[k - 1];
            int e = 0;
            while (ratio > 1) {
                ratio /= p_;
                ++e;
            }
            if (e == 0)
                break;
            conj.push_back(e);
        }
        Partition lam = Partition(conj).conjugate();
        return {lam.size(), lam};
    }

    int p_;
    bool elementary_;
};

/// Free F_1[G]-modules of finite rank.
class F1Category : public ConcreteCategory {
public:
    explicit F1Category(NamedGroup g) : g_(std::move(g)) {}

    const NamedGroup& group() const { return g_; }
    static constexpr int kMaxPoints = 64;

    std::vector<IsoClass> classes(int bound) const override
    {
        std::vector<IsoClass> out;
        for (int n = 0; n <= bound; ++n)
            out.push_back(rank(n));
        for (const auto& c : out)
            check_class(c);
        return out;
    }
    IsoClass rank(int n) const { return {n, Partition()}; }

    void check_class(const IsoClass& c) const override
    {
        if (!c.shape.empty() || c.size < 0)
            throw std::invalid_argument("F_1[G] classes are given by their rank");
        if (num_points(c) > kMaxPoints)
            throw BudgetExceeded("F_1[G]-module with more than 64 points");
    }
    int num_points(const IsoClass& c) const override { return 1 + c.size * g_.group->order(); }
    std::string label(const IsoClass& c) const override { return std::to_string(c.size); }

    BigInt aut_order(const IsoClass& c) const override
    {
        return boost::multiprecision::pow(BigInt(g_.group->order()), static_cast<unsigned>(c.size)) *
               factorial(c.size);
    }

    /// Subobjects are unions of orbits.
    std::vector<SubInfo> subobjects(const IsoClass& c) const override
    {
        check_class(c);
        const int ng = g_.group->order();
        std::vector<SubInfo> out;
        for (Mask s = 0; s < (Mask(1) << c.size); ++s) {
            Mask pts = 1;
            for (int i = 0; i < c.size; ++i)
                if (s >> i & 1)
                    for (int g = 0; g < ng; ++g)
                        pts |= Mask(1) << (1 + i * ng + g);
            int k = popcount(s);
            out.push_back({pts, rank(k), rank(c.size - k)});
        }
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.points < y.points; });
        return out;
    }

protected:
    std::vector<PointMap> enumerate_homs(const IsoClass& a, const IsoClass& b) const override
    {
        check_class(a);
        check_class(b);
        const FiniteGroup& G = *g_.group;
        const int ng = G.order();
        std::vector<PointMap> out;
        std::vector<int> img(a.size, -1); // -1 killed, else j*|G| + g
        std::vector<char> used(b.size, 0);
        auto rec = [&](auto& self, int i) -> void {
            if (i == a.size) {
                PointMap f(num_points(a), 0);
                for (int s = 0; s < a.size; ++s) {
                    if (img[s] < 0)
                        continue;
                    int j = img[s] / ng, g = img[s] % ng;
                    for (int h = 0; h < ng; ++h)
                        f[1 + s * ng + h] = 1 + j * ng + G.mul(h, g);
                }
                out.push_back(std::move(f));
                return;
            }
            img[i] = -1;
            self(self, i + 1);
            for (int j = 0; j < b.size; ++j) {
                if (used[j])
                    continue;
                used[j] = 1;
                for (int g = 0; g < ng; ++g) {
                    img[i] = j * ng + g;
                    self(self, i + 1);
                }
                used[j] = 0;
            }
        };
        rec(rec, 0);
        return out;
    }

private:
    NamedGroup g_;
};

} // namespace hallkit
