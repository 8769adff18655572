/**
 * @file wreath.hpp
 * @brief Wreath products G wr S_n = G^n x| S_n and their conjugacy class labels.
 */
#pragma once

#include "hallkit/exact/partition.hpp"
#include "hallkit/group/characters.hpp"
#include "hallkit/group/families.hpp"

namespace hallkit {

inline constexpr std::size_t kWreathBudget = 5000;

/// (g, sigma) with (g, sigma)(h, tau) = (g . sigma(h), sigma tau), sigma(h)_i = h_{sigma^-1(i)}.
struct WreathElement {
    std::vector<int> base;
    Perm sigma;

    friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// Labels "C0", "C1", ... for the conjugacy classes of g in classes() order.
inline LabelSet class_labels(const FiniteGroup& g)
{
    std::vector<std::string> l;
    for (std::size_t i = 0; i < g.classes().size(); ++i)
        l.push_back("C" + std::to_string(i));
    return make_labels(std::move(l));
}

/// Labels "X0", "X1", ... for the linear characters in linear_characters() order.
inline LabelSet character_labels(const FiniteGroup& g)
{
    std::vector<std::string> l;
    for (int i = 0; i < g.order(); ++i)
        l.push_back("X" + std::to_string(i));
    return make_labels(std::move(l));
}

/// For each cycle of sigma, the class of its cycle product, collected into a partition-valued map.
inline PartitionMap wreath_class_label(const FiniteGroup& g, const WreathElement& x, const LabelSet& labels)
{
    const int n = static_cast<int>(x.sigma.size());
    const auto inv = perm_inverse(x.sigma);
    std::vector<std::vector<int>> lengths(g.classes().size());
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (seen[i])
            continue;
        // base entry at i of x^k
        int prod = g.identity();
        int len = 0;
        for (int j = i; !seen[j]; j = inv[j]) {
            seen[j] = 1;
            prod = g.mul(prod, x.base[j]);
            ++len;
        }
        lengths[g.class_of(prod)].push_back(len);
    }
    std::vector<Partition> vals;
    for (auto& l : lengths) {
        std::sort(l.rbegin(), l.rend());
        vals.emplace_back(std::move(l));
    }
    return PartitionMap(labels, std::move(vals));
}

class WreathGroup {
public:
    WreathGroup(NamedGroup g, int n, std::size_t budget = kWreathBudget) : g_(std::move(g)), n_(n)
    {
        if (n < 0)
            throw std::invalid_argument("wreath product needs n >= 0");
        const long k = g_.group->order();
        long order = 1;
        for (int i = 0; i < n; ++i) {
            order *= k * (i + 1);
            if (static_cast<std::size_t>(order) > budget)
                throw BudgetExceeded("wreath product " + g_.spec + " wr S_" + std::to_string(n) +
                                     " exceeds the budget of " + std::to_string(budget) + " elements");
        }
        base_count_ = 1;
        for (int i = 0; i < n; ++i)
            base_count_ *= k;
        perms_ = permutations_lex(n);
        order_ = order;
        class_labels_ = class_labels(*g_.group);
        build_classes();
    }

    const NamedGroup& base_group() const { return g_; }
    int n() const { return n_; }
    int order() const { return static_cast<int>(order_); }
    const LabelSet& class_label_set() const { return class_labels_; }

    WreathElement element(int x) const
    {
        WreathElement e;
        e.sigma = perms_[x / base_count_];
        e.base.resize(n_);
        long b = x % base_count_;
        const int k = g_.group->order();
        for (int i = n_; i-- > 0;) {
            e.base[i] = static_cast<int>(b % k);
            b /= k;
        }
        return e;
    }

    int index(const WreathElement& e) const
    {
        long b = 0;
        for (int v : e.base)
            b = b * g_.group->order() + v;
        return static_cast<int>(perm_rank(e.sigma) * base_count_ + b);
    }

    WreathElement mul(const WreathElement& a, const WreathElement& b) const
    {
        const auto& g = *g_.group;
        const auto sinv = perm_inverse(a.sigma);
        WreathElement c;
        c.base.resize(n_);
        for (int i = 0; i < n_; ++i)
            c.base[i] = g.mul(a.base[i], b.base[sinv[i]]);
        c.sigma = perm_compose(a.sigma, b.sigma);
        return c;
    }

    WreathElement inv(const WreathElement& a) const
    {
        const auto& g = *g_.group;
        WreathElement c;
        c.base.resize(n_);
        for (int j = 0; j < n_; ++j)
            c.base[j] = g.inv(a.base[a.sigma[j]]);
        c.sigma = perm_inverse(a.sigma);
        return c;
    }

    int mul(int a, int b) const { return index(mul(element(a), element(b))); }
    int inv(int a) const { return index(inv(element(a))); }
    int identity() const
    {
        WreathElement e;
        e.base.assign(n_, g_.group->identity());
        e.sigma = perms_.front();
        return index(e);
    }

    PartitionMap class_label(int x) const { return wreath_class_label(*g_.group, element(x), class_labels_); }

    /// Conjugacy classes as orbits under conjugation by generators, sorted by least element.
    const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
    int class_of(int x) const { return class_of_[x]; }

    /// Generators: a generating set of G in every coordinate, and adjacent transpositions.
    std::vector<int> generators() const
    {
        std::vector<int> out;
        const auto& g = *g_.group;
        for (int i = 0; i < n_; ++i)
            for (int s : g.generators()) {
                WreathElement e;
                e.base.assign(n_, g.identity());
                e.base[i] = s;
                e.sigma = perms_.front();
                out.push_back(index(e));
            }
        for (int i = 0; i + 1 < n_; ++i) {
            WreathElement e;
            e.base.assign(n_, g.identity());
            e.sigma = perms_.front();
            std::swap(e.sigma[i], e.sigma[i + 1]);
            out.push_back(index(e));
        }
        return out;
    }

    /// The multiplication table as a concrete group.
    GroupPtr as_finite_group() const
    {
        std::vector<WreathElement> elems;
        for (int x = 0; x < order(); ++x)
            elems.push_back(element(x));
        return std::make_shared<const FiniteGroup>(
            FiniteGroup::from_function(order(), [&](int a, int b) { return index(mul(elems[a], elems[b])); }));
    }

private:
    void build_classes()
    {
        class_of_.assign(order_, -1);
        std::vector<std::pair<WreathElement, WreathElement>> gens;
        for (int s : generators())
            gens.emplace_back(element(s), inv(element(s)));
        for (int x = 0; x < order(); ++x) {
            if (class_of_[x] >= 0)
                continue;
            const int id = static_cast<int>(classes_.size());
            std::vector<int> cls{x};
            class_of_[x] = id;
            for (std::size_t i = 0; i < cls.size(); ++i) {
                auto e = element(cls[i]);
                for (const auto& [s, si] : gens) {
                    int y = index(mul(mul(s, e), si));
                    if (class_of_[y] < 0) {
                        class_of_[y] = id;
                        cls.push_back(y);
                    }
                }
            }
            std::sort(cls.begin(), cls.end());
            classes_.push_back(std::move(cls));
        }
    }

    NamedGroup g_;
    int n_;
    long order_ = 1;
    long base_count_ = 1;
    std::vector<Perm> perms_;
    LabelSet class_labels_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
};

inline WreathGroup build_wreath(const NamedGroup& g, int n, std::size_t budget = kWreathBudget)
{
    return WreathGroup(g, n, budget);
}

} // namespace hallkit
