/**
 * @file finite_group.hpp
 * @brief Finite groups given by multiplication tables.
 */
#pragma once

#include "hallkit/exact/rational.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

namespace hallkit {

/// Elements are 0..order-1; element 0 need not be the identity.
class FiniteGroup {
public:
    FiniteGroup() : FiniteGroup(std::vector<std::vector<int>>{{0}}) {}

    /// Validates closure, identity, inverses and associativity (Light's test).
    explicit FiniteGroup(const std::vector<std::vector<int>>& table,
                         std::vector<std::string> names = {})
    {
        n_ = static_cast<int>(table.size());
        if (n_ == 0)
            throw std::invalid_argument("group table is empty");
        mul_.resize(static_cast<std::size_t>(n_) * n_);
        for (int a = 0; a < n_; ++a) {
            if (static_cast<int>(table[a].size()) != n_)
                throw std::invalid_argument("group table is not square");
            for (int b = 0; b < n_; ++b) {
                int c = table[a][b];
                if (c < 0 || c >= n_)
                    throw std::invalid_argument("group table entry out of range");
                mul_[idx(a, b)] = c;
            }
        }
        finish(std::move(names));
    }

    /// Builds from a product function without re-checking associativity.
    template <class Mul>
    static FiniteGroup from_function(int order, Mul&& mul, std::vector<std::string> names = {})
    {
        FiniteGroup g(order);
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                g.mul_[g.idx(a, b)] = mul(a, b);
        g.finish(std::move(names), false);
        return g;
    }

    int order() const { return n_; }
    int identity() const { return e_; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    int power(int a, long k) const
    {
        if (k < 0)
            return power(inv(a), -k);
        int r = e_;
        for (long i = 0; i < k; ++i)
            r = mul(r, a);
        return r;
    }
    int element_order(int a) const { return ord_[a]; }
    int exponent() const { return exponent_; }
    const std::string& name(int a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }

    bool is_abelian() const
    {
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (mul(a, b) != mul(b, a))
                    return false;
        return true;
    }

    /// Conjugacy classes, each sorted, ordered by least element.
    const std::vector<std::vector<int>>& classes() const { return classes_; }
    int class_of(int a) const { return class_of_[a]; }

    /// Closure of a set of elements under multiplication (sorted).
    std::vector<int> generated(const std::vector<int>& gens) const
    {
        std::vector<char> in(n_, 0);
        std::vector<int> out{e_};
        in[e_] = 1;
        for (std::size_t i = 0; i < out.size(); ++i)
            for (int g : gens) {
                int y = mul(out[i], g);
                if (!in[y]) {
                    in[y] = 1;
                    out.push_back(y);
                }
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// A small generating set, chosen greedily by element index.
    std::vector<int> generators() const
    {
        std::vector<int> gens;
        std::vector<char> in(n_, 0);
        in[e_] = 1;
        int covered = 1;
        for (int a = 0; a < n_ && covered < n_; ++a) {
            if (in[a])
                continue;
            gens.push_back(a);
            auto h = generated(gens);
            std::fill(in.begin(), in.end(), 0);
            for (int x : h)
                in[x] = 1;
            covered = static_cast<int>(h.size());
        }
        return gens;
    }

    bool is_subgroup(const std::vector<int>& elems) const
    {
        if (elems.empty())
            return false;
        std::vector<char> in(n_, 0);
        for (int x : elems) {
            if (x < 0 || x >= n_)
                return false;
            in[x] = 1;
        }
        if (!in[e_])
            return false;
        for (int a : elems)
            for (int b : elems)
                if (!in[mul(a, inv(b))])
                    return false;
        return true;
    }

    /// Commutator subgroup [G,G].
    std::vector<int> derived_subgroup() const
    {
        std::vector<int> comms;
        std::vector<char> seen(n_, 0);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) {
                int c = mul(mul(a, b), mul(inv(a), inv(b)));
                if (!seen[c]) {
                    seen[c] = 1;
                    comms.push_back(c);
                }
            }
        return generated(comms);
    }

    int abelianization_order() const
    {
        return n_ / static_cast<int>(derived_subgroup().size());
    }

    const std::vector<int>& table() const { return mul_; }

private:
    explicit FiniteGroup(int order) : n_(order), mul_(static_cast<std::size_t>(order) * order) {}

    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }

    void finish(std::vector<std::string> names, bool check_assoc = true)
    {
        e_ = -1;
        for (int a = 0; a < n_ && e_ < 0; ++a) {
            bool ok = true;
            for (int b = 0; b < n_ && ok; ++b)
                ok = mul(a, b) == b && mul(b, a) == b;
            if (ok)
                e_ = a;
        }
        if (e_ < 0)
            throw std::invalid_argument("group table has no identity");
        inv_.assign(n_, -1);
        for (int a = 0; a < n_; ++a) {
            std::vector<char> row(n_, 0);
            for (int b = 0; b < n_; ++b) {
                int c = mul(a, b);
                if (row[c])
                    throw std::invalid_argument("group table row is not a permutation");
                row[c] = 1;
                if (c == e_)
                    inv_[a] = b;
            }
            if (mul(inv_[a], a) != e_)
                throw std::invalid_argument("group table: left and right inverses differ");
        }
        if (check_assoc) {
            for (int g : generators())
                for (int x = 0; x < n_; ++x)
                    for (int y = 0; y < n_; ++y)
                        if (mul(mul(x, g), y) != mul(x, mul(g, y)))
                            throw std::invalid_argument("group table is not associative");
        }
        if (names.empty()) {
            names.resize(n_);
            for (int a = 0; a < n_; ++a)
                names[a] = std::to_string(a);
        }
        if (static_cast<int>(names.size()) != n_)
            throw std::invalid_argument("wrong number of element names");
        names_ = std::move(names);

        ord_.assign(n_, 0);
        exponent_ = 1;
        for (int a = 0; a < n_; ++a) {
            int k = 1;
            for (int x = a; x != e_; x = mul(x, a))
                ++k;
            ord_[a] = k;
            exponent_ = std::lcm(exponent_, k);
        }

        class_of_.assign(n_, -1);
        classes_.clear();
        for (int a = 0; a < n_; ++a) {
            if (class_of_[a] >= 0)
                continue;
            int id = static_cast<int>(classes_.size());
            std::vector<int> cls;
            for (int g = 0; g < n_; ++g) {
                int c = conj(g, a);
                if (class_of_[c] < 0) {
                    class_of_[c] = id;
                    cls.push_back(c);
                }
            }
            std::sort(cls.begin(), cls.end());
            classes_.push_back(std::move(cls));
        }
    }

    int n_ = 0;
    int e_ = 0;
    int exponent_ = 1;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<int> ord_;
    std::vector<std::string> names_;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> classes_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A homomorphism given by the images of all elements; validated on construction.
class GroupHom {
public:
    GroupHom(GroupPtr src, GroupPtr tgt, std::vector<int> images)
        : src_(std::move(src)), tgt_(std::move(tgt)), img_(std::move(images))
    {
        const FiniteGroup& sg = *src_;
        const FiniteGroup& tg = *tgt_;
        if (static_cast<int>(img_.size()) != sg.order())
            throw std::invalid_argument("homomorphism: one image per element required");
        for (int x : img_)
            if (x < 0 || x >= tg.order())
                throw std::invalid_argument("homomorphism: image out of range");
        for (int a = 0; a < sg.order(); ++a)
            for (int b = 0; b < sg.order(); ++b)
                if (img_[sg.mul(a, b)] != tg.mul(img_[a], img_[b]))
                    throw std::invalid_argument("map is not a homomorphism");
    }

    const GroupPtr& source() const { return src_; }
    const GroupPtr& target() const { return tgt_; }
    int operator()(int x) const { return img_[x]; }
    const std::vector<int>& images() const { return img_; }

    int kernel_order() const
    {
        int k = 0;
        for (int x : img_)
            k += x == tgt_->identity();
        return k;
    }
    int image_order() const { return src_->order() / kernel_order(); }

private:
    GroupPtr src_;
    GroupPtr tgt_;
    std::vector<int> img_;
};

/// The subgroup on `elems` as a standalone group together with its inclusion.
inline GroupHom make_subgroup(const GroupPtr& ambient, std::vector<int> elems)
{
    const FiniteGroup& g = *ambient;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (!g.is_subgroup(elems))
        throw std::invalid_argument("element set is not a subgroup");
    std::vector<int> pos(g.order(), -1);
    for (std::size_t i = 0; i < elems.size(); ++i)
        pos[elems[i]] = static_cast<int>(i);
    std::vector<std::string> names;
    for (int x : elems)
        names.push_back(g.name(x));
    int k = static_cast<int>(elems.size());
    auto sub = FiniteGroup::from_function(
        k, [&](int a, int b) { return pos[g.mul(elems[a], elems[b])]; }, std::move(names));
    return GroupHom(std::make_shared<const FiniteGroup>(std::move(sub)), ambient, std::move(elems));
}

} // namespace hallkit
