/**
 * @file action_model.hpp
 * @brief Groupoids presented by product groups acting on finite point sets.
 *
 * Points are split into blocks; block b carries a group Gamma_b given as a
 * product of factor groups, whose elements are factor vectors, acting on the
 * left. Each orbit becomes a component with the orbit minimum as
 * representative, a transport element per point, and the stabilizer of the
 * representative as automorphism group.
 */
#pragma once

#include "hallkit/groupoid/groupoid.hpp"

#include <functional>
#include <set>

namespace hallkit {

using GroupElem = std::vector<int>;

class ActionModel {
public:
    struct Block {
        std::vector<GroupPtr> factors;
        int num_points = 0;
        std::function<int(const GroupElem&, int)> act;
    };

    ActionModel() = default;

    explicit ActionModel(std::vector<Block> blocks, std::size_t budget = kDefaultBudget) : blocks_(std::move(blocks))
    {
        build(budget);
    }

    const GroupoidPtr& groupoid() const { return g_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    int block_of(int x) const { return block_of_[x]; }
    int offset(int b) const { return offset_[b]; }
    int local(int x) const { return x - offset_[block_of_[x]]; }
    const Block& block(int b) const { return blocks_[b]; }

    GroupElem mul(int b, const GroupElem& x, const GroupElem& y) const
    {
        const auto& f = blocks_[b].factors;
        GroupElem z(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            z[i] = f[i]->mul(x[i], y[i]);
        return z;
    }
    GroupElem inv(int b, const GroupElem& x) const
    {
        const auto& f = blocks_[b].factors;
        GroupElem z(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            z[i] = f[i]->inv(x[i]);
        return z;
    }
    GroupElem identity(int b) const
    {
        GroupElem z;
        for (const auto& g : blocks_[b].factors)
            z.push_back(g->identity());
        return z;
    }

    /// gamma . x as a global point.
    int act(const GroupElem& gamma, int x) const
    {
        int b = block_of_[x];
        return offset_[b] + blocks_[b].act(gamma, x - offset_[b]);
    }

    /// The morphism x -> gamma.x given by gamma.
    Mor mor(int x, const GroupElem& gamma) const
    {
        int b = block_of_[x];
        int y = act(gamma, x);
        GroupElem s = mul(b, inv(b, transport_[y]), mul(b, gamma, transport_[x]));
        long code = encode(b, s);
        const auto& codes = stab_codes_[g_->component_of(x)];
        auto it = std::lower_bound(codes.begin(), codes.end(), code);
        if (it == codes.end() || *it != code)
            throw std::logic_error("element does not carry the source to the target");
        return {x, y, static_cast<int>(it - codes.begin())};
    }

    /// The group element of a morphism.
    GroupElem element(const Mor& m) const
    {
        int b = block_of_[m.src];
        GroupElem s = decode(b, stab_codes_[g_->component_of(m.src)][m.aut]);
        return mul(b, transport_[m.tgt], mul(b, s, inv(b, transport_[m.src])));
    }

    /// Element carrying the representative of x's component to x.
    const GroupElem& transport(int x) const { return transport_[x]; }

private:
    long encode(int b, const GroupElem& x) const
    {
        long c = 0;
        const auto& f = blocks_[b].factors;
        for (std::size_t i = 0; i < f.size(); ++i)
            c = c * f[i]->order() + x[i];
        return c;
    }
    GroupElem decode(int b, long c) const
    {
        const auto& f = blocks_[b].factors;
        GroupElem x(f.size());
        for (std::size_t i = f.size(); i-- > 0;) {
            x[i] = static_cast<int>(c % f[i]->order());
            c /= f[i]->order();
        }
        return x;
    }

    void build(std::size_t budget)
    {
        int total = 0;
        for (const auto& b : blocks_) {
            offset_.push_back(total);
            total += b.num_points;
            if (static_cast<std::size_t>(total) > budget)
                throw BudgetExceeded("action model has more than " + std::to_string(budget) + " points");
        }
        block_of_.assign(total, 0);
        transport_.assign(total, {});
        std::vector<Component> comps;
        std::vector<std::vector<long>> codes_of;
        for (int b = 0; b < num_blocks(); ++b) {
            const auto& blk = blocks_[b];
            long order = 1;
            for (const auto& g : blk.factors)
                order *= g->order();
            std::vector<GroupElem> gens;
            for (std::size_t i = 0; i < blk.factors.size(); ++i)
                for (int s : blk.factors[i]->generators()) {
                    GroupElem e = identity(b);
                    e[i] = s;
                    gens.push_back(std::move(e));
                }
            for (int p = 0; p < blk.num_points; ++p)
                block_of_[offset_[b] + p] = b;
            std::vector<char> seen(blk.num_points, 0);
            for (int p0 = 0; p0 < blk.num_points; ++p0) {
                if (seen[p0])
                    continue;
                seen[p0] = 1;
                transport_[offset_[b] + p0] = identity(b);
                for (const auto& s : gens)
                    for (const auto& t : gens)
                        if (blk.act(mul(b, s, t), p0) != blk.act(s, blk.act(t, p0)))
                            throw std::logic_error("the map is not a left group action");
                std::vector<int> orbit{p0};
                // Schreier generators of the stabilizer are collected on the way
                const long id_code = encode(b, identity(b));
                std::set<long> sgen_codes;
                std::vector<GroupElem> sgens;
                for (std::size_t i = 0; i < orbit.size(); ++i) {
                    int p = orbit[i];
                    for (const auto& s : gens) {
                        int q = blk.act(s, p);
                        if (q < 0 || q >= blk.num_points)
                            throw std::logic_error("action leaves its block");
                        GroupElem sp = mul(b, s, transport_[offset_[b] + p]);
                        if (!seen[q]) {
                            seen[q] = 1;
                            transport_[offset_[b] + q] = std::move(sp);
                            orbit.push_back(q);
                            continue;
                        }
                        GroupElem e = mul(b, inv(b, transport_[offset_[b] + q]), sp);
                        long c = encode(b, e);
                        if (c != id_code && sgen_codes.insert(c).second)
                            sgens.push_back(std::move(e));
                    }
                }
                if (order % static_cast<long>(orbit.size()) != 0)
                    throw std::logic_error("orbit-stabilizer mismatch: the map is not a group action");
                const long expected = order / static_cast<long>(orbit.size());
                if (static_cast<std::size_t>(expected) > budget)
                    throw BudgetExceeded("stabilizer of order " + std::to_string(expected) + " exceeds the budget");
                std::set<long> stab{id_code};
                std::vector<GroupElem> queue{identity(b)};
                for (std::size_t i = 0; i < queue.size(); ++i)
                    for (const auto& s : sgens) {
                        GroupElem y = mul(b, queue[i], s);
                        if (stab.insert(encode(b, y)).second)
                            queue.push_back(std::move(y));
                    }
                std::vector<long> codes(stab.begin(), stab.end());
                if (static_cast<long>(codes.size()) != expected)
                    throw std::logic_error("orbit-stabilizer mismatch: the map is not a group action");
                const auto& cs = codes;
                auto pos = [&](long c) {
                    return static_cast<int>(std::lower_bound(cs.begin(), cs.end(), c) - cs.begin());
                };
                GroupPtr grp = codes.size() == 1
                                   ? trivial_group()
                                   : std::make_shared<const FiniteGroup>(FiniteGroup::from_function(
                                         static_cast<int>(codes.size()), [&](int x, int y) {
                                             return pos(encode(b, mul(b, decode(b, cs[x]), decode(b, cs[y]))));
                                         }));
                std::vector<int> objs;
                for (int p : orbit)
                    objs.push_back(offset_[b] + p);
                std::sort(objs.begin(), objs.end());
                comps.push_back({offset_[b] + p0, std::move(objs), std::move(grp)});
                codes_of.push_back(std::move(codes));
            }
        }
        // components come out ordered by representative already
        stab_codes_ = std::move(codes_of);
        g_ = std::make_shared<const FiniteGroupoid>(total, std::move(comps), budget);
    }

    std::vector<Block> blocks_;
    std::vector<int> offset_;
    std::vector<int> block_of_;
    std::vector<GroupElem> transport_;
    std::vector<std::vector<long>> stab_codes_;
    GroupoidPtr g_;
};

} // namespace hallkit
