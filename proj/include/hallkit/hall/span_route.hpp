/**
 * @file span_route.hpp
 * @brief Hall products as pull-push along X_1 x X_1 <-(d_0, d_2)- X_2 -d_1-> X_1
 * of the S-construction.
 */
#pragma once

#include "hallkit/groupoid/transfer.hpp"
#include "hallkit/hall/hall.hpp"
#include "hallkit/waldhausen/s_construction.hpp"

namespace hallkit {

class HallSpan {
public:
    explicit HallSpan(const SConstruction& s, std::size_t budget = kDefaultBudget)
        : s_(s), prod_(product(s.simplicial.levels.at(1), s.simplicial.levels.at(1), budget)),
          c_(pair_functor(prod_, s.simplicial.d(2, 0), s.simplicial.d(2, 2))), push_(s.simplicial.d(2, 1), budget)
    {
    }

    SpanFn to_fn(const HallVec& f) const
    {
        auto x1 = s_.simplicial.levels[1];
        SpanFn out = SpanFn::zero(x1);
        for (const auto& [c, v] : f) {
            if (v == 0)
                continue;
            int x = s_.object_of_class(c);
            if (x < 0)
                throw std::invalid_argument("span route: class " + s_.instance.label(c) + " is outside the bound");
            out.values[x1->component_of(x)] += v;
        }
        return out;
    }

    HallVec from_fn(const SpanFn& f) const
    {
        HallVec out;
        for (const auto& c : s_.instance.iso_classes()) {
            const Rat& v = f.at_object(s_.object_of_class(c));
            if (v != 0)
                out[c] = v;
        }
        return out;
    }

    /// f . g with f on the quotient and g on the subobject.
    HallVec multiply(const HallVec& f, const HallVec& g) const
    {
        int top = 0;
        for (const auto* v : {&f, &g}) {
            int m = 0;
            for (const auto& [c, x] : *v)
                if (x != 0)
                    m = std::max(m, c.size);
            top += m;
        }
        if (top > s_.instance.bound())
            throw std::invalid_argument("span route: result exceeds the size bound");
        auto phi = external_product(prod_, to_fn(f), to_fn(g));
        return from_fn(push_(pullback_fn(c_, phi)));
    }

private:
    const SConstruction& s_;
    ProductGroupoid prod_;
    Functor c_;
    Pushforward push_;
};

inline HallVec hall_product_via_span(const ProtoAbelianInstance& inst, int bound, const HallVec& f, const HallVec& g,
                                     std::size_t budget = kDefaultBudget)
{
    auto s = s_construction(inst, bound, 2, budget);
    return HallSpan(s, budget).multiply(f, g);
}

} // namespace hallkit
