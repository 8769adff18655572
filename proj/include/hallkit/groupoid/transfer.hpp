/**
 * @file transfer.hpp
 * @brief Functions on isomorphism classes with pullback and pushforward.
 *
 * (f^* phi)[a] = phi[f(a)];
 * (f_! psi)[b] = sum over components x of the 2-fiber of f over b of psi(x) / #Aut(x).
 */
#pragma once

#include "hallkit/groupoid/constructions.hpp"
#include "hallkit/groupoid/fiber_product.hpp"

#include <map>

namespace hallkit {

/// A rational function on pi0 of its carrier, dense in component order.
struct SpanFn {
    GroupoidPtr carrier;
    std::vector<Rat> values;

    static SpanFn zero(GroupoidPtr g)
    {
        std::size_t k = g->num_components();
        return {std::move(g), std::vector<Rat>(k, Rat(0))};
    }
    static SpanFn constant(GroupoidPtr g, const Rat& c)
    {
        std::size_t k = g->num_components();
        return {std::move(g), std::vector<Rat>(k, c)};
    }
    /// Indicator of the component containing object x.
    static SpanFn delta(GroupoidPtr g, int x)
    {
        auto f = zero(g);
        f.values[g->component_of(x)] = 1;
        return f;
    }

    const Rat& at_object(int x) const { return values[carrier->component_of(x)]; }
    friend bool operator==(const SpanFn& a, const SpanFn& b)
    {
        return a.carrier == b.carrier && a.values == b.values;
    }
};

inline SpanFn pullback_fn(const Functor& f, const SpanFn& phi)
{
    if (phi.carrier != f.target())
        throw std::invalid_argument("pullback: function lives on the wrong groupoid");
    const auto& a = *f.source();
    SpanFn out = SpanFn::zero(f.source());
    for (int k = 0; k < a.num_components(); ++k)
        out.values[k] = phi.at_object(f(a.component(k).rep));
    return out;
}

/// f_! as a sparse matrix from pi0(A) to pi0(B), computed once from the 2-fibers.
class Pushforward {
public:
    explicit Pushforward(Functor f, std::size_t budget = kDefaultBudget) : f_(std::move(f))
    {
        const auto& a = *f_.source();
        const auto& b = *f_.target();
        weights_.resize(b.num_components());
        for (int j = 0; j < b.num_components(); ++j) {
            FiberProduct fib(f_, point_at(f_.target(), b.component(j).rep), budget);
            std::map<int, Rat> w;
            for (const auto& c : fib.groupoid()->components())
                w[a.component_of(fib.a_of(c.rep))] += Rat(1, c.aut->order());
            weights_[j].assign(w.begin(), w.end());
        }
    }

    const Functor& functor() const { return f_; }

    SpanFn operator()(const SpanFn& psi) const
    {
        if (psi.carrier != f_.source())
            throw std::invalid_argument("pushforward: function lives on the wrong groupoid");
        SpanFn out = SpanFn::zero(f_.target());
        for (std::size_t j = 0; j < weights_.size(); ++j)
            for (const auto& [k, w] : weights_[j])
                if (psi.values[k] != 0)
                    out.values[j] += psi.values[k] * w;
        return out;
    }

private:
    Functor f_;
    std::vector<std::vector<std::pair<int, Rat>>> weights_;
};

inline SpanFn pushforward_fn(const Functor& f, const SpanFn& psi, std::size_t budget = kDefaultBudget)
{
    if (psi.carrier != f.source())
        throw std::invalid_argument("pushforward: function lives on the wrong groupoid");
    return Pushforward(f, budget)(psi);
}

/// nu_! c^* phi for the span P <-c- S -nu-> Q.
inline SpanFn pull_push_span(const Functor& c, const Functor& nu, const SpanFn& phi,
                             std::size_t budget = kDefaultBudget)
{
    if (c.source() != nu.source())
        throw std::invalid_argument("span legs must share their apex");
    return pushforward_fn(nu, pullback_fn(c, phi), budget);
}

/// phi (x) psi on A x B.
inline SpanFn external_product(const ProductGroupoid& p, const SpanFn& phi, const SpanFn& psi)
{
    if (phi.carrier != p.a || psi.carrier != p.b)
        throw std::invalid_argument("external product: functions do not match the factors");
    SpanFn out = SpanFn::zero(p.product);
    for (int ka = 0; ka < p.a->num_components(); ++ka)
        for (int kb = 0; kb < p.b->num_components(); ++kb)
            out.values[p.component(ka, kb)] = phi.values[ka] * psi.values[kb];
    return out;
}

} // namespace hallkit
