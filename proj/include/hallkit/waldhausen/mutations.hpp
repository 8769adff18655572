/**
 * @file mutations.hpp
 * @brief Deliberately broken variants of a simplicial groupoid, for testing
 * that the checkers reject them.
 */
#pragma once

#include "hallkit/groupoid/constructions.hpp"
#include "hallkit/waldhausen/simplicial.hpp"

namespace hallkit {

enum class MutationCheck { TwoSegal, Pointed, Simplicial };

struct Mutation {
    std::string name;
    TruncatedSimplicialGroupoid x;
    MutationCheck check;
};

namespace detail {

/// Replaces X_3 via a functor j: Y -> X_3, precomposing the faces; degeneracies into X_3 are dropped.
inline TruncatedSimplicialGroupoid replace_top(const TruncatedSimplicialGroupoid& x, const Functor& j)
{
    TruncatedSimplicialGroupoid y = x;
    const int t = x.top();
    y.levels[t] = j.source();
    for (auto& d : y.faces[t])
        d = compose(d, j);
    if (t >= 1 && static_cast<int>(y.degeneracies.size()) > t - 1)
        y.degeneracies[t - 1].clear();
    return y;
}

} // namespace detail

/// X_top with component k removed.
inline TruncatedSimplicialGroupoid drop_top_component(const TruncatedSimplicialGroupoid& x, int k)
{
    const auto& top = x.levels.back();
    std::vector<int> keep;
    for (int c = 0; c < top->num_components(); ++c)
        if (c != k)
            keep.push_back(c);
    auto r = restrict_components(top, keep);
    auto y = detail::replace_top(x, r.inclusion);
    y.name = x.name + " without component " + std::to_string(k) + " of X_" + std::to_string(x.top());
    return y;
}

/// X_top with a second copy of component k.
inline TruncatedSimplicialGroupoid duplicate_top_component(const TruncatedSimplicialGroupoid& x, int k)
{
    const auto& top = x.levels.back();
    auto r = restrict_components(top, {k});
    auto c = coproduct(top, r.sub);
    auto y = detail::replace_top(x, copair(c, Functor::identity(top), r.inclusion));
    y.name = x.name + " with component " + std::to_string(k) + " of X_" + std::to_string(x.top()) + " doubled";
    return y;
}

/// X_top replaced by its discrete groupoid of objects.
inline TruncatedSimplicialGroupoid discretize_top(const TruncatedSimplicialGroupoid& x)
{
    auto y = detail::replace_top(x, discretization(x.levels.back()));
    y.name = x.name + " with X_" + std::to_string(x.top()) + " discretized";
    return y;
}

/// X_2 with a second copy of the component of s_0(x), x the representative of
/// component k of X_1; structure maps into X_2 land in the original copy.
inline TruncatedSimplicialGroupoid duplicate_degenerate_component(const TruncatedSimplicialGroupoid& x, int k = 0)
{
    if (x.top() < 2 || !x.has_degeneracies(1))
        throw std::invalid_argument("needs X_2 and degeneracies on X_1");
    const auto& x2 = x.levels[2];
    int target = x2->component_of(x.s(1, 0)(x.levels[1]->component(k).rep));
    auto r = restrict_components(x2, {target});
    auto c = coproduct(x2, r.sub);
    auto back = copair(c, Functor::identity(x2), r.inclusion);
    TruncatedSimplicialGroupoid y = x;
    y.name = x.name + " with a degenerate component of X_2 doubled";
    y.levels[2] = c.sum;
    for (auto& d : y.faces[2])
        d = compose(d, back);
    for (auto& s : y.degeneracies[1])
        s = compose(c.inj_a, s);
    if (x.top() >= 3) {
        for (auto& d : y.faces[3])
            d = compose(c.inj_a, d);
        if (y.has_degeneracies(2))
            for (auto& s : y.degeneracies[2])
                s = compose(s, back);
    }
    return y;
}

/// d_0 and d_1 on X_n exchanged.
inline TruncatedSimplicialGroupoid swap_faces(const TruncatedSimplicialGroupoid& x, int n = 2)
{
    TruncatedSimplicialGroupoid y = x;
    std::swap(y.faces.at(n).at(0), y.faces.at(n).at(1));
    y.name = x.name + " with d_0, d_1 swapped on X_" + std::to_string(n);
    return y;
}

/// Three 2-Segal mutations of each input, plus one pointedness and one simplicial mutation of the first.
inline std::vector<Mutation> mutation_corpus(const std::vector<const TruncatedSimplicialGroupoid*>& inputs)
{
    std::vector<Mutation> out;
    for (const auto* x : inputs) {
        out.push_back({"", drop_top_component(*x, x->levels.back()->num_components() - 1), MutationCheck::TwoSegal});
        out.push_back({"", duplicate_top_component(*x, 0), MutationCheck::TwoSegal});
        out.push_back({"", discretize_top(*x), MutationCheck::TwoSegal});
    }
    if (!inputs.empty()) {
        out.push_back({"", duplicate_degenerate_component(*inputs.front()), MutationCheck::Pointed});
        out.push_back({"", swap_faces(*inputs.front()), MutationCheck::Simplicial});
    }
    for (auto& m : out)
        m.name = m.x.name;
    return out;
}

} // namespace hallkit
