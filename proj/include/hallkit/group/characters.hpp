/**
 * @file characters.hpp
 * @brief Linear characters of finite abelian groups with exact values.
 */
#pragma once

#include "hallkit/exact/cyclotomic.hpp"
#include "hallkit/group/finite_group.hpp"

namespace hallkit {

/// gamma(x) = zeta_m^{k[x]} with m the exponent of the group.
struct LinearCharacter {
    int m = 1;
    std::vector<int> k;

    Cyc operator()(int x) const { return Cyc::root_of_unity(static_cast<unsigned>(m), k[x]); }
    friend bool operator==(const LinearCharacter&, const LinearCharacter&) = default;
};

/// All |G| linear characters of an abelian group, trivial character first,
/// then ordered by value vector.
inline std::vector<LinearCharacter> linear_characters(const FiniteGroup& g)
{
    if (!g.is_abelian())
        throw Unsupported("linear characters enumerate the dual only for abelian groups");
    const int m = g.exponent();
    const auto gens = g.generators();
    std::vector<LinearCharacter> out;
    std::vector<int> choice(gens.size(), 0);
    for (;;) {
        // propagate along words in the generators; reject inconsistent choices
        std::vector<int> k(g.order(), -1);
        k[g.identity()] = 0;
        std::vector<int> frontier{g.identity()};
        bool ok = true;
        for (std::size_t i = 0; i < frontier.size() && ok; ++i)
            for (std::size_t j = 0; j < gens.size() && ok; ++j) {
                int y = g.mul(frontier[i], gens[j]);
                int v = (k[frontier[i]] + choice[j]) % m;
                if (k[y] < 0) {
                    k[y] = v;
                    frontier.push_back(y);
                } else if (k[y] != v) {
                    ok = false;
                }
            }
        if (ok)
            out.push_back({m, std::move(k)});
        std::size_t j = 0;
        while (j < choice.size() && ++choice[j] == m)
            choice[j++] = 0;
        if (j == choice.size())
            break;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.k < b.k; });
    if (static_cast<int>(out.size()) != g.order())
        throw std::logic_error("character count differs from group order");
    return out;
}

} // namespace hallkit
