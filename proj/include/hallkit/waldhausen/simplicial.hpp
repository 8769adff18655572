/**
 * @file simplicial.hpp
 * @brief Simplicial groupoids truncated at degree <= 3, with the simplicial,
 * 2-Segal and pointedness checks.
 */
#pragma once

#include "hallkit/groupoid/fiber_product.hpp"

namespace hallkit {

struct TruncatedSimplicialGroupoid {
    std::string name;
    std::vector<GroupoidPtr> levels;
    /// faces[n][i] = d_i: X_n -> X_{n-1}; faces[0] is empty.
    std::vector<std::vector<Functor>> faces;
    /// degeneracies[n][i] = s_i: X_n -> X_{n+1}; empty where not available.
    std::vector<std::vector<Functor>> degeneracies;

    int top() const { return static_cast<int>(levels.size()) - 1; }
    const Functor& d(int n, int i) const { return faces.at(n).at(i); }
    const Functor& s(int n, int i) const { return degeneracies.at(n).at(i); }
    bool has_degeneracies(int n) const
    {
        return n < static_cast<int>(degeneracies.size()) && !degeneracies[n].empty();
    }
};

namespace detail {

inline std::string face_name(const char* op, int i) { return std::string(op) + "_" + std::to_string(i); }

} // namespace detail

/// Every simplicial identity that type-checks within the truncation, as strict functor equality.
inline Verdict check_simplicial_identities(const TruncatedSimplicialGroupoid& x)
{
    using detail::face_name;
    Verdict v;
    const int top = x.top();
    if (static_cast<int>(x.faces.size()) != top + 1) {
        v.fail("face table has " + std::to_string(x.faces.size()) + " levels, expected " + std::to_string(top + 1));
        return v;
    }
    for (int n = 1; n <= top; ++n) {
        if (static_cast<int>(x.faces[n].size()) != n + 1) {
            v.fail("X_" + std::to_string(n) + " has " + std::to_string(x.faces[n].size()) + " faces");
            return v;
        }
        for (int i = 0; i <= n; ++i)
            if (x.d(n, i).source() != x.levels[n] || x.d(n, i).target() != x.levels[n - 1]) {
                v.fail("d_" + std::to_string(i) + " on X_" + std::to_string(n) + " has the wrong endpoints");
                return v;
            }
    }
    const std::string on = " on X_";
    for (int n = 2; n <= top; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                if (!(compose(x.d(n - 1, i), x.d(n, j)) == compose(x.d(n - 1, j - 1), x.d(n, i))))
                    v.fail(face_name("d", i) + " " + face_name("d", j) + " != " + face_name("d", j - 1) + " " +
                           face_name("d", i) + on + std::to_string(n));
    for (int n = 0; n < top; ++n) {
        if (!x.has_degeneracies(n))
            continue;
        if (static_cast<int>(x.degeneracies[n].size()) != n + 1) {
            v.fail("X_" + std::to_string(n) + " has " + std::to_string(x.degeneracies[n].size()) + " degeneracies");
            continue;
        }
        auto id = Functor::identity(x.levels[n]);
        for (int j = 0; j <= n; ++j) {
            const Functor& sj = x.s(n, j);
            if (sj.source() != x.levels[n] || sj.target() != x.levels[n + 1]) {
                v.fail("s_" + std::to_string(j) + on + std::to_string(n) + " has the wrong endpoints");
                continue;
            }
            for (int i = 0; i <= n + 1; ++i) {
                Functor lhs = compose(x.d(n + 1, i), sj);
                std::string name = face_name("d", i) + " " + face_name("s", j);
                if (i == j || i == j + 1) {
                    if (!(lhs == id))
                        v.fail(name + " != id" + on + std::to_string(n));
                } else if (n >= 1 && x.has_degeneracies(n - 1)) {
                    if (i < j) {
                        if (!(lhs == compose(x.s(n - 1, j - 1), x.d(n, i))))
                            v.fail(name + " != " + face_name("s", j - 1) + " " + face_name("d", i) + on +
                                   std::to_string(n));
                    } else if (!(lhs == compose(x.s(n - 1, j), x.d(n, i - 1)))) {
                        v.fail(name + " != " + face_name("s", j) + " " + face_name("d", i - 1) + on +
                               std::to_string(n));
                    }
                }
            }
            if (n + 2 <= top && x.has_degeneracies(n + 1))
                for (int i = 0; i <= j; ++i)
                    if (!(compose(x.s(n + 1, i), x.s(n, j)) == compose(x.s(n + 1, j + 1), x.s(n, i))))
                        v.fail(face_name("s", i) + " " + face_name("s", j) + " != " + face_name("s", j + 1) + " " +
                               face_name("s", i) + on + std::to_string(n));
        }
    }
    return v;
}

/// Whether the comparison functor into the 2-fiber product of f and g,
/// induced by p and q with f p = g q on the nose, is an equivalence.
inline Verdict check_square(const Functor& p, const Functor& q, const Functor& f, const Functor& g,
                            const std::string& label, std::size_t budget = kDefaultBudget)
{
    FiberProduct fp(f, g, budget);
    const auto& d = *f.target();
    auto cmp = fp.induced(p, q, [&](int x) {
        if (f(p(x)) != g(q(x)))
            throw std::logic_error("square " + label + " does not commute on objects");
        return d.identity(f(p(x)));
    });
    Verdict v;
    v.absorb(is_equivalence(cmp), label + ": ");
    return v;
}

/// X_3 -> X_{012} x_{X_{02}} X_{023} and X_3 -> X_{013} x_{X_{13}} X_{123}.
inline Verdict check_2segal_degree3(const TruncatedSimplicialGroupoid& x, std::size_t budget = kDefaultBudget)
{
    if (x.top() < 3)
        throw std::invalid_argument("the 2-Segal check needs levels up to X_3");
    Verdict v;
    v.absorb(check_square(x.d(3, 3), x.d(3, 1), x.d(2, 1), x.d(2, 2), "X_3 -> X_{012} x_{02} X_{023}", budget));
    v.absorb(check_square(x.d(3, 2), x.d(3, 0), x.d(2, 0), x.d(2, 1), "X_3 -> X_{013} x_{13} X_{123}", budget));
    return v;
}

/// X_1 -> X_0 x_{X_1} X_2 along (s_0, d_2) and along (s_0, d_0).
inline Verdict check_pointed(const TruncatedSimplicialGroupoid& x, std::size_t budget = kDefaultBudget)
{
    if (x.top() < 2 || !x.has_degeneracies(0) || !x.has_degeneracies(1))
        throw std::invalid_argument("the pointedness check needs X_0..X_2 with s_0 on X_0 and s_0, s_1 on X_1");
    Verdict v;
    v.absorb(check_square(x.d(1, 1), x.s(1, 0), x.s(0, 0), x.d(2, 2), "X_1 -> X_0 x_{X_1} X_2 via (s_0, d_2)", budget));
    v.absorb(check_square(x.d(1, 0), x.s(1, 1), x.s(0, 0), x.d(2, 0), "X_1 -> X_0 x_{X_1} X_2 via (s_0, d_0)", budget));
    return v;
}

} // namespace hallkit
