// Brute-force reference computations shared by the unit tests and the acceptance run.
#pragma once

#include "hallkit/exact/partition.hpp"
#include "hallkit/exact/rational.hpp"
#include "hallkit/group/finite_group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using hallkit::BigInt;
using hallkit::Partition;
using hallkit::Rat;

/// Double cosets A x B as sorted element lists, ordered by least element.
inline std::vector<std::vector<int>> double_cosets(const hallkit::FiniteGroup& g, const std::vector<int>& a,
                                                   const std::vector<int>& b)
{
    std::vector<std::vector<int>> out;
    std::vector<char> done(g.order(), 0);
    for (int x = 0; x < g.order(); ++x) {
        if (done[x])
            continue;
        std::set<int> s;
        for (int u : a)
            for (int v : b)
                s.insert(g.mul(g.mul(u, x), v));
        for (int y : s)
            done[y] = 1;
        out.emplace_back(s.begin(), s.end());
    }
    return out;
}

/// (f * v)(x) = (1/|H|) sum_y f(y) v(y^{-1} x).
inline std::vector<Rat> convolve(const hallkit::FiniteGroup& g, int h_order, const std::vector<Rat>& f,
                                 const std::vector<Rat>& v)
{
    std::vector<Rat> out(g.order(), Rat(0));
    for (int x = 0; x < g.order(); ++x) {
        Rat s = 0;
        for (int y = 0; y < g.order(); ++y)
            if (f[y] != 0)
                s += f[y] * v[g.mul(g.inv(y), x)];
        out[x] = s / h_order;
    }
    return out;
}

inline std::vector<Rat> indicator(int n, const std::vector<int>& set)
{
    std::vector<Rat> f(n, Rat(0));
    for (int x : set)
        f[x] = 1;
    return f;
}

/// c[i][a][b]: coefficient of the b-th right coset class in (1_{H x_i H} * 1_{H y_a P}).
inline std::vector<std::vector<std::vector<Rat>>> convolution_table(const hallkit::FiniteGroup& g,
                                                                    const std::vector<int>& h,
                                                                    const std::vector<int>& p)
{
    auto left = double_cosets(g, h, h);
    auto right = double_cosets(g, h, p);
    std::vector<std::vector<std::vector<Rat>>> out(left.size(), std::vector<std::vector<Rat>>(right.size()));
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t a = 0; a < right.size(); ++a) {
            auto w = convolve(g, static_cast<int>(h.size()), indicator(g.order(), left[i]),
                              indicator(g.order(), right[a]));
            for (const auto& c : right) {
                for (int y : c)
                    if (w[y] != w[c.front()])
                        throw std::logic_error("convolution is not biinvariant");
                out[i][a].push_back(w[c.front()]);
            }
        }
    return out;
}

using Poly = std::map<std::vector<int>, BigInt>;

// s_lambda in nvars variables as a sum of SSYT monomials
inline Poly schur_poly(const Partition& lambda, int nvars)
{
    Poly out;
    std::vector<std::vector<int>> t(lambda.length());
    for (int r = 0; r < lambda.length(); ++r)
        t[r].assign(lambda[r], 0);
    auto rec = [&](auto& self, int r, int c) -> void {
        if (r == lambda.length()) {
            std::vector<int> e(nvars, 0);
            for (auto& row : t)
                for (int v : row)
                    ++e[v - 1];
            out[e] += 1;
            return;
        }
        if (c == lambda[r]) {
            self(self, r + 1, 0);
            return;
        }
        for (int v = 1; v <= nvars; ++v) {
            if (c > 0 && v < t[r][c - 1])
                continue;
            if (r > 0 && v <= t[r - 1][c])
                continue;
            t[r][c] = v;
            self(self, r, c + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

inline Poly poly_mul(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [e, c] : a)
        for (const auto& [f, d] : b) {
            auto g = e;
            for (std::size_t i = 0; i < g.size(); ++i)
                g[i] += f[i];
            out[g] += c * d;
        }
    return out;
}

// peel off the lexicographically largest monomial, which is a dominant weight
inline std::map<Partition, BigInt> schur_decompose(Poly p, int nvars)
{
    std::map<Partition, BigInt> out;
    for (;;) {
        for (auto it = p.begin(); it != p.end();)
            it = it->second == 0 ? p.erase(it) : std::next(it);
        if (p.empty())
            return out;
        auto lead = p.rbegin()->first;
        BigInt c = p.rbegin()->second;
        Partition nu(lead);
        out[nu] = c;
        for (const auto& [e, k] : schur_poly(nu, nvars))
            p[e] -= c * k;
    }
}

/// Number of fillings f: {0..n-1} -> rows with |f^-1(r)| = lambda_r and f(sigma(i)) = f(i),
/// the permutation character of the Young module M^lambda at sigma.
inline long young_permutation_character(const Partition& lambda, const std::vector<int>& sigma)
{
    const int n = static_cast<int>(sigma.size());
    const int rows = lambda.length();
    std::vector<int> f(n, 0);
    long count = 0;
    auto rec = [&](auto& self, int i) -> void {
        if (i == n) {
            std::vector<int> sizes(rows, 0);
            for (int x : f)
                ++sizes[x];
            for (int r = 0; r < rows; ++r)
                if (sizes[r] != lambda[r])
                    return;
            for (int j = 0; j < n; ++j)
                if (f[sigma[j]] != f[j])
                    return;
            ++count;
            return;
        }
        for (int r = 0; r < rows; ++r) {
            f[i] = r;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return count;
}

/// Kostka number: SSYT of shape nu with content mu, by direct filling.
inline long kostka(const Partition& nu, const Partition& mu)
{
    if (nu.size() != mu.size())
        return 0;
    std::vector<std::vector<int>> t(nu.length());
    for (int r = 0; r < nu.length(); ++r)
        t[r].assign(nu[r], 0);
    long count = 0;
    auto rec = [&](auto& self, int r, int c) -> void {
        if (r == nu.length()) {
            std::vector<int> content(mu.length(), 0);
            for (auto& row : t)
                for (int v : row)
                    ++content[v];
            for (int i = 0; i < mu.length(); ++i)
                if (content[i] != mu[i])
                    return;
            ++count;
            return;
        }
        if (c == nu[r]) {
            self(self, r + 1, 0);
            return;
        }
        for (int v = 0; v < mu.length(); ++v) {
            if (c > 0 && v < t[r][c - 1])
                continue;
            if (r > 0 && v <= t[r - 1][c])
                continue;
            t[r][c] = v;
            self(self, r, c + 1);
        }
    };
    rec(rec, 0, 0);
    return count;
}

/// Partition of the elements of a group into conjugacy classes by full conjugation,
/// as a vector mapping each element to the least element of its class.
inline std::vector<int> conjugacy_class_minima(const hallkit::FiniteGroup& g)
{
    std::vector<int> out(g.order());
    for (int x = 0; x < g.order(); ++x) {
        int m = x;
        for (int y = 0; y < g.order(); ++y)
            m = std::min(m, g.mul(g.mul(y, x), g.inv(y)));
        out[x] = m;
    }
    return out;
}

} // namespace oracle
