/**
 * @file tableaux.hpp
 * @brief Semistandard Young tableaux counts and s_lambda(1^d).
 */
#pragma once

#include "hallkit/exact/partition.hpp"

#include <vector>

namespace hallkit {

/// Counts SSYT of shape lambda with entries in {1..d} by direct enumeration.
inline BigInt ssyt_count(const Partition& lambda, int d)
{
    if (d < 0)
        throw std::invalid_argument("ssyt_count: d must be non-negative");
    if (lambda.length() > d)
        return 0;
    const int rows = lambda.length();
    const Partition conj = lambda.conjugate();
    std::vector<std::vector<int>> t(rows);
    for (int r = 0; r < rows; ++r)
        t[r].assign(lambda[r], 0);

    BigInt count = 0;
    auto rec = [&](auto& self, int r, int c) -> void {
        if (r == rows) {
            ++count;
            return;
        }
        if (c == lambda[r]) {
            self(self, r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0)
            lo = std::max(lo, t[r][c - 1]);
        if (r > 0)
            lo = std::max(lo, t[r - 1][c] + 1);
        // rows below need room for strictly larger entries
        int hi = d - (conj[c] - r - 1);
        for (int v = lo; v <= hi; ++v) {
            t[r][c] = v;
            self(self, r, c + 1);
        }
    };
    rec(rec, 0, 0);
    return count;
}

/// Hook-content formula: prod over cells (d + j - i) / hook(i, j).
inline BigInt schur_eval_ones(const Partition& lambda, int d)
{
    if (d < 0)
        throw std::invalid_argument("schur_eval_ones: d must be non-negative");
    Partition conj = lambda.conjugate();
    BigInt num = 1, den = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            long content = static_cast<long>(d) + j - i;
            if (content <= 0)
                return 0;
            num *= content;
            den *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
        }
    return num / den;
}

/// Number of standard Young tableaux of shape lambda (hook length formula).
inline BigInt syt_count(const Partition& lambda)
{
    Partition conj = lambda.conjugate();
    BigInt den = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            den *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    return factorial(lambda.size()) / den;
}

} // namespace hallkit
