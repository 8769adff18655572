/**
 * @file schurweyl.hpp
 * @brief Dimension identities for the polynomial representations R^d_lambda
 * of A_d(G) and the matching G wr S_n representations X_lambda.
 */
#pragma once

#include "hallkit/exact/tableaux.hpp"
#include "hallkit/exact/verdict.hpp"
#include "hallkit/wreath/characters.hpp"

namespace hallkit {

/// Dimension of degree-n polynomial functions on A_d(G): ((d^2 |G^ab|, n)).
inline BigInt dim_poly_fns(const FiniteGroup& g, int d, int n)
{
    if (d < 0 || n < 0)
        throw std::invalid_argument("dim_poly_fns: d and n must be non-negative");
    return multiset_number(static_cast<long>(d) * d * g.abelianization_order(), n);
}

/// prod_gamma s_{lambda(gamma)}(1^d).
inline BigInt dim_R(const PartitionMap& lambda, int d)
{
    BigInt r = 1;
    for (const auto& p : lambda.values())
        r *= schur_eval_ones(p, d);
    return r;
}

/// Some lambda(gamma) has more than d rows.
inline bool kernel_flag(const PartitionMap& lambda, int d)
{
    for (const auto& p : lambda.values())
        if (p.length() > d)
            return true;
    return false;
}

namespace detail {

inline void require_abelian(const NamedGroup& g)
{
    if (!g.group->is_abelian())
        throw Unsupported("the Schur-Weyl identities are checked only for abelian G; " + g.spec + " is not");
}

} // namespace detail

/// sum_lambda dim_R(lambda, d)^2 = ((d^2 |G|, n)).
inline Verdict check_sum_of_squares(const NamedGroup& g, int n, int d)
{
    detail::require_abelian(g);
    WreathCharacters wc(g);
    BigInt lhs = 0;
    for (const auto& lambda : partition_maps(n, wc.character_label_set())) {
        BigInt r = dim_R(lambda, d);
        lhs += r * r;
    }
    BigInt rhs = multiset_number(static_cast<long>(d) * d * g.group->order(), n);
    Verdict v;
    if (lhs != rhs)
        v.fail("sum of squares " + lhs.str() + " != multiset number " + rhs.str());
    return v;
}

/// sum_lambda dim X_lambda * dim R^d_lambda = (d |G|)^n.
inline Verdict check_total_dimension(const NamedGroup& g, int n, int d)
{
    detail::require_abelian(g);
    WreathCharacters wc(g);
    BigInt lhs = 0;
    for (const auto& lambda : partition_maps(n, wc.character_label_set()))
        lhs += wc.dimension(lambda) * dim_R(lambda, d);
    BigInt rhs = boost::multiprecision::pow(BigInt(static_cast<long>(d) * g.group->order()), n);
    Verdict v;
    if (lhs != rhs)
        v.fail("sum of dim X * dim R " + lhs.str() + " != (d|G|)^n = " + rhs.str());
    return v;
}

struct SchurWeylReport {
    struct Row {
        PartitionMap label;
        BigInt dim_x;
        BigInt dim_r;
        bool kernel = false;
    };

    std::string group;
    int n = 0;
    int d = 0;
    std::vector<Row> rows;
    BigInt poly_fns;
    Verdict sum_of_squares;
    Verdict total_dimension;
    Verdict kernel_free_when_n_le_d;
    Verdict nonzero_count;
    Verdict kernel_criterion;

    bool pass() const
    {
        return sum_of_squares.pass && total_dimension.pass && kernel_free_when_n_le_d.pass && nonzero_count.pass &&
               kernel_criterion.pass;
    }
};

inline SchurWeylReport schur_weyl_report(const NamedGroup& g, int n, int d)
{
    detail::require_abelian(g);
    if (n < 0 || d < 0)
        throw std::invalid_argument("schur_weyl_report: n and d must be non-negative");
    WreathCharacters wc(g);
    SchurWeylReport r;
    r.group = g.spec;
    r.n = n;
    r.d = d;
    r.poly_fns = dim_poly_fns(*g.group, d, n);
    int kernels = 0, nonzero = 0;
    for (const auto& lambda : partition_maps(n, wc.character_label_set())) {
        SchurWeylReport::Row row{lambda, wc.dimension(lambda), dim_R(lambda, d), kernel_flag(lambda, d)};
        if (row.kernel != (row.dim_r == 0))
            r.kernel_criterion.fail(lambda.to_string() + ": kernel flag " + (row.kernel ? "set" : "clear") +
                                    " but dim R = " + row.dim_r.str());
        if (n <= d && row.kernel)
            r.kernel_free_when_n_le_d.fail(lambda.to_string() + " has a kernel although n <= d");
        kernels += row.kernel;
        nonzero += row.dim_r != 0;
        r.rows.push_back(std::move(row));
    }
    if (nonzero != static_cast<int>(r.rows.size()) - kernels)
        r.nonzero_count.fail(std::to_string(nonzero) + " nonzero R, expected " + std::to_string(r.rows.size()) +
                             " - " + std::to_string(kernels));
    r.sum_of_squares = check_sum_of_squares(g, n, d);
    r.total_dimension = check_total_dimension(g, n, d);
    return r;
}

} // namespace hallkit
