/**
 * @file hall.hpp
 * @brief Hall algebra structure constants, products and the standard checks.
 *
 * [N] . [L] = sum_M g^M_{N,L} [M], where g^M_{N,L} counts subobjects U of M
 * with U ~ L and M/U ~ N.
 */
#pragma once

#include "hallkit/exact/verdict.hpp"
#include "hallkit/protoab/instance.hpp"

#include <map>
#include <tuple>

namespace hallkit {

using HallVec = std::map<IsoClass, Rat>;

struct HallTable {
    ProtoAbelianInstance instance;
    std::vector<IsoClass> basis;
    /// (N, L, M) -> g^M_{N,L}; only nonzero constants are stored.
    std::map<std::tuple<IsoClass, IsoClass, IsoClass>, Rat> constants;

    Rat constant(const IsoClass& n, const IsoClass& l, const IsoClass& m) const
    {
        auto it = constants.find({n, l, m});
        return it == constants.end() ? Rat(0) : it->second;
    }
    bool in_basis(const IsoClass& c) const { return std::binary_search(basis.begin(), basis.end(), c); }
};

inline HallTable hall_constants(const ProtoAbelianInstance& inst)
{
    HallTable t{inst, inst.iso_classes(), {}};
    for (const auto& m : t.basis)
        for (const auto& s : inst.category().subobjects(m))
            t.constants[{s.quotient, s.sub, m}] += 1;
    return t;
}

inline HallVec delta(const IsoClass& c) { return {{c, Rat(1)}}; }

inline HallVec hall_product(const HallTable& t, const HallVec& f, const HallVec& g)
{
    for (const auto* v : {&f, &g})
        for (const auto& [c, x] : *v)
            if (x != 0 && !t.in_basis(c))
                throw std::invalid_argument("hall product: support outside the table basis");
    HallVec out;
    for (const auto& [n, a] : f) {
        if (a == 0)
            continue;
        for (const auto& [l, b] : g) {
            if (b == 0)
                continue;
            if (n.size + l.size > t.instance.bound())
                throw std::invalid_argument("hall product: result exceeds the size bound");
            for (const auto& m : t.basis) {
                if (m.size != n.size + l.size)
                    continue;
                Rat c = t.constant(n, l, m);
                if (c != 0)
                    out[m] += a * b * c;
            }
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

inline std::string hall_vec_to_string(const HallTable& t, const HallVec& v)
{
    if (v.empty())
        return "0";
    std::string s;
    for (const auto& [c, x] : v) {
        if (!s.empty())
            s += " + ";
        s += to_string(x) + "*[" + t.instance.label(c) + "]";
    }
    return s;
}

/// (a.b).c = a.(b.c) on all basis triples whose sizes fit the bound.
inline Verdict check_associativity(const HallTable& t, std::size_t max_witnesses = 4)
{
    Verdict v;
    const int bound = t.instance.bound();
    for (const auto& a : t.basis)
        for (const auto& b : t.basis) {
            if (a.size + b.size > bound)
                continue;
            HallVec ab = hall_product(t, delta(a), delta(b));
            for (const auto& c : t.basis) {
                if (a.size + b.size + c.size > bound)
                    continue;
                HallVec left = hall_product(t, ab, delta(c));
                HallVec right = hall_product(t, delta(a), hall_product(t, delta(b), delta(c)));
                if (left != right) {
                    v.pass = false;
                    if (v.witnesses.size() < max_witnesses)
                        v.witnesses.push_back("([" + t.instance.label(a) + "].[" + t.instance.label(b) + "]).[" +
                                              t.instance.label(c) + "] = " + hall_vec_to_string(t, left) +
                                              " but [" + t.instance.label(a) + "].([" + t.instance.label(b) +
                                              "].[" + t.instance.label(c) + "]) = " + hall_vec_to_string(t, right));
                }
            }
        }
    return v;
}

/// [0] is a two-sided unit on every basis element.
inline Verdict check_unit(const HallTable& t)
{
    Verdict v;
    const auto zero = t.instance.category().zero();
    for (const auto& a : t.basis) {
        if (hall_product(t, delta(zero), delta(a)) != delta(a))
            v.fail("[0].[" + t.instance.label(a) + "] != [" + t.instance.label(a) + "]");
        if (hall_product(t, delta(a), delta(zero)) != delta(a))
            v.fail("[" + t.instance.label(a) + "].[0] != [" + t.instance.label(a) + "]");
    }
    return v;
}

/// Nonzero constants only where size(M) = size(L) + size(N), all non-negative integers.
inline Verdict check_grading(const HallTable& t)
{
    Verdict v;
    for (const auto& [key, c] : t.constants) {
        const auto& [n, l, m] = key;
        if (c != 0 && m.size != n.size + l.size)
            v.fail("nonzero constant off the grading at M = [" + t.instance.label(m) + "]");
        if (c < 0 || !is_integer(c))
            v.fail("constant at M = [" + t.instance.label(m) + "] is not a non-negative integer");
    }
    return v;
}

/// delta_n . delta_m = C(n+m, n) delta_{n+m} for every supplied G, with identical tables.
inline Verdict divided_powers_iso_check(const std::vector<NamedGroup>& groups, int bound)
{
    Verdict v;
    std::vector<std::map<std::pair<int, int>, Rat>> tables;
    for (const auto& g : groups) {
        auto inst = ProtoAbelianInstance::f1_free(g, bound);
        auto t = hall_constants(inst);
        std::map<std::pair<int, int>, Rat> row;
        for (int n = 0; n <= bound; ++n)
            for (int m = 0; n + m <= bound; ++m) {
                auto cn = F1Category(g).rank(n), cm = F1Category(g).rank(m);
                auto prod = hall_product(t, delta(cn), delta(cm));
                HallVec expected{{F1Category(g).rank(n + m), Rat(binomial(n + m, n))}};
                if (prod != expected)
                    v.fail("G = " + g.spec + ": delta_" + std::to_string(n) + ".delta_" + std::to_string(m) +
                           " = " + hall_vec_to_string(t, prod));
                row[{n, m}] = prod.empty() ? Rat(0) : prod.begin()->second;
            }
        tables.push_back(std::move(row));
    }
    for (std::size_t i = 1; i < tables.size(); ++i)
        if (tables[i] != tables[0])
            v.fail("table for G = " + groups[i].spec + " differs from G = " + groups[0].spec);
    return v;
}

} // namespace hallkit
