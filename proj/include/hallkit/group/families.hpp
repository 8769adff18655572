/**
 * @file families.hpp
 * @brief Named group families, Cayley-table input and subgroup selectors.
 *
 * Group syntax: cyclic:n, sym:n, alt:n, dihedral:n, klein, trivial,
 * product:(A,B,...), file:<path>.
 * Subgroup syntax: trivial, whole, sym:m, alt:m, young:a,b,..., cyclic:k,
 * gens:x,y,... (element names).
 */
#pragma once

#include "hallkit/group/finite_group.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <memory>
#include <sstream>

namespace hallkit {

using Perm = std::vector<int>;

/// All permutations of {0..n-1} in lexicographic order (identity first).
inline std::vector<Perm> permutations_lex(int n)
{
    std::vector<Perm> out;
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Position of p in permutations_lex(p.size()).
inline long perm_rank(const Perm& p)
{
    const int n = static_cast<int>(p.size());
    long rank = 0;
    for (int i = 0; i < n; ++i) {
        long smaller = 0;
        for (int j = i + 1; j < n; ++j)
            smaller += p[j] < p[i];
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

/// (a*b)(i) = a(b(i)).
inline Perm perm_compose(const Perm& a, const Perm& b)
{
    Perm c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        c[i] = a[b[i]];
    return c;
}

inline Perm perm_inverse(const Perm& a)
{
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[a[i]] = static_cast<int>(i);
    return c;
}

inline int perm_sign(const Perm& p)
{
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j])
                s = -s;
    return s;
}

/// Cycle lengths, sorted decreasingly.
inline std::vector<int> cycle_type(const Perm& p)
{
    std::vector<int> out;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

inline std::string perm_name(const Perm& p)
{
    std::string s;
    for (int x : p)
        s += std::to_string(x);
    return s;
}

/// A group together with a permutation realization when it has one.
struct NamedGroup {
    GroupPtr group;
    std::string spec;
    std::vector<Perm> perms; // perms[x] realizes element x, empty if not a permutation group
};

inline NamedGroup make_cyclic(int n)
{
    if (n < 1)
        throw std::invalid_argument("cyclic:n needs n >= 1");
    auto g = FiniteGroup::from_function(n, [n](int a, int b) { return (a + b) % n; });
    return {std::make_shared<const FiniteGroup>(std::move(g)), "cyclic:" + std::to_string(n), {}};
}

inline NamedGroup make_trivial()
{
    auto g = make_cyclic(1);
    g.spec = "trivial";
    return g;
}

inline NamedGroup make_perm_group(std::vector<Perm> perms, std::string spec)
{
    std::map<Perm, int> pos;
    for (std::size_t i = 0; i < perms.size(); ++i)
        pos[perms[i]] = static_cast<int>(i);
    std::vector<std::string> names;
    for (const auto& p : perms)
        names.push_back(perm_name(p));
    auto g = FiniteGroup::from_function(
        static_cast<int>(perms.size()),
        [&](int a, int b) {
            auto it = pos.find(perm_compose(perms[a], perms[b]));
            if (it == pos.end())
                throw std::invalid_argument("permutation set is not closed");
            return it->second;
        },
        std::move(names));
    return {std::make_shared<const FiniteGroup>(std::move(g)), std::move(spec), std::move(perms)};
}

inline NamedGroup make_symmetric(int n)
{
    if (n < 0 || n > 7)
        throw std::invalid_argument("sym:n supported for 0 <= n <= 7");
    return make_perm_group(permutations_lex(n), "sym:" + std::to_string(n));
}

inline NamedGroup make_alternating(int n)
{
    if (n < 0 || n > 7)
        throw std::invalid_argument("alt:n supported for 0 <= n <= 7");
    std::vector<Perm> even;
    for (auto& p : permutations_lex(n))
        if (perm_sign(p) == 1)
            even.push_back(std::move(p));
    return make_perm_group(std::move(even), "alt:" + std::to_string(n));
}

/// Order 2n; element i + n*j stands for r^i s^j.
inline NamedGroup make_dihedral(int n)
{
    if (n < 1)
        throw std::invalid_argument("dihedral:n needs n >= 1");
    std::vector<std::string> names;
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < n; ++i)
            names.push_back("r" + std::to_string(i) + (j ? "s" : ""));
    auto g = FiniteGroup::from_function(
        2 * n,
        [n](int a, int b) {
            int i = a % n, j = a / n, k = b % n, l = b / n;
            // r^i s^j r^k s^l = r^(i + (-1)^j k) s^(j+l)
            int r = ((i + (j ? -k : k)) % n + n) % n;
            return r + n * ((j + l) % 2);
        },
        std::move(names));
    return {std::make_shared<const FiniteGroup>(std::move(g)), "dihedral:" + std::to_string(n), {}};
}

/// Direct product; element index is mixed radix with the first factor most significant.
inline NamedGroup make_product(const std::vector<NamedGroup>& factors)
{
    if (factors.empty())
        return make_trivial();
    std::vector<int> orders;
    int total = 1;
    for (const auto& f : factors) {
        orders.push_back(f.group->order());
        total *= f.group->order();
        if (total > 100000)
            throw BudgetExceeded("product group too large");
    }
    auto split = [&](int x) {
        std::vector<int> c(factors.size());
        for (std::size_t i = factors.size(); i-- > 0;) {
            c[i] = x % orders[i];
            x /= orders[i];
        }
        return c;
    };
    std::vector<std::string> names;
    for (int x = 0; x < total; ++x) {
        auto c = split(x);
        std::string s = "(";
        for (std::size_t i = 0; i < c.size(); ++i)
            s += (i ? "," : "") + factors[i].group->name(c[i]);
        names.push_back(s + ")");
    }
    auto g = FiniteGroup::from_function(
        total,
        [&](int a, int b) {
            auto ca = split(a), cb = split(b);
            int r = 0;
            for (std::size_t i = 0; i < ca.size(); ++i)
                r = r * orders[i] + factors[i].group->mul(ca[i], cb[i]);
            return r;
        },
        std::move(names));
    std::string spec = "product:(";
    for (std::size_t i = 0; i < factors.size(); ++i)
        spec += (i ? "," : "") + factors[i].spec;
    return {std::make_shared<const FiniteGroup>(std::move(g)), spec + ")", {}};
}

/// Cayley table JSON: {"order": n, "table": [[...]], "names": [...] (optional)}.
inline NamedGroup group_from_json(const nlohmann::json& j, std::string spec = "json")
{
    try {
        int n = j.at("order").get<int>();
        auto table = j.at("table").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(table.size()) != n)
            throw std::invalid_argument("Cayley table size does not match order");
        std::vector<std::string> names;
        if (j.contains("names"))
            names = j.at("names").get<std::vector<std::string>>();
        return {std::make_shared<const FiniteGroup>(table, std::move(names)), std::move(spec), {}};
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed Cayley table: ") + e.what());
    }
}

namespace detail {

inline std::vector<std::string> split_top_level(const std::string& s)
{
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(')
            ++depth;
        if (c == ')')
            --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else
            cur += c;
    }
    out.push_back(cur);
    return out;
}

inline int parse_int(const std::string& s, const std::string& context)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size())
            throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("expected an integer in '" + context + "'");
    }
}

} // namespace detail

inline NamedGroup parse_group(const std::string& spec)
{
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "trivial")
        return make_trivial();
    if (kind == "klein") {
        auto k = make_product({make_cyclic(2), make_cyclic(2)});
        k.spec = "klein";
        return k;
    }
    if (kind == "cyclic")
        return make_cyclic(detail::parse_int(arg, spec));
    if (kind == "sym")
        return make_symmetric(detail::parse_int(arg, spec));
    if (kind == "alt")
        return make_alternating(detail::parse_int(arg, spec));
    if (kind == "dihedral")
        return make_dihedral(detail::parse_int(arg, spec));
    if (kind == "product") {
        if (arg.size() < 2 || arg.front() != '(' || arg.back() != ')')
            throw std::invalid_argument("product syntax is product:(A,B,...)");
        std::vector<NamedGroup> fs;
        for (const auto& part : detail::split_top_level(arg.substr(1, arg.size() - 2)))
            fs.push_back(parse_group(part));
        return make_product(fs);
    }
    if (kind == "file") {
        std::ifstream in(arg);
        if (!in)
            throw std::invalid_argument("cannot open Cayley table file '" + arg + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("malformed Cayley table: ") + e.what());
        }
        return group_from_json(j, spec);
    }
    throw std::invalid_argument("unknown group family '" + spec + "'");
}

/// Element set of a subgroup of g selected by a subgroup spec.
inline std::vector<int> parse_subgroup(const NamedGroup& g, const std::string& spec)
{
    const FiniteGroup& G = *g.group;
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    std::vector<int> elems;
    auto need_perms = [&] {
        if (g.perms.empty())
            throw std::invalid_argument("subgroup '" + spec + "' needs a permutation group");
    };
    auto select = [&](auto&& pred) {
        for (int x = 0; x < G.order(); ++x)
            if (pred(g.perms[x]))
                elems.push_back(x);
    };
    if (kind == "trivial") {
        elems = {G.identity()};
    } else if (kind == "whole") {
        elems.resize(G.order());
        std::iota(elems.begin(), elems.end(), 0);
    } else if (kind == "sym" || kind == "alt") {
        need_perms();
        int m = detail::parse_int(arg, spec);
        select([&](const Perm& p) {
            for (std::size_t i = m; i < p.size(); ++i)
                if (p[i] != static_cast<int>(i))
                    return false;
            return kind == "sym" || perm_sign(p) == 1;
        });
    } else if (kind == "young") {
        need_perms();
        std::vector<int> block_of;
        int b = 0;
        for (const auto& part : detail::split_top_level(arg)) {
            int len = detail::parse_int(part, spec);
            block_of.insert(block_of.end(), len, b++);
        }
        select([&](const Perm& p) {
            if (block_of.size() != p.size())
                throw std::invalid_argument("young block sizes must sum to the degree");
            for (std::size_t i = 0; i < p.size(); ++i)
                if (block_of[p[i]] != block_of[i])
                    return false;
            return true;
        });
    } else if (kind == "cyclic") {
        int k = detail::parse_int(arg, spec);
        for (int x = 0; x < G.order(); ++x)
            if (G.element_order(x) == k) {
                elems = G.generated({x});
                break;
            }
        if (elems.empty())
            throw std::invalid_argument("no element of order " + arg);
    } else if (kind == "gens") {
        std::vector<int> gens;
        for (const auto& name : detail::split_top_level(arg)) {
            auto it = std::find(G.names().begin(), G.names().end(), name);
            if (it == G.names().end())
                throw std::invalid_argument("unknown element '" + name + "'");
            gens.push_back(static_cast<int>(it - G.names().begin()));
        }
        elems = G.generated(gens);
    } else {
        throw std::invalid_argument("unknown subgroup selector '" + spec + "'");
    }
    if (!G.is_subgroup(elems))
        throw std::invalid_argument("'" + spec + "' does not select a subgroup");
    return elems;
}

} // namespace hallkit
