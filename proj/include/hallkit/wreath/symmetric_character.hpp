/**
 * @file symmetric_character.hpp
 * @brief Irreducible characters of S_n by the Murnaghan-Nakayama rule.
 */
#pragma once

#include "hallkit/exact/partition.hpp"

#include <map>
#include <mutex>

namespace hallkit {

namespace detail {

/// First-column hook lengths lambda_i + (l - 1 - i), strictly decreasing.
inline std::vector<int> beta_set(const Partition& p)
{
    const int l = p.length();
    std::vector<int> b(l);
    for (int i = 0; i < l; ++i)
        b[i] = p[i] + (l - 1 - i);
    return b;
}

inline Partition from_beta_set(std::vector<int> b)
{
    std::sort(b.rbegin(), b.rend());
    const int l = static_cast<int>(b.size());
    std::vector<int> parts(l);
    for (int i = 0; i < l; ++i)
        parts[i] = b[i] - (l - 1 - i);
    return Partition(std::move(parts));
}

/// chi^mu on cycle type parts[from..], memoized on (mu, from).
inline long mn_rec(const Partition& mu, const std::vector<int>& parts, std::size_t from,
                   std::map<std::pair<Partition, std::size_t>, long>& memo)
{
    if (from == parts.size())
        return mu.empty() ? 1 : 0;
    auto key = std::make_pair(mu, from);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    const int r = parts[from];
    auto beta = beta_set(mu);
    long total = 0;
    // removing a border strip of length r moves one bead down by r
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
            continue;
        int between = 0;
        for (int b : beta)
            between += b > target && b < beta[i];
        auto nb = beta;
        nb[i] = target;
        long sub = mn_rec(from_beta_set(std::move(nb)), parts, from + 1, memo);
        total += between % 2 == 0 ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace detail

/// chi^mu on the class of cycle type `cls`.
inline long symmetric_character(const Partition& mu, const Partition& cls)
{
    if (mu.size() != cls.size())
        throw std::invalid_argument("symmetric_character: " + mu.to_string() + " and class " + cls.to_string() +
                                    " have different sizes");
    static std::mutex mu_lock;
    static std::map<std::pair<Partition, Partition>, long> cache;
    std::lock_guard lock(mu_lock);
    auto key = std::make_pair(mu, cls);
    if (auto it = cache.find(key); it != cache.end())
        return it->second;
    std::map<std::pair<Partition, std::size_t>, long> memo;
    long v = detail::mn_rec(mu, cls.parts(), 0, memo);
    cache.emplace(std::move(key), v);
    return v;
}

} // namespace hallkit
