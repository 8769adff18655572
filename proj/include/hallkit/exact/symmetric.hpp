/**
 * @file symmetric.hpp
 * @brief Littlewood-Richardson coefficients and the Schur-basis rings
 * Lambda and Lambda(X) = tensor over X of copies of Lambda.
 */
#pragma once

#include "hallkit/exact/partition.hpp"

#include <map>
#include <string>
#include <vector>

namespace hallkit {

/// c^nu_{lambda,mu}: LR tableaux of shape nu/lambda and content mu.
inline BigInt littlewood_richardson(const Partition& lambda, const Partition& mu,
                                    const Partition& nu)
{
    if (nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu))
        return 0;
    if (mu.empty())
        return 1;

    // cells of nu/lambda in reading order: top row first, right to left
    struct Cell {
        int r, c;
    };
    std::vector<Cell> cells;
    for (int r = 0; r < nu.length(); ++r)
        for (int c = nu[r] - 1; c >= lambda[r]; --c)
            cells.push_back({r, c});

    std::vector<std::vector<int>> t(nu.length());
    for (int r = 0; r < nu.length(); ++r)
        t[r].assign(nu[r], 0);
    std::vector<int> used(mu.length() + 1, 0);

    BigInt count = 0;
    auto rec = [&](auto& self, std::size_t k) -> void {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[k];
        int lo = 1, hi = mu.length();
        if (r > 0 && c >= lambda[r - 1])
            lo = t[r - 1][c] + 1;
        if (c + 1 < nu[r])
            hi = std::min(hi, t[r][c + 1]);
        for (int v = lo; v <= hi; ++v) {
            if (used[v] == mu[v - 1])
                continue;
            if (v > 1 && used[v] + 1 > used[v - 1])
                continue;
            ++used[v];
            t[r][c] = v;
            self(self, k + 1);
            --used[v];
        }
    };
    rec(rec, 0);
    return count;
}

/// s_lambda * s_mu = sum_nu c^nu_{lambda,mu} s_nu, nonzero terms only.
inline std::map<Partition, BigInt> lr_expand(const Partition& lambda, const Partition& mu)
{
    std::map<Partition, BigInt> out;
    for (const auto& nu : partitions_of(lambda.size() + mu.size())) {
        if (!nu.contains(lambda) || !nu.contains(mu))
            continue;
        BigInt c = littlewood_richardson(lambda, mu, nu);
        if (c != 0)
            out.emplace(nu, c);
    }
    return out;
}

/// Element of Lambda in the Schur basis.
class SymElem {
public:
    SymElem() = default;
    static SymElem schur(const Partition& p, const Rat& coef = 1)
    {
        SymElem e;
        e.add(p, coef);
        return e;
    }

    const std::map<Partition, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coefficient(const Partition& p) const
    {
        auto it = terms_.find(p);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add(const Partition& p, const Rat& coef)
    {
        if (coef == 0)
            return;
        auto [it, fresh] = terms_.emplace(p, coef);
        if (!fresh && (it->second += coef) == 0)
            terms_.erase(it);
    }

    friend SymElem operator+(SymElem a, const SymElem& b)
    {
        for (const auto& [p, c] : b.terms_)
            a.add(p, c);
        return a;
    }
    friend SymElem operator*(const Rat& s, const SymElem& a)
    {
        SymElem out;
        for (const auto& [p, c] : a.terms_)
            out.add(p, s * c);
        return out;
    }
    friend SymElem operator*(const SymElem& a, const SymElem& b)
    {
        SymElem out;
        for (const auto& [p, c] : a.terms_)
            for (const auto& [q, d] : b.terms_)
                for (const auto& [nu, k] : lr_expand(p, q))
                    out.add(nu, c * d * Rat(k));
        return out;
    }
    friend bool operator==(const SymElem&, const SymElem&) = default;

private:
    std::map<Partition, Rat> terms_;
};

/// Element of Lambda(X) in the basis S_lambda = prod_x s_{lambda(x)}.
class MultiSymElem {
public:
    explicit MultiSymElem(LabelSet labels) : labels_(std::move(labels)) {}

    static MultiSymElem basis(const PartitionMap& lambda, const Rat& coef = 1)
    {
        MultiSymElem e(lambda.labels());
        e.add(lambda, coef);
        return e;
    }
    static MultiSymElem one(const LabelSet& labels)
    {
        return basis(PartitionMap::empty_on(labels));
    }

    const LabelSet& labels() const { return labels_; }
    const std::map<PartitionMap, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coefficient(const PartitionMap& p) const
    {
        auto it = terms_.find(p);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add(const PartitionMap& p, const Rat& coef)
    {
        if (!same_labels(p.labels(), labels_))
            throw std::invalid_argument("MultiSymElem: label set mismatch");
        if (coef == 0)
            return;
        auto [it, fresh] = terms_.emplace(p, coef);
        if (!fresh && (it->second += coef) == 0)
            terms_.erase(it);
    }

    friend MultiSymElem operator+(MultiSymElem a, const MultiSymElem& b)
    {
        if (!same_labels(a.labels_, b.labels_))
            throw std::invalid_argument("MultiSymElem: label set mismatch");
        for (const auto& [p, c] : b.terms_)
            a.add(p, c);
        return a;
    }
    friend bool operator==(const MultiSymElem& a, const MultiSymElem& b)
    {
        return same_labels(a.labels_, b.labels_) && a.terms_ == b.terms_;
    }

    /// "S{a:(1)} + 2/1*S{...}" in canonical key order, "0" for zero.
    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto& [p, c] : terms_) {
            if (!s.empty())
                s += " + ";
            if (c != 1)
                s += hallkit::to_string(c) + "*";
            s += "S" + p.to_string();
        }
        return s;
    }

private:
    LabelSet labels_;
    std::map<PartitionMap, Rat> terms_;
};

/// Product in Lambda(X) via componentwise Littlewood-Richardson expansion.
inline MultiSymElem multisym_mul(const MultiSymElem& a, const MultiSymElem& b)
{
    if (!same_labels(a.labels(), b.labels()))
        throw std::invalid_argument("multisym_mul: operands have different label sets");
    const auto& labels = a.labels();
    const std::size_t k = labels->size();
    MultiSymElem out(labels);
    for (const auto& [p, c] : a.terms())
        for (const auto& [q, d] : b.terms()) {
            std::vector<std::vector<std::pair<Partition, BigInt>>> factors(k);
            for (std::size_t i = 0; i < k; ++i) {
                auto e = lr_expand(p[i], q[i]);
                factors[i].assign(e.begin(), e.end());
            }
            std::vector<Partition> cur(k);
            auto rec = [&](auto& self, std::size_t i, const BigInt& mult) -> void {
                if (i == k) {
                    out.add(PartitionMap(labels, cur), c * d * Rat(mult));
                    return;
                }
                for (const auto& [nu, m] : factors[i]) {
                    cur[i] = nu;
                    self(self, i + 1, mult * m);
                }
            };
            rec(rec, 0, BigInt(1));
        }
    return out;
}

} // namespace hallkit
