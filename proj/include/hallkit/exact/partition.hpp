/**
 * @file partition.hpp
 * @brief Integer partitions and partition-valued maps on a finite label set.
 *
 * Canonical order on partitions: by size, then decreasing lexicographic.
 * So partitions_of(4) lists (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
 */
#pragma once

#include "hallkit/exact/rational.hpp"

#include <algorithm>
#include <compare>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

namespace hallkit {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Row i, zero past the last row.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const
    {
        std::vector<int> c(parts_.empty() ? 0 : parts_.front(), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j)
                ++c[j];
        return Partition(std::move(c));
    }

    bool contains(const Partition& inner) const
    {
        if (inner.length() > length())
            return false;
        for (int i = 0; i < inner.length(); ++i)
            if (inner[i] > parts_[i])
                return false;
        return true;
    }

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i)
            s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        if (auto c = a.size() <=> b.size(); c != 0)
            return c;
        // same size: larger lexicographic first
        return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                      a.parts_.begin(), a.parts_.end());
    }

private:
    std::vector<int> parts_;
};

/// All partitions of n in canonical order.
inline std::vector<Partition> partitions_of(int n)
{
    if (n < 0)
        throw std::invalid_argument("partitions_of: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// Number of multisets of size n drawn from m symbols, C(m+n-1, n).
inline BigInt multiset_number(long m, long n)
{
    if (m < 0 || n < 0)
        throw std::invalid_argument("multiset_number: arguments must be non-negative");
    if (n == 0)
        return 1;
    if (m == 0)
        return 0;
    return binomial(m + n - 1, n);
}

using LabelSet = std::shared_ptr<const std::vector<std::string>>;

inline LabelSet make_labels(std::vector<std::string> labels)
{
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("label set has duplicates");
    return std::make_shared<const std::vector<std::string>>(std::move(labels));
}

inline bool same_labels(const LabelSet& a, const LabelSet& b)
{
    return a == b || (a && b && *a == *b);
}

/// A map from an ordered finite label set to partitions.
class PartitionMap {
public:
    PartitionMap() : labels_(make_labels({})) {}
    PartitionMap(LabelSet labels, std::vector<Partition> values)
        : labels_(std::move(labels)), values_(std::move(values))
    {
        if (!labels_ || labels_->size() != values_.size())
            throw std::invalid_argument("PartitionMap: one partition per label required");
    }
    /// The all-empty map on a label set.
    static PartitionMap empty_on(LabelSet labels)
    {
        std::size_t k = labels->size();
        return PartitionMap(std::move(labels), std::vector<Partition>(k));
    }

    const LabelSet& labels() const { return labels_; }
    const std::vector<Partition>& values() const { return values_; }
    const Partition& operator[](std::size_t i) const { return values_.at(i); }
    const Partition& at(const std::string& label) const
    {
        for (std::size_t i = 0; i < labels_->size(); ++i)
            if ((*labels_)[i] == label)
                return values_[i];
        throw std::out_of_range("unknown label '" + label + "'");
    }
    int total() const
    {
        int t = 0;
        for (const auto& p : values_)
            t += p.size();
        return t;
    }

    /// "{a:(1),b:(1)}"; labels with empty partitions are omitted.
    std::string to_string() const
    {
        std::string s = "{";
        bool first = true;
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (values_[i].empty())
                continue;
            s += (first ? "" : ",") + (*labels_)[i] + ":" + values_[i].to_string();
            first = false;
        }
        return s + "}";
    }

    friend bool operator==(const PartitionMap& a, const PartitionMap& b)
    {
        return same_labels(a.labels_, b.labels_) && a.values_ == b.values_;
    }

    /// Canonical order: total size, then per-label sizes descending, then
    /// per-label partitions in decreasing lexicographic order.
    friend std::strong_ordering operator<=>(const PartitionMap& a, const PartitionMap& b)
    {
        if (auto c = a.total() <=> b.total(); c != 0)
            return c;
        std::size_t k = std::min(a.values_.size(), b.values_.size());
        for (std::size_t i = 0; i < k; ++i)
            if (auto c = b.values_[i].size() <=> a.values_[i].size(); c != 0)
                return c;
        for (std::size_t i = 0; i < k; ++i)
            if (auto c = a.values_[i] <=> b.values_[i]; c != 0)
                return c;
        return a.values_.size() <=> b.values_.size();
    }

private:
    LabelSet labels_;
    std::vector<Partition> values_;
};

/// All partition-valued maps on `labels` of total size n, canonical order.
inline std::vector<PartitionMap> partition_maps(int n, const LabelSet& labels)
{
    if (n < 0)
        throw std::invalid_argument("partition_maps: n must be non-negative");
    std::size_t k = labels->size();
    if (k == 0) {
        if (n > 0)
            throw std::invalid_argument("partition_maps: empty label set with n > 0");
        return {PartitionMap::empty_on(labels)};
    }
    std::vector<std::vector<Partition>> by_size(n + 1);
    for (int s = 0; s <= n; ++s)
        by_size[s] = partitions_of(s);

    std::vector<PartitionMap> out;
    std::vector<Partition> cur(k);
    auto rec = [&](auto& self, std::size_t idx, int remaining) -> void {
        if (idx + 1 == k) {
            for (const auto& p : by_size[remaining]) {
                cur[idx] = p;
                out.emplace_back(labels, cur);
            }
            return;
        }
        for (int s = remaining; s >= 0; --s)
            for (const auto& p : by_size[s]) {
                cur[idx] = p;
                self(self, idx + 1, remaining - s);
            }
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hallkit
