/**
 * @file s_construction.hpp
 * @brief The Waldhausen S-construction of a concrete proto-abelian instance,
 * as full triangular diagrams, together with the flag-only model.
 *
 * An n-simplex is a diagram A_ij (0 <= i < j <= n) of iso-class
 * representatives with monos h_ij: A_ij -> A_{i,j+1} along rows and epis
 * v_ij: A_ij -> A_{i+1,j} down columns, such that every square commutes and
 * A_ij -> A_ik -> A_jk is exact for i < j < k. Morphisms are families of
 * automorphisms gamma_ij commuting with all maps.
 */
#pragma once

#include "hallkit/protoab/instance.hpp"
#include "hallkit/waldhausen/action_model.hpp"
#include "hallkit/waldhausen/simplicial.hpp"

#include <unordered_map>

namespace hallkit {

inline int num_pairs(int n) { return n * (n + 1) / 2; }

/// Position of (i, j) in the order (0,1), (0,2), ..., (0,n), (1,2), ...
inline int pair_index(int n, int i, int j) { return i * n - i * (i - 1) / 2 + (j - i - 1); }

struct FlagDiagram {
    int n = 0;
    std::vector<IsoClass> entry;
    std::vector<PointMap> horizontal; // empty where j == n
    std::vector<PointMap> vertical;   // empty where i + 1 == j

    const IsoClass& at(int i, int j) const { return entry[pair_index(n, i, j)]; }
    const PointMap& h(int i, int j) const { return horizontal[pair_index(n, i, j)]; }
    const PointMap& v(int i, int j) const { return vertical[pair_index(n, i, j)]; }

    std::vector<PointMap> key() const
    {
        std::vector<PointMap> k = horizontal;
        k.insert(k.end(), vertical.begin(), vertical.end());
        return k;
    }
};

namespace detail {

inline PointMap identity_points(int n)
{
    PointMap f(n);
    std::iota(f.begin(), f.end(), 0);
    return f;
}

/// Composite A_{i,j} -> A_{i,k} of horizontals.
inline PointMap row_composite(const ConcreteCategory& cat, const FlagDiagram& d, int i, int j, int k)
{
    PointMap f = identity_points(cat.num_points(d.at(i, j)));
    for (int t = j; t < k; ++t)
        f = compose_maps(d.h(i, t), f);
    return f;
}

/// Composite A_{i,k} -> A_{j,k} of verticals.
inline PointMap column_composite(const ConcreteCategory& cat, const FlagDiagram& d, int i, int j, int k)
{
    PointMap f = identity_points(cat.num_points(d.at(i, k)));
    for (int t = i; t < j; ++t)
        f = compose_maps(d.v(t, k), f);
    return f;
}

} // namespace detail

/// Monos along rows, epis down columns, commuting squares, exactness of A_ij -> A_ik -> A_jk.
inline Verdict check_flag_diagram(const ConcreteCategory& cat, const FlagDiagram& d)
{
    Verdict v;
    const int n = d.n;
    auto name = [](int i, int j) { return "A_" + std::to_string(i) + std::to_string(j); };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (j < n && !cat.is_mono(d.h(i, j)))
                v.fail("horizontal map out of " + name(i, j) + " is not a mono");
            if (i + 1 < j && !cat.is_epi(d.v(i, j), d.at(i + 1, j)))
                v.fail("vertical map out of " + name(i, j) + " is not an epi");
            if (i + 1 < j && j < n &&
                compose_maps(d.h(i + 1, j), d.v(i, j)) != compose_maps(d.v(i, j + 1), d.h(i, j)))
                v.fail("square at " + name(i, j) + " does not commute");
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                PointMap in = detail::row_composite(cat, d, i, j, k);
                PointMap out = detail::column_composite(cat, d, i, j, k);
                if (!cat.is_mono(in) || !cat.is_epi(out, d.at(j, k)) || kernel_mask(out) != image_mask(in))
                    v.fail(name(i, j) + " -> " + name(i, k) + " -> " + name(j, k) + " is not exact");
            }
    return v;
}

/// The sub-diagram along a monotone map alpha: [m] -> [n]; entries A_{alpha(i) alpha(j)},
/// zero where alpha(i) == alpha(j).
inline FlagDiagram restrict_diagram(const ConcreteCategory& cat, const FlagDiagram& d, const std::vector<int>& alpha)
{
    FlagDiagram r;
    r.n = static_cast<int>(alpha.size()) - 1;
    const int m = r.n;
    r.entry.resize(num_pairs(m));
    r.horizontal.resize(num_pairs(m));
    r.vertical.resize(num_pairs(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            const int a = alpha[i], b = alpha[j];
            const int p = pair_index(m, i, j);
            r.entry[p] = a < b ? d.at(a, b) : cat.zero();
            if (j < m)
                r.horizontal[p] = a == b ? PointMap{0} : detail::row_composite(cat, d, a, b, alpha[j + 1]);
            if (i + 1 < j) {
                if (a == b)
                    r.vertical[p] = PointMap{0};
                else if (alpha[i + 1] == b)
                    r.vertical[p] = cat.zero_map(d.at(a, b));
                else
                    r.vertical[p] = detail::column_composite(cat, d, a, alpha[i + 1], b);
            }
        }
    return r;
}

/// One level X_n: diagrams grouped into blocks by their entries.
class SLevel {
public:
    SLevel(const SLevel&) = delete;
    SLevel& operator=(const SLevel&) = delete;

    static std::shared_ptr<const SLevel> build(std::shared_ptr<const ConcreteCategory> cat, int n, int bound,
                                               std::size_t budget = kDefaultBudget)
    {
        std::shared_ptr<SLevel> lv(new SLevel(std::move(cat), n));
        lv->enumerate(bound, budget);
        lv->make_model(budget);
        return lv;
    }

    /// Row 0 only: flags A_01 -> ... -> A_0n with automorphisms of each step.
    static std::shared_ptr<const SLevel> build_flags(std::shared_ptr<const ConcreteCategory> cat, int n, int bound,
                                                     std::size_t budget = kDefaultBudget)
    {
        auto full = build(cat, n, bound, budget);
        std::shared_ptr<SLevel> lv(new SLevel(std::move(cat), n));
        lv->flags_only_ = true;
        std::map<std::pair<std::vector<IsoClass>, std::vector<PointMap>>, FlagDiagram> seen;
        for (const auto& d : full->diagrams_) {
            FlagDiagram f = lv->flag_part(d);
            seen.emplace(std::make_pair(f.entry, f.key()), f);
        }
        for (auto& [k, f] : seen)
            lv->diagrams_.push_back(std::move(f));
        lv->make_model(budget);
        return lv;
    }

    int n() const { return n_; }
    bool flags_only() const { return flags_only_; }
    const ConcreteCategory& category() const { return *cat_; }
    const GroupoidPtr& groupoid() const { return model_.groupoid(); }
    const ActionModel& model() const { return model_; }
    const FlagDiagram& diagram(int x) const { return diagrams_[x]; }
    int size() const { return static_cast<int>(diagrams_.size()); }

    /// Global id of a diagram, or -1.
    int find(const FlagDiagram& d) const
    {
        auto it = block_of_profile_.find(d.entry);
        if (it == block_of_profile_.end())
            return -1;
        const auto& idx = index_[it->second];
        auto jt = idx.find(d.key());
        return jt == idx.end() ? -1 : model_.offset(it->second) + jt->second;
    }

    /// Pairs (i, j) carrying an automorphism factor, in factor order.
    const std::vector<std::pair<int, int>>& factor_pairs() const { return factor_pairs_; }

    FlagDiagram flag_part(const FlagDiagram& d) const
    {
        FlagDiagram f;
        f.n = d.n;
        for (int j = 1; j <= d.n; ++j) {
            f.entry.push_back(d.at(0, j));
            f.horizontal.push_back(j < d.n ? d.h(0, j) : PointMap{});
        }
        return f;
    }

private:
    SLevel(std::shared_ptr<const ConcreteCategory> cat, int n) : cat_(std::move(cat)), n_(n)
    {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                factor_pairs_.emplace_back(i, j);
    }

    void enumerate(int bound, std::size_t budget)
    {
        const auto& cat = *cat_;
        const auto classes = cat.classes(bound);
        const int n = n_;
        FlagDiagram d;
        d.n = n;
        d.entry.resize(num_pairs(n));
        d.horizontal.resize(num_pairs(n));
        d.vertical.resize(num_pairs(n));
        std::vector<std::pair<int, int>> slots = factor_pairs_;

        auto finish_row = [&](int i) {
            for (int t = i + 1; t < n; ++t) {
                const auto& cands = cat.homs(d.at(i, t), d.at(i, t + 1));
                PointMap rhs = compose_maps(d.v(i - 1, t + 1), d.h(i - 1, t));
                int found = 0;
                for (const auto& f : cands)
                    if (compose_maps(f, d.v(i - 1, t)) == rhs) {
                        d.horizontal[pair_index(n, i, t)] = f;
                        ++found;
                    }
                if (found != 1)
                    throw std::logic_error("induced map on quotients is not unique");
            }
        };

        auto rec = [&](auto& self, std::size_t k) -> void {
            if (k == slots.size()) {
                auto chk = check_flag_diagram(cat, d);
                if (!chk)
                    throw std::logic_error("enumerated diagram fails validation: " + chk.witnesses.front());
                diagrams_.push_back(d);
                if (diagrams_.size() > budget)
                    throw BudgetExceeded("S-construction level " + std::to_string(n) + " exceeds the budget");
                return;
            }
            auto [i, j] = slots[k];
            const int p = pair_index(n, i, j);
            if (i == 0) {
                for (const auto& c : classes) {
                    if (j == 1) {
                        d.entry[p] = c;
                        self(self, k + 1);
                        continue;
                    }
                    if (c.size < d.at(0, j - 1).size)
                        continue;
                    d.entry[p] = c;
                    for (const auto& f : cat.homs(d.at(0, j - 1), c))
                        if (cat.is_mono(f)) {
                            d.horizontal[pair_index(n, 0, j - 1)] = f;
                            self(self, k + 1);
                        }
                }
                return;
            }
            const IsoClass& src = d.at(i - 1, j);
            Mask sub = image_mask(detail::row_composite(cat, d, i - 1, i, j));
            const int size = src.size - d.at(i - 1, i).size;
            for (const auto& c : classes) {
                if (c.size != size)
                    continue;
                d.entry[p] = c;
                for (const auto& e : cat.homs(src, c))
                    if (cat.is_epi(e, c) && kernel_mask(e) == sub) {
                        d.vertical[pair_index(n, i - 1, j)] = e;
                        if (j == n)
                            finish_row(i);
                        self(self, k + 1);
                    }
            }
        };
        rec(rec, 0);
    }

    void make_model(std::size_t budget)
    {
        std::map<std::vector<IsoClass>, std::vector<int>> groups;
        for (int x = 0; x < size(); ++x)
            groups[diagrams_[x].entry].push_back(x);
        std::vector<FlagDiagram> sorted;
        std::vector<ActionModel::Block> blocks;
        for (auto& [profile, members] : groups) {
            std::sort(members.begin(), members.end(),
                      [&](int a, int b) { return diagrams_[a].key() < diagrams_[b].key(); });
            const int bid = static_cast<int>(blocks.size());
            block_of_profile_[profile] = bid;
            index_.emplace_back();
            auto& idx = index_.back();
            block_start_.push_back(static_cast<int>(sorted.size()));
            for (int x : members) {
                idx.emplace(diagrams_[x].key(), static_cast<int>(idx.size()));
                sorted.push_back(diagrams_[x]);
            }
            ActionModel::Block blk;
            block_auts_.emplace_back();
            for (const auto& c : profile) {
                const auto& ad = cat_->automorphisms(c, budget);
                block_auts_.back().push_back(&ad);
                blk.factors.push_back(ad.group);
            }
            blk.num_points = static_cast<int>(members.size());
            blk.act = [this, bid](const GroupElem& g, int p) { return act(bid, g, p); };
            blocks.push_back(std::move(blk));
        }
        diagrams_ = std::move(sorted);
        model_ = ActionModel(std::move(blocks), budget);
    }

    int act(int bid, const GroupElem& g, int p) const
    {
        const FlagDiagram& d = diagrams_[block_start_[bid] + p];
        const auto& auts = block_auts_[bid];
        const int n = n_;
        const int np = static_cast<int>(d.entry.size());
        auto aut = [&](int q) -> const PointMap& { return auts[q]->maps[g[q]]; };
        auto aut_inv = [&](int q) -> const PointMap& { return auts[q]->maps[auts[q]->group->inv(g[q])]; };
        std::vector<PointMap> key(flags_only_ ? np : 2 * np);
        if (flags_only_) {
            for (int q = 0; q + 1 < np; ++q)
                key[q] = compose_maps(aut(q + 1), compose_maps(d.horizontal[q], aut_inv(q)));
        } else {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    int q = pair_index(n, i, j);
                    if (j < n)
                        key[q] = compose_maps(aut(pair_index(n, i, j + 1)), compose_maps(d.horizontal[q], aut_inv(q)));
                    if (i + 1 < j)
                        key[np + q] =
                            compose_maps(aut(pair_index(n, i + 1, j)), compose_maps(d.vertical[q], aut_inv(q)));
                }
        }
        return index_[bid].at(key);
    }

    struct KeyHash {
        std::size_t operator()(const std::vector<PointMap>& k) const
        {
            std::size_t h = 0;
            for (const auto& f : k) {
                h = h * 1000003u + f.size();
                for (int x : f)
                    h = h * 31u + static_cast<std::size_t>(x);
            }
            return h;
        }
    };

    std::shared_ptr<const ConcreteCategory> cat_;
    int n_;
    bool flags_only_ = false;
    std::vector<FlagDiagram> diagrams_;
    std::vector<std::pair<int, int>> factor_pairs_;
    std::map<std::vector<IsoClass>, int> block_of_profile_;
    std::vector<std::unordered_map<std::vector<PointMap>, int, KeyHash>> index_;
    std::vector<std::vector<const ConcreteCategory::AutData*>> block_auts_;
    std::vector<int> block_start_;
    ActionModel model_;
};

/// The functor X_n -> X_m induced by a monotone alpha: [m] -> [n].
inline Functor s_structure_map(const SLevel& from, const SLevel& to, const std::vector<int>& alpha)
{
    const auto& cat = from.category();
    const int n = from.n(), m = to.n();
    std::vector<int> obj(from.size());
    for (int x = 0; x < from.size(); ++x) {
        obj[x] = to.find(restrict_diagram(cat, from.diagram(x), alpha));
        if (obj[x] < 0)
            throw std::logic_error("restricted diagram is missing from the target level");
    }
    return Functor::from_map(from.groupoid(), to.groupoid(), obj, [&](const Mor& mor) {
        GroupElem g = from.model().element(mor);
        GroupElem r(num_pairs(m), 0);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j <= m; ++j)
                if (alpha[i] < alpha[j])
                    r[pair_index(m, i, j)] = g[pair_index(n, alpha[i], alpha[j])];
        Mor out = to.model().mor(obj[mor.src], r);
        if (out.tgt != obj[mor.tgt])
            throw std::logic_error("restricted morphism has the wrong target");
        return out;
    });
}

struct SConstruction {
    ProtoAbelianInstance instance;
    std::vector<std::shared_ptr<const SLevel>> levels;
    TruncatedSimplicialGroupoid simplicial;

    /// The X_1 object of the one-entry diagram with class c, or -1.
    int object_of_class(const IsoClass& c) const
    {
        FlagDiagram d;
        d.n = 1;
        d.entry = {c};
        d.horizontal = {PointMap{}};
        d.vertical = {PointMap{}};
        return levels.at(1)->find(d);
    }
};

inline std::vector<int> face_alpha(int n, int i)
{
    std::vector<int> a;
    for (int t = 0; t <= n; ++t)
        if (t != i)
            a.push_back(t);
    return a;
}

inline std::vector<int> degeneracy_alpha(int n, int i)
{
    std::vector<int> a;
    for (int t = 0; t <= n + 1; ++t)
        a.push_back(t <= i ? t : t - 1);
    return a;
}

/// X_0..X_top of the S-construction with objects of size <= bound.
inline SConstruction s_construction(const ProtoAbelianInstance& inst, int bound, int top = 3,
                                    std::size_t budget = kDefaultBudget)
{
    if (top < 0 || top > 3)
        throw std::invalid_argument("S-construction is truncated at degree 3");
    SConstruction s{inst.with_bound(bound), {}, {}};
    for (int n = 0; n <= top; ++n)
        s.levels.push_back(SLevel::build(inst.category_ptr(), n, bound, budget));
    auto& x = s.simplicial;
    x.name = "S(" + inst.name() + ", bound " + std::to_string(bound) + ")";
    for (const auto& lv : s.levels)
        x.levels.push_back(lv->groupoid());
    x.faces.resize(top + 1);
    x.degeneracies.resize(top + 1);
    for (int n = 1; n <= top; ++n)
        for (int i = 0; i <= n; ++i)
            x.faces[n].push_back(s_structure_map(*s.levels[n], *s.levels[n - 1], face_alpha(n, i)));
    for (int n = 0; n < top; ++n)
        for (int i = 0; i <= n; ++i)
            x.degeneracies[n].push_back(s_structure_map(*s.levels[n], *s.levels[n + 1], degeneracy_alpha(n, i)));
    auto v = check_simplicial_identities(x);
    if (!v)
        throw std::logic_error("S-construction violates a simplicial identity: " + v.witnesses.front());
    return s;
}

/// The skeletal core: one object per iso class with its automorphism group.
inline GroupoidPtr core_groupoid(const ProtoAbelianInstance& inst, std::size_t budget = kDefaultBudget)
{
    auto classes = inst.iso_classes();
    std::vector<Component> comps;
    for (int k = 0; k < static_cast<int>(classes.size()); ++k)
        comps.push_back({k, {k}, inst.category().automorphisms(classes[k], budget).group});
    return std::make_shared<const FiniteGroupoid>(static_cast<int>(classes.size()), std::move(comps), budget);
}

/// X_1 -> core, sending a one-entry diagram to its class.
inline Functor core_comparison(const SConstruction& s, const GroupoidPtr& core)
{
    const auto& lv = *s.levels.at(1);
    auto classes = s.instance.iso_classes();
    std::vector<int> obj(lv.size());
    for (int x = 0; x < lv.size(); ++x)
        obj[x] = static_cast<int>(std::lower_bound(classes.begin(), classes.end(), lv.diagram(x).entry[0]) -
                                  classes.begin());
    return Functor::from_map(lv.groupoid(), core, obj, [&](const Mor& m) {
        return Mor{obj[m.src], obj[m.tgt], lv.model().element(m)[0]};
    });
}

/// X_n -> flags of length n, keeping row 0.
inline Functor flag_comparison(const SLevel& full, const SLevel& flags)
{
    std::vector<int> obj(full.size());
    for (int x = 0; x < full.size(); ++x)
        obj[x] = flags.find(flags.flag_part(full.diagram(x)));
    const int n = full.n();
    return Functor::from_map(full.groupoid(), flags.groupoid(), obj, [&](const Mor& m) {
        GroupElem g = full.model().element(m);
        GroupElem r;
        for (int j = 1; j <= n; ++j)
            r.push_back(g[pair_index(n, 0, j)]);
        return flags.model().mor(obj[m.src], r);
    });
}

} // namespace hallkit
