/**
 * @file characters.hpp
 * @brief Irreducible characters X_lambda of G wr S_n for abelian G, the
 * induction product and the characteristic map.
 *
 * X_lambda is induced from the Young subgroup prod_gamma G wr S_{m_gamma}
 * (blocks of consecutive positions in character order) of the character
 * (g, sigma) -> prod_i gamma(g_i) * chi^{lambda(gamma)}(sigma).
 */
#pragma once

#include "hallkit/exact/symmetric.hpp"
#include "hallkit/exact/tableaux.hpp"
#include "hallkit/exact/verdict.hpp"
#include "hallkit/wreath/symmetric_character.hpp"
#include "hallkit/wreath/wreath.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace hallkit {

/// Values on the classes of a character table, in table order.
using ClassFunction = std::vector<Cyc>;

struct CharacterTable {
    std::shared_ptr<const WreathGroup> group;
    unsigned conductor = 1;
    std::vector<PartitionMap> class_labels; ///< over G_*, sorted
    std::vector<int> class_sizes;
    std::vector<int> class_reps;
    std::vector<PartitionMap> irreducible_labels; ///< over G^*, sorted
    std::vector<ClassFunction> values;             ///< values[irreducible][class]

    int class_index(const PartitionMap& label) const
    {
        auto it = std::lower_bound(class_labels.begin(), class_labels.end(), label);
        if (it == class_labels.end() || !(*it == label))
            throw std::out_of_range("no class labelled " + label.to_string());
        return static_cast<int>(it - class_labels.begin());
    }
    int irreducible_index(const PartitionMap& lambda) const
    {
        auto it = std::lower_bound(irreducible_labels.begin(), irreducible_labels.end(), lambda);
        if (it == irreducible_labels.end() || !(*it == lambda))
            throw std::out_of_range("no irreducible labelled " + lambda.to_string());
        return static_cast<int>(it - irreducible_labels.begin());
    }
    const ClassFunction& character(const PartitionMap& lambda) const { return values[irreducible_index(lambda)]; }

    /// Value of a class function at an element of the group.
    Cyc at_element(const ClassFunction& f, int x) const { return f[class_index(group->class_label(x))]; }
};

/// (1/|W|) sum_c |c| f(c) conj(g(c)).
inline Cyc inner_product(const CharacterTable& t, const ClassFunction& f, const ClassFunction& g)
{
    Cyc s;
    for (std::size_t c = 0; c < t.class_labels.size(); ++c)
        s += Cyc(t.class_sizes[c]) * f[c] * g[c].conj();
    return s * Cyc(Rat(1, t.group->order()));
}

/// Ind_Y^W psi at the given elements, with Y given by membership and
/// canonical left coset representatives (least element of each coset).
inline std::vector<Cyc> induced_character(const WreathGroup& w, const std::vector<int>& at,
                                          const std::function<bool(const WreathElement&)>& in_y,
                                          const std::function<Cyc(const WreathElement&)>& psi)
{
    std::vector<WreathElement> ys;
    for (int x = 0; x < w.order(); ++x) {
        auto e = w.element(x);
        if (in_y(e))
            ys.push_back(std::move(e));
    }
    if (ys.empty() || w.order() % static_cast<int>(ys.size()) != 0)
        throw std::logic_error("induced_character: membership predicate is not a subgroup");
    std::vector<char> marked(w.order(), 0);
    std::vector<std::pair<WreathElement, WreathElement>> reps;
    for (int x = 0; x < w.order(); ++x) {
        if (marked[x])
            continue;
        auto r = w.element(x);
        for (const auto& y : ys)
            marked[w.index(w.mul(r, y))] = 1;
        reps.emplace_back(w.inv(r), r);
    }
    std::vector<Cyc> out;
    for (int x : at) {
        auto e = w.element(x);
        Cyc s;
        for (const auto& [ri, r] : reps) {
            auto z = w.mul(w.mul(ri, e), r);
            if (in_y(z))
                s += psi(z);
        }
        out.push_back(std::move(s));
    }
    return out;
}

namespace detail {

/// Cycle types of sigma restricted to the blocks of `block_of` (sigma preserves blocks).
inline std::vector<Partition> block_cycle_types(const Perm& sigma, const std::vector<int>& block_of, int blocks)
{
    std::vector<std::vector<int>> lens(blocks);
    std::vector<char> seen(sigma.size(), 0);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = sigma[j]) {
            seen[j] = 1;
            ++len;
        }
        lens[block_of[i]].push_back(len);
    }
    std::vector<Partition> out;
    for (auto& l : lens) {
        std::sort(l.rbegin(), l.rend());
        out.emplace_back(std::move(l));
    }
    return out;
}

inline bool preserves_blocks(const Perm& sigma, const std::vector<int>& block_of)
{
    for (std::size_t i = 0; i < sigma.size(); ++i)
        if (block_of[sigma[i]] != block_of[i])
            return false;
    return true;
}

} // namespace detail

/// Character theory of the family G wr S_n, n = 0, 1, ..., for a fixed abelian G.
class WreathCharacters {
public:
    explicit WreathCharacters(NamedGroup g, std::size_t budget = kWreathBudget) : g_(std::move(g)), budget_(budget)
    {
        if (!g_.group->is_abelian())
            throw Unsupported("wreath characters are constructed only for abelian G; " + g_.spec + " is not");
        chars_ = linear_characters(*g_.group);
        class_labels_ = class_labels(*g_.group);
        char_labels_ = character_labels(*g_.group);
    }

    const NamedGroup& base_group() const { return g_; }
    const LabelSet& class_label_set() const { return class_labels_; }
    const LabelSet& character_label_set() const { return char_labels_; }
    const std::vector<LinearCharacter>& linear() const { return chars_; }
    std::size_t budget() const { return budget_; }
    unsigned conductor() const { return static_cast<unsigned>(g_.group->exponent()); }

    /// Character of X_lambda at every element listed, computed by induction.
    std::vector<Cyc> character_at(const WreathGroup& w, const PartitionMap& lambda, const std::vector<int>& at) const
    {
        check_label(lambda, w.n());
        const int k = static_cast<int>(chars_.size());
        std::vector<int> block_of;
        for (int c = 0; c < k; ++c)
            block_of.insert(block_of.end(), lambda[c].size(), c);
        auto in_y = [&](const WreathElement& e) { return detail::preserves_blocks(e.sigma, block_of); };
        auto psi = [&](const WreathElement& e) {
            Cyc v(1);
            for (std::size_t i = 0; i < e.base.size(); ++i)
                v *= chars_[block_of[i]](e.base[i]);
            auto types = detail::block_cycle_types(e.sigma, block_of, k);
            long s = 1;
            for (int c = 0; c < k; ++c)
                s *= symmetric_character(lambda[c], types[c]);
            return v * Cyc(s);
        };
        return induced_character(w, at, in_y, psi);
    }

    /// dim X_lambda = [W : Y] prod_gamma f^{lambda(gamma)}, the induced character at the identity.
    BigInt dimension(const PartitionMap& lambda) const
    {
        check_label(lambda, lambda.total());
        BigInt d = factorial(lambda.total());
        for (const auto& p : lambda.values())
            d = d / factorial(p.size()) * syt_count(p);
        return d;
    }

    /// Character table of G wr S_n, cached.
    std::shared_ptr<const CharacterTable> table(int n) const
    {
        std::lock_guard lock(mu_);
        if (auto it = tables_.find(n); it != tables_.end())
            return it->second;
        auto t = build_table(n);
        tables_.emplace(n, t);
        return t;
    }

    /// Decomposition of Ind_{W_n x W_m}^{W_{n+m}} (X_lambda x X_mu) into irreducibles.
    std::map<PartitionMap, BigInt> induction_product(const PartitionMap& lambda, const PartitionMap& mu) const
    {
        const int n = lambda.total(), m = mu.total();
        auto tl = table(n), tm = table(m), t = table(n + m);
        const auto& fl = tl->character(lambda);
        const auto& fm = tm->character(mu);
        const auto& w = *t->group;
        const auto& wl = *tl->group;
        const auto& wm = *tm->group;
        std::vector<int> block_of(n + m, 0);
        std::fill(block_of.begin() + n, block_of.end(), 1);
        auto in_y = [&](const WreathElement& e) { return detail::preserves_blocks(e.sigma, block_of); };
        auto psi = [&](const WreathElement& e) {
            WreathElement a, b;
            a.base.assign(e.base.begin(), e.base.begin() + n);
            b.base.assign(e.base.begin() + n, e.base.end());
            for (int i = 0; i < n; ++i)
                a.sigma.push_back(e.sigma[i]);
            for (int i = n; i < n + m; ++i)
                b.sigma.push_back(e.sigma[i] - n);
            return tl->at_element(fl, wl.index(a)) * tm->at_element(fm, wm.index(b));
        };
        ClassFunction ind = induced_character(w, t->class_reps, in_y, psi);
        return decompose(*t, ind);
    }

    /// Multiplicities of the irreducibles in a class function; throws unless they are non-negative integers.
    std::map<PartitionMap, BigInt> decompose(const CharacterTable& t, const ClassFunction& f) const
    {
        std::map<PartitionMap, BigInt> out;
        for (std::size_t i = 0; i < t.irreducible_labels.size(); ++i) {
            Cyc c = inner_product(t, f, t.values[i]);
            if (!c.is_rational() || !is_integer(c.to_rational()) || c.to_rational() < 0)
                throw std::domain_error("multiplicity of " + t.irreducible_labels[i].to_string() + " is " +
                                        c.to_string() + ", not a non-negative integer");
            BigInt v = numerator(c.to_rational());
            if (v != 0)
                out.emplace(t.irreducible_labels[i], v);
        }
        return out;
    }

    /// ch on the X_lambda basis: X_lambda -> S_lambda.
    MultiSymElem ch(const std::map<PartitionMap, BigInt>& sum) const
    {
        MultiSymElem out(char_labels_);
        for (const auto& [lambda, c] : sum)
            out.add(lambda, Rat(c));
        return out;
    }

    /// ch of a class function, decomposed first.
    MultiSymElem ch(const CharacterTable& t, const ClassFunction& f) const { return ch(decompose(t, f)); }

private:
    void check_label(const PartitionMap& lambda, int n) const
    {
        if (!same_labels(lambda.labels(), char_labels_))
            throw std::invalid_argument("label " + lambda.to_string() + " is not over the characters of " + g_.spec);
        if (lambda.total() != n)
            throw std::invalid_argument("label " + lambda.to_string() + " does not have size " + std::to_string(n));
    }

    std::shared_ptr<const CharacterTable> build_table(int n) const
    {
        auto t = std::make_shared<CharacterTable>();
        t->group = std::make_shared<const WreathGroup>(g_, n, budget_);
        t->conductor = conductor();
        const auto& w = *t->group;
        std::vector<std::pair<PartitionMap, int>> labelled;
        for (std::size_t c = 0; c < w.conjugacy_classes().size(); ++c) {
            const auto& cls = w.conjugacy_classes()[c];
            auto label = w.class_label(cls.front());
            for (int x : cls)
                if (!(w.class_label(x) == label))
                    throw std::logic_error("class label is not constant on a conjugacy class");
            labelled.emplace_back(std::move(label), static_cast<int>(c));
        }
        std::sort(labelled.begin(), labelled.end());
        for (std::size_t i = 1; i < labelled.size(); ++i)
            if (labelled[i - 1].first == labelled[i].first)
                throw std::logic_error("two conjugacy classes share the label " + labelled[i].first.to_string());
        for (const auto& [label, c] : labelled) {
            t->class_labels.push_back(label);
            t->class_sizes.push_back(static_cast<int>(w.conjugacy_classes()[c].size()));
            t->class_reps.push_back(w.conjugacy_classes()[c].front());
        }
        t->irreducible_labels = partition_maps(n, char_labels_);
        std::sort(t->irreducible_labels.begin(), t->irreducible_labels.end());
        for (const auto& lambda : t->irreducible_labels) {
            auto vals = character_at(w, lambda, t->class_reps);
            for (auto& v : vals)
                v = v.lift(t->conductor);
            t->values.push_back(std::move(vals));
        }
        return t;
    }

    NamedGroup g_;
    std::size_t budget_;
    std::vector<LinearCharacter> chars_;
    LabelSet class_labels_;
    LabelSet char_labels_;
    mutable std::mutex mu_;
    mutable std::map<int, std::shared_ptr<const CharacterTable>> tables_;
};

/// Row and column orthogonality, the number of classes, and sum of squared degrees.
inline Verdict check_character_table(const CharacterTable& t)
{
    Verdict v;
    const auto& w = *t.group;
    const std::size_t k = t.class_labels.size();
    const auto expected = partition_maps(w.n(), w.class_label_set()).size();
    if (k != expected)
        v.fail(std::to_string(k) + " classes, expected |P_n(G_*)| = " + std::to_string(expected));
    if (t.irreducible_labels.size() != k)
        v.fail(std::to_string(t.irreducible_labels.size()) + " irreducibles for " + std::to_string(k) + " classes");
    for (std::size_t i = 0; i < t.values.size(); ++i)
        for (std::size_t j = i; j < t.values.size(); ++j) {
            Cyc ip = inner_product(t, t.values[i], t.values[j]);
            if (!(ip == Cyc(i == j ? 1 : 0)))
                v.fail("<" + t.irreducible_labels[i].to_string() + ", " + t.irreducible_labels[j].to_string() +
                       "> = " + ip.to_string());
        }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) {
            Cyc s;
            for (const auto& row : t.values)
                s += row[a] * row[b].conj();
            Cyc expect = a == b ? Cyc(Rat(w.order(), t.class_sizes[a])) : Cyc(0);
            if (!(s == expect))
                v.fail("column sum over " + t.class_labels[a].to_string() + ", " + t.class_labels[b].to_string() +
                       " is " + s.to_string() + ", expected " + expect.to_string());
        }
    const int id_class = t.class_index(w.class_label(w.identity()));
    Rat squares = 0;
    for (const auto& row : t.values) {
        Rat d = row[id_class].to_rational();
        squares += d * d;
    }
    if (squares != w.order())
        v.fail("sum of squared degrees is " + to_string(squares) + ", expected " + std::to_string(w.order()));
    return v;
}

/// ch(Ind(X_lambda x X_mu)) = S_lambda S_mu for all labels with |lambda| + |mu| <= max_total.
inline Verdict check_ch_homomorphism(const WreathCharacters& wc, int max_total, int* pairs_checked = nullptr)
{
    Verdict v;
    int count = 0;
    for (int n = 0; n <= max_total; ++n)
        for (int m = 0; n + m <= max_total; ++m)
            for (const auto& lambda : partition_maps(n, wc.character_label_set()))
                for (const auto& mu : partition_maps(m, wc.character_label_set())) {
                    auto lhs = wc.ch(wc.induction_product(lambda, mu));
                    auto rhs = multisym_mul(MultiSymElem::basis(lambda), MultiSymElem::basis(mu));
                    ++count;
                    if (!(lhs == rhs))
                        v.fail("ch(Ind(" + lambda.to_string() + " x " + mu.to_string() + ")) = " + lhs.to_string() +
                               " but S_lambda S_mu = " + rhs.to_string());
                }
    if (pairs_checked)
        *pairs_checked = count;
    return v;
}

} // namespace hallkit
