/**
 * @file instance.hpp
 * @brief The three enumerable proto-abelian families and their counting operations.
 */
#pragma once

#include "hallkit/protoab/category.hpp"

namespace hallkit {

enum class Family { VectFq, F1Free, AbPGroups };

inline std::string family_name(Family f)
{
    switch (f) {
    case Family::VectFq:
        return "vect";
    case Family::F1Free:
        return "f1-free";
    case Family::AbPGroups:
        return "ab";
    }
    return "?";
}

class ProtoAbelianInstance {
public:
    static ProtoAbelianInstance vect(int q, int bound)
    {
        return {Family::VectFq, std::make_shared<PGroupCategory>(q, true), bound, "vect-F" + std::to_string(q)};
    }
    static ProtoAbelianInstance ab_p_groups(int p, int bound)
    {
        return {Family::AbPGroups, std::make_shared<PGroupCategory>(p, false), bound,
                "ab-" + std::to_string(p) + "-groups"};
    }
    static ProtoAbelianInstance f1_free(NamedGroup g, int bound)
    {
        std::string name = "f1-free-" + g.spec;
        return {Family::F1Free, std::make_shared<F1Category>(std::move(g)), bound, name};
    }

    Family family() const { return family_; }
    int bound() const { return bound_; }
    const std::string& name() const { return name_; }
    const ConcreteCategory& category() const { return *cat_; }
    std::shared_ptr<const ConcreteCategory> category_ptr() const { return cat_; }

    /// Same instance with a different size bound (shares the category caches).
    ProtoAbelianInstance with_bound(int bound) const { return {family_, cat_, bound, name_}; }

    std::vector<IsoClass> iso_classes() const { return cat_->classes(bound_); }
    std::string label(const IsoClass& c) const { return cat_->label(c); }

    /// Class with the given label ("2" for vect/f1, "(2,1)" or "2,1" for ab).
    IsoClass parse_class(const std::string& s) const
    {
        for (const auto& c : iso_classes()) {
            std::string l = label(c);
            if (l == s || (l.size() >= 2 && l.substr(1, l.size() - 2) == s))
                return c;
        }
        throw std::invalid_argument("no iso class '" + s + "' within the bound");
    }

    BigInt aut_order(const IsoClass& c) const
    {
        cat_->check_class(c);
        return cat_->aut_order(c);
    }

    /// Number of automorphisms found by enumerating all endomorphisms.
    BigInt aut_order_by_enumeration(const IsoClass& c) const
    {
        BigInt n = 0;
        for (const auto& f : cat_->homs(c, c))
            if (cat_->is_iso(f, c))
                ++n;
        return n;
    }

    /// #{U <= M : U ~ L, M/U ~ N}.
    BigInt subobjects_with_type(const IsoClass& m, const IsoClass& l, const IsoClass& n) const
    {
        BigInt count = 0;
        for (const auto& s : cat_->subobjects(m))
            if (s.sub == l && s.quotient == n)
                ++count;
        return count;
    }

    /// #{(mono L -> M, epi M -> N) exact at M}, by brute force.
    BigInt count_ses(const IsoClass& l, const IsoClass& m, const IsoClass& n) const
    {
        std::vector<Mask> mono_images;
        for (const auto& f : cat_->homs(l, m))
            if (cat_->is_mono(f))
                mono_images.push_back(image_mask(f));
        std::map<Mask, long> epi_kernels;
        for (const auto& e : cat_->homs(m, n))
            if (cat_->is_epi(e, n))
                ++epi_kernels[kernel_mask(e)];
        BigInt count = 0;
        for (Mask im : mono_images) {
            auto it = epi_kernels.find(im);
            if (it != epi_kernels.end())
                count += it->second;
        }
        return count;
    }

private:
    ProtoAbelianInstance(Family f, std::shared_ptr<const ConcreteCategory> cat, int bound, std::string name)
        : family_(f), cat_(std::move(cat)), bound_(bound), name_(std::move(name))
    {
        if (bound < 0)
            throw std::invalid_argument("size bound must be non-negative");
    }

    Family family_;
    std::shared_ptr<const ConcreteCategory> cat_;
    int bound_;
    std::string name_;
};

} // namespace hallkit
