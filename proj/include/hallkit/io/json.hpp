/**
 * @file json.hpp
 * @brief JSON encodings of the exact values, groupoids, functors and reports.
 *
 * Rationals are strings "p/q"; cyclotomic numbers are {conductor,
 * coefficients}; partitions are decreasing arrays; partition-valued maps are
 * objects keyed by label.
 */
#pragma once

#include "hallkit/exact/symmetric.hpp"
#include "hallkit/exact/verdict.hpp"
#include "hallkit/groupoid/functor.hpp"
#include "hallkit/hall/hall.hpp"
#include "hallkit/schurweyl/schurweyl.hpp"
#include "hallkit/waldhausen/hecke.hpp"
#include "hallkit/wreath/characters.hpp"

#include <json.hpp>

#include <map>
#include <tuple>

namespace hallkit::io {

using json = nlohmann::json;

inline json to_json(const Rat& r) { return to_string(r); }
inline Rat rat_from_json(const json& j) { return parse_rat(j.get<std::string>()); }

inline json to_json(const Cyc& c)
{
    json coeffs = json::array();
    for (const auto& x : c.coefficients())
        coeffs.push_back(to_string(x));
    return {{"conductor", c.conductor()}, {"coefficients", coeffs}};
}

inline Cyc cyc_from_json(const json& j)
{
    std::vector<Rat> poly;
    for (const auto& x : j.at("coefficients"))
        poly.push_back(rat_from_json(x));
    return Cyc::from_poly(j.at("conductor").get<unsigned>(), std::move(poly));
}

inline json to_json(const Partition& p) { return p.parts(); }
inline Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

/// Every label appears, with [] for the empty partition.
inline json to_json(const PartitionMap& m)
{
    json o = json::object();
    for (std::size_t i = 0; i < m.labels()->size(); ++i)
        o[(*m.labels())[i]] = to_json(m[i]);
    return o;
}

/// Labels missing from the object map to the empty partition; unknown labels are rejected.
inline PartitionMap partition_map_from_json(const json& j, const LabelSet& labels)
{
    if (!j.is_object())
        throw std::invalid_argument("partition map must be a JSON object");
    std::vector<Partition> vals(labels->size());
    for (const auto& [key, v] : j.items()) {
        auto it = std::find(labels->begin(), labels->end(), key);
        if (it == labels->end())
            throw std::invalid_argument("unknown label '" + key + "' in partition map");
        vals[it - labels->begin()] = partition_from_json(v);
    }
    return PartitionMap(labels, std::move(vals));
}

inline json to_json(const MultiSymElem& e)
{
    json a = json::array();
    for (const auto& [p, c] : e.terms())
        a.push_back(json::array({to_json(p), to_json(c)}));
    return a;
}

inline MultiSymElem multisym_from_json(const json& j, const LabelSet& labels)
{
    MultiSymElem e(labels);
    for (const auto& term : j)
        e.add(partition_map_from_json(term.at(0), labels), rat_from_json(term.at(1)));
    return e;
}

inline json to_json(const Verdict& v) { return {{"pass", v.pass}, {"witnesses", v.witnesses}}; }

// ---------------------------------------------------------------------------
// explicit groupoid exchange

/// Morphisms of a normal-form groupoid listed by (src, tgt, aut); ids are positions.
inline std::vector<Mor> enumerate_morphisms(const FiniteGroupoid& g)
{
    std::vector<Mor> out;
    for (int x = 0; x < g.num_objects(); ++x)
        for (int y : g.component(g.component_of(x)).objects)
            for (int a = 0; a < g.aut_of(x).order(); ++a)
                out.push_back({x, y, a});
    return out;
}

/// {"objects": n, "morphisms": [{id, src, tgt}], "compose": flat M*M table, entry g*M+f = id of g o f or -1}.
inline json groupoid_to_json(const FiniteGroupoid& g, std::size_t max_morphisms = 2000)
{
    if (g.morphism_count() > static_cast<long long>(max_morphisms))
        throw BudgetExceeded("groupoid has " + std::to_string(g.morphism_count()) +
                             " morphisms, above the export limit of " + std::to_string(max_morphisms));
    auto ms = enumerate_morphisms(g);
    std::map<std::tuple<int, int, int>, int> id;
    for (std::size_t i = 0; i < ms.size(); ++i)
        id[{ms[i].src, ms[i].tgt, ms[i].aut}] = static_cast<int>(i);
    json morphisms = json::array();
    for (std::size_t i = 0; i < ms.size(); ++i)
        morphisms.push_back({{"id", i}, {"src", ms[i].src}, {"tgt", ms[i].tgt}});
    std::vector<int> table(ms.size() * ms.size(), -1);
    for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t b = 0; b < ms.size(); ++b)
            if (ms[a].src == ms[b].tgt) {
                Mor c = g.compose(ms[a], ms[b]);
                table[a * ms.size() + b] = id.at({c.src, c.tgt, c.aut});
            }
    return {{"objects", g.num_objects()}, {"morphisms", morphisms}, {"compose", table}};
}

/// A groupoid read from the explicit format, with the id <-> normal form correspondence.
struct ImportedGroupoid {
    GroupoidPtr groupoid;
    std::vector<Mor> normal_of_id;
    std::map<std::tuple<int, int, int>, int> id_of_normal;

    int id(const Mor& m) const { return id_of_normal.at({m.src, m.tgt, m.aut}); }
};

/// Validates composability, associativity, identities and inverses, then converts to normal form.
inline ImportedGroupoid groupoid_from_json(const json& j, std::size_t max_morphisms = 2000)
{
    const int n = j.at("objects").get<int>();
    if (n < 0)
        throw std::invalid_argument("negative object count");
    const auto& mj = j.at("morphisms");
    const int m = static_cast<int>(mj.size());
    if (static_cast<std::size_t>(m) > max_morphisms)
        throw BudgetExceeded("groupoid has " + std::to_string(m) + " morphisms, above the import limit");
    std::vector<int> src(m), tgt(m);
    for (const auto& e : mj) {
        int i = e.at("id").get<int>();
        if (i < 0 || i >= m)
            throw std::invalid_argument("morphism id out of range");
        src[i] = e.at("src").get<int>();
        tgt[i] = e.at("tgt").get<int>();
        if (src[i] < 0 || src[i] >= n || tgt[i] < 0 || tgt[i] >= n)
            throw std::invalid_argument("morphism endpoint out of range");
    }
    auto table = j.at("compose").get<std::vector<int>>();
    if (table.size() != static_cast<std::size_t>(m) * m)
        throw std::invalid_argument("composition table must have M*M entries");
    auto comp = [&](int g, int f) { return table[static_cast<std::size_t>(g) * m + f]; };
    for (int g = 0; g < m; ++g)
        for (int f = 0; f < m; ++f) {
            int c = comp(g, f);
            if (src[g] != tgt[f]) {
                if (c != -1)
                    throw std::invalid_argument("composite defined for non-composable morphisms");
                continue;
            }
            if (c < 0 || c >= m || src[c] != src[f] || tgt[c] != tgt[g])
                throw std::invalid_argument("composite has wrong endpoints");
        }
    std::vector<std::vector<int>> out_of(n), into(n);
    for (int f = 0; f < m; ++f) {
        out_of[src[f]].push_back(f);
        into[tgt[f]].push_back(f);
    }
    for (int f = 0; f < m; ++f)
        for (int g : out_of[tgt[f]])
            for (int h : out_of[tgt[g]])
                if (comp(h, comp(g, f)) != comp(comp(h, g), f))
                    throw std::invalid_argument("composition is not associative");
    std::vector<int> ident(n, -1);
    for (int x = 0; x < n; ++x)
        for (int e : out_of[x]) {
            if (tgt[e] != x)
                continue;
            bool ok = true;
            for (int f : into[x])
                ok = ok && comp(e, f) == f;
            for (int g : out_of[x])
                ok = ok && comp(g, e) == g;
            if (ok) {
                ident[x] = e;
                break;
            }
        }
    for (int x = 0; x < n; ++x)
        if (ident[x] < 0)
            throw std::invalid_argument("object " + std::to_string(x) + " has no identity");
    std::vector<int> inverse(m, -1);
    for (int f = 0; f < m; ++f)
        for (int g : out_of[tgt[f]])
            if (tgt[g] == src[f] && comp(g, f) == ident[src[f]] && comp(f, g) == ident[tgt[f]]) {
                inverse[f] = g;
                break;
            }
    for (int f = 0; f < m; ++f)
        if (inverse[f] < 0)
            throw std::invalid_argument("morphism " + std::to_string(f) + " is not invertible");

    // components, transports from the least object, automorphisms of the representative
    std::vector<int> comp_of(n, -1), transport(n, -1);
    std::vector<Component> comps;
    std::vector<std::vector<int>> auts;
    for (int r = 0; r < n; ++r) {
        if (comp_of[r] >= 0)
            continue;
        const int k = static_cast<int>(comps.size());
        Component c;
        c.rep = r;
        transport[r] = ident[r];
        for (int f : out_of[r])
            if (transport[tgt[f]] < 0)
                transport[tgt[f]] = f;
        for (int f : out_of[r])
            comp_of[tgt[f]] = k;
        for (int y = 0; y < n; ++y)
            if (comp_of[y] == k)
                c.objects.push_back(y);
        std::vector<int> a;
        a.push_back(ident[r]);
        for (int f : out_of[r])
            if (tgt[f] == r && f != ident[r])
                a.push_back(f);
        std::vector<int> pos(m, -1);
        for (std::size_t i = 0; i < a.size(); ++i)
            pos[a[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> tab(a.size(), std::vector<int>(a.size()));
        for (std::size_t s = 0; s < a.size(); ++s)
            for (std::size_t t = 0; t < a.size(); ++t)
                tab[s][t] = pos[comp(a[s], a[t])];
        c.aut = std::make_shared<const FiniteGroup>(tab);
        comps.push_back(std::move(c));
        auts.push_back(std::move(a));
    }
    ImportedGroupoid out;
    out.groupoid = std::make_shared<const FiniteGroupoid>(n, comps);
    out.normal_of_id.resize(m);
    for (int f = 0; f < m; ++f) {
        const int k = comp_of[src[f]];
        // t_y^-1 f t_x is an automorphism of the representative
        int e = comp(inverse[transport[tgt[f]]], comp(f, transport[src[f]]));
        auto it = std::find(auts[k].begin(), auts[k].end(), e);
        out.normal_of_id[f] = {src[f], tgt[f], static_cast<int>(it - auts[k].begin())};
        out.id_of_normal[{src[f], tgt[f], out.normal_of_id[f].aut}] = f;
    }
    if (out.id_of_normal.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("hom sets are not torsors over the automorphism groups");
    return out;
}

/// {"objects": [F(x)], "morphisms": [id of F(f)]} against enumerate_morphisms of both sides.
inline json functor_to_json(const Functor& f)
{
    auto tms = enumerate_morphisms(*f.target());
    std::map<std::tuple<int, int, int>, int> id;
    for (std::size_t i = 0; i < tms.size(); ++i)
        id[{tms[i].src, tms[i].tgt, tms[i].aut}] = static_cast<int>(i);
    json images = json::array();
    for (const auto& m : enumerate_morphisms(*f.source())) {
        Mor im = f.apply(m);
        images.push_back(id.at({im.src, im.tgt, im.aut}));
    }
    return {{"objects", f.object_map()}, {"morphisms", images}};
}

/// Reads a functor between imported groupoids, checking that it preserves composition and identities.
inline Functor functor_from_json(const json& j, const ImportedGroupoid& a, const ImportedGroupoid& b)
{
    auto obj = j.at("objects").get<std::vector<int>>();
    auto img = j.at("morphisms").get<std::vector<int>>();
    const auto& ga = *a.groupoid;
    const auto& gb = *b.groupoid;
    if (static_cast<int>(obj.size()) != ga.num_objects() || img.size() != a.normal_of_id.size())
        throw std::invalid_argument("functor data does not match the source groupoid");
    for (int x : obj)
        if (x < 0 || x >= gb.num_objects())
            throw std::invalid_argument("functor object image out of range");
    for (std::size_t f = 0; f < img.size(); ++f) {
        if (img[f] < 0 || img[f] >= static_cast<int>(b.normal_of_id.size()))
            throw std::invalid_argument("functor morphism image out of range");
        const Mor& m = a.normal_of_id[f];
        const Mor& im = b.normal_of_id[img[f]];
        if (im.src != obj[m.src] || im.tgt != obj[m.tgt])
            throw std::invalid_argument("functor does not respect sources and targets");
    }
    for (std::size_t f = 0; f < img.size(); ++f)
        for (std::size_t g = 0; g < img.size(); ++g) {
            const Mor& mf = a.normal_of_id[f];
            const Mor& mg = a.normal_of_id[g];
            if (mg.src != mf.tgt)
                continue;
            int c = a.id(ga.compose(mg, mf));
            Mor lhs = b.normal_of_id[img[c]];
            Mor rhs = gb.compose(b.normal_of_id[img[g]], b.normal_of_id[img[f]]);
            if (!(lhs == rhs))
                throw std::invalid_argument("functor does not preserve composition");
        }
    for (int x = 0; x < ga.num_objects(); ++x)
        if (!(b.normal_of_id[img[a.id(ga.identity(x))]] == gb.identity(obj[x])))
            throw std::invalid_argument("functor does not preserve identities");
    return Functor::from_map(a.groupoid, b.groupoid, obj, [&](const Mor& m) { return b.normal_of_id[img[a.id(m)]]; });
}

// ---------------------------------------------------------------------------
// reports

inline json to_json(const HallTable& t)
{
    json basis = json::array();
    for (const auto& c : t.basis)
        basis.push_back(t.instance.label(c));
    json constants = json::array();
    for (const auto& [key, v] : t.constants) {
        const auto& [n, l, m] = key;
        constants.push_back({{"N", t.instance.label(n)},
                             {"L", t.instance.label(l)},
                             {"M", t.instance.label(m)},
                             {"value", to_json(v)}});
    }
    return {{"instance", t.instance.name()}, {"bound", t.instance.bound()}, {"basis", basis}, {"constants", constants}};
}

namespace detail {

inline json coset_list(const FiniteGroup& g, const DoubleCosets& d)
{
    json out = json::array();
    for (const auto& c : d.cosets) {
        json names = json::array();
        for (int x : c)
            names.push_back(g.name(x));
        out.push_back(names);
    }
    return out;
}

inline json rat_cube(const std::vector<std::vector<std::vector<Rat>>>& c)
{
    json out = json::array();
    for (const auto& plane : c) {
        json p = json::array();
        for (const auto& row : plane) {
            json r = json::array();
            for (const auto& v : row)
                r.push_back(to_json(v));
            p.push_back(r);
        }
        out.push_back(p);
    }
    return out;
}

} // namespace detail

inline json to_json(const HeckeTable& t)
{
    return {{"group_order", t.group->order()},
            {"subgroup_order", t.subgroup_order},
            {"basis", detail::coset_list(*t.group, t.basis)},
            {"unit", t.unit},
            {"constants", detail::rat_cube(t.constants)},
            {"extremal_faithful", t.extremal_faithful},
            {"integral", t.integral}};
}

inline json to_json(const HeckeModuleTable& t)
{
    return {{"group_order", t.group->order()},
            {"algebra_basis", detail::coset_list(*t.group, t.algebra_basis)},
            {"module_basis", detail::coset_list(*t.group, t.module_basis)},
            {"action", detail::rat_cube(t.action)}};
}

inline json to_json(const CharacterTable& t)
{
    json classes = json::array(), irr = json::array(), values = json::array(), exact = json::array();
    for (std::size_t c = 0; c < t.class_labels.size(); ++c)
        classes.push_back({{"label", t.class_labels[c].to_string()},
                           {"map", to_json(t.class_labels[c])},
                           {"size", t.class_sizes[c]}});
    for (const auto& l : t.irreducible_labels)
        irr.push_back({{"label", l.to_string()}, {"map", to_json(l)}});
    for (const auto& row : t.values) {
        json r = json::array(), e = json::array();
        for (const auto& v : row) {
            r.push_back(v.to_string());
            e.push_back(to_json(v));
        }
        values.push_back(r);
        exact.push_back(e);
    }
    const auto& g = t.group->base_group();
    json base_classes = json::array();
    for (const auto& cls : g.group->classes()) {
        json names = json::array();
        for (int x : cls)
            names.push_back(g.group->name(x));
        base_classes.push_back(names);
    }
    return {{"group", g.spec},
            {"n", t.group->n()},
            {"order", t.group->order()},
            {"conductor", t.conductor},
            {"base_classes", base_classes},
            {"classes", classes},
            {"irreducibles", irr},
            {"values", values},
            {"values_exact", exact}};
}

inline json to_json(const SchurWeylReport& r)
{
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"label", row.label.to_string()},
                        {"map", to_json(row.label)},
                        {"dim_X", row.dim_x.str()},
                        {"dim_R", row.dim_r.str()},
                        {"kernel", row.kernel}});
    return {{"group", r.group},
            {"n", r.n},
            {"d", r.d},
            {"dim_poly_fns", r.poly_fns.str()},
            {"rows", rows},
            {"verdicts",
             {{"sum_of_squares", to_json(r.sum_of_squares)},
              {"total_dimension", to_json(r.total_dimension)},
              {"kernel_free_when_n_le_d", to_json(r.kernel_free_when_n_le_d)},
              {"nonzero_count", to_json(r.nonzero_count)},
              {"kernel_criterion", to_json(r.kernel_criterion)}}},
            {"pass", r.pass()}};
}

} // namespace hallkit::io
