// hallkit command-line front end.
//
// Exit codes: 0 success, 1 a verdict failed, 2 usage or budget error.

#include "hallkit/hall/hall.hpp"
#include "hallkit/io/json.hpp"
#include "hallkit/schurweyl/schurweyl.hpp"
#include "hallkit/waldhausen/hecke.hpp"
#include "hallkit/waldhausen/s_construction.hpp"
#include "hallkit/wreath/characters.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace hallkit;
using io::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::optional<std::size_t> budget;
    long seed = 0;
    std::string format = "json";
    std::string out;

    std::string family;
    int q = 2;
    int p = 2;
    std::string g = "trivial";
    std::string h = "trivial";
    std::string pgroup;
    int bound = 2;
    std::string construction;
    int n = 1;
    int d = 1;
};

struct Result {
    json doc;
    std::string csv;
    std::string text;
    std::optional<bool> pass;
};

std::size_t groupoid_budget(const RunConfig& c) { return c.budget.value_or(kDefaultBudget); }
std::size_t wreath_budget(const RunConfig& c) { return c.budget.value_or(kWreathBudget); }

std::string witness_lines(const Verdict& v)
{
    std::string s;
    for (const auto& w : v.witnesses)
        s += "  " + w + "\n";
    return s;
}

ProtoAbelianInstance make_instance(const RunConfig& c)
{
    const auto& f = c.family;
    if (f == "vect" || f == "vect-fq" || f.rfind("vect-F", 0) == 0) {
        int q = f.rfind("vect-F", 0) == 0 ? std::stoi(f.substr(6)) : c.q;
        return ProtoAbelianInstance::vect(q, c.bound);
    }
    if (f == "ab" || f == "ab-p-groups")
        return ProtoAbelianInstance::ab_p_groups(c.p, c.bound);
    if (f.rfind("ab-", 0) == 0 && f.size() > 10 && f.substr(f.size() - 7) == "-groups")
        return ProtoAbelianInstance::ab_p_groups(std::stoi(f.substr(3, f.size() - 10)), c.bound);
    if (f == "f1-free" || f == "f1-free-G")
        return ProtoAbelianInstance::f1_free(parse_group(c.g), c.bound);
    throw UsageError("unknown family '" + f + "' (expected vect, ab or f1-free)");
}

GroupHom subgroup_of(const NamedGroup& g, const std::string& spec) { return make_subgroup(g.group, parse_subgroup(g, spec)); }

Result hall_table(const RunConfig& c)
{
    auto t = hall_constants(make_instance(c));
    Verdict v;
    v.absorb(check_unit(t), "unit: ");
    v.absorb(check_grading(t), "grading: ");
    v.absorb(check_associativity(t), "associativity: ");
    Result r;
    r.doc = io::to_json(t);
    r.doc["checks"] = io::to_json(v);
    r.doc["pass"] = v.pass;
    r.pass = v.pass;
    std::ostringstream csv, text;
    csv << "N,L,M,value\n";
    text << t.instance.name() << ", size <= " << t.instance.bound() << "\n";
    for (const auto& [key, val] : t.constants) {
        const auto& [n, l, m] = key;
        csv << t.instance.label(n) << ',' << t.instance.label(l) << ',' << t.instance.label(m) << ','
            << to_string(val) << "\n";
        text << "g^" << t.instance.label(m) << "_{" << t.instance.label(n) << "," << t.instance.label(l)
             << "} = " << to_string(val) << "\n";
    }
    text << "checks: " << (v.pass ? "pass" : "FAIL") << "\n" << witness_lines(v);
    r.csv = csv.str();
    r.text = text.str();
    return r;
}

std::string cube_csv(const std::vector<std::vector<std::vector<Rat>>>& cube, const std::string& header)
{
    std::ostringstream s;
    s << header << "\n";
    for (std::size_t i = 0; i < cube.size(); ++i)
        for (std::size_t j = 0; j < cube[i].size(); ++j)
            for (std::size_t k = 0; k < cube[i][j].size(); ++k)
                if (cube[i][j][k] != 0)
                    s << i << ',' << j << ',' << k << ',' << to_string(cube[i][j][k]) << "\n";
    return s.str();
}

Result hecke_table(const RunConfig& c)
{
    auto g = parse_group(c.g);
    auto t = hecke_algebra(subgroup_of(g, c.h), groupoid_budget(c));
    Verdict v;
    v.absorb(check_hecke_associativity(t), "associativity: ");
    v.absorb(check_hecke_unit(t), "unit: ");
    Result r;
    r.doc = io::to_json(t);
    r.doc["group"] = g.spec;
    r.doc["subgroup"] = c.h;
    r.doc["checks"] = io::to_json(v);
    r.doc["pass"] = v.pass;
    r.pass = v.pass;
    r.csv = cube_csv(t.constants, "i,j,k,value");
    std::ostringstream text;
    text << "H(" << g.spec << ", " << c.h << "), dimension " << t.dim() << ", unit " << t.unit << "\n";
    text << r.csv << "checks: " << (v.pass ? "pass" : "FAIL") << "\n" << witness_lines(v);
    r.text = text.str();
    return r;
}

Result hecke_module_cmd(const RunConfig& c)
{
    auto g = parse_group(c.g);
    auto h = subgroup_of(g, c.h);
    auto p = subgroup_of(g, c.pgroup);
    auto alg = hecke_algebra(h, groupoid_budget(c));
    auto mod = hecke_module(h, p, groupoid_budget(c));
    auto v = check_module_axioms(alg, mod);
    Result r;
    r.doc = io::to_json(mod);
    r.doc["group"] = g.spec;
    r.doc["subgroup"] = c.h;
    r.doc["module_subgroup"] = c.pgroup;
    r.doc["checks"] = io::to_json(v);
    r.doc["pass"] = v.pass;
    r.pass = v.pass;
    r.csv = cube_csv(mod.action, "i,a,b,value");
    std::ostringstream text;
    text << "H(" << g.spec << ", " << c.h << ") acting on functions on H\\G/P, P = " << c.pgroup << "\n";
    text << r.csv << "module axioms: " << (v.pass ? "pass" : "FAIL") << "\n" << witness_lines(v);
    r.text = text.str();
    return r;
}

Result segal_check(const RunConfig& c)
{
    Verdict v;
    std::string name;
    json checks = json::object();
    auto run = [&](const TruncatedSimplicialGroupoid& x) {
        name = x.name;
        auto s = check_simplicial_identities(x);
        auto seg = check_2segal_degree3(x, groupoid_budget(c));
        auto pt = check_pointed(x, groupoid_budget(c));
        checks["simplicial"] = io::to_json(s);
        checks["two_segal"] = io::to_json(seg);
        checks["pointed"] = io::to_json(pt);
        v.absorb(s, "simplicial: ");
        v.absorb(seg, "2-Segal: ");
        v.absorb(pt, "pointed: ");
    };
    if (c.construction == "s") {
        auto inst = make_instance(c);
        run(s_construction(inst, c.bound, 3, groupoid_budget(c)).simplicial);
    } else if (c.construction == "hecke") {
        auto g = parse_group(c.g);
        run(hecke_waldhausen(subgroup_of(g, c.h), 3, groupoid_budget(c)).simplicial);
    } else {
        throw UsageError("--construction must be 's' or 'hecke'");
    }
    Result r;
    r.doc = {{"construction", name}, {"pass", v.pass}, {"witnesses", v.witnesses}, {"checks", checks}};
    r.pass = v.pass;
    r.csv = "construction,pass,witnesses\n\"" + name + "\"," + (v.pass ? "true" : "false") + "," +
            std::to_string(v.witnesses.size()) + "\n";
    r.text = name + ": " + (v.pass ? "pass" : "FAIL") + "\n" + witness_lines(v);
    return r;
}

Result wreath_char_table(const RunConfig& c)
{
    WreathCharacters wc(parse_group(c.g), wreath_budget(c));
    auto t = wc.table(c.n);
    auto v = check_character_table(*t);
    Result r;
    r.doc = io::to_json(*t);
    r.doc["checks"] = io::to_json(v);
    r.doc["pass"] = v.pass;
    r.pass = v.pass;
    std::ostringstream csv, text;
    csv << "irreducible";
    for (const auto& l : t->class_labels)
        csv << ",\"" << l.to_string() << '"';
    csv << "\n";
    text << "character table of " << wc.base_group().spec << " wr S_" << c.n << " (order " << t->group->order()
         << ", z = zeta_" << t->conductor << ")\n";
    for (std::size_t i = 0; i < t->values.size(); ++i) {
        csv << '"' << t->irreducible_labels[i].to_string() << '"';
        text << t->irreducible_labels[i].to_string() << ":";
        for (const auto& val : t->values[i]) {
            csv << ",\"" << val.to_string() << '"';
            text << " " << val.to_string();
        }
        csv << "\n";
        text << "\n";
    }
    text << "orthogonality: " << (v.pass ? "pass" : "FAIL") << "\n" << witness_lines(v);
    r.csv = csv.str();
    r.text = text.str();
    return r;
}

Result ch_verify(const RunConfig& c)
{
    WreathCharacters wc(parse_group(c.g), wreath_budget(c));
    int pairs = 0;
    auto v = check_ch_homomorphism(wc, c.n, &pairs);
    Result r;
    r.doc = {{"group", wc.base_group().spec}, {"max_total", c.n}, {"pairs", pairs}, {"pass", v.pass},
             {"witnesses", v.witnesses}};
    r.pass = v.pass;
    r.csv = "group,max_total,pairs,pass\n" + wc.base_group().spec + "," + std::to_string(c.n) + "," +
            std::to_string(pairs) + "," + (v.pass ? "true" : "false") + "\n";
    r.text = "ch(Ind(X_lambda x X_mu)) = S_lambda S_mu over " + std::to_string(pairs) + " pairs: " +
             (v.pass ? "pass" : "FAIL") + "\n" + witness_lines(v);
    return r;
}

Result schurweyl_cmd(const RunConfig& c)
{
    auto rep = schur_weyl_report(parse_group(c.g), c.n, c.d);
    Result r;
    r.doc = io::to_json(rep);
    r.pass = rep.pass();
    std::ostringstream csv, text;
    csv << "label,dim_X,dim_R,kernel\n";
    text << "Schur-Weyl report for " << rep.group << ", n = " << rep.n << ", d = " << rep.d
         << ", dim O^n = " << rep.poly_fns << "\n";
    for (const auto& row : rep.rows) {
        csv << '"' << row.label.to_string() << "\"," << row.dim_x << ',' << row.dim_r << ','
            << (row.kernel ? "true" : "false") << "\n";
        text << row.label.to_string() << "  dim X = " << row.dim_x << "  dim R = " << row.dim_r
             << (row.kernel ? "  (kernel)" : "") << "\n";
    }
    text << "verdicts: " << (rep.pass() ? "pass" : "FAIL") << "\n";
    r.csv = csv.str();
    r.text = text.str();
    return r;
}

void emit(const Result& r, const RunConfig& c)
{
    std::string body;
    if (c.format == "json")
        body = r.doc.dump(2) + "\n";
    else if (c.format == "csv")
        body = r.csv;
    else
        body = r.text;
    if (c.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f)
        throw UsageError("cannot write to '" + c.out + "'");
    f << body;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"hallkit: Hall algebras, 2-Segal checks, Hecke algebras, wreath characters, Schur-Weyl counts"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::size_t budget = 0;
    auto* budget_opt = app.add_option("--budget", budget, "size budget (groupoid data or group order)")
                           ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "accepted and ignored; every computation is deterministic");
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", cfg.out, "output path, or one of json|csv|text to select the format");

    auto family_opts = [&](CLI::App* s) {
        s->add_option("--family", cfg.family, "vect | ab | f1-free")->required();
        s->add_option("--q", cfg.q, "field size for vect");
        s->add_option("--p", cfg.p, "prime for ab");
        s->add_option("--G", cfg.g, "group for f1-free");
        s->add_option("--bound", cfg.bound, "size bound")->check(CLI::NonNegativeNumber);
    };

    auto* hall = app.add_subcommand("hall-table", "Hall structure constants of a proto-abelian instance");
    family_opts(hall);
    auto* ht = app.add_subcommand("hecke-table", "Hecke algebra of H-biinvariant functions on G");
    ht->add_option("--G", cfg.g)->required();
    ht->add_option("--H", cfg.h)->required();
    auto* hm = app.add_subcommand("hecke-module", "Hecke algebra action on H-P-biinvariant functions");
    hm->add_option("--G", cfg.g)->required();
    hm->add_option("--H", cfg.h)->required();
    hm->add_option("--P", cfg.pgroup)->required();
    auto* sc = app.add_subcommand("segal-check", "simplicial, 2-Segal and pointedness checks up to degree 3");
    sc->add_option("--construction", cfg.construction, "s | hecke")->required();
    sc->add_option("--family", cfg.family, "vect | ab | f1-free (for s)");
    sc->add_option("--q", cfg.q);
    sc->add_option("--p", cfg.p);
    sc->add_option("--G", cfg.g);
    sc->add_option("--H", cfg.h);
    sc->add_option("--bound", cfg.bound)->check(CLI::NonNegativeNumber);
    auto* wt = app.add_subcommand("wreath-char-table", "character table of G wr S_n");
    wt->add_option("--G", cfg.g)->required();
    wt->add_option("--n", cfg.n)->required()->check(CLI::NonNegativeNumber);
    auto* cv = app.add_subcommand("ch-verify", "ch(Ind(X_lambda x X_mu)) = S_lambda S_mu up to total size n");
    cv->add_option("--G", cfg.g)->required();
    cv->add_option("--n,--max-total", cfg.n)->required()->check(CLI::NonNegativeNumber);
    auto* sw = app.add_subcommand("schurweyl", "Schur-Weyl dimension report");
    sw->add_option("--G", cfg.g)->required();
    sw->add_option("--n", cfg.n)->required()->check(CLI::NonNegativeNumber);
    sw->add_option("--d", cfg.d)->required()->check(CLI::NonNegativeNumber);
    for (auto* s : {hall, ht, hm, sc, wt, cv, sw})
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (budget_opt->count() > 0)
        cfg.budget = budget;
    if (cfg.out == "json" || cfg.out == "csv" || cfg.out == "text") {
        cfg.format = cfg.out;
        cfg.out.clear();
    }

    try {
        Result r;
        if (hall->parsed())
            r = hall_table(cfg);
        else if (ht->parsed())
            r = hecke_table(cfg);
        else if (hm->parsed())
            r = hecke_module_cmd(cfg);
        else if (sc->parsed())
            r = segal_check(cfg);
        else if (wt->parsed())
            r = wreath_char_table(cfg);
        else if (cv->parsed())
            r = ch_verify(cfg);
        else
            r = schurweyl_cmd(cfg);
        emit(r, cfg);
        return r.pass.value_or(true) ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
