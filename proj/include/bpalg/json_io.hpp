#ifndef BPALG_JSON_IO_HPP
#define BPALG_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "bpalg/cobar.hpp"
#include "bpalg/dyer_lashof.hpp"
#include "bpalg/free_einfty.hpp"
#include "bpalg/graded_algebra.hpp"
#include "bpalg/kunneth.hpp"
#include "bpalg/tower.hpp"

namespace bpalg {

using Json = nlohmann::json;

inline Json to_json(const CoefficientField& f)
{
    if (f.is_fp())
        return Json{{"kind", "prime-field"}, {"p", f.p}};
    return Json{{"kind", "rationals"}};
}

inline CoefficientField field_from_json(const Json& j)
{
    if (j.at("kind") == "rationals")
        return CoefficientField::rationals();
    return CoefficientField::prime_field(j.at("p").get<int>());
}

inline std::string kind_name(GenKind k)
{
    switch (k) {
        case GenKind::Polynomial:
            return "polynomial";
        case GenKind::Exterior:
            return "exterior";
        case GenKind::Truncated:
            return "truncated";
        default:
            return "divided-power";
    }
}

inline GenKind kind_from_name(const std::string& s)
{
    if (s == "polynomial")
        return GenKind::Polynomial;
    if (s == "exterior")
        return GenKind::Exterior;
    if (s == "truncated")
        return GenKind::Truncated;
    if (s == "divided-power")
        return GenKind::DividedPower;
    throw std::invalid_argument("unknown generator kind: " + s);
}

inline Json to_json(const GeneratorSpec& g)
{
    return Json{{"name", g.name}, {"degree", g.degree}, {"kind", kind_name(g.kind)}};
}

inline GeneratorSpec generator_from_json(const Json& j)
{
    return {j.at("name").get<std::string>(), j.at("degree").get<int>(),
            kind_from_name(j.at("kind").get<std::string>())};
}

inline Json to_json(const PoincareSeries& s) { return Json(s.c); }

inline PoincareSeries series_from_json(const Json& j)
{
    PoincareSeries s;
    s.c = j.get<std::vector<long long>>();
    return s;
}

// Algebra envelope: {field, generators, series}.
inline Json algebra_to_json(FreeCommAlgebra& alg, int cutoff)
{
    Json gens = Json::array();
    for (auto& g : alg.generators())
        gens.push_back(to_json(g));
    return Json{{"field", to_json(alg.field())},
                {"generators", gens},
                {"series", to_json(poincare_series(alg, cutoff))}};
}

inline FreeCommAlgebra algebra_from_json(const Json& j)
{
    std::vector<GeneratorSpec> gens;
    for (auto& g : j.at("generators"))
        gens.push_back(generator_from_json(g));
    return FreeCommAlgebra(std::move(gens), field_from_json(j.at("field")));
}

inline Json to_json(const MilnorMono& m)
{
    Json tau = Json::array();
    for (int s = 0; s < 32; ++s)
        if (m.tau & (1u << s))
            tau.push_back(s);
    Json zeta = Json::array();
    for (auto e : m.zeta)
        zeta.push_back(int(e));
    return Json{{"tau", tau}, {"zeta", zeta}};
}

inline MilnorMono milnor_from_json(const Json& j)
{
    MilnorMono m;
    for (auto& s : j.at("tau"))
        m.tau |= 1u << s.get<int>();
    for (auto& e : j.at("zeta"))
        m.zeta.push_back(uint16_t(e.get<int>()));
    m.trim();
    return m;
}

inline Json to_json(const SteenrodEl& x)
{
    Json terms = Json::array();
    for (auto& [m, c] : x)
        terms.push_back(Json{{"c", c}, {"mono", to_json(m)}});
    return terms;
}

inline SteenrodEl steenrod_el_from_json(const Json& j)
{
    SteenrodEl x;
    for (auto& t : j)
        x[milnor_from_json(t.at("mono"))] = t.at("c").get<int>();
    return x;
}

inline Json to_json(const DLSequence& I)
{
    Json ops = Json::array();
    for (auto& op : I.ops)
        ops.push_back(Json::array({op.eps, op.i}));
    return Json{{"ops", ops}};
}

inline DLSequence sequence_from_json(const Json& j)
{
    DLSequence I;
    for (auto& op : j.at("ops"))
        I.ops.push_back({op.at(0).get<int>(), op.at(1).get<int>()});
    return I;
}

// Comodule monomials as name -> exponent objects under the comodule envelope.
inline Json mod_mono_to_json(const Comodule& M, const ModMono& m)
{
    Json o = Json::object();
    for (size_t k = 0; k < m.e.size(); ++k)
        if (m.e[k])
            o[M.gens()[k].name] = int(m.e[k]);
    return o;
}

inline ModMono mod_mono_from_json(const Comodule& M, const Json& j)
{
    ModMono m;
    m.e.assign(M.gens().size(), 0);
    for (auto& [name, exp] : j.items()) {
        bool found = false;
        for (size_t k = 0; k < M.gens().size(); ++k)
            if (M.gens()[k].name == name) {
                m.e[k] = uint16_t(exp.get<int>());
                found = true;
            }
        if (!found)
            throw std::invalid_argument("unknown comodule generator: " + name);
    }
    m.trim();
    return m;
}

inline Json mixed_to_json(const Comodule& M, const MixedEl& x)
{
    Json terms = Json::array();
    for (auto& [k, c] : x)
        terms.push_back(Json{{"c", c}, {"a", to_json(k.a)}, {"m", mod_mono_to_json(M, k.m)}});
    return terms;
}

inline Json comodule_to_json(const Comodule& M)
{
    Json gens = Json::array();
    Json coaction = Json::object();
    for (auto& g : M.gens()) {
        gens.push_back(Json{{"name", g.name},
                            {"degree", g.degree},
                            {"kind", g.exterior ? "exterior" : "polynomial"}});
        coaction[g.name] = mixed_to_json(M, g.coaction);
    }
    return Json{{"field", to_json(CoefficientField::prime_field(M.p()))},
                {"name", M.name()},
                {"generators", gens},
                {"coaction", coaction}};
}

inline std::shared_ptr<Comodule> comodule_from_json(const DualSteenrod& A, const Json& j)
{
    auto M = std::make_shared<Comodule>(A, j.at("name").get<std::string>());
    // two passes: names first so coaction monomials can resolve
    for (auto& g : j.at("generators"))
        M->add_generator(g.at("name").get<std::string>(), g.at("degree").get<int>(),
                         g.at("kind") == "exterior", MixedEl{});
    std::vector<Comodule::Gen> gens = M->gens();
    auto M2 = std::make_shared<Comodule>(A, j.at("name").get<std::string>());
    for (auto& g : gens) {
        MixedEl co;
        for (auto& t : j.at("coaction").at(g.name))
            co[MixedMono{milnor_from_json(t.at("a")), mod_mono_from_json(*M, t.at("m"))}] =
                t.at("c").get<int>();
        M2->add_generator(g.name, g.degree, g.exterior, std::move(co));
    }
    return M2;
}

inline Json cobar_to_json(const Comodule& M, const CobarEl& x)
{
    CobarComplex cx(M);
    Json terms = Json::array();
    for (auto& [w, c] : x) {
        Json letters = Json::array();
        for (auto& a : w.letters)
            letters.push_back(to_json(a));
        terms.push_back(Json{{"c", c}, {"letters", letters}, {"m", mod_mono_to_json(M, w.m)}});
    }
    Json out{{"terms", terms}};
    if (!x.empty()) {
        out["s"] = cx.filtration(x);
        out["degree"] = cx.internal_degree(x);
    }
    return out;
}

inline CobarEl cobar_from_json(const Comodule& M, const Json& j)
{
    CobarEl x;
    for (auto& t : j.at("terms")) {
        CobarTerm w;
        for (auto& a : t.at("letters"))
            w.letters.push_back(milnor_from_json(a));
        w.m = mod_mono_from_json(M, t.at("m"));
        x[w] = t.at("c").get<int>();
    }
    return x;
}

inline Json to_json(const GenEntry& e)
{
    return Json{{"ops", to_json(e.I)},
                {"base", e.base},
                {"degree", e.degree},
                {"kind", e.exterior ? "exterior" : "polynomial"},
                {"name", e.name}};
}

inline Json report_to_json(const GeneratorReport& r)
{
    Json base = Json::array();
    for (auto& [name, d] : r.base)
        base.push_back(Json::array({name, d}));
    Json gens = Json::array();
    for (auto& e : r.entries)
        gens.push_back(to_json(e));
    return Json{{"field", to_json(r.field)},
                {"base", base},
                {"cutoff", r.cutoff},
                {"generators", gens},
                {"series", to_json(r.series)}};
}

inline GeneratorReport report_from_json(const Json& j)
{
    GeneratorReport r;
    r.field = field_from_json(j.at("field"));
    for (auto& b : j.at("base"))
        r.base.push_back({b.at(0).get<std::string>(), b.at(1).get<int>()});
    r.cutoff = j.at("cutoff").get<int>();
    for (auto& g : j.at("generators")) {
        GenEntry e;
        e.I = sequence_from_json(g.at("ops"));
        e.base = g.at("base").get<std::string>();
        e.degree = g.at("degree").get<int>();
        e.exterior = g.at("kind") == "exterior";
        e.name = g.at("name").get<std::string>();
        r.entries.push_back(std::move(e));
        r.algebra_gens.push_back(
            {r.entries.back().name, r.entries.back().degree,
             r.entries.back().exterior ? GenKind::Exterior : GenKind::Polynomial});
    }
    r.series = series_from_json(j.at("series"));
    return r;
}

inline Json tower_to_json(const TowerState& s)
{
    Json checks = Json::array();
    for (auto& c : s.checks)
        checks.push_back(Json{{"stage", c.stage},
                              {"alpha_cocycle", c.alpha_cocycle},
                              {"u_cocycle", c.u_cocycle},
                              {"toda", c.toda_ok},
                              {"recursion", c.recursion_ok},
                              {"detail", c.detail}});
    Json alpha = Json::array(), u = Json::array();
    for (auto& a : s.alpha)
        alpha.push_back(cobar_to_json(*s.comodule, a));
    for (auto& x : s.u)
        u.push_back(cobar_to_json(*s.comodule, x));
    return Json{{"p", s.p},          {"stage", s.stage},        {"cutoff", s.cutoff},
                {"z_degrees", s.z_degrees}, {"alpha", alpha},   {"u", u},
                {"rational", to_json(s.rational)}, {"checks", checks}};
}

inline TowerState tower_from_json(const DualSteenrod& A, const Json& j)
{
    TowerState s;
    s.p = j.at("p").get<int>();
    s.stage = j.at("stage").get<int>();
    s.cutoff = j.at("cutoff").get<int>();
    s.z_degrees = j.at("z_degrees").get<std::vector<int>>();
    s.comodule = tower_comodule(A, s.stage);
    for (auto& a : j.at("alpha"))
        s.alpha.push_back(cobar_from_json(*s.comodule, a));
    for (auto& x : j.at("u"))
        s.u.push_back(cobar_from_json(*s.comodule, x));
    s.rational = series_from_json(j.at("rational"));
    return s;
}

inline Json power_op_to_json(const PowerOpReport& r)
{
    Json conds = Json::array();
    for (auto& c : r.conditions)
        conds.push_back(Json{{"name", c.name}, {"detail", c.detail}, {"pass", c.pass}});
    return Json{{"p", r.p}, {"r", r.r}, {"conditions", conds}, {"all_pass", r.all_pass()}};
}

inline Json ext_report_to_json(const Comodule& M, const Ext1Report& r)
{
    Json ext0 = Json::object(), ext1 = Json::object();
    for (auto& [t, basis] : r.ext0) {
        Json arr = Json::array();
        for (auto& e : basis) {
            Json terms = Json::array();
            for (auto& [m, c] : e)
                terms.push_back(Json{{"c", c}, {"m", mod_mono_to_json(M, m)}});
            arr.push_back(terms);
        }
        ext0[std::to_string(t)] = arr;
    }
    for (auto& [t, basis] : r.ext1) {
        Json arr = Json::array();
        for (auto& e : basis)
            arr.push_back(cobar_to_json(M, e));
        ext1[std::to_string(t)] = arr;
    }
    return Json{{"from", r.from}, {"to", r.to}, {"ext0", ext0}, {"ext1", ext1}};
}

}  // namespace bpalg

#endif
