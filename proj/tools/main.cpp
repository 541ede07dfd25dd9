#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "bpalg/dga.hpp"
#include "bpalg/json_io.hpp"
#include "bpalg/verify.hpp"

using namespace bpalg;

namespace {

constexpr int kMaxDegreeGuard = 200;

int check_config(int p, int max_degree)
{
    if (!is_supported_prime(p)) {
        std::cerr << "error: prime must be one of 2, 3, 5, 7\n";
        return 2;
    }
    if (max_degree < 0 || max_degree > kMaxDegreeGuard) {
        std::cerr << "error: --max must lie in 0.." << kMaxDegreeGuard << "\n";
        return 2;
    }
    return 0;
}

// Monomial strings: space-separated factors "zeta_2", "zeta_1^3", "tau_0".
MilnorMono parse_milnor(const std::string& text, int p)
{
    MilnorMono m;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        int exp = 1;
        std::string base = tok;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            base = tok.substr(0, caret);
            exp = std::stoi(tok.substr(caret + 1));
        }
        if (base.rfind("zeta_", 0) == 0) {
            int n = std::stoi(base.substr(5));
            if (n < 1)
                throw std::invalid_argument("zeta index must be >= 1");
            if (int(m.zeta.size()) < n)
                m.zeta.resize(size_t(n), 0);
            m.zeta[size_t(n) - 1] = uint16_t(m.zeta[size_t(n) - 1] + exp);
        } else if (base.rfind("tau_", 0) == 0) {
            if (p == 2)
                throw std::invalid_argument("no tau generators at p=2");
            int s = std::stoi(base.substr(4));
            if (exp > 1)
                throw std::invalid_argument("tau generators are exterior");
            m.tau |= 1u << s;
        } else {
            throw std::invalid_argument("unknown generator: " + tok);
        }
    }
    return m;
}

std::string tensor_to_text(const DualSteenrod& A, const Tensor2& t)
{
    if (t.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [key, c] : t) {
        if (!first)
            os << " + ";
        if (c != 1)
            os << c << "*";
        os << A.format(key.first) << " (x) " << A.format(key.second);
        first = false;
    }
    return os.str();
}

std::shared_ptr<Comodule> make_comodule(const DualSteenrod& A, const std::string& which,
                                        int stage)
{
    if (which == "tower")
        return tower_comodule(A, stage);
    if (which == "bp")
        return bp_comodule(A, stage);
    if (which == "trivial")
        return trivial_comodule(A);
    throw std::invalid_argument("comodule must be tower, bp or trivial");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact algebra for the cell-tower approximation to BP"};
    app.require_subcommand(1);

    int p = 3;
    int max_degree = 40;
    bool as_json = false;

    auto* cmd_psi = app.add_subcommand("psi", "coproduct of a dual Steenrod monomial");
    std::string element;
    cmd_psi->add_option("--prime", p);
    cmd_psi->add_option("--element", element)->required();
    cmd_psi->add_flag("--json", as_json);

    auto* cmd_px = app.add_subcommand("px-gens", "generators of the homology of a free algebra");
    int base_degree = 1;
    bool rational = false;
    cmd_px->add_option("--prime", p);
    cmd_px->add_option("--base-degree", base_degree)->required();
    cmd_px->add_option("--max", max_degree);
    cmd_px->add_flag("--rational", rational);
    cmd_px->add_flag("--json", as_json);

    auto* cmd_kss = app.add_subcommand("kss", "Kunneth spectral sequence pages for a cone");
    int attach = 1;
    std::string page = "inf";
    bool compare = false;
    cmd_kss->add_option("--prime", p);
    cmd_kss->add_option("--attach", attach)->required();
    cmd_kss->add_option("--max", max_degree);
    cmd_kss->add_option("--page", page)->check(CLI::IsMember({"2", "p", "inf"}));
    cmd_kss->add_flag("--compare", compare);
    cmd_kss->add_flag("--json", as_json);

    auto* cmd_cobar = app.add_subcommand("cobar-d", "cobar differential");
    std::string comodule_name = "tower";
    int stage = 2;
    int filtration = 1;
    int degree = -1;
    std::string element_json;
    std::string apply_ops;
    cmd_cobar->add_option("--prime", p);
    cmd_cobar->add_option("--comodule", comodule_name);
    cmd_cobar->add_option("--stage", stage);
    cmd_cobar->add_option("--filtration", filtration);
    cmd_cobar->add_option("--degree", degree);
    cmd_cobar->add_option("--element-json", element_json);
    cmd_cobar->add_option("--apply", apply_ops,
                          "apply power operations (\"bQ^9 Q^3\") instead of the differential");
    cmd_cobar->add_flag("--json", as_json);

    auto* cmd_ext = app.add_subcommand("ext1", "Ext in filtrations 0 and 1");
    int from = 0, to = 10;
    cmd_ext->add_option("--prime", p);
    cmd_ext->add_option("--comodule", comodule_name);
    cmd_ext->add_option("--stage", stage);
    cmd_ext->add_option("--from", from);
    cmd_ext->add_option("--to", to);
    cmd_ext->add_flag("--json", as_json);

    auto* cmd_massey = app.add_subcommand("massey", "triple Massey products");
    int toda_n = -1;
    cmd_massey->add_option("--prime", p);
    cmd_massey->add_option("--toda", toda_n);
    cmd_massey->add_flag("--json", as_json);

    auto* cmd_tower = app.add_subcommand("tower-run", "run the cell-tower recursion");
    int stages = 3;
    bool verify_bp = false;
    cmd_tower->add_option("--prime", p);
    cmd_tower->add_option("--stages", stages)->required();
    cmd_tower->add_option("--max", max_degree);
    cmd_tower->add_flag("--verify-bp", verify_bp);
    cmd_tower->add_flag("--json", as_json);

    auto* cmd_bp = app.add_subcommand("bp-check", "compare the tower with BP homology");
    cmd_bp->add_option("--prime", p);
    cmd_bp->add_option("--stages", stages);
    cmd_bp->add_option("--max", max_degree);
    cmd_bp->add_flag("--json", as_json);

    auto* cmd_verify = app.add_subcommand("verify-all", "run every invariant suite");
    uint64_t seed = 0;
    bool timings = false;
    cmd_verify->add_option("--prime", p);
    cmd_verify->add_option("--max", max_degree);
    cmd_verify->add_option("--seed", seed);
    cmd_verify->add_flag("--timings", timings, "include wall times (breaks reproducible output)");
    cmd_verify->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (int rc = check_config(p, max_degree); rc != 0)
        return rc;

    try {
        if (cmd_psi->parsed()) {
            DualSteenrod A(p);
            MilnorMono m = parse_milnor(element, p);
            const Tensor2& t = A.psi(m);
            if (as_json) {
                Json terms = Json::array();
                for (auto& [key, c] : t)
                    terms.push_back(Json{{"c", c},
                                         {"left", to_json(key.first)},
                                         {"right", to_json(key.second)}});
                std::cout << Json{{"p", p}, {"element", to_json(m)}, {"psi", terms}}.dump(2)
                          << "\n";
            } else {
                std::cout << "psi(" << A.format(m) << ") = " << tensor_to_text(A, t) << "\n";
            }
            return 0;
        }

        if (cmd_px->parsed()) {
            GeneratorReport rep;
            if (rational)
                rep = rational_px(base_degree % 2 ? Parity::Odd : Parity::Even, base_degree,
                                  max_degree);
            else
                rep = px_generators(p, {{"x", base_degree}}, max_degree);
            if (as_json) {
                std::cout << report_to_json(rep).dump(2) << "\n";
            } else {
                std::cout << "generators (degree <= " << max_degree << "):\n";
                for (auto& e : rep.entries)
                    std::cout << "  " << e.name << "  degree " << e.degree << "  "
                              << (e.exterior ? "exterior" : "polynomial") << "\n";
                std::cout << "series:";
                for (auto c : rep.series.c)
                    std::cout << " " << c;
                std::cout << "\n";
            }
            return 0;
        }

        if (cmd_kss->parsed()) {
            SSPage e2 = build_e2(p, attach, max_degree);
            SSPage terminal = apply_d_pminus1(e2);
            if (compare) {
                auto rep = compare_with_cone_answer(p, attach, max_degree);
                if (as_json) {
                    std::cout << Json{{"equal", rep.equal},
                                      {"first_mismatch", rep.first_mismatch},
                                      {"ss_series", to_json(rep.ss_series)},
                                      {"cone_series", to_json(rep.cone_series)},
                                      {"pairing", rep.pairing_info}}
                                     .dump(2)
                              << "\n";
                } else {
                    std::cout << (rep.equal ? "equal" : "MISMATCH at degree " +
                                                            std::to_string(rep.first_mismatch))
                              << "\n";
                    for (auto& s : rep.pairing_info)
                        std::cout << "  " << s << "\n";
                }
                return rep.equal ? 0 : 1;
            }
            bool want_e2 = page == "2";
            const SSPage& shown = want_e2 ? e2 : terminal;
            PoincareSeries s(max_degree);
            if (want_e2 && p != 2) {
                // total-degree series of the E^2 page itself
                s = shown.base.truncate(max_degree);
                for (auto& g : shown.towers)
                    for (long long d = g.total; d <= max_degree; d *= p)
                        s = s.mul(PoincareSeries::truncated(int(d), p, max_degree));
                for (auto& g : shown.exterior)
                    if (g.total <= max_degree)
                        s = s.mul(PoincareSeries::exterior(g.total, max_degree));
            } else {
                s = einfty_series(shown);
            }
            if (as_json) {
                Json towers = Json::array(), ext = Json::array();
                for (auto& g : shown.towers)
                    towers.push_back(Json{{"name", g.name}, {"total", g.total}});
                for (auto& g : shown.exterior)
                    ext.push_back(Json{{"name", g.name}, {"total", g.total}});
                std::cout << Json{{"page", want_e2 ? 2 : (p == 2 ? 2 : p)},
                                  {"towers", towers},
                                  {"exterior", ext},
                                  {"series", to_json(s)}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "page " << (want_e2 ? 2 : (p == 2 ? 2 : p)) << " series:";
                for (auto c : s.c)
                    std::cout << " " << c;
                std::cout << "\n";
            }
            return 0;
        }

        if (cmd_cobar->parsed()) {
            DualSteenrod A(p);
            auto M = make_comodule(A, comodule_name, stage);
            CobarComplex cx(*M);
            if (!element_json.empty()) {
                CobarEl x = cobar_from_json(*M, Json::parse(element_json));
                if (!apply_ops.empty()) {
                    DLSequence I = parse_sequence(apply_ops, p);
                    DLContext ctx(A, M.get());
                    CobarEl r = x;
                    for (auto it = I.ops.rbegin(); it != I.ops.rend(); ++it)
                        r = ctx.apply_to_ext1_class(*it, r);
                    std::cout << cobar_to_json(*M, r).dump(2) << "\n";
                    return 0;
                }
                CobarEl dx = cx.d(x);
                std::cout << cobar_to_json(*M, dx).dump(2) << "\n";
                return 0;
            }
            if (degree < 0) {
                std::cerr << "error: need --degree (or --element-json)\n";
                return 2;
            }
            Json out = Json::array();
            for (auto& w : cx.basis(filtration, degree)) {
                CobarEl x{{w, 1}};
                out.push_back(Json{{"word", cobar_to_json(*M, x)},
                                   {"d", cobar_to_json(*M, cx.d(x))}});
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (cmd_ext->parsed()) {
            DualSteenrod A(p);
            auto M = make_comodule(A, comodule_name, stage);
            if (to > kMaxDegreeGuard) {
                std::cerr << "error: window exceeds the degree guard\n";
                return 2;
            }
            auto rep = ext_low_lines(*M, from, to);
            if (as_json) {
                std::cout << ext_report_to_json(*M, rep).dump(2) << "\n";
            } else {
                for (int t = from; t <= to; ++t)
                    std::cout << "t=" << t << "  ext0 dim " << rep.ext0_dim(t) << "  ext1 dim "
                              << rep.ext1_dim(t) << "\n";
            }
            return 0;
        }

        if (cmd_massey->parsed()) {
            if (toda_n >= 0) {
                DualSteenrod A(p);
                auto rep = toda_shadow_check(A, toda_n);
                if (as_json) {
                    std::cout << Json{{"ok", rep.ok}, {"steps", rep.steps},
                                      {"failure", rep.failure}}
                                     .dump(2)
                              << "\n";
                } else {
                    for (auto& s : rep.steps)
                        std::cout << "  " << s << "\n";
                    std::cout << (rep.ok ? "ok" : "FAIL: " + rep.failure) << "\n";
                }
                return rep.ok ? 0 : 1;
            }
            Dga dga = borromean_dga(p);
            Element x = dga.algebra().gen("x");
            Element y = dga.algebra().gen("y");
            Element z = dga.algebra().gen("z");
            auto mt = massey_triple(dga, x, y, z);
            if (!mt.defined) {
                std::cout << "undefined: " << mt.reason << "\n";
                return 1;
            }
            std::cout << "representative of <x,y,z> in Lambda(x,y,z,s,t), d(s)=xy, d(t)=yz:\n";
            for (auto& [m, c] : mt.representative.terms) {
                std::cout << "  " << c << " * ";
                for (auto& [g, e] : m.e) {
                    std::cout << dga.algebra().internal_gens()[size_t(g)].name;
                    if (e > 1)
                        std::cout << "^" << e;
                }
                std::cout << "\n";
            }
            std::cout << "indeterminacy: " << mt.indeterminacy << "\n";
            return 0;
        }

        if (cmd_tower->parsed() || cmd_bp->parsed()) {
            DualSteenrod A(p);
            long long top = 1;
            for (int k = 0; k < stages; ++k)
                top *= p;
            if (2 * (top - 1) > kMaxDegreeGuard) {
                std::cerr << "error: stage " << stages << " attaches a cell of dimension "
                          << 2 * (top - 1) << ", beyond the degree guard\n";
                return 2;
            }
            TowerState s = tower_init(A, std::max(max_degree, 100));
            for (int n = 1; n <= stages; ++n)
                s = tower_step(A, s);
            bool ok = true;
            Json out = tower_to_json(s);
            if (cmd_bp->parsed() || verify_bp) {
                auto rep = bp_comparison(A, s, max_degree);
                ok = rep.ok;
                out["bp"] = Json{{"ok", rep.ok}, {"lines", rep.lines}, {"failure", rep.failure}};
                if (!as_json) {
                    for (auto& l : rep.lines)
                        std::cout << "  " << l << "\n";
                    if (!rep.ok)
                        std::cout << "FAIL: " << rep.failure << "\n";
                }
            }
            if (as_json) {
                std::cout << out.dump(2) << "\n";
            } else {
                for (auto& c : s.checks)
                    std::cout << "stage " << c.stage << ": "
                              << (c.all() ? "ok" : "FAIL " + c.detail) << "\n";
                std::cout << "z degrees:";
                for (int d : s.z_degrees)
                    std::cout << " " << d;
                std::cout << "\n";
                for (size_t r = 0; r < s.alpha.size(); ++r)
                    std::cout << "alpha_[" << r + 1
                              << "] = " << cobar_to_json(*s.comodule, s.alpha[r])["terms"].dump()
                              << "\n";
                for (size_t n = 0; n < s.u.size(); ++n)
                    std::cout << "u_" << n + 1
                              << " = " << cobar_to_json(*s.comodule, s.u[n])["terms"].dump()
                              << "\n";
                std::cout << "rational series (<= " << std::min(max_degree, s.rational.cutoff())
                          << "):";
                for (int d = 0; d <= std::min(max_degree, s.rational.cutoff()); ++d)
                    std::cout << " " << s.rational.at(d);
                std::cout << "\n";
            }
            return ok ? 0 : 1;
        }

        if (cmd_verify->parsed()) {
            auto results = run_verification(p, max_degree, seed);
            bool all = true;
            if (as_json) {
                Json arr = Json::array();
                for (auto& r : results) {
                    Json row{{"suite", r.suite}, {"pass", r.pass}, {"detail", r.detail}};
                    if (timings)
                        row["seconds"] = r.seconds;
                    arr.push_back(std::move(row));
                    all = all && r.pass;
                }
                std::cout << Json{{"p", p}, {"max", max_degree}, {"results", arr},
                                  {"all_pass", all}}
                                 .dump(2)
                          << "\n";
            } else {
                for (auto& r : results) {
                    if (timings)
                        std::printf("[%s] %-34s %7.2fs  %s\n", r.pass ? "ok" : "FAIL",
                                    r.suite.c_str(), r.seconds, r.detail.c_str());
                    else
                        std::printf("[%s] %-34s %s\n", r.pass ? "ok" : "FAIL", r.suite.c_str(),
                                    r.detail.c_str());
                    all = all && r.pass;
                }
                std::printf("%s\n", all ? "all suites passed" : "FAILURES present");
            }
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
