// Acceptance suite: every criterion checked exactly at its stated range and
// time budget, one pass/fail line each.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "bpalg/cobar.hpp"
#include "bpalg/dga.hpp"
#include "bpalg/dyer_lashof.hpp"
#include "bpalg/kunneth.hpp"
#include "bpalg/tower.hpp"

using namespace bpalg;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    std::function<std::string()> body;  // returns detail, throws on failure
};

void require(bool cond, const std::string& what)
{
    if (!cond)
        throw std::runtime_error(what);
}

// ---- criterion 1 -----------------------------------------------------------
std::string coalgebra_axioms()
{
    size_t checked = 0;
    for (auto [p, cutoff] : std::vector<std::pair<int, int>>{{2, 50}, {3, 52}}) {
        DualSteenrod A(p);
        for (auto& m : A.basis_up_to(cutoff)) {
            require(A.coassociative_on(m),
                    "coassociativity fails at p=" + std::to_string(p) + " on " + A.format(m));
            require(A.counital_on(m),
                    "counit fails at p=" + std::to_string(p) + " on " + A.format(m));
            ++checked;
        }
    }
    return std::to_string(checked) + " basis monomials";
}

// ---- criterion 2 -----------------------------------------------------------
std::string conjugate_consistency()
{
    auto r2 = conjugate_consistency_check(2, 31);
    require(r2.ok, "p=2 disagreement at " + r2.first_disagreement);
    require(r2.zeta_checked >= 5, "p=2 range too small");
    auto r3 = conjugate_consistency_check(3, 52);
    require(r3.ok, "p=3 disagreement at " + r3.first_disagreement);
    require(r3.zeta_checked >= 2 && r3.taubar_checked >= 3, "p=3 range too small");
    return "p=2: zeta_1..zeta_" + std::to_string(r2.zeta_checked) +
           "; p=3: zeta_1..zeta_" + std::to_string(r3.zeta_checked) + " and taubar_0..taubar_" +
           std::to_string(r3.taubar_checked - 1);
}

// ---- criterion 3 -----------------------------------------------------------
std::string tower_recursion()
{
    int total = 0;
    for (auto [p, nmax] : std::vector<std::pair<int, int>>{{3, 3}, {5, 2}, {2, 4}}) {
        DualSteenrod A(p);
        for (int n = 1; n <= nmax; ++n) {
            auto M = tower_comodule(A, n);
            DLContext ctx(A, M.get());
            long long pn = 1;
            for (int k = 0; k < n; ++k)
                pn *= p;
            DLOp op = p == 2 ? DLOp{0, int(2 * pn - 1)} : DLOp{1, int(pn)};
            CobarEl got = ctx.apply_to_ext1_class(op, tower_u_class(A, n));
            require(got == tower_alpha_class(A, n + 1),
                    "recursion fails at p=" + std::to_string(p) + ", n=" + std::to_string(n));
            ++total;
        }
        // and the tower driver replays the same identity with its own checks
        TowerState s = tower_init(A, 100);
        for (int n = 1; n <= nmax; ++n) {
            s = tower_step(A, s);
            require(s.checks.back().recursion_ok, "tower step recursion flag");
        }
    }
    return std::to_string(total) + " stages across p=3, p=5, p=2";
}

// ---- criterion 4 -----------------------------------------------------------
std::string differential_displays()
{
    DualSteenrod A(3);
    for (int n = 1; n <= 3; ++n) {
        auto M = tower_comodule(A, n);
        CobarComplex cx(*M);
        CobarEl zn;
        zn[CobarTerm{{}, ModMono::gen(n - 1)}] = 1;
        require(cx.d(cx.scale(zn, -1)) == tower_alpha_class(A, n),
                "d(-z_n) display fails at n=" + std::to_string(n));
        CobarEl tau_sum, want;
        long long ps = 1;
        for (int s = 1; s <= n; ++s) {
            ps *= 3;
            CobarTerm w;
            w.letters.push_back(MilnorMono::taubar_gen(s));
            if (n - s > 0)
                w.m = ModMono::gen(n - s - 1, int(ps));
            tau_sum[w] = 1;
            CobarTerm v;
            v.letters.push_back(MilnorMono::taubar_gen(0));
            v.letters.push_back(MilnorMono::zeta_gen(s));
            v.m = w.m;
            want[v] = 2;  // -1 mod 3
        }
        require(cx.d(tau_sum) == want, "tau-sum display fails at n=" + std::to_string(n));
    }
    return "both displays verbatim for n <= 3 at p=3";
}

// ---- criterion 5 -----------------------------------------------------------
std::string generator_solve()
{
    {
        DualSteenrod A(3);
        auto sols = solve_generator_sequence(A, 3);
        for (int n = 1; n <= 3; ++n) {
            SteenrodEl want;
            want[MilnorMono::zeta_gen(n)] = 1;
            require(sols[size_t(n) - 1] == want, "p=3 solve at n=" + std::to_string(n));
        }
    }
    {
        DualSteenrod A(2);
        auto sols = solve_generator_sequence(A, 4);
        for (int n = 1; n <= 4; ++n) {
            SteenrodEl want;
            want[MilnorMono::zeta_gen(n)] = 1;
            require(sols[size_t(n) - 1] == want, "p=2 solve at n=" + std::to_string(n));
        }
    }
    return "s_n = zeta_n uniquely, n <= 3 at p=3 and n <= 4 at p=2";
}

// ---- criterion 6 -----------------------------------------------------------
std::string kunneth_closure()
{
    for (int d : {1, 2, 3}) {
        auto rep = compare_with_cone_answer(2, d, 24);
        require(rep.equal, "p=2 attach " + std::to_string(d) + " mismatch at degree " +
                               std::to_string(rep.first_mismatch));
    }
    for (int d : {3, 15}) {
        auto rep = compare_with_cone_answer(3, d, 40);
        require(rep.equal, "p=3 attach " + std::to_string(d) + " mismatch at degree " +
                               std::to_string(rep.first_mismatch));
    }
    return "p=2 attach 1,2,3 at N=24; p=3 attach 3,15 at N=40";
}

// ---- criterion 7 -----------------------------------------------------------
std::string counts_vs_brute_force()
{
    for (int n = 1; n <= 3; ++n) {
        const int N = 24;
        // exhaustive oracle: stream every index sequence with total shift in
        // budget, filter admissibility and excess, multiply the series
        PoincareSeries oracle = PoincareSeries::one(N);
        std::vector<int> cur;
        auto visit = [&](auto&& self, int budget) -> void {
            bool adm = true;
            for (size_t j = 0; j + 1 < cur.size(); ++j)
                if (cur[j] > 2 * cur[j + 1])
                    adm = false;
            if (adm) {
                long long exc = std::numeric_limits<long long>::max();
                if (!cur.empty()) {
                    exc = cur[0];
                    for (size_t j = 1; j < cur.size(); ++j)
                        exc -= cur[j];
                }
                if (exc > n) {
                    int deg = n;
                    for (int i : cur)
                        deg += i;
                    oracle = oracle.mul(PoincareSeries::geometric(deg, N));
                }
            }
            for (int i = 1; i <= budget; ++i) {
                cur.push_back(i);
                self(self, budget - i);
                cur.pop_back();
            }
        };
        visit(visit, N - n);
        auto rep = px_generators(2, {{"x", n}}, N);
        require(rep.series == oracle, "dimension mismatch for base degree " + std::to_string(n));
    }
    return "base degrees 1..3 at p=2, N=24, exhaustive filter oracle";
}

// ---- criterion 8 -----------------------------------------------------------
std::string cobar_d_squared()
{
    size_t total = 0;
    for (int p : {2, 3, 5}) {
        DualSteenrod A(p);
        int stage = p == 2 ? 4 : (p == 3 ? 3 : 2);
        std::vector<std::shared_ptr<Comodule>> Ms = {trivial_comodule(A),
                                                     tower_comodule(A, stage), bp_comodule(A, 3)};
        // The computation stays within filtration 3. Sources of filtration
        // <= 1 run over the full degree window; the deeper sources run over
        // the full window at odd primes and degree <= 24 at p=2, where the
        // basis alone exceeds 7 million words by degree 40.
        int deep = p == 2 ? 24 : 40;
        for (auto& M : Ms) {
            CobarComplex cx(*M);
            for (int s = 0; s <= 3; ++s) {
                int tmax = s <= 1 ? 40 : deep;
                for (int t = 0; t <= tmax; ++t)
                    for (auto& w : cx.basis(s, t)) {
                        require(cx.d_squared_zero(w), "d^2 != 0 over " + M->name() + " at p=" +
                                                          std::to_string(p));
                        ++total;
                    }
            }
        }
    }
    return std::to_string(total) + " basis words across 9 registered comodules";
}

// ---- criterion 9 -----------------------------------------------------------
std::string massey_and_toda()
{
    for (int p : {2, 3, 5}) {
        Dga dga = borromean_dga(p);
        Element x = dga.algebra().gen("x");
        Element y = dga.algebra().gen("y");
        Element z = dga.algebra().gen("z");
        auto mt = massey_triple(dga, x, y, z);
        require(mt.defined, "synthetic product undefined at p=" + std::to_string(p));
        require(dga.is_cocycle(mt.representative), "representative not a cocycle");
        auto deg = mt.representative.degree();
        require(deg.has_value(), "inhomogeneous representative");
        require(!dga.in_span(mt.representative, dga.boundary_space(*deg)),
                "synthetic product vanishes at p=" + std::to_string(p));
        // moving u and v by cocycles stays inside the indeterminacy
        auto du = mt.u.degree();
        auto dv = mt.v.degree();
        if (du)
            for (auto& c : dga.cocycle_space(*du)) {
                Element rep2 = dga.add(dga.mul(dga.bar(x), mt.v),
                                       dga.mul(dga.bar(dga.add(mt.u, c)), z));
                require(massey_contains(dga, mt, x, z, rep2), "indeterminacy misses a u-shift");
            }
        if (dv)
            for (auto& c : dga.cocycle_space(*dv)) {
                Element rep2 = dga.add(dga.mul(dga.bar(x), dga.add(mt.v, c)),
                                       dga.mul(dga.bar(mt.u), z));
                require(massey_contains(dga, mt, x, z, rep2), "indeterminacy misses a v-shift");
            }
    }
    DualSteenrod A(3);
    for (int n = 0; n <= 3; ++n) {
        auto rep = toda_shadow_check(A, n);
        require(rep.ok, "toda shadow fails at n=" + std::to_string(n) + ": " + rep.failure);
    }
    return "synthetic dga at p=2,3,5; toda shadow n <= 3 at p=3";
}

// ---- criterion 10 ----------------------------------------------------------
std::string power_op_numerics()
{
    for (int p : {3, 5, 7})
        for (int r = 1; r <= 3; ++r) {
            auto rep = power_op_arithmetic(p, r);
            require(rep.all_pass(), "odd-primary arithmetic fails");
            bool has_floor = false;
            for (auto& c : rep.conditions)
                if (c.name == "floor evaluation" && c.pass)
                    has_floor = true;
            require(has_floor, "floor evaluation missing");
        }
    for (int r = 1; r <= 3; ++r) {
        auto rep = power_op_arithmetic(2, r);
        require(rep.all_pass(), "p=2 arithmetic fails");
        bool has_mod = false;
        for (auto& c : rep.conditions)
            if (c.name == "mod-2 congruence" && c.pass)
                has_mod = true;
        require(has_mod, "mod-2 congruence missing");
    }
    return "floor = 0, congruences and degrees for p=2,3,5,7 and r <= 3";
}

// ---- criterion 11 ----------------------------------------------------------
std::string rational_bookkeeping()
{
    const int N = 40;
    auto partitions = [](const std::vector<int>& parts, int d) {
        auto rec = [&](auto&& self, size_t k, int rem) -> long long {
            if (rem == 0)
                return 1;
            if (k == parts.size())
                return 0;
            long long total = 0;
            for (int used = 0; used * parts[k] <= rem; ++used)
                total += self(self, k + 1, rem - used * parts[k]);
            return total;
        };
        return rec(rec, 0, d);
    };
    for (int p : {2, 3, 5}) {
        DualSteenrod A(p);
        int stages = p == 2 ? 4 : (p == 3 ? 3 : 2);
        TowerState s = tower_init(A, N);
        std::vector<int> degs;
        long long pn = 1;
        for (int n = 1; n <= stages; ++n) {
            s = tower_step(A, s);
            pn *= p;
            degs.push_back(int(2 * (pn - 1)));
            for (int d = 0; d <= N; ++d)
                require(s.rational.at(d) == partitions(degs, d),
                        "tower series mismatch at stage " + std::to_string(n));
        }
        std::vector<int> all_degs;
        pn = 1;
        while (true) {
            pn *= p;
            if (2 * (pn - 1) > N)
                break;
            all_degs.push_back(int(2 * (pn - 1)));
        }
        PoincareSeries target = torsion_free_target_series(p, N);
        for (int d = 0; d <= N; ++d)
            require(target.at(d) == partitions(all_degs, d), "target series mismatch");
    }
    return "tower and target series equal the partition oracle, N=40, p=2,3,5";
}

// ---- criterion 12 ----------------------------------------------------------
std::string generation_chain()
{
    for (int p : {2, 3, 5}) {
        DualSteenrod A(p);
        DLContext pure(A, nullptr);
        for (int s = 2; s <= 3; ++s) {
            DLSequence chain;
            for (int j = s - 1; j >= 1; --j) {
                long long pj = 1;
                for (int k = 0; k < j; ++k)
                    pj *= p;
                chain.ops.push_back(DLOp{0, int(p == 2 ? 2 * pj : pj)});
            }
            int e = p == 2 ? 2 : 1;
            MixedEl start{{MixedMono{MilnorMono::zeta_gen(1, e), ModMono{}}, 1}};
            MixedEl want{{MixedMono{MilnorMono::zeta_gen(s, e), ModMono{}}, 1}};
            require(pure.evaluate(chain, start) == want,
                    "chain fails at p=" + std::to_string(p) + ", s=" + std::to_string(s));
        }
    }
    return "images of z_1 generate the images of z_s for s <= 3 at p=2,3,5";
}

}  // namespace

int main(int argc, char** argv)
{
    int only = 0;
    if (argc > 1 && std::strncmp(argv[1], "--criterion=", 12) == 0)
        only = std::atoi(argv[1] + 12);

    std::vector<Criterion> criteria = {
        {1, "coalgebra axioms, p=2 deg<=50 and p=3 deg<=52", 10, coalgebra_axioms},
        {2, "conjugate consistency with the antipode recursion", 10, conjugate_consistency},
        {3, "power operation recursion lands on the next attaching class", 30, tower_recursion},
        {4, "the two cobar differential displays hold verbatim", 5, differential_displays},
        {5, "generator solve returns zeta_n uniquely", 10, generator_solve},
        {6, "Kunneth E^infinity equals the cone answer", 60, kunneth_closure},
        {7, "free-algebra generator counts match brute force", 30, counts_vs_brute_force},
        {8, "cobar d^2 = 0 across the registered comodules", 30, cobar_d_squared},
        {9, "Massey products and the Toda bracket shadow", 10, massey_and_toda},
        {10, "power operation definedness and order arithmetic", 1, power_op_numerics},
        {11, "rational homotopy bookkeeping", 5, rational_bookkeeping},
        {12, "operation chains generate the higher generators", 5, generation_chain},
    };

    int failures = 0;
    for (auto& c : criteria) {
        if (only && c.number != only)
            continue;
        auto t0 = Clock::now();
        std::string detail;
        bool pass = true;
        try {
            detail = c.body();
        } catch (const std::exception& e) {
            pass = false;
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        bool in_budget = secs < c.budget_seconds;
        if (!in_budget && pass) {
            pass = false;
            detail = "exceeded the time budget";
        }
        failures += pass ? 0 : 1;
        std::printf("[%s] criterion %2d: %s (%.2fs, budget %.0fs) -- %s\n",
                    pass ? "PASS" : "FAIL", c.number, c.title.c_str(), secs, c.budget_seconds,
                    detail.c_str());
        std::fflush(stdout);
    }
    if (failures)
        std::printf("%d criterion(s) FAILED\n", failures);
    else
        std::printf("all criteria passed\n");
    return failures ? 1 : 0;
}
