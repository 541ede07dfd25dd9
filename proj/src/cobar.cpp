#include "bpalg/cobar.hpp"
#include <unordered_map>

#include <stdexcept>

#include "bpalg/massey.hpp"

namespace bpalg {

int CobarComplex::filtration(const El& x) const
{
    if (x.empty())
        return 0;
    return int(x.begin()->first.letters.size());
}

int CobarComplex::term_degree(const CobarTerm& w) const
{
    int d = M_->degree(w.m);
    for (auto& a : w.letters)
        d += steenrod().degree(a);
    return d;
}

int CobarComplex::internal_degree(const El& x) const
{
    if (x.empty())
        return 0;
    return term_degree(x.begin()->first);
}

CobarComplex::El CobarComplex::add(const El& a, const El& b) const
{
    El r = a;
    for (auto& [w, c] : b) {
        int& slot = r[w];
        slot = fp_add(slot, c, p());
        if (!slot)
            r.erase(w);
    }
    return r;
}

CobarComplex::El CobarComplex::scale(const El& a, int c) const
{
    El r;
    c = fp_norm(c, p());
    if (!c)
        return r;
    for (auto& [w, v] : a)
        r[w] = fp_mul(v, c, p());
    return r;
}

CobarComplex::El CobarComplex::from_mixed(const MixedEl& x)
{
    El r;
    for (auto& [k, c] : x) {
        CobarTerm w;
        if (!k.a.is_unit())
            w.letters.push_back(k.a);
        w.m = k.m;
        r[w] = c;
    }
    return r;
}

MixedEl CobarComplex::to_mixed(const El& x)
{
    MixedEl r;
    for (auto& [w, c] : x) {
        if (w.letters.size() > 1)
            throw std::logic_error("to_mixed needs filtration <= 1");
        MixedMono k;
        if (!w.letters.empty())
            k.a = w.letters[0];
        k.m = w.m;
        r[k] = c;
    }
    return r;
}

CobarComplex::El CobarComplex::module_class(const ModEl& x)
{
    El r;
    for (auto& [m, c] : x)
        r[CobarTerm{{}, m}] = c;
    return r;
}

CobarComplex::El CobarComplex::d(const CobarTerm& w) const
{
    El r;
    int s = int(w.letters.size());
    auto put = [&](CobarTerm&& t, int c) {
        int& slot = r[t];
        slot = fp_add(slot, c, p());
        if (!slot)
            r.erase(t);
    };
    for (int i = 0; i < s; ++i) {
        int sign = (i + 1) % 2 ? -1 : 1;  // (-1)^{i+1} for slot i (1-based)
        for (auto& [key, c] : steenrod().psi_reduced(w.letters[size_t(i)])) {
            CobarTerm t;
            t.letters.reserve(size_t(s) + 1);
            for (int j = 0; j < i; ++j)
                t.letters.push_back(w.letters[size_t(j)]);
            t.letters.push_back(key.first);
            t.letters.push_back(key.second);
            for (int j = i + 1; j < s; ++j)
                t.letters.push_back(w.letters[size_t(j)]);
            t.m = w.m;
            put(std::move(t), fp_norm((long long)sign * c, p()));
        }
    }
    int sign = (s + 1) % 2 ? -1 : 1;
    for (auto& [key, c] : M_->coaction_reduced(w.m)) {
        CobarTerm t;
        t.letters = w.letters;
        t.letters.push_back(key.a);
        t.m = key.m;
        put(std::move(t), fp_norm((long long)sign * c, p()));
    }
    return r;
}

CobarComplex::El CobarComplex::d(const El& x) const
{
    El r;
    for (auto& [w, c] : x) {
        for (auto& [t, v] : d(w)) {
            int& slot = r[t];
            slot = fp_add(slot, fp_mul(v, c, p()), p());
            if (!slot)
                r.erase(t);
        }
    }
    return r;
}

bool CobarComplex::d_squared_zero(const CobarTerm& w) const
{
    const DualSteenrod& A = steenrod();
    int p = this->p();
    struct ITerm {
        std::array<uint32_t, 8> letters{};  // letter ids then monomial id
        int len = 0;
        int coef = 0;
    };
    ITerm start;
    start.len = int(w.letters.size());
    if (start.len + 2 >= 8)
        throw std::logic_error("d_squared_zero: word too long");
    for (int i = 0; i < start.len; ++i)
        start.letters[size_t(i)] = A.letter_id(w.letters[size_t(i)]);
    start.letters[size_t(start.len)] = M_->mono_id(w.m);
    start.coef = 1;

    auto expand = [&](const ITerm& t, auto&& sink) {
        for (int i = 0; i < t.len; ++i) {
            int sign = (i + 1) % 2 ? p - 1 : 1;
            const auto& red = A.psi_reduced_ids(t.letters[size_t(i)]);
            for (size_t k = 0; k < red.keys.size(); ++k) {
                ITerm out;
                out.len = t.len + 1;
                for (int j = 0; j < i; ++j)
                    out.letters[size_t(j)] = t.letters[size_t(j)];
                out.letters[size_t(i)] = red.keys[k][0];
                out.letters[size_t(i) + 1] = red.keys[k][1];
                for (int j = i + 1; j <= t.len; ++j)
                    out.letters[size_t(j) + 1] = t.letters[size_t(j)];
                out.coef = fp_mul(fp_mul(t.coef, sign, p), red.coefs[k], p);
                sink(out);
            }
        }
        int sign = (t.len + 1) % 2 ? p - 1 : 1;
        const auto& co = M_->coaction_reduced_ids(t.letters[size_t(t.len)]);
        for (size_t k = 0; k < co.keys.size(); ++k) {
            ITerm out;
            out.len = t.len + 1;
            for (int j = 0; j < t.len; ++j)
                out.letters[size_t(j)] = t.letters[size_t(j)];
            out.letters[size_t(t.len)] = co.keys[k][0];
            out.letters[size_t(t.len) + 1] = co.keys[k][1];
            out.coef = fp_mul(fp_mul(t.coef, sign, p), co.coefs[k], p);
            sink(out);
        }
    };

    struct KeyHash {
        size_t operator()(const std::array<uint32_t, 8>& k) const
        {
            size_t h = 0x9E3779B97F4A7C15ull;
            for (auto v : k)
                h = (h ^ v) * 0x100000001B3ull;
            return h;
        }
    };
    std::unordered_map<std::array<uint32_t, 8>, int, KeyHash> acc;
    std::vector<ITerm> mid;
    expand(start, [&](const ITerm& t) { mid.push_back(t); });
    for (auto& t : mid)
        expand(t, [&](const ITerm& u) {
            int& slot = acc[u.letters];
            slot = fp_norm(slot + u.coef, p);
            if (!slot)
                acc.erase(u.letters);
        });
    return acc.empty();
}

CobarComplex::El CobarComplex::mul(const El& a, const El& b) const
{
    // (a| (x) m) * (b_1|..|b_t (x) n): the iterated coaction of m is spread
    // over the right word, psi^{(t)}(m) = sum m_{-t}|...|m_{-1} (x) m_0, giving
    // words a|m_{-t}b_1|...|m_{-1}b_t (x) m_0 n. Comodule parts of the
    // registered comodules are concentrated in even degrees, so no interchange
    // signs arise beyond the componentwise products.
    using Spread = std::pair<std::vector<MilnorMono>, std::pair<ModMono, int>>;
    El r;
    for (auto& [wa, ca] : a) {
        for (auto& [wb, cb] : b) {
            size_t t = wb.letters.size();
            std::vector<Spread> spread{{{}, {wa.m, 1}}};
            for (size_t step = 0; step < t; ++step) {
                std::vector<Spread> next;
                for (auto& [letters, mm] : spread) {
                    for (auto& [key, c] : M_->coaction(mm.first)) {
                        int v = fp_mul(mm.second, c, p());
                        if (!v)
                            continue;
                        auto ls = letters;
                        ls.push_back(key.a);
                        next.push_back({std::move(ls), {key.m, v}});
                    }
                }
                spread = std::move(next);
            }
            for (auto& [mletters, mm] : spread) {
                int coef = fp_norm((long long)ca * cb % p() * mm.second, p());
                if (!coef)
                    continue;
                CobarTerm t2;
                t2.letters = wa.letters;
                bool dead = false;
                for (size_t i = 0; i < t; ++i) {
                    auto [sg, prod] = steenrod().mul_mono(mletters[i], wb.letters[i]);
                    if (!sg || prod.is_unit()) {
                        dead = true;
                        break;
                    }
                    coef = fp_norm((long long)coef * sg, p());
                    t2.letters.push_back(prod);
                }
                if (dead)
                    continue;
                auto [sg2, mprod] = M_->mul_mono(mm.first, wb.m);
                if (!sg2)
                    continue;
                coef = fp_norm((long long)coef * sg2, p());
                t2.m = mprod;
                int& slot = r[t2];
                slot = fp_add(slot, coef, p());
                if (!slot)
                    r.erase(t2);
            }
        }
    }
    return r;
}

std::vector<CobarTerm> CobarComplex::basis(int s, int t) const
{
    std::vector<CobarTerm> out;
    if (s < 0 || t < 0)
        return out;
    std::vector<MilnorMono> cur;
    auto rec = [&](auto&& self, int k, int remaining) -> void {
        if (k == 0) {
            for (auto& m : M_->basis(remaining)) {
                CobarTerm w;
                w.letters = cur;
                w.m = m;
                out.push_back(std::move(w));
            }
            return;
        }
        // each remaining letter needs degree >= 1
        for (int d = 1; d + (k - 1) <= remaining; ++d) {
            for (auto& a : steenrod().basis(d)) {
                cur.push_back(a);
                self(self, k - 1, remaining - d);
                cur.pop_back();
            }
        }
    };
    rec(rec, s, t);
    return out;
}

FpVec CobarComplex::coords(const El& x, const std::vector<CobarTerm>& basis) const
{
    std::map<CobarTerm, int> index;
    for (size_t i = 0; i < basis.size(); ++i)
        index[basis[i]] = int(i);
    FpVec v(basis.size(), 0);
    for (auto& [w, c] : x) {
        auto it = index.find(w);
        if (it == index.end())
            throw std::logic_error("cobar coords: term outside basis");
        v[size_t(it->second)] = c;
    }
    return v;
}

std::optional<CobarComplex::El> CobarComplex::solve_boundary(const El& w) const
{
    if (w.empty())
        return El{};
    int s = filtration(w);
    int t = internal_degree(w);
    if (s == 0)
        return std::nullopt;
    auto dom = basis(s - 1, t);
    auto cod = basis(s, t);
    std::map<CobarTerm, int> index;
    for (size_t i = 0; i < cod.size(); ++i)
        index[cod[i]] = int(i);
    // columns = dom, rows = cod
    FpMat m(cod.size(), FpVec(dom.size(), 0));
    for (size_t j = 0; j < dom.size(); ++j) {
        for (auto& [term, c] : d(dom[j])) {
            auto it = index.find(term);
            if (it == index.end())
                throw std::logic_error("cobar differential left degree window");
            m[size_t(it->second)][j] = c;
        }
    }
    FpVec rhs = coords(w, cod);
    auto sol = fp_solve(m, rhs, int(dom.size()), p());
    if (!sol)
        return std::nullopt;
    El u;
    for (size_t j = 0; j < dom.size(); ++j)
        if ((*sol)[j])
            u[dom[j]] = (*sol)[j];
    return u;
}

Ext1Report ext_low_lines(const Comodule& M, int from, int to)
{
    Ext1Report rep;
    rep.from = from;
    rep.to = to;
    CobarComplex cx(M);
    int p = M.p();
    for (int t = std::max(from, 0); t <= to; ++t) {
        auto b0 = M.basis(t);
        auto b1 = cx.basis(1, t);
        auto b2 = cx.basis(2, t);
        std::map<CobarTerm, int> i1, i2;
        for (size_t i = 0; i < b1.size(); ++i)
            i1[b1[i]] = int(i);
        for (size_t i = 0; i < b2.size(); ++i)
            i2[b2[i]] = int(i);

        // d0 : C^0 -> C^1
        FpMat d0(b1.size(), FpVec(b0.size(), 0));
        for (size_t j = 0; j < b0.size(); ++j) {
            CobarTerm w;
            w.m = b0[j];
            for (auto& [term, c] : cx.d(w))
                d0[size_t(i1.at(term))][j] = c;
        }
        // Ext^0 = kernel of d0
        for (auto& v : fp_kernel(d0, int(b0.size()), p)) {
            ModEl e;
            for (size_t j = 0; j < b0.size(); ++j)
                if (v[j])
                    e[b0[j]] = v[j];
            rep.ext0[t].push_back(std::move(e));
        }

        // d1 : C^1 -> C^2
        FpMat d1(b2.size(), FpVec(b1.size(), 0));
        for (size_t j = 0; j < b1.size(); ++j)
            for (auto& [term, c] : cx.d(b1[j]))
                d1[size_t(i2.at(term))][j] = c;
        FpMat cocycles = fp_kernel(d1, int(b1.size()), p);
        FpSpace image(p, int(b1.size()));
        for (size_t j = 0; j < b0.size(); ++j) {
            FpVec col(b1.size(), 0);
            for (size_t i = 0; i < b1.size(); ++i)
                col[i] = d0[i][j];
            image.add(col);
        }
        FpSpace seen(p, int(b1.size()));
        for (auto& row : image.rows())
            seen.add(row);
        for (auto& v : cocycles) {
            if (seen.add(v)) {
                CobarEl e;
                for (size_t j = 0; j < b1.size(); ++j)
                    if (v[j])
                        e[b1[j]] = v[j];
                rep.ext1[t].push_back(std::move(e));
            }
        }
    }
    return rep;
}

bool nonzero_in_ext1(const CobarComplex& cx, const CobarEl& x)
{
    if (x.empty())
        return false;
    if (!cx.is_cocycle(x))
        throw std::invalid_argument("nonzero_in_ext1: not a cocycle");
    return !cx.solve_boundary(x).has_value();
}

std::vector<CobarEl> cocycle_space(const CobarComplex& cx, int s, int t)
{
    auto dom = cx.basis(s, t);
    auto cod = cx.basis(s + 1, t);
    std::map<CobarTerm, int> index;
    for (size_t i = 0; i < cod.size(); ++i)
        index[cod[i]] = int(i);
    FpMat m(cod.size(), FpVec(dom.size(), 0));
    for (size_t j = 0; j < dom.size(); ++j)
        for (auto& [term, c] : cx.d(dom[j]))
            m[size_t(index.at(term))][j] = c;
    std::vector<CobarEl> out;
    for (auto& v : fp_kernel(m, int(dom.size()), cx.p())) {
        CobarEl e;
        for (size_t j = 0; j < dom.size(); ++j)
            if (v[j])
                e[dom[j]] = v[j];
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CobarEl> boundary_space(const CobarComplex& cx, int s, int t)
{
    std::vector<CobarEl> out;
    if (s <= 0)
        return out;
    for (auto& w : cx.basis(s - 1, t)) {
        CobarEl img = cx.d(w);
        if (!img.empty())
            out.push_back(std::move(img));
    }
    return out;
}

bool massey_contains(const CobarComplex& cx, const MasseyOutcome<CobarComplex>& mt,
                     const CobarEl& X, const CobarEl& Z, const CobarEl& target)
{
    if (!mt.defined)
        return false;
    CobarEl diff = cx.add(target, cx.scale(mt.representative, -1));
    if (diff.empty())
        return true;
    int s = cx.filtration(diff);
    int t = cx.internal_degree(diff);
    std::vector<CobarEl> gens = boundary_space(cx, s, t);
    int sx = cx.filtration(X), tx = cx.internal_degree(X);
    for (auto& c : cocycle_space(cx, s - sx, t - tx))
        if (CobarEl e = cx.mul(X, c); !e.empty())
            gens.push_back(std::move(e));
    int sz = cx.filtration(Z), tz = cx.internal_degree(Z);
    for (auto& c : cocycle_space(cx, s - sz, t - tz))
        if (CobarEl e = cx.mul(c, Z); !e.empty())
            gens.push_back(std::move(e));
    return element_in_span(cx.p(), diff, gens);
}

CobarEl tower_alpha_class(const DualSteenrod& A, int r)
{
    int p = A.p();
    CobarEl e;
    long long ps = 1;
    for (int s = 1; s <= r; ++s) {
        ps *= p;
        CobarTerm w;
        w.letters.push_back(MilnorMono::zeta_gen(s, p == 2 ? 2 : 1));
        if (r - s > 0)
            w.m = ModMono::gen(r - s - 1, int(ps));
        e[w] = 1;
    }
    return e;
}

CobarEl tower_u_class(const DualSteenrod& A, int n)
{
    int p = A.p();
    CobarEl e;
    if (p != 2) {
        long long ps = 1;
        for (int s = 0; s <= n; ++s) {
            CobarTerm w;
            w.letters.push_back(MilnorMono::taubar_gen(s));
            if (n - s > 0)
                w.m = ModMono::gen(n - s - 1, int(ps));
            e[w] = 1;
            ps *= p;
        }
    } else {
        long long half = 1;  // 2^{j-1}
        for (int j = 1; j <= n + 1; ++j) {
            CobarTerm w;
            w.letters.push_back(MilnorMono::zeta_gen(j));
            if (n + 1 - j > 0)
                w.m = ModMono::gen(n + 1 - j - 1, int(half));
            e[w] = 1;
            half *= 2;
        }
    }
    return e;
}

CobarEl h0_class(const DualSteenrod& A)
{
    CobarEl e;
    CobarTerm w;
    w.letters.push_back(A.p() == 2 ? MilnorMono::zeta_gen(1) : MilnorMono::taubar_gen(0));
    e[w] = 1;
    return e;
}

TodaShadowReport toda_shadow_check(const DualSteenrod& A, int n)
{
    TodaShadowReport rep;
    if (n == 0) {
        rep.steps.push_back("n=0: vacuous");
        return rep;
    }
    int p = A.p();
    auto M = tower_comodule(A, n);
    CobarComplex cx(*M);
    auto fail = [&](const std::string& why) {
        rep.ok = false;
        rep.failure = why;
        return rep;
    };

    CobarEl X = h0_class(A);
    CobarEl Y = tower_alpha_class(A, n);
    CobarEl Z = CobarComplex::unit_class();
    CobarEl U = tower_u_class(A, n);

    if (!cx.is_cocycle(Y))
        return fail("alpha class is not a cocycle");
    if (!cx.is_cocycle(U))
        return fail("u class is not a cocycle");
    rep.steps.push_back("alpha and u classes are cocycles");

    // The correcting element: u = h0-letter (x) z_n + correction, and
    // d(correction) = -h0 * alpha.
    CobarEl corr = U;
    {
        CobarTerm lead;
        lead.letters.push_back(p == 2 ? MilnorMono::zeta_gen(1) : MilnorMono::taubar_gen(0));
        lead.m = ModMono::gen(n - 1);
        corr = cx.add(corr, cx.scale(CobarEl{{lead, 1}}, -1));
    }
    CobarEl h0_alpha = cx.mul(X, Y);
    if (cx.add(cx.d(corr), h0_alpha) != CobarEl{})
        return fail("d(correction) != -h0*alpha");
    rep.steps.push_back("h0*alpha is a coboundary via the correcting element");

    // alpha = d(-z_n) once z_n is attached
    CobarEl zn;
    zn[CobarTerm{{}, ModMono::gen(n - 1)}] = 1;
    if (cx.d(cx.scale(zn, -1)) != Y)
        return fail("d(-z_n) != alpha");
    rep.steps.push_back("alpha = d(-z_n) over the stage-n comodule");

    auto mt = massey_triple(cx, X, Y, Z);
    if (!mt.defined)
        return fail("massey product undefined: " + mt.reason);
    rep.steps.push_back("<h0,[alpha],1> defined");

    // membership of the u class modulo the stated indeterminacy
    if (!massey_contains(cx, mt, X, Z, U))
        return fail("u class not in <h0,[alpha],1> + indeterminacy");
    rep.steps.push_back("u class lies in <h0,[alpha],1>");
    return rep;
}

}  // namespace bpalg
