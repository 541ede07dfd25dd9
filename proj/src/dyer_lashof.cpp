#include "bpalg/dyer_lashof.hpp"

#include <sstream>

namespace bpalg {

long long excess(const DLSequence& I, int p)
{
    if (I.ops.empty())
        return kExcessInfinity;
    long long e;
    if (p == 2) {
        e = I.ops[0].i;
        for (size_t j = 1; j < I.ops.size(); ++j)
            e -= I.ops[j].i;
    } else {
        e = 2LL * I.ops[0].i - I.ops[0].eps;
        for (size_t j = 1; j < I.ops.size(); ++j)
            e -= 2LL * I.ops[j].i * (p - 1) - I.ops[j].eps;
    }
    return e;
}

bool is_admissible(const DLSequence& I, int p)
{
    for (size_t j = 0; j + 1 < I.ops.size(); ++j) {
        if (p == 2) {
            if (I.ops[j].i > 2 * I.ops[j + 1].i)
                return false;
        } else {
            if (I.ops[j].i > p * I.ops[j + 1].i - I.ops[j + 1].eps)
                return false;
        }
    }
    return true;
}

int degree_shift(const DLSequence& I, int p)
{
    int d = 0;
    for (auto& op : I.ops)
        d += p == 2 ? op.i : 2 * op.i * (p - 1) - op.eps;
    return d;
}

std::vector<DLSequence> enumerate_admissible(
    int p, int max_shift, const std::function<bool(const DLSequence&, long long)>& keep)
{
    std::vector<DLSequence> out;
    DLSequence empty;
    if (keep(empty, kExcessInfinity))
        out.push_back(empty);

    // grow sequences by prepending; ops stored leftmost first
    std::vector<DLOp> cur;
    auto emit = [&]() {
        DLSequence I;
        I.ops.assign(cur.rbegin(), cur.rend());
        if (keep(I, excess(I, p)))
            out.push_back(std::move(I));
    };
    auto rec = [&](auto&& self, int shift) -> void {
        // cur holds ops rightmost first; prepend candidates constrained by the
        // current leftmost op
        int eps_max = p == 2 ? 0 : 1;
        for (int eps = 0; eps <= eps_max; ++eps) {
            int imax;
            if (p == 2)
                imax = max_shift - shift;
            else
                imax = (max_shift - shift + eps) / (2 * (p - 1));
            if (!cur.empty()) {
                const DLOp& right = cur.back();
                int adm = p == 2 ? 2 * right.i : p * right.i - right.eps;
                imax = std::min(imax, adm);
            }
            for (int i = 1; i <= imax; ++i) {
                int cost = p == 2 ? i : 2 * i * (p - 1) - eps;
                if (cost > max_shift - shift)
                    continue;
                cur.push_back({eps, i});
                emit();
                self(self, shift + cost);
                cur.pop_back();
            }
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DLSequence> enumerate_admissible(int p, int threshold, int max_shift)
{
    return enumerate_admissible(
        p, max_shift, [&](const DLSequence& I, long long exc) {
            if (exc == kExcessInfinity)
                return true;
            long long cond = p == 2 ? exc : exc + I.ops[0].eps;
            return cond > threshold;
        });
}

std::string format_sequence(const DLSequence& I, const std::string& base)
{
    std::ostringstream os;
    for (auto& op : I.ops) {
        if (op.eps)
            os << "b";
        os << "Q^" << op.i << " ";
    }
    os << "(" << base << ")";
    return os.str();
}

DLSequence parse_sequence(const std::string& text, int p)
{
    DLSequence I;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        DLOp op;
        size_t pos = 0;
        if (tok[0] == 'b') {
            if (p == 2)
                throw std::invalid_argument("no Bockstein prefix at p=2");
            op.eps = 1;
            pos = 1;
        }
        if (tok.compare(pos, 2, "Q^") != 0)
            throw std::invalid_argument("bad operation token: " + tok);
        op.i = std::stoi(tok.substr(pos + 2));
        I.ops.push_back(op);
    }
    return I;
}

int DLContext::mixed_degree(const MixedMono& x) const
{
    int d = A_->degree(x.a);
    if (M_)
        d += M_->degree(x.m);
    else if (!x.m.is_unit())
        throw std::logic_error("comodule part without a comodule");
    return d;
}

MixedEl DLContext::mixed_mul(const MixedEl& a, const MixedEl& b) const
{
    if (M_)
        return M_->mixed_mul(a, b);
    MixedEl r;
    for (auto& [xa, ca] : a)
        for (auto& [xb, cb] : b) {
            auto [sg, m] = A_->mul_mono(xa.a, xb.a);
            if (!sg)
                continue;
            int v = fp_norm((long long)sg * ca * cb, p());
            if (!v)
                continue;
            MixedMono key{m, ModMono{}};
            int& slot = r[key];
            slot = fp_add(slot, v, p());
            if (!slot)
                r.erase(key);
        }
    return r;
}

MixedEl DLContext::frobenius_el(const MixedEl& x) const
{
    MixedEl r;
    for (auto& [k, c] : x) {
        if (k.a.tau != 0)
            continue;  // odd exterior factor: p-th power vanishes
        MixedMono m = k;
        bool dead = false;
        for (auto& e : m.a.zeta)
            e = uint16_t(e * p());
        for (size_t g = 0; g < m.m.e.size(); ++g) {
            if (!m.m.e[g])
                continue;
            if (M_ && M_->gens()[g].exterior) {
                dead = true;
                break;
            }
            m.m.e[g] = uint16_t(m.m.e[g] * p());
        }
        if (dead)
            continue;
        int& slot = r[m];
        slot = fp_add(slot, c, p());  // c^p = c
        if (!slot)
            r.erase(m);
    }
    return r;
}

namespace {

// p^s for s = 0,1,... while it fits
bool is_power_of_p(int v, int p, int* s_out)
{
    int s = 0;
    long long x = 1;
    while (x < v) {
        x *= p;
        ++s;
    }
    if (x == v) {
        *s_out = s;
        return true;
    }
    return false;
}

}  // namespace

MixedEl DLContext::evaluate(DLOp op, const MixedMono& x) const
{
    int p = this->p();
    int d = mixed_degree(x);
    if (op.i < 0)
        throw std::invalid_argument("negative operation index");
    if (p == 2 && op.eps)
        throw std::invalid_argument("no Bockstein composites at p=2");

    // R1: instability
    if (p == 2 ? op.i < d : 2 * op.i < d)
        return {};
    // R2: top power (and b of a p-th power is zero)
    if (p == 2 ? op.i == d : 2 * op.i == d) {
        if (op.eps)
            return {};
        MixedEl e{{x, 1}};
        return frobenius_el(e);
    }
    // strictly above the top from here on
    if (x.a.is_unit() && x.m.is_unit())
        return {};  // Q^k 1 = 0 for k > 0

    // single generator, exponent 1
    int nz_zeta = 0, zeta_idx = -1;
    for (size_t k = 0; k < x.a.zeta.size(); ++k)
        if (x.a.zeta[k]) {
            nz_zeta += x.a.zeta[k];
            zeta_idx = int(k) + 1;
        }
    int ntau = __builtin_popcount(x.a.tau);
    int nz_mod = 0;
    for (auto e : x.m.e)
        nz_mod += e;

    if (ntau + nz_zeta + nz_mod == 1) {
        // R3: generator rules
        if (ntau == 1) {
            int s = __builtin_ctz(x.a.tau);
            int ps;
            if (is_power_of_p(op.i, p, &ps) && ps == s) {
                MixedMono r;
                r.a = op.eps ? MilnorMono::zeta_gen(s + 1) : MilnorMono::taubar_gen(s + 1);
                return MixedEl{{r, 1}};
            }
            throw NotSupportedError("no rule for the operation on taubar_" + std::to_string(s));
        }
        if (nz_zeta == 1) {
            int s = zeta_idx;
            int ps;
            bool index_matches = is_power_of_p(op.i, p, &ps) && ps == s;
            if (index_matches && !op.eps && (p == 2 || s >= 1)) {
                MixedMono r;
                r.a = MilnorMono::zeta_gen(s + 1);
                return MixedEl{{r, 1}};
            }
            throw NotSupportedError("no rule for the operation on zeta_" + std::to_string(s));
        }
        throw NotSupportedError("operation above the top of a comodule generator");
    }

    // R4: p-th powers
    bool pth_power = x.a.tau == 0;
    for (auto e : x.a.zeta)
        if (e % p) {
            pth_power = false;
            break;
        }
    if (pth_power)
        for (auto e : x.m.e)
            if (e % p) {
                pth_power = false;
                break;
            }
    if (pth_power) {
        if (op.eps)
            return {};  // b annihilates p-th powers
        if (op.i % p)
            return {};
        MixedMono y = x;
        for (auto& e : y.a.zeta)
            e = uint16_t(e / p);
        for (auto& e : y.m.e)
            e = uint16_t(e / p);
        y.a.trim();
        y.m.trim();
        return frobenius_el(evaluate(DLOp{0, op.i / p}, y));
    }

    // R5: Cartan split. Peel the leftmost factor: the lowest taubar letter,
    // else one zeta from the lowest zeta block, else split the tensor, else
    // one comodule generator.
    MixedMono f, g = x;
    if (x.a.tau) {
        int s = __builtin_ctz(x.a.tau);
        f.a = MilnorMono::taubar_gen(s);
        g.a.tau &= g.a.tau - 1;
    } else if (nz_zeta > 0 && nz_mod > 0) {
        f.a = x.a;
        g.a = MilnorMono{};
    } else if (nz_zeta > 0) {
        size_t k = 0;
        while (!x.a.zeta[k])
            ++k;
        f.a = MilnorMono::zeta_gen(int(k) + 1);
        g.a.zeta[k] -= 1;
        g.a.trim();
    } else {
        size_t k = 0;
        while (!x.m.e[k])
            ++k;
        f.m = ModMono::gen(int(k));
        g.m.e[k] -= 1;
        g.m.trim();
    }
    return cartan(op, f, g);
}

MixedEl DLContext::cartan(DLOp op, const MixedMono& f, const MixedMono& g) const
{
    int p = this->p();
    MixedEl res;
    auto acc = [&](MixedEl&& e) {
        for (auto& [k, c] : e) {
            int& slot = res[k];
            slot = fp_add(slot, c, p);
            if (!slot)
                res.erase(k);
        }
    };
    // Lazily-evaluated product: a NotSupported factor is forgiven only when
    // the partner factor vanishes.
    auto lazy_mul = [&](DLOp opf, DLOp opg) -> MixedEl {
        MixedEl lhs;
        bool lhs_ns = false;
        std::string why;
        try {
            lhs = evaluate(opf, f);
        } catch (const NotSupportedError& e) {
            lhs_ns = true;
            why = e.what();
        }
        if (!lhs_ns && lhs.empty())
            return {};
        MixedEl rhs = evaluate(opg, g);  // NotSupported propagates
        if (rhs.empty())
            return {};
        if (lhs_ns)
            throw NotSupportedError(why);
        return mixed_mul(lhs, rhs);
    };
    int sign_f = mixed_degree(f) % 2 ? -1 : 1;
    for (int i = 0; i <= op.i; ++i) {
        int j = op.i - i;
        if (op.eps == 0) {
            acc(lazy_mul(DLOp{0, i}, DLOp{0, j}));
        } else {
            acc(lazy_mul(DLOp{1, i}, DLOp{0, j}));
            auto term = lazy_mul(DLOp{0, i}, DLOp{1, j});
            if (sign_f < 0) {
                MixedEl neg;
                for (auto& [k, c] : term)
                    neg[k] = fp_neg(c, p);
                term = std::move(neg);
            }
            acc(std::move(term));
        }
    }
    return res;
}

MixedEl DLContext::evaluate(DLOp op, const MixedEl& x) const
{
    int p = this->p();
    MixedEl r;
    for (auto& [m, c] : x) {
        for (auto& [k, v] : evaluate(op, m)) {
            int& slot = r[k];
            slot = fp_add(slot, fp_mul(v, c, p), p);
            if (!slot)
                r.erase(k);
        }
    }
    return r;
}

MixedEl DLContext::evaluate(const DLSequence& I, const MixedEl& x) const
{
    MixedEl r = x;
    for (auto it = I.ops.rbegin(); it != I.ops.rend(); ++it)
        r = evaluate(*it, r);
    return r;
}

CobarEl DLContext::apply_to_ext1_class(DLOp op, const CobarEl& w) const
{
    if (!M_)
        throw std::logic_error("apply_to_ext1_class needs a comodule");
    MixedEl x = CobarComplex::to_mixed(w);
    return CobarComplex::from_mixed(evaluate(op, x));
}

}  // namespace bpalg
