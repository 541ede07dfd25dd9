#include "bpalg/steenrod.hpp"

#include <sstream>
#include <unordered_map>
#include <stdexcept>

#include "bpalg/linalg.hpp"

namespace bpalg {

DualSteenrod::DualSteenrod(int p, Basis basis) : p_(p), basis_(basis)
{
    if (!is_supported_prime(p))
        throw std::invalid_argument("unsupported prime");
}

int DualSteenrod::zeta_degree(int n) const
{
    long long pn = 1;
    for (int k = 0; k < n; ++k)
        pn *= p_;
    return p_ == 2 ? int(pn - 1) : int(2 * (pn - 1));
}

int DualSteenrod::taubar_degree(int s) const
{
    if (p_ == 2)
        throw std::logic_error("no tau generators at p=2");
    long long ps = 1;
    for (int k = 0; k < s; ++k)
        ps *= p_;
    return int(2 * ps - 1);
}

int DualSteenrod::degree(const MilnorMono& m) const
{
    long long d = 0;
    for (size_t k = 0; k < m.zeta.size(); ++k)
        d += (long long)m.zeta[k] * zeta_degree(int(k) + 1);
    for (int s = 0; s < 32; ++s)
        if (m.tau & (1u << s))
            d += taubar_degree(s);
    return int(d);
}

std::pair<int, MilnorMono> DualSteenrod::mul_mono(const MilnorMono& a, const MilnorMono& b) const
{
    if (a.tau & b.tau)
        return {0, {}};
    int sign = 1;
    if (p_ != 2 && a.tau && b.tau) {
        // count exterior inversions: pairs (i in a, j in b) with i > j
        int inv = 0;
        for (int j = 0; j < 32; ++j)
            if (b.tau & (1u << j))
                inv += __builtin_popcount(a.tau >> (j + 1));
        if (inv % 2)
            sign = -1;
    }
    MilnorMono m;
    m.tau = a.tau | b.tau;
    m.zeta.assign(std::max(a.zeta.size(), b.zeta.size()), 0);
    for (size_t k = 0; k < m.zeta.size(); ++k) {
        int e = (k < a.zeta.size() ? a.zeta[k] : 0) + (k < b.zeta.size() ? b.zeta[k] : 0);
        m.zeta[k] = uint16_t(e);
    }
    m.trim();
    return {sign, m};
}

SteenrodEl DualSteenrod::mul(const SteenrodEl& a, const SteenrodEl& b) const
{
    SteenrodEl r;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b) {
            auto [sign, m] = mul_mono(ma, mb);
            if (!sign)
                continue;
            int v = fp_norm((long long)sign * ca * cb, p_);
            if (!v)
                continue;
            int& slot = r[m];
            slot = fp_add(slot, v, p_);
            if (!slot)
                r.erase(m);
        }
    return r;
}

SteenrodEl DualSteenrod::add(const SteenrodEl& a, const SteenrodEl& b) const
{
    SteenrodEl r = a;
    for (auto& [m, c] : b) {
        int& slot = r[m];
        slot = fp_add(slot, c, p_);
        if (!slot)
            r.erase(m);
    }
    return r;
}

SteenrodEl DualSteenrod::scale(const SteenrodEl& a, int c) const
{
    SteenrodEl r;
    c = fp_norm(c, p_);
    if (!c)
        return r;
    for (auto& [m, v] : a)
        r[m] = fp_mul(v, c, p_);
    return r;
}

SteenrodEl DualSteenrod::frobenius(const SteenrodEl& a, int times) const
{
    // (sum c_m m)^{p^e} termwise; valid since odd generators square to zero
    // and would make the power vanish anyway.
    long long pe = 1;
    for (int k = 0; k < times; ++k)
        pe *= p_;
    SteenrodEl r;
    for (auto& [m, c] : a) {
        if (m.tau != 0 && pe > 1)
            continue;  // odd exterior part: p-th power is zero
        MilnorMono mm = m;
        for (auto& e : mm.zeta)
            e = uint16_t(e * pe);
        r[mm] = c;  // c^{p^e} = c in F_p
    }
    return r;
}

Tensor2 DualSteenrod::psi_gen(int kind, int index) const
{
    Tensor2 t;
    if (kind == 0) {
        // zeta_n
        int n = index;
        if (basis_ == Basis::Conjugate) {
            // psi(zeta_n) = sum_{0<=i<=n} zeta_i (x) zeta_{n-i}^{p^i}
            long long pi = 1;
            for (int i = 0; i <= n; ++i) {
                MilnorMono a = i ? MilnorMono::zeta_gen(i) : MilnorMono{};
                MilnorMono b =
                    (n - i) ? MilnorMono::zeta_gen(n - i, int(pi)) : MilnorMono{};
                t[{a, b}] = 1;
                pi *= p_;
            }
        } else {
            // classical xi_n: psi(xi_n) = sum_{0<=i<=n} xi_{n-i}^{p^i} (x) xi_i
            long long pi = 1;
            for (int i = 0; i <= n; ++i) {
                MilnorMono a =
                    (n - i) ? MilnorMono::zeta_gen(n - i, int(pi)) : MilnorMono{};
                MilnorMono b = i ? MilnorMono::zeta_gen(i) : MilnorMono{};
                t[{a, b}] = 1;
                pi *= p_;
            }
        }
    } else {
        int s = index;
        if (basis_ == Basis::Conjugate) {
            // psi(taubar_s) = 1 (x) taubar_s + sum_{0<=j<=s} taubar_j (x) zeta_{s-j}^{p^j}
            t[{MilnorMono{}, MilnorMono::taubar_gen(s)}] = 1;
            long long pj = 1;
            for (int j = 0; j <= s; ++j) {
                MilnorMono b =
                    (s - j) ? MilnorMono::zeta_gen(s - j, int(pj)) : MilnorMono{};
                t[{MilnorMono::taubar_gen(j), b}] = 1;
                pj *= p_;
            }
        } else {
            // classical tau_s: psi(tau_s) = tau_s (x) 1 + sum xi_{s-j}^{p^j} (x) tau_j
            t[{MilnorMono::taubar_gen(s), MilnorMono{}}] = 1;
            long long pj = 1;
            for (int j = 0; j <= s; ++j) {
                MilnorMono a =
                    (s - j) ? MilnorMono::zeta_gen(s - j, int(pj)) : MilnorMono{};
                t[{a, MilnorMono::taubar_gen(j)}] = 1;
                pj *= p_;
            }
        }
    }
    return t;
}

Tensor2 DualSteenrod::tensor_mul(const Tensor2& a, const Tensor2& b) const
{
    Tensor2 r;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b) {
            // (a1 (x) a2)(b1 (x) b2) = (-1)^{|a2||b1|} a1 b1 (x) a2 b2
            auto [s1, m1] = mul_mono(ma.first, mb.first);
            if (!s1)
                continue;
            auto [s2, m2] = mul_mono(ma.second, mb.second);
            if (!s2)
                continue;
            int sign = s1 * s2;
            if (p_ != 2 && ma.second.odd_parity() && mb.first.odd_parity())
                sign = -sign;
            int v = fp_norm((long long)sign * ca * cb, p_);
            if (!v)
                continue;
            auto key = std::make_pair(m1, m2);
            int& slot = r[key];
            slot = fp_add(slot, v, p_);
            if (!slot)
                r.erase(key);
        }
    return r;
}

Tensor2 DualSteenrod::tensor(const SteenrodEl& a, const SteenrodEl& b)
{
    Tensor2 r;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b)
            r[{ma, mb}] = ca * cb;  // caller normalizes if needed
    return r;
}

const Tensor2& DualSteenrod::psi(const MilnorMono& m) const
{
    auto it = psi_cache_.find(m);
    if (it != psi_cache_.end())
        return it->second;
    Tensor2 t;
    if (m.is_unit()) {
        t[{MilnorMono{}, MilnorMono{}}] = 1;
    } else {
        // peel one generator factor and recurse
        MilnorMono rest = m;
        Tensor2 head;
        if (m.tau) {
            int s = __builtin_ctz(m.tau);
            rest.tau &= rest.tau - 1;
            head = psi_gen(1, s);
        } else {
            size_t k = 0;
            while (m.zeta[k] == 0)
                ++k;
            rest.zeta[k] -= 1;
            rest.trim();
            head = psi_gen(0, int(k) + 1);
        }
        t = tensor_mul(head, psi(rest));
    }
    return psi_cache_.emplace(m, std::move(t)).first->second;
}

Tensor2 DualSteenrod::psi(const SteenrodEl& x) const
{
    Tensor2 r;
    for (auto& [m, c] : x) {
        for (auto& [key, v] : psi(m)) {
            int& slot = r[key];
            slot = fp_add(slot, fp_mul(v, c, p_), p_);
            if (!slot)
                r.erase(key);
        }
    }
    return r;
}

const Tensor2& DualSteenrod::psi_reduced(const MilnorMono& m) const
{
    auto it = psi_reduced_cache_.find(m);
    if (it != psi_reduced_cache_.end())
        return it->second;
    Tensor2 r;
    for (auto& [key, v] : psi(m))
        if (!key.first.is_unit() && !key.second.is_unit())
            r[key] = v;
    return psi_reduced_cache_.emplace(m, std::move(r)).first->second;
}

std::vector<MilnorMono> DualSteenrod::basis(int degree) const
{
    std::vector<MilnorMono> out;
    for (auto& m : basis_up_to(degree))
        if (this->degree(m) == degree)
            out.push_back(m);
    return out;
}

std::vector<MilnorMono> DualSteenrod::basis_up_to(int cutoff) const
{
    int zmax = 0;
    while (zeta_degree(zmax + 1) <= cutoff)
        ++zmax;
    int tmax = 0;
    if (p_ != 2)
        while (taubar_degree(tmax) <= cutoff)
            ++tmax;

    std::vector<MilnorMono> out;
    MilnorMono cur;
    cur.zeta.assign(size_t(zmax), 0);
    auto rec = [&](auto&& self, int k, int deg) -> void {
        if (k == 0) {
            // distribute tau subsets
            auto emit_tau = [&](auto&& es, int s, int d2, uint32_t mask) -> void {
                MilnorMono m = cur;
                m.tau = mask;
                m.trim();
                out.push_back(std::move(m));
                for (int t = s; t < tmax; ++t) {
                    int dt = taubar_degree(t);
                    if (d2 + dt <= cutoff)
                        es(es, t + 1, d2 + dt, mask | (1u << t));
                }
            };
            if (p_ == 2) {
                MilnorMono m = cur;
                m.trim();
                out.push_back(std::move(m));
            } else {
                emit_tau(emit_tau, 0, deg, 0);
            }
            return;
        }
        int dk = zeta_degree(k);
        for (int e = 0; deg + e * dk <= cutoff; ++e) {
            cur.zeta[size_t(k) - 1] = uint16_t(e);
            self(self, k - 1, deg + e * dk);
        }
        cur.zeta[size_t(k) - 1] = 0;
    };
    rec(rec, zmax, 0);
    return out;
}

uint32_t DualSteenrod::intern(const MilnorMono& m) const
{
    auto [it, fresh] = intern_ids_.emplace(m, uint32_t(intern_ids_.size()));
    if (fresh) {
        by_id_.push_back(&it->first);
        if (by_id_.size() >= (1u << 21))
            throw std::logic_error("intern table overflow");
    }
    return it->second;
}

const DualSteenrod::IPsi& DualSteenrod::ipsi(uint32_t id) const
{
    if (id >= ipsi_cache_.size()) {
        ipsi_cache_.resize(by_id_.size());
        ipsi_ready_.resize(by_id_.size(), false);
    }
    if (!ipsi_ready_[id]) {
        IPsi flat;
        for (auto& [key, c] : psi(*by_id_[id])) {
            flat.keys.push_back({intern(key.first), intern(key.second)});
            flat.coefs.push_back(c);
        }
        if (ipsi_cache_.size() < by_id_.size()) {
            ipsi_cache_.resize(by_id_.size());
            ipsi_ready_.resize(by_id_.size(), false);
        }
        ipsi_cache_[id] = std::move(flat);
        ipsi_ready_[id] = true;
    }
    return ipsi_cache_[id];
}

const DualSteenrod::IRed& DualSteenrod::psi_reduced_ids(uint32_t id) const
{
    if (id >= ired_cache_.size()) {
        ired_cache_.resize(by_id_.size());
        ired_ready_.resize(by_id_.size(), false);
    }
    if (!ired_ready_[id]) {
        IRed flat;
        for (auto& [key, c] : psi_reduced(*by_id_[id])) {
            flat.keys.push_back({intern(key.first), intern(key.second)});
            flat.coefs.push_back(c);
        }
        if (ired_cache_.size() < by_id_.size()) {
            ired_cache_.resize(by_id_.size());
            ired_ready_.resize(by_id_.size(), false);
        }
        ired_cache_[id] = std::move(flat);
        ired_ready_[id] = true;
    }
    return ired_cache_[id];
}

bool DualSteenrod::coassociative_on(const MilnorMono& m) const
{
    // accumulate (psi (x) id) psi - (id (x) psi) psi keyed by packed triples
    std::unordered_map<uint64_t, int> acc;
    acc.reserve(1024);
    auto put = [&](uint32_t a, uint32_t b, uint32_t c, int v) {
        uint64_t key = (uint64_t(a) << 42) | (uint64_t(b) << 21) | c;
        int& slot = acc[key];
        slot = fp_norm(slot + v, p_);
        if (!slot)
            acc.erase(key);
    };
    IPsi pm = ipsi(intern(m));  // copy: ipsi() below may reallocate the cache
    for (size_t t = 0; t < pm.keys.size(); ++t) {
        auto [left, right] = pm.keys[t];
        int c = pm.coefs[t];
        {
            const IPsi& pa = ipsi(left);
            for (size_t k = 0; k < pa.keys.size(); ++k)
                put(pa.keys[k][0], pa.keys[k][1], right, fp_mul(c, pa.coefs[k], p_));
        }
        {
            const IPsi& pb = ipsi(right);
            for (size_t k = 0; k < pb.keys.size(); ++k)
                put(left, pb.keys[k][0], pb.keys[k][1], fp_neg(fp_mul(c, pb.coefs[k], p_), p_));
        }
    }
    return acc.empty();
}

bool DualSteenrod::counital_on(const MilnorMono& m) const
{
    SteenrodEl left, right;
    for (auto& [key, c] : psi(m)) {
        if (key.first.is_unit()) {
            int& slot = left[key.second];
            slot = fp_add(slot, c, p_);
            if (!slot)
                left.erase(key.second);
        }
        if (key.second.is_unit()) {
            int& slot = right[key.first];
            slot = fp_add(slot, c, p_);
            if (!slot)
                right.erase(key.first);
        }
    }
    SteenrodEl expect;
    expect[m] = 1;
    return left == expect && right == expect;
}

std::string DualSteenrod::format(const MilnorMono& m) const
{
    if (m.is_unit())
        return "1";
    std::ostringstream os;
    bool first = true;
    const char* zname = basis_ == Basis::Conjugate ? "z" : "xi";
    const char* tname = basis_ == Basis::Conjugate ? "tb" : "tau";
    for (int s = 0; s < 32; ++s)
        if (m.tau & (1u << s)) {
            os << (first ? "" : " ") << tname << s;
            first = false;
        }
    for (size_t k = 0; k < m.zeta.size(); ++k)
        if (m.zeta[k]) {
            os << (first ? "" : " ") << zname << (k + 1);
            if (m.zeta[k] > 1)
                os << "^" << m.zeta[k];
            first = false;
        }
    return os.str();
}

std::string DualSteenrod::format(const SteenrodEl& x) const
{
    if (x.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : x) {
        if (!first)
            os << " + ";
        if (c != 1 || m.is_unit())
            os << c << (m.is_unit() ? "" : "*");
        if (!m.is_unit())
            os << format(m);
        first = false;
    }
    return os.str();
}

SteenrodEl classical_chi_xi(const DualSteenrod& classical, int n)
{
    // sum_{0<=i<=n} xi_{n-i}^{p^i} chi(xi_i) = 0 for n >= 1
    static std::map<std::pair<int, int>, std::vector<SteenrodEl>> cache;
    auto& tab = cache[{classical.p(), int(classical.basis())}];
    while (int(tab.size()) <= n) {
        int m = int(tab.size());
        if (m == 0) {
            tab.push_back(DualSteenrod::one());
            continue;
        }
        SteenrodEl acc;
        for (int i = 0; i < m; ++i) {
            SteenrodEl xi_pow;
            xi_pow[MilnorMono::zeta_gen(m - i, 1)] = 1;
            xi_pow = classical.frobenius(xi_pow, i);
            acc = classical.add(acc, classical.mul(xi_pow, tab[size_t(i)]));
        }
        tab.push_back(classical.scale(acc, -1));
    }
    return tab[size_t(n)];
}

SteenrodEl classical_chi_tau(const DualSteenrod& classical, int n)
{
    // tau_n + sum_{0<=i<=n-1} xi_{n-i}^{p^i} chi(tau_i) + chi(tau_n) = 0
    static std::map<int, std::vector<SteenrodEl>> cache;
    auto& tab = cache[classical.p()];
    while (int(tab.size()) <= n) {
        int m = int(tab.size());
        SteenrodEl acc;
        acc[MilnorMono::taubar_gen(m)] = 1;
        for (int i = 0; i < m; ++i) {
            SteenrodEl xi_pow;
            xi_pow[MilnorMono::zeta_gen(m - i, 1)] = 1;
            xi_pow = classical.frobenius(xi_pow, i);
            acc = classical.add(acc, classical.mul(xi_pow, tab[size_t(i)]));
        }
        tab.push_back(classical.scale(acc, -1));
    }
    return tab[size_t(n)];
}

std::vector<SteenrodEl> solve_generator_sequence(const DualSteenrod& A, int n_max,
                                                 bool squared_letters)
{
    int p = A.p();
    if (squared_letters && p != 2)
        throw std::invalid_argument("squared letters are a p=2 variant");
    int zexp = squared_letters ? 2 : 1;
    std::vector<SteenrodEl> solved;  // s_1..; s_0 = 1 implicitly
    for (int n = 1; n <= n_max; ++n) {
        int d = zexp * A.zeta_degree(n);
        std::vector<MilnorMono> dom = A.basis(d);
        // coordinates on the tensor square in total degree d
        std::map<std::pair<MilnorMono, MilnorMono>, int> index;
        std::vector<Tensor2> images;
        for (auto& m : dom) {
            // psi(m) - 1 (x) m
            Tensor2 im = A.psi(m);
            auto key = std::make_pair(MilnorMono{}, m);
            int& slot = im[key];
            slot = fp_sub(slot, 1, p);
            if (!slot)
                im.erase(key);
            for (auto& [k, c] : im)
                index.emplace(k, 0);
            images.push_back(std::move(im));
        }
        // right-hand side sum_{1<=j<=n} zeta_j^{zexp} (x) s_{n-j}^{p^j}
        Tensor2 rhs;
        for (int j = 1; j <= n; ++j) {
            SteenrodEl letter;
            letter[MilnorMono::zeta_gen(j, zexp)] = 1;
            SteenrodEl rest =
                n - j == 0 ? DualSteenrod::one() : A.frobenius(solved[size_t(n - j) - 1], j);
            for (auto& [k, c] : DualSteenrod::tensor(letter, rest)) {
                int& slot = rhs[k];
                slot = fp_add(slot, fp_norm(c, p), p);
                if (!slot)
                    rhs.erase(k);
            }
        }
        for (auto& [k, c] : rhs)
            index.emplace(k, 0);
        int ncoords = 0;
        for (auto& [k, v] : index)
            v = ncoords++;
        FpMat mat(size_t(ncoords), FpVec(dom.size(), 0));
        for (size_t j = 0; j < dom.size(); ++j)
            for (auto& [k, c] : images[j])
                mat[size_t(index.at(k))][j] = c;
        FpVec b(size_t(ncoords), 0);
        for (auto& [k, c] : rhs)
            b[size_t(index.at(k))] = c;
        auto sol = fp_solve(mat, b, int(dom.size()), p);
        if (!sol)
            throw std::logic_error("generator-sequence solve has no solution at n=" +
                                   std::to_string(n));
        if (!fp_kernel(mat, int(dom.size()), p).empty())
            throw std::logic_error("generator-sequence solve is not unique at n=" +
                                   std::to_string(n));
        SteenrodEl s;
        for (size_t j = 0; j < dom.size(); ++j)
            if ((*sol)[j])
                s[dom[j]] = (*sol)[j];
        solved.push_back(std::move(s));
    }
    return solved;
}

ConsistencyReport conjugate_consistency_check(int p, int cutoff)
{
    ConsistencyReport rep;
    DualSteenrod cl(p, DualSteenrod::Basis::Classical);

    auto tensor_norm = [&](Tensor2 t) {
        for (auto it = t.begin(); it != t.end();) {
            it->second = fp_norm(it->second, p);
            it = it->second ? std::next(it) : t.erase(it);
        }
        return t;
    };

    for (int n = 1; cl.zeta_degree(n) <= cutoff; ++n) {
        SteenrodEl zn = classical_chi_xi(cl, n);
        Tensor2 lhs = cl.psi(zn);
        Tensor2 rhs;
        for (int i = 0; i <= n; ++i) {
            Tensor2 term = DualSteenrod::tensor(classical_chi_xi(cl, i),
                                                cl.frobenius(classical_chi_xi(cl, n - i), i));
            for (auto& [k, v] : term) {
                int& slot = rhs[k];
                slot = fp_add(slot, fp_norm(v, p), p);
                if (!slot)
                    rhs.erase(k);
            }
        }
        if (tensor_norm(lhs) != tensor_norm(rhs)) {
            rep.ok = false;
            rep.first_disagreement = "zeta_" + std::to_string(n);
            return rep;
        }
        ++rep.zeta_checked;
    }
    if (p != 2) {
        for (int s = 0; cl.taubar_degree(s) <= cutoff; ++s) {
            SteenrodEl ts = classical_chi_tau(cl, s);
            Tensor2 lhs = cl.psi(ts);
            Tensor2 rhs = DualSteenrod::tensor(DualSteenrod::one(), ts);
            for (int j = 0; j <= s; ++j) {
                Tensor2 term = DualSteenrod::tensor(
                    classical_chi_tau(cl, j), cl.frobenius(classical_chi_xi(cl, s - j), j));
                for (auto& [k, v] : term) {
                    int& slot = rhs[k];
                    slot = fp_add(slot, fp_norm(v, p), p);
                    if (!slot)
                        rhs.erase(k);
                }
            }
            if (tensor_norm(lhs) != tensor_norm(rhs)) {
                rep.ok = false;
                rep.first_disagreement = "taubar_" + std::to_string(s);
                return rep;
            }
            ++rep.taubar_checked;
        }
    }
    return rep;
}

}  // namespace bpalg
