#include "bpalg/comodule.hpp"

#include <sstream>
#include <stdexcept>

#include "bpalg/linalg.hpp"

namespace bpalg {

Comodule::Comodule(const DualSteenrod& steenrod, std::string name)
    : steenrod_(&steenrod), name_(std::move(name))
{
}

int Comodule::add_generator(const std::string& gname, int degree, bool exterior, MixedEl coaction)
{
    gens_.push_back({gname, degree, exterior, std::move(coaction)});
    coaction_cache_.clear();
    coaction_reduced_cache_.clear();
    mono_ids_.clear();
    mono_by_id_.clear();
    ico_cache_.clear();
    ico_ready_.clear();
    return int(gens_.size()) - 1;
}

int Comodule::degree(const ModMono& m) const
{
    int d = 0;
    for (size_t k = 0; k < m.e.size(); ++k)
        d += int(m.e[k]) * gens_[k].degree;
    return d;
}

bool Comodule::odd_parity(const ModMono& m) const
{
    int odd = 0;
    for (size_t k = 0; k < m.e.size(); ++k)
        if (gens_[k].degree % 2)
            odd += m.e[k];
    return odd % 2 != 0;
}

std::pair<int, ModMono> Comodule::mul_mono(const ModMono& a, const ModMono& b) const
{
    int sign = 1;
    if (p() != 2) {
        long long inv = 0;
        // odd-degree generator exponents of a with index above the current b index
        std::vector<long long> suffix(a.e.size() + 1, 0);
        for (size_t k = a.e.size(); k-- > 0;)
            suffix[k] = suffix[k + 1] + ((gens_[k].degree % 2) ? a.e[k] : 0);
        for (size_t k = 0; k < b.e.size(); ++k)
            if (b.e[k] && gens_[k].degree % 2)
                inv += (k + 1 <= a.e.size() ? suffix[k + 1] : 0) * b.e[k];
        if (inv % 2)
            sign = -1;
    }
    ModMono m;
    m.e.assign(std::max(a.e.size(), b.e.size()), 0);
    for (size_t k = 0; k < m.e.size(); ++k) {
        int e = (k < a.e.size() ? a.e[k] : 0) + (k < b.e.size() ? b.e[k] : 0);
        if (gens_[k].exterior && e > 1)
            return {0, {}};
        m.e[k] = uint16_t(e);
    }
    m.trim();
    return {sign, m};
}

ModEl Comodule::mul(const ModEl& a, const ModEl& b) const
{
    ModEl r;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b) {
            auto [sign, m] = mul_mono(ma, mb);
            if (!sign)
                continue;
            int v = fp_norm((long long)sign * ca * cb, p());
            if (!v)
                continue;
            int& slot = r[m];
            slot = fp_add(slot, v, p());
            if (!slot)
                r.erase(m);
        }
    return r;
}

ModEl Comodule::add(const ModEl& a, const ModEl& b) const
{
    ModEl r = a;
    for (auto& [m, c] : b) {
        int& slot = r[m];
        slot = fp_add(slot, c, p());
        if (!slot)
            r.erase(m);
    }
    return r;
}

ModEl Comodule::scale(const ModEl& a, int c) const
{
    ModEl r;
    c = fp_norm(c, p());
    if (!c)
        return r;
    for (auto& [m, v] : a)
        r[m] = fp_mul(v, c, p());
    return r;
}

int Comodule::mixed_degree(const MixedMono& x) const
{
    return steenrod_->degree(x.a) + degree(x.m);
}

MixedEl Comodule::mixed_mul(const MixedEl& a, const MixedEl& b) const
{
    MixedEl r;
    for (auto& [xa, ca] : a)
        for (auto& [xb, cb] : b) {
            auto [s1, ma] = steenrod_->mul_mono(xa.a, xb.a);
            if (!s1)
                continue;
            auto [s2, mm] = mul_mono(xa.m, xb.m);
            if (!s2)
                continue;
            int sign = s1 * s2;
            if (p() != 2 && odd_parity(xa.m) && xb.a.odd_parity())
                sign = -sign;
            int v = fp_norm((long long)sign * ca * cb, p());
            if (!v)
                continue;
            MixedMono key{ma, mm};
            int& slot = r[key];
            slot = fp_add(slot, v, p());
            if (!slot)
                r.erase(key);
        }
    return r;
}

MixedEl Comodule::mixed_add(const MixedEl& a, const MixedEl& b) const
{
    MixedEl r = a;
    for (auto& [m, c] : b) {
        int& slot = r[m];
        slot = fp_add(slot, c, p());
        if (!slot)
            r.erase(m);
    }
    return r;
}

MixedEl Comodule::mixed_scale(const MixedEl& a, int c) const
{
    MixedEl r;
    c = fp_norm(c, p());
    if (!c)
        return r;
    for (auto& [m, v] : a)
        r[m] = fp_mul(v, c, p());
    return r;
}

const MixedEl& Comodule::coaction(const ModMono& m) const
{
    auto it = coaction_cache_.find(m);
    if (it != coaction_cache_.end())
        return it->second;
    MixedEl t;
    if (m.is_unit()) {
        t[MixedMono{MilnorMono{}, ModMono{}}] = 1;
    } else {
        size_t k = 0;
        while (m.e[k] == 0)
            ++k;
        if (gens_[k].coaction.empty())
            throw std::domain_error("generator missing from coaction table: " + gens_[k].name);
        ModMono rest = m;
        rest.e[k] -= 1;
        rest.trim();
        t = mixed_mul(gens_[k].coaction, coaction(rest));
    }
    return coaction_cache_.emplace(m, std::move(t)).first->second;
}

const MixedEl& Comodule::coaction_reduced(const ModMono& m) const
{
    auto it = coaction_reduced_cache_.find(m);
    if (it != coaction_reduced_cache_.end())
        return it->second;
    MixedEl r;
    for (auto& [key, v] : coaction(m))
        if (!key.a.is_unit())
            r[key] = v;
    return coaction_reduced_cache_.emplace(m, std::move(r)).first->second;
}

uint32_t Comodule::mono_id(const ModMono& m) const
{
    auto [it, fresh] = mono_ids_.emplace(m, uint32_t(mono_ids_.size()));
    if (fresh)
        mono_by_id_.push_back(&it->first);
    return it->second;
}

const Comodule::ICo& Comodule::coaction_reduced_ids(uint32_t id) const
{
    if (id >= ico_cache_.size()) {
        ico_cache_.resize(mono_by_id_.size());
        ico_ready_.resize(mono_by_id_.size(), false);
    }
    if (!ico_ready_[id]) {
        ICo flat;
        for (auto& [key, c] : coaction_reduced(*mono_by_id_[id])) {
            flat.keys.push_back({steenrod_->letter_id(key.a), mono_id(key.m)});
            flat.coefs.push_back(c);
        }
        if (ico_cache_.size() < mono_by_id_.size()) {
            ico_cache_.resize(mono_by_id_.size());
            ico_ready_.resize(mono_by_id_.size(), false);
        }
        ico_cache_[id] = std::move(flat);
        ico_ready_[id] = true;
    }
    return ico_cache_[id];
}

std::vector<ModMono> Comodule::basis(int d) const
{
    std::vector<ModMono> out;
    for (auto& m : basis_up_to(d))
        if (degree(m) == d)
            out.push_back(m);
    return out;
}

std::vector<ModMono> Comodule::basis_up_to(int cutoff) const
{
    std::vector<ModMono> out;
    ModMono cur;
    cur.e.assign(gens_.size(), 0);
    auto rec = [&](auto&& self, size_t k, int deg) -> void {
        if (k == gens_.size()) {
            ModMono m = cur;
            m.trim();
            out.push_back(std::move(m));
            return;
        }
        const auto& g = gens_[k];
        int max_e = g.degree > 0 ? (cutoff - deg) / g.degree : 0;
        if (g.exterior)
            max_e = std::min(max_e, 1);
        for (int e = 0; e <= max_e; ++e) {
            cur.e[k] = uint16_t(e);
            self(self, k + 1, deg + e * g.degree);
        }
        cur.e[k] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

bool Comodule::coaction_degree_consistent() const
{
    for (const auto& g : gens_)
        for (auto& [key, c] : g.coaction)
            if (mixed_degree(key) != g.degree)
                return false;
    return true;
}

bool Comodule::counital_on(const ModMono& m) const
{
    ModEl left;
    for (auto& [key, c] : coaction(m)) {
        if (key.a.is_unit()) {
            int& slot = left[key.m];
            slot = fp_add(slot, c, p());
            if (!slot)
                left.erase(key.m);
        }
    }
    ModEl expect;
    expect[m] = 1;
    return left == expect;
}

bool Comodule::coassociative_on(const ModMono& m) const
{
    // (psi (x) id) rho == (id (x) rho) rho, computed in A (x) A (x) M.
    std::map<std::tuple<MilnorMono, MilnorMono, ModMono>, int> lhs, rhs;
    for (auto& [key, c] : coaction(m)) {
        for (auto& [k2, v] : steenrod_->psi(key.a)) {
            auto k3 = std::make_tuple(k2.first, k2.second, key.m);
            int& slot = lhs[k3];
            slot = fp_add(slot, fp_mul(c, v, p()), p());
            if (!slot)
                lhs.erase(k3);
        }
        for (auto& [k2, v] : coaction(key.m)) {
            auto k3 = std::make_tuple(key.a, k2.a, k2.m);
            int& slot = rhs[k3];
            slot = fp_add(slot, fp_mul(c, v, p()), p());
            if (!slot)
                rhs.erase(k3);
        }
    }
    return lhs == rhs;
}

std::string Comodule::format(const ModMono& m) const
{
    if (m.is_unit())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < m.e.size(); ++k)
        if (m.e[k]) {
            os << (first ? "" : " ") << gens_[k].name;
            if (m.e[k] > 1)
                os << "^" << m.e[k];
            first = false;
        }
    return os.str();
}

std::string Comodule::format(const ModEl& x) const
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

std::string Comodule::format_mixed(const MixedEl& x) const
{
    if (x.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : x) {
        if (!first)
            os << " + ";
        if (c != 1)
            os << c << "*";
        os << steenrod_->format(k.a) << "(x)" << format(k.m);
        first = false;
    }
    return os.str();
}

std::vector<ModEl> primitives_in_degree(const Comodule& M, int d)
{
    std::vector<ModMono> dom = M.basis(d);
    // coordinates of the reduced coaction
    std::map<MixedMono, int> coords;
    std::vector<MixedEl> images;
    for (auto& m : dom) {
        MixedEl im = M.coaction_reduced(m);
        for (auto& [k, c] : im)
            coords.emplace(k, 0);
        images.push_back(std::move(im));
    }
    int idx = 0;
    for (auto& [k, v] : coords)
        v = idx++;
    FpMat rows;
    for (auto& im : images) {
        FpVec row(size_t(idx), 0);
        for (auto& [k, c] : im)
            row[size_t(coords[k])] = c;
        rows.push_back(std::move(row));
    }
    // kernel of the transpose action: vectors x with sum x_i row_i = 0
    FpMat mt(size_t(idx), FpVec(dom.size(), 0));
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < idx; ++j)
            mt[size_t(j)][i] = rows[i][size_t(j)];
    FpMat ker = fp_kernel(mt, int(dom.size()), M.p());
    std::vector<ModEl> out;
    for (auto& v : ker) {
        ModEl e;
        for (size_t i = 0; i < dom.size(); ++i)
            if (v[i])
                e[dom[i]] = v[i];
        out.push_back(std::move(e));
    }
    return out;
}

std::shared_ptr<Comodule> trivial_comodule(const DualSteenrod& A)
{
    return std::make_shared<Comodule>(A, "trivial");
}

std::shared_ptr<Comodule> trivial_comodule_on(const DualSteenrod& A, int degree)
{
    auto M = std::make_shared<Comodule>(A, "trivial_on_" + std::to_string(degree));
    MixedEl co;
    co[MixedMono{MilnorMono{}, ModMono::gen(0)}] = 1;
    M->add_generator("x", degree, degree % 2 != 0 && A.p() != 2, std::move(co));
    return M;
}

std::shared_ptr<Comodule> tower_comodule(const DualSteenrod& A, int stage, bool plain_letters)
{
    int p = A.p();
    auto M = std::make_shared<Comodule>(
        A, std::string("tower") + (plain_letters ? "_plain" : "") + "_stage" + std::to_string(stage));
    for (int r = 1; r <= stage; ++r) {
        long long pr = 1;
        for (int k = 0; k < r; ++k)
            pr *= p;
        int deg = int(2 * (pr - 1));
        MixedEl co;
        long long pj = 1;
        for (int j = 0; j <= r; ++j) {
            MilnorMono letter;
            if (j > 0)
                letter = MilnorMono::zeta_gen(j, p == 2 && !plain_letters ? 2 : 1);
            ModMono mm = (r - j) ? ModMono::gen(r - j - 1, int(pj)) : ModMono{};
            co[MixedMono{letter, mm}] = 1;
            pj *= p;
        }
        M->add_generator("z" + std::to_string(r), deg, false, std::move(co));
    }
    return M;
}

std::shared_ptr<Comodule> bp_comodule(const DualSteenrod& A, int t_max)
{
    int p = A.p();
    auto M = std::make_shared<Comodule>(A, "bp");
    for (int n = 1; n <= t_max; ++n) {
        long long pn = 1;
        for (int k = 0; k < n; ++k)
            pn *= p;
        int deg = int(2 * (pn - 1));
        MixedEl co;
        long long pj = 1;
        for (int j = 0; j <= n; ++j) {
            MilnorMono letter;
            if (j > 0)
                letter = MilnorMono::zeta_gen(j, p == 2 ? 2 : 1);
            ModMono mm = (n - j) ? ModMono::gen(n - j - 1, int(pj)) : ModMono{};
            co[MixedMono{letter, mm}] = 1;
            pj *= p;
        }
        M->add_generator("t" + std::to_string(n), deg, false, std::move(co));
    }
    return M;
}

std::shared_ptr<Comodule> steenrod_self_comodule(const DualSteenrod& A, int cutoff)
{
    int p = A.p();
    auto M = std::make_shared<Comodule>(A, "steenrod_self");
    std::vector<std::pair<int, int>> gens;  // (kind 0 = zeta, index) in degree order
    for (int n = 1; A.zeta_degree(n) <= cutoff; ++n)
        gens.push_back({0, n});
    if (p != 2)
        for (int s = 0; A.taubar_degree(s) <= cutoff; ++s)
            gens.push_back({1, s});
    // keep a fixed order: zetas then taus; record index mapping for coactions
    auto mono_to_mod = [&](const MilnorMono& m) {
        ModMono mm;
        mm.e.assign(gens.size(), 0);
        for (size_t k = 0; k < gens.size(); ++k) {
            auto [kind, idx] = gens[k];
            if (kind == 0)
                mm.e[k] = idx <= int(m.zeta.size()) ? m.zeta[size_t(idx) - 1] : 0;
            else
                mm.e[k] = (m.tau >> idx) & 1;
        }
        mm.trim();
        return mm;
    };
    for (size_t k = 0; k < gens.size(); ++k) {
        auto [kind, idx] = gens[k];
        MilnorMono gm = kind == 0 ? MilnorMono::zeta_gen(idx) : MilnorMono::taubar_gen(idx);
        MixedEl co;
        for (auto& [key, c] : A.psi(gm))
            co[MixedMono{key.first, mono_to_mod(key.second)}] = c;
        M->add_generator(A.format(gm), A.degree(gm), kind == 1, std::move(co));
    }
    return M;
}

}  // namespace bpalg
