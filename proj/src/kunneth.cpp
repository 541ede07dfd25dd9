#include "bpalg/kunneth.hpp"

#include <map>
#include <stdexcept>

#include "bpalg/linalg.hpp"

namespace bpalg {

SSPage build_e2(int p, int attach_degree, int cutoff)
{
    return build_e2(p, attach_degree, cutoff, PoincareSeries::one(cutoff));
}

SSPage build_e2(int p, int attach_degree, int cutoff, PoincareSeries base)
{
    SSPage page;
    page.p = p;
    page.attach_degree = attach_degree;
    page.cutoff = cutoff;
    page.page = 2;
    page.base = base.truncate(cutoff);
    // generators of the free algebra on the attaching class, one bracket
    // class each in homological degree 1; keep everything entering degrees
    // <= cutoff+1 so in-window homology is exact
    GeneratorReport gens = px_generators(p, {{"x", attach_degree}}, cutoff + 1);
    for (auto& e : gens.entries) {
        SSGen g;
        g.I = e.I;
        g.class_degree = e.degree;
        g.total = e.degree + 1;
        g.name = "[" + e.name + "]";
        if (p != 2 && e.exterior)
            page.towers.push_back(std::move(g));
        else
            page.exterior.push_back(std::move(g));
    }
    return page;
}

SSPage apply_d_pminus1(const SSPage& page)
{
    if (page.p == 2)
        return page;  // trivial differentials from E^2 onwards
    SSPage out = page;
    out.page = page.p;
    out.pairing.clear();
    std::vector<bool> used(out.exterior.size(), false);
    for (size_t ti = 0; ti < out.towers.size(); ++ti) {
        const SSGen& g = out.towers[ti];
        // target class bQ^{(|Q^I x|+1)/2} Q^I x
        int k = (g.class_degree + 1) / 2;
        DLSequence target;
        target.ops.push_back({1, k});
        target.ops.insert(target.ops.end(), g.I.ops.begin(), g.I.ops.end());
        int partner_total = page.p * g.total - 1;
        SSPairing pr;
        pr.tower = int(ti);
        if (partner_total <= page.cutoff + 1) {
            int found = -1;
            for (size_t ei = 0; ei < out.exterior.size(); ++ei)
                if (out.exterior[ei].I == target) {
                    found = int(ei);
                    break;
                }
            if (found < 0)
                throw std::logic_error("d^{p-1} target class not found in the exterior part: " +
                                       format_sequence(target, "x"));
            if (used[size_t(found)])
                throw std::logic_error("d^{p-1} target class paired twice");
            used[size_t(found)] = true;
            pr.partner = found;
        }
        out.pairing.push_back(pr);
    }
    return out;
}

TowerPairComplex::TowerPairComplex(int p, int tower_total, int partner_total, int cutoff)
    : p_(p), partner_total_(partner_total)
{
    for (long long d = tower_total; d <= cutoff + 1; d *= p)
        bdeg_.push_back(d);
    has_e_ = partner_total >= 0 && partner_total <= cutoff + 1;
    by_degree_.resize(size_t(cutoff) + 2);
    Mono cur;
    cur.b.assign(bdeg_.size(), 0);
    auto emit = [&](auto&& self, size_t k, long long deg) -> void {
        if (k == bdeg_.size()) {
            for (int e = 0; e <= (has_e_ ? 1 : 0); ++e) {
                long long d = deg + e * (long long)partner_total_;
                if (d <= cutoff + 1) {
                    Mono m = cur;
                    m.e = e;
                    by_degree_[size_t(d)].push_back(std::move(m));
                }
            }
            return;
        }
        for (int x = 0; x < p_ && deg + x * bdeg_[k] <= cutoff + 1; ++x) {
            cur.b[k] = x;
            self(self, k + 1, deg + x * bdeg_[k]);
        }
        cur.b[k] = 0;
    };
    emit(emit, 0, 0);
}

int TowerPairComplex::degree(const Mono& m) const
{
    long long d = m.e ? partner_total_ : 0;
    for (size_t k = 0; k < m.b.size(); ++k)
        d += m.b[k] * bdeg_[k];
    return int(d);
}

TowerPairComplex::El TowerPairComplex::d(const Mono& m) const
{
    El img;
    if (m.e == 1 || !has_e_)
        return img;  // e is a cycle and e^2 = 0
    for (size_t r = 1; r < m.b.size(); ++r) {
        if (!m.b[r])
            continue;
        Mono t = m;
        t.e = 1;
        t.b[r] -= 1;
        bool dead = false;
        for (size_t q = 1; q < r; ++q) {
            t.b[q] += p_ - 1;
            if (t.b[q] >= p_) {
                dead = true;
                break;
            }
        }
        if (dead)
            continue;
        int& slot = img[t];
        slot = fp_add(slot, m.b[r] % p_, p_);
        if (!slot)
            img.erase(t);
    }
    return img;
}

TowerPairComplex::El TowerPairComplex::d(const El& x) const
{
    El img;
    for (auto& [m, c] : x)
        for (auto& [t, v] : d(m)) {
            int& slot = img[t];
            slot = fp_add(slot, fp_mul(v, c, p_), p_);
            if (!slot)
                img.erase(t);
        }
    return img;
}

std::pair<int, TowerPairComplex::Mono> TowerPairComplex::mul_mono(const Mono& a,
                                                                  const Mono& b) const
{
    if (a.e && b.e)
        return {0, {}};
    Mono m;
    m.e = a.e + b.e;
    m.b.assign(std::max(a.b.size(), b.b.size()), 0);
    for (size_t k = 0; k < m.b.size(); ++k) {
        int x = (k < a.b.size() ? a.b[k] : 0) + (k < b.b.size() ? b.b[k] : 0);
        if (x >= p_)
            return {0, {}};  // truncated tower generators
        m.b[k] = x;
    }
    // b generators are even and e moving past even content picks no sign
    return {1, m};
}

TowerPairComplex::El TowerPairComplex::mul(const El& a, const El& b) const
{
    El r;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b) {
            auto [sg, m] = mul_mono(ma, mb);
            if (!sg)
                continue;
            int v = fp_norm((long long)sg * ca * cb, p_);
            if (!v)
                continue;
            int& slot = r[m];
            slot = fp_add(slot, v, p_);
            if (!slot)
                r.erase(m);
        }
    return r;
}

PoincareSeries pair_homology_series(int p, int tower_total, int partner_total, int cutoff)
{
    TowerPairComplex cxp(p, tower_total, partner_total, cutoff);
    const auto& by_degree = cxp.by_degree();
    PoincareSeries s(cutoff);
    for (int d = 0; d <= cutoff; ++d) {
        auto& dom = by_degree[size_t(d)];
        // rank of d: C_d -> C_{d-1} and of d: C_{d+1} -> C_d
        auto rank_from = [&](int src) -> int {
            if (src < 1 || src > cutoff + 1)
                return 0;
            auto& rows_src = by_degree[size_t(src)];
            auto& cod = by_degree[size_t(src) - 1];
            std::map<TowerPairComplex::Mono, int> index;
            for (size_t i = 0; i < cod.size(); ++i)
                index[cod[i]] = int(i);
            FpMat rows;
            for (auto& m : rows_src) {
                FpVec row(cod.size(), 0);
                bool nz = false;
                for (auto& [t, c] : cxp.d(m)) {
                    row[size_t(index.at(t))] = c;
                    nz = true;
                }
                if (nz)
                    rows.push_back(std::move(row));
            }
            return fp_rank(rows, int(cod.size()), p);
        };
        s.c[size_t(d)] = (long long)dom.size() - rank_from(d) - rank_from(d + 1);
    }
    return s;
}

PoincareSeries einfty_series(const SSPage& page)
{
    if (!page.terminal())
        throw std::invalid_argument("einfty_series needs the terminal page");
    int N = page.cutoff;
    PoincareSeries s = page.base.truncate(N);
    if (page.p == 2) {
        for (auto& g : page.exterior)
            if (g.total <= N)
                s = s.mul(PoincareSeries::exterior(g.total, N));
        return s;
    }
    std::vector<bool> paired(page.exterior.size(), false);
    for (auto& pr : page.pairing) {
        const SSGen& g = page.towers[size_t(pr.tower)];
        int partner_total = pr.partner >= 0 ? page.exterior[size_t(pr.partner)].total : -1;
        if (pr.partner >= 0)
            paired[size_t(pr.partner)] = true;
        if (g.total > N && (partner_total < 0 || partner_total > N))
            continue;
        s = s.mul(pair_homology_series(page.p, g.total, partner_total, N));
    }
    for (size_t ei = 0; ei < page.exterior.size(); ++ei)
        if (!paired[ei] && page.exterior[ei].total <= N)
            s = s.mul(PoincareSeries::exterior(page.exterior[ei].total, N));
    return s;
}

KunnethCompareReport compare_with_cone_answer(int p, int attach_degree, int cutoff)
{
    KunnethCompareReport rep;
    SSPage e2 = build_e2(p, attach_degree, cutoff);
    SSPage terminal = apply_d_pminus1(e2);
    rep.ss_series = einfty_series(terminal);
    rep.cone_series = cone_generators(p, attach_degree, cutoff).series;
    rep.first_mismatch = rep.ss_series.first_mismatch(rep.cone_series);
    rep.equal = rep.first_mismatch < 0;
    for (auto& pr : terminal.pairing) {
        const SSGen& g = terminal.towers[size_t(pr.tower)];
        std::string partner = pr.partner >= 0 ? terminal.exterior[size_t(pr.partner)].name
                                              : "(beyond cutoff)";
        rep.pairing_info.push_back(g.name + " -> " + partner);
    }
    // The multiplicative extension resolving p-th powers: Q^k[Q^I x] with
    // 2k = |Q^I x|+1 (k = |Q^I x|+1 at p=2).
    for (auto& g : (p == 2 ? terminal.exterior : terminal.towers)) {
        int k = p == 2 ? g.class_degree + 1 : (g.class_degree + 1) / 2;
        DLSequence ext;
        ext.ops.push_back({0, k});
        ext.ops.insert(ext.ops.end(), g.I.ops.begin(), g.I.ops.end());
        rep.pairing_info.push_back(g.name + "^" + std::to_string(p) + " = [" +
                                   format_sequence(ext, "x") + "]");
    }
    return rep;
}

PoincareSeries rational_kunneth_series(Parity attach_parity, int n, const PoincareSeries& base,
                                       int cutoff)
{
    // (a) odd sphere: E^2 = Gamma_Q(w), |w| = 2n, one basis class gamma_r per
    // degree 2nr; (b) even sphere: E^2 = Lambda(z), |z| = 2n+1. Both collapse:
    // the generators sit in homological degree 1.
    PoincareSeries factor(cutoff);
    if (attach_parity == Parity::Odd) {
        for (int r = 0; 2 * n * r <= cutoff; ++r)
            factor.c[size_t(2 * n * r)] = 1;
    } else {
        factor.c[0] = 1;
        if (2 * n + 1 <= cutoff)
            factor.c[size_t(2 * n + 1)] = 1;
    }
    return base.truncate(cutoff).mul(factor);
}

}  // namespace bpalg
