#include "bpalg/graded_algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bpalg {

FreeCommAlgebra::FreeCommAlgebra(std::vector<GeneratorSpec> gens, CoefficientField field)
    : field_(field), specs_(std::move(gens))
{
    if (field_.is_fp() && !is_supported_prime(field_.p))
        throw std::invalid_argument("unsupported prime");
    std::set<std::string> seen;
    for (auto& g : specs_) {
        if (!seen.insert(g.name).second)
            throw std::invalid_argument("duplicate generator name: " + g.name);
        if (g.degree < 0)
            throw std::invalid_argument("negative generator degree: " + g.name);
        bool odd_grading = !field_.is_fp() || field_.p != 2;
        if (odd_grading && g.kind == GenKind::Exterior && g.degree % 2 == 0)
            throw std::invalid_argument("exterior generator of even degree: " + g.name);
        if (odd_grading && g.kind != GenKind::Exterior && g.degree % 2 != 0)
            throw std::invalid_argument("odd-degree generator must be exterior: " + g.name);
        if (!field_.is_fp() && (g.kind == GenKind::Truncated || g.kind == GenKind::DividedPower))
            throw std::invalid_argument("truncated/divided-power generators need F_p: " + g.name);
    }
    tower_.resize(specs_.size());
    for (size_t i = 0; i < specs_.size(); ++i) {
        const auto& g = specs_[i];
        if (g.kind == GenKind::DividedPower) {
            ensure_tower(int(i), 0);
        } else {
            internal_.push_back({g.name, g.degree, g.kind, int(i), -1});
            tower_[i].push_back(int(internal_.size()) - 1);
        }
    }
}

void FreeCommAlgebra::ensure_tower(int base, int level)
{
    auto& tw = tower_[size_t(base)];
    const auto& g = specs_[size_t(base)];
    while (int(tw.size()) <= level) {
        int r = int(tw.size());
        long long pr = 1;
        for (int k = 0; k < r; ++k)
            pr *= field_.p;
        InternalGen ig;
        ig.name = r == 0 ? g.name : ("g" + std::to_string(pr) + "(" + g.name + ")");
        ig.degree = int(pr * g.degree);
        ig.kind = GenKind::Truncated;
        ig.base = base;
        ig.level = r;
        internal_.push_back(ig);
        tw.push_back(int(internal_.size()) - 1);
    }
}

int FreeCommAlgebra::internal_index(int base, int level)
{
    if (specs_[size_t(base)].kind == GenKind::DividedPower)
        ensure_tower(base, level);
    return tower_[size_t(base)][size_t(level)];
}

int FreeCommAlgebra::gen_index(const std::string& name) const
{
    for (size_t i = 0; i < specs_.size(); ++i)
        if (specs_[i].name == name)
            return int(i);
    throw std::invalid_argument("unknown generator: " + name);
}

int FreeCommAlgebra::exponent_bound(const InternalGen& g) const
{
    switch (g.kind) {
        case GenKind::Exterior:
            return 1;
        case GenKind::Truncated:
            return field_.p - 1;
        default:
            return 0;
    }
}

Rational FreeCommAlgebra::normalize_coeff(Rational c) const
{
    if (!field_.is_fp())
        return c;
    int p = field_.p;
    BigInt num = boost::multiprecision::numerator(c);
    BigInt den = boost::multiprecision::denominator(c);
    if (den % p == 0)
        throw std::domain_error("coefficient denominator divisible by p");
    int n = int(num % p);
    if (n < 0)
        n += p;
    int d = int(den % p);
    if (d < 0)
        d += p;
    return Rational(fp_mul(n, fp_inv(d, p), p));
}

Element FreeCommAlgebra::unit() const
{
    Element e;
    e.terms[Monomial{}] = 1;
    return e;
}

Element FreeCommAlgebra::monomial(Monomial m, Rational c) const
{
    Element e;
    c = normalize_coeff(c);
    if (c != 0)
        e.terms[std::move(m)] = c;
    return e;
}

Element FreeCommAlgebra::gen(int base)
{
    int idx = internal_index(base, 0);
    Monomial m;
    m.degree = internal_[size_t(idx)].degree;
    m.e = {{idx, 1}};
    return monomial(m);
}

Element FreeCommAlgebra::gen(const std::string& name) { return gen(gen_index(name)); }

DividedPowerForm divided_power_normal_form(long long r, int p)
{
    if (r < 1)
        throw std::invalid_argument("divided power index must be >= 1");
    DividedPowerForm f;
    int unit_den = 1;
    long long rest = r;
    while (rest > 0) {
        int digit = int(rest % p);
        f.digits.push_back(digit);
        unit_den = fp_mul(unit_den, factorial_mod_p(digit, p), p);
        rest /= p;
    }
    f.unit = fp_inv(unit_den, p);
    return f;
}

Element FreeCommAlgebra::divided_power(int base, long long r)
{
    if (specs_[size_t(base)].kind != GenKind::DividedPower)
        throw std::invalid_argument("divided_power needs a divided-power generator");
    if (r == 0)
        return unit();
    DividedPowerForm f = divided_power_normal_form(r, field_.p);
    Monomial m;
    for (size_t lvl = 0; lvl < f.digits.size(); ++lvl) {
        if (f.digits[lvl] == 0)
            continue;
        int idx = internal_index(base, int(lvl));
        m.e.emplace_back(idx, f.digits[lvl]);
        m.degree += internal_[size_t(idx)].degree * f.digits[lvl];
    }
    std::sort(m.e.begin(), m.e.end());
    return monomial(m, f.unit);
}

// Koszul sign and merged monomial; zero is signalled by sign 0.
std::pair<int, Monomial> FreeCommAlgebra::mul_monomials(const Monomial& a, const Monomial& b) const
{
    // Sign: odd-degree generators of b must move left past the odd-degree
    // generators of a with larger index.
    long long inversions = 0;
    {
        std::vector<long long> odd_above(a.e.size() + 1, 0);
        for (size_t k = a.e.size(); k-- > 0;)
            odd_above[k] = odd_above[k + 1] +
                           ((internal_[size_t(a.e[k].first)].degree % 2) ? a.e[k].second : 0);
        size_t ai = 0;
        for (auto& [gb, xb] : b.e) {
            while (ai < a.e.size() && a.e[ai].first <= gb)
                ++ai;
            if (internal_[size_t(gb)].degree % 2)
                inversions += odd_above[ai] * xb;
        }
    }
    Monomial m;
    m.degree = a.degree + b.degree;
    size_t i = 0, j = 0;
    while (i < a.e.size() || j < b.e.size()) {
        if (j == b.e.size() || (i < a.e.size() && a.e[i].first < b.e[j].first)) {
            m.e.push_back(a.e[i++]);
        } else if (i == a.e.size() || b.e[j].first < a.e[i].first) {
            m.e.push_back(b.e[j++]);
        } else {
            m.e.emplace_back(a.e[i].first, a.e[i].second + b.e[j].second);
            ++i;
            ++j;
        }
    }
    for (auto& [g, x] : m.e) {
        int bound = exponent_bound(internal_[size_t(g)]);
        if (bound && x > bound)
            return {0, {}};
    }
    return {inversions % 2 ? -1 : 1, m};
}

Element FreeCommAlgebra::add(const Element& a, const Element& b) const
{
    Element r = a;
    for (auto& [m, c] : b.terms) {
        Rational v = normalize_coeff(r.terms.count(m) ? r.terms[m] + c : c);
        if (v == 0)
            r.terms.erase(m);
        else
            r.terms[m] = v;
    }
    return r;
}

Element FreeCommAlgebra::sub(const Element& a, const Element& b) const
{
    return add(a, scale(b, -1));
}

Element FreeCommAlgebra::scale(const Element& a, const Rational& c) const
{
    Element r;
    Rational cc = normalize_coeff(c);
    if (cc == 0)
        return r;
    for (auto& [m, v] : a.terms) {
        Rational w = normalize_coeff(v * cc);
        if (w != 0)
            r.terms[m] = w;
    }
    return r;
}

Element FreeCommAlgebra::mul(const Element& a, const Element& b) const
{
    Element r;
    for (auto& [ma, ca] : a.terms) {
        for (auto& [mb, cb] : b.terms) {
            auto [sign, m] = mul_monomials(ma, mb);
            if (sign == 0)
                continue;
            Rational v = normalize_coeff(ca * cb * sign);
            auto it = r.terms.find(m);
            if (it == r.terms.end()) {
                if (v != 0)
                    r.terms.emplace(m, v);
            } else {
                it->second = normalize_coeff(it->second + v);
                if (it->second == 0)
                    r.terms.erase(it);
            }
        }
    }
    return r;
}

Element FreeCommAlgebra::pow(const Element& a, int n) const
{
    Element r = unit();
    Element x = a;
    while (n) {
        if (n & 1)
            r = mul(r, x);
        n >>= 1;
        if (n)
            x = mul(x, x);
    }
    return r;
}

std::vector<std::vector<Monomial>> FreeCommAlgebra::basis_by_degree(int max_degree)
{
    for (size_t i = 0; i < specs_.size(); ++i) {
        const auto& g = specs_[i];
        if (g.degree == 0)
            throw std::domain_error("degree-0 generator makes counts infinite: " + g.name);
        if (g.kind == GenKind::DividedPower) {
            int lvl = 0;
            long long d = g.degree;
            while (d * field_.p <= max_degree) {
                d *= field_.p;
                ++lvl;
            }
            ensure_tower(int(i), lvl);
        }
    }
    std::vector<std::vector<Monomial>> out(size_t(max_degree) + 1);
    Monomial cur;
    // Depth-first over internal generators in index order.
    auto rec = [&](auto&& self, size_t gi) -> void {
        if (cur.degree <= max_degree && gi == internal_.size()) {
            out[size_t(cur.degree)].push_back(cur);
            return;
        }
        if (gi == internal_.size())
            return;
        const auto& g = internal_[gi];
        int bound = exponent_bound(g);
        int max_e = g.degree > 0 ? (max_degree - cur.degree) / g.degree : 0;
        if (bound)
            max_e = std::min(max_e, bound);
        self(self, gi + 1);
        for (int x = 1; x <= max_e; ++x) {
            cur.e.emplace_back(int(gi), x);
            cur.degree += g.degree * x;
            std::sort(cur.e.begin(), cur.e.end());
            self(self, gi + 1);
            cur.e.erase(std::find(cur.e.begin(), cur.e.end(), std::make_pair(int(gi), x)));
            cur.degree -= g.degree * x;
        }
    };
    rec(rec, 0);
    return out;
}

FreeCommAlgebra make_algebra(std::vector<GeneratorSpec> gens, CoefficientField field)
{
    return FreeCommAlgebra(std::move(gens), field);
}

PoincareSeries poincare_series(FreeCommAlgebra& algebra, int cutoff)
{
    PoincareSeries s = PoincareSeries::one(cutoff);
    const auto& field = algebra.field();
    for (const auto& g : algebra.generators()) {
        if (g.degree == 0)
            throw std::domain_error("degree-0 generator makes counts infinite: " + g.name);
        switch (g.kind) {
            case GenKind::Polynomial:
                s = s.mul(PoincareSeries::geometric(g.degree, cutoff));
                break;
            case GenKind::Exterior:
                s = s.mul(PoincareSeries::exterior(g.degree, cutoff));
                break;
            case GenKind::Truncated:
                s = s.mul(PoincareSeries::truncated(g.degree, field.p, cutoff));
                break;
            case GenKind::DividedPower:
                for (long long d = g.degree; d <= cutoff; d *= field.p)
                    s = s.mul(PoincareSeries::truncated(int(d), field.p, cutoff));
                break;
        }
    }
    return s;
}

}  // namespace bpalg
