#include "bpalg/dga.hpp"

#include <stdexcept>

namespace bpalg {

Dga::Dga(FreeCommAlgebra alg, const std::map<std::string, Element>& d_of_gen, int max_degree)
    : alg_(std::move(alg)), max_degree_(max_degree)
{
    if (!alg_.field().is_fp())
        throw std::invalid_argument("dga needs F_p coefficients");
    alg_.basis_by_degree(max_degree_);  // materialize towers
    d_internal_.resize(alg_.internal_gens().size());
    for (size_t i = 0; i < alg_.internal_gens().size(); ++i) {
        const auto& g = alg_.internal_gens()[i];
        auto it = d_of_gen.find(g.name);
        if (it != d_of_gen.end())
            d_internal_[i] = it->second;
    }
}

Dga::El Dga::d(const El& x) const
{
    Element out;
    for (auto& [m, c] : x.terms) {
        // derivation across the canonical factor order; the image of each
        // factor is multiplied on the right, so it also moves past the odd
        // content of the suffix
        int odd_total = 0;
        for (auto& [gi, e] : m.e)
            if (alg_.internal_gens()[size_t(gi)].degree % 2)
                odd_total += e;
        int odd_before = 0;
        for (auto& [gi, e] : m.e) {
            const auto& g = alg_.internal_gens()[size_t(gi)];
            bool g_odd = g.degree % 2;
            const Element& dg = d_internal_[size_t(gi)];
            if (!dg.is_zero()) {
                Monomial rest = m;
                for (auto& q : rest.e)
                    if (q.first == gi)
                        q.second -= 1;
                std::erase_if(rest.e, [](auto& q) { return q.second == 0; });
                rest.degree = m.degree - g.degree;
                int odd_suffix = odd_total - odd_before - (g_odd ? e : 0) + (g_odd ? e - 1 : 0);
                int dg_parity = (g.degree + 1) % 2;
                int sign = ((odd_before + dg_parity * odd_suffix) % 2) ? -1 : 1;
                Rational coef = c * e * sign;
                Element term = alg_.mul(alg_.monomial(rest, coef), dg);
                out = alg_.add(out, term);
            }
            if (g_odd)
                odd_before += e;
        }
    }
    return out;
}

Dga::El Dga::bar(const El& x) const
{
    auto deg = x.degree();
    int d = deg ? *deg : 0;
    return alg_.scale(x, (1 + d) % 2 ? -1 : 1);
}

FpVec Dga::coords(const El& x, const std::vector<Monomial>& basis) const
{
    std::map<Monomial, int> index;
    for (size_t i = 0; i < basis.size(); ++i)
        index[basis[i]] = int(i);
    FpVec v(basis.size(), 0);
    for (auto& [m, c] : x.terms) {
        auto it = index.find(m);
        if (it == index.end())
            throw std::logic_error("dga coords: monomial outside basis");
        v[size_t(it->second)] = int(boost::multiprecision::numerator(c));
    }
    return v;
}

std::optional<Dga::El> Dga::solve_boundary(const El& w)
{
    if (w.is_zero())
        return El{};
    auto degw = w.degree();
    if (!degw || *degw < 1 || *degw > max_degree_)
        return std::nullopt;
    auto layers = alg_.basis_by_degree(max_degree_);
    const auto& dom = layers[size_t(*degw) - 1];
    const auto& cod = layers[size_t(*degw)];
    std::map<Monomial, int> index;
    for (size_t i = 0; i < cod.size(); ++i)
        index[cod[i]] = int(i);
    FpMat mat(cod.size(), FpVec(dom.size(), 0));
    for (size_t j = 0; j < dom.size(); ++j) {
        Element img = d(alg_.monomial(dom[j]));
        for (auto& [m, c] : img.terms)
            mat[size_t(index.at(m))][j] = int(boost::multiprecision::numerator(c));
    }
    auto sol = fp_solve(mat, coords(w, cod), int(dom.size()), p());
    if (!sol)
        return std::nullopt;
    El u;
    for (size_t j = 0; j < dom.size(); ++j)
        if ((*sol)[j])
            u = alg_.add(u, alg_.monomial(dom[j], (*sol)[j]));
    return u;
}

std::vector<Dga::El> Dga::cocycle_space(int degree)
{
    std::vector<El> out;
    if (degree < 0 || degree > max_degree_)
        return out;
    auto layers = alg_.basis_by_degree(max_degree_);
    const auto& dom = layers[size_t(degree)];
    if (degree + 1 > max_degree_) {
        for (auto& m : dom)
            out.push_back(alg_.monomial(m));
        return out;
    }
    const auto& cod = layers[size_t(degree) + 1];
    std::map<Monomial, int> index;
    for (size_t i = 0; i < cod.size(); ++i)
        index[cod[i]] = int(i);
    FpMat mat(cod.size(), FpVec(dom.size(), 0));
    for (size_t j = 0; j < dom.size(); ++j) {
        Element img = d(alg_.monomial(dom[j]));
        for (auto& [m, c] : img.terms)
            mat[size_t(index.at(m))][j] = int(boost::multiprecision::numerator(c));
    }
    for (auto& v : fp_kernel(mat, int(dom.size()), p())) {
        El e;
        for (size_t j = 0; j < dom.size(); ++j)
            if (v[j])
                e = alg_.add(e, alg_.monomial(dom[j], v[j]));
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<Dga::El> Dga::boundary_space(int degree)
{
    std::vector<El> out;
    if (degree < 1 || degree > max_degree_)
        return out;
    auto layers = alg_.basis_by_degree(max_degree_);
    for (auto& m : layers[size_t(degree) - 1]) {
        Element img = d(alg_.monomial(m));
        if (!img.is_zero())
            out.push_back(std::move(img));
    }
    return out;
}

bool Dga::in_span(const El& target, const std::vector<El>& gens) const
{
    std::map<Monomial, int> index;
    for (auto& g : gens)
        for (auto& [m, c] : g.terms)
            index.emplace(m, 0);
    for (auto& [m, c] : target.terms)
        index.emplace(m, 0);
    int n = 0;
    for (auto& [m, v] : index)
        v = n++;
    if (n == 0)
        return true;
    FpSpace span(p(), n);
    for (auto& g : gens) {
        FpVec row(size_t(n), 0);
        for (auto& [m, c] : g.terms)
            row[size_t(index[m])] = int(boost::multiprecision::numerator(c));
        span.add(std::move(row));
    }
    FpVec t(size_t(n), 0);
    for (auto& [m, c] : target.terms)
        t[size_t(index[m])] = int(boost::multiprecision::numerator(c));
    return span.contains(t);
}

bool massey_contains(Dga& dga, const MasseyOutcome<Dga>& mt, const Dga::El& x, const Dga::El& z,
                     const Dga::El& target)
{
    if (!mt.defined)
        return false;
    Dga::El diff = dga.add(target, dga.scale(mt.representative, -1));
    if (diff.is_zero())
        return true;
    auto deg = diff.degree();
    if (!deg)
        return false;
    std::vector<Dga::El> gens = dga.boundary_space(*deg);
    auto dx = x.degree(), dz = z.degree();
    if (dx)
        for (auto& c : dga.cocycle_space(*deg - *dx)) {
            Dga::El e = dga.mul(x, c);
            if (!e.is_zero())
                gens.push_back(std::move(e));
        }
    if (dz)
        for (auto& c : dga.cocycle_space(*deg - *dz)) {
            Dga::El e = dga.mul(c, z);
            if (!e.is_zero())
                gens.push_back(std::move(e));
        }
    return dga.in_span(diff, gens);
}

Dga borromean_dga(int p)
{
    std::vector<GeneratorSpec> gens = {{"x", 1, GenKind::Exterior},
                                       {"y", 1, GenKind::Exterior},
                                       {"z", 1, GenKind::Exterior},
                                       {"s", 1, GenKind::Exterior},
                                       {"t", 1, GenKind::Exterior}};
    FreeCommAlgebra alg(gens, CoefficientField::prime_field(p));
    Element xy = alg.mul(alg.gen("x"), alg.gen("y"));
    Element yz = alg.mul(alg.gen("y"), alg.gen("z"));
    std::map<std::string, Element> d;
    d["s"] = xy;
    d["t"] = yz;
    return Dga(std::move(alg), d, 5);
}

}  // namespace bpalg
