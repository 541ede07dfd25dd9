#include "bpalg/free_einfty.hpp"

#include <stdexcept>

namespace bpalg {

namespace {

GeneratorReport report_from_entries(int p, std::vector<std::pair<std::string, int>> base,
                                    int cutoff, std::vector<GenEntry> entries)
{
    GeneratorReport rep;
    rep.field = CoefficientField::prime_field(p);
    rep.base = std::move(base);
    rep.cutoff = cutoff;
    rep.entries = std::move(entries);
    for (auto& e : rep.entries)
        rep.algebra_gens.push_back(
            {e.name, e.degree, e.exterior ? GenKind::Exterior : GenKind::Polynomial});
    FreeCommAlgebra alg(rep.algebra_gens, rep.field);
    rep.series = poincare_series(alg, cutoff);
    return rep;
}

}  // namespace

GeneratorReport px_generators(int p, const std::vector<std::pair<std::string, int>>& base,
                              int cutoff)
{
    std::vector<GenEntry> entries;
    for (auto& [name, d] : base) {
        if (d < 1)
            throw std::invalid_argument("base class must be connective: " + name);
        if (d > cutoff)
            continue;
        for (auto& I : enumerate_admissible(p, d, cutoff - d)) {
            GenEntry e;
            e.I = I;
            e.base = name;
            e.degree = d + degree_shift(I, p);
            e.exterior = p != 2 && e.degree % 2 != 0;
            e.name = format_sequence(I, name);
            entries.push_back(std::move(e));
        }
    }
    return report_from_entries(p, base, cutoff, std::move(entries));
}

GeneratorReport rational_px(Parity parity, int degree, int cutoff)
{
    if (degree < 1)
        throw std::invalid_argument("base class must be connective");
    if ((parity == Parity::Odd) != (degree % 2 != 0))
        throw std::invalid_argument("parity does not match the degree");
    GeneratorReport rep;
    rep.field = CoefficientField::rationals();
    rep.base = {{"x", degree}};
    rep.cutoff = cutoff;
    if (degree <= cutoff) {
        GenEntry e;
        e.base = "x";
        e.degree = degree;
        e.exterior = parity == Parity::Odd;
        e.name = "(x)";
        rep.entries.push_back(e);
    }
    for (auto& e : rep.entries)
        rep.algebra_gens.push_back(
            {e.name, e.degree, e.exterior ? GenKind::Exterior : GenKind::Polynomial});
    FreeCommAlgebra alg(rep.algebra_gens, rep.field);
    rep.series = poincare_series(alg, cutoff);
    return rep;
}

GeneratorReport cone_generators(int p, int attach_degree, int cutoff)
{
    if (p != 2 && attach_degree % 2 == 0)
        throw std::invalid_argument("odd primes need an odd attaching sphere");
    if (attach_degree < (p == 2 ? 0 : 1))
        throw std::invalid_argument("attaching degree out of range");
    int u_degree = attach_degree + 1;
    std::vector<GenEntry> entries;
    if (u_degree <= cutoff) {
        for (auto& I : enumerate_admissible(p, u_degree, cutoff - u_degree)) {
            GenEntry e;
            e.I = I;
            e.base = "u";
            e.degree = u_degree + degree_shift(I, p);
            e.exterior = p != 2 && e.degree % 2 != 0;
            e.name = format_sequence(I, "u");
            entries.push_back(std::move(e));
        }
    }
    return report_from_entries(p, {{"u", u_degree}}, cutoff, std::move(entries));
}

PoincareSeries rational_cone_series(Parity attach_parity, int n, const PoincareSeries& base,
                                    int cutoff)
{
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    PoincareSeries factor = attach_parity == Parity::Odd
                                ? PoincareSeries::geometric(2 * n, cutoff)
                                : PoincareSeries::exterior(2 * n + 1, cutoff);
    return base.truncate(cutoff).mul(factor);
}

std::vector<std::pair<std::string, bool>> induced_map_images_trivial(const GeneratorReport& rep)
{
    // Q^I is natural: a trivial map on the x_j sends every Q^I x_j to
    // Q^I(0) = 0.
    std::vector<std::pair<std::string, bool>> images;
    for (auto& e : rep.entries)
        images.push_back({e.name, true});
    return images;
}

}  // namespace bpalg
