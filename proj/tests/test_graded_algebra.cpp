#include "doctest.h"

#include <random>

#include "bpalg/graded_algebra.hpp"

using namespace bpalg;

namespace {

Element random_homogeneous(FreeCommAlgebra& alg, std::mt19937& rng, int max_degree)
{
    auto basis = alg.basis_by_degree(max_degree);
    std::uniform_int_distribution<int> pick_deg(1, max_degree);
    int d = pick_deg(rng);
    for (int tries = 0; tries < 64 && basis[size_t(d)].empty(); ++tries)
        d = pick_deg(rng);
    Element e;
    if (basis[size_t(d)].empty())
        return e;
    std::uniform_int_distribution<size_t> pick(0, basis[size_t(d)].size() - 1);
    int p = alg.field().is_fp() ? alg.field().p : 7;
    std::uniform_int_distribution<int> coef(1, p - 1);
    for (int k = 0; k < 3; ++k)
        e = alg.add(e, alg.monomial(basis[size_t(d)][pick(rng)], coef(rng)));
    return e;
}

}  // namespace

TEST_CASE("make_algebra basic shapes")
{
    // one exterior generator over Q: basis {1, x}
    FreeCommAlgebra lam({{"x", 3, GenKind::Exterior}}, CoefficientField::rationals());
    auto basis = lam.basis_by_degree(10);
    int total = 0;
    for (auto& layer : basis)
        total += int(layer.size());
    CHECK(total == 2);

    // empty generator list: the unit algebra
    FreeCommAlgebra unit({}, CoefficientField::prime_field(3));
    auto ub = unit.basis_by_degree(5);
    CHECK(ub[0].size() == 1);
    for (int d = 1; d <= 5; ++d)
        CHECK(ub[size_t(d)].empty());

    // divided-power generator of degree 2 at p=3 expands to gamma_1, gamma_3,
    // gamma_9, ... each with cube zero
    FreeCommAlgebra gamma({{"x", 2, GenKind::DividedPower}}, CoefficientField::prime_field(3));
    gamma.basis_by_degree(18);
    REQUIRE(gamma.internal_gens().size() >= 3);
    CHECK(gamma.internal_gens()[0].degree == 2);
    CHECK(gamma.internal_gens()[1].degree == 6);
    CHECK(gamma.internal_gens()[2].degree == 18);
    Element g3 = gamma.divided_power(0, 3);
    CHECK(gamma.mul(gamma.mul(g3, g3), g3).is_zero());

    CHECK_THROWS(make_algebra({{"x", 2, GenKind::Exterior}}, CoefficientField::prime_field(3)));
    CHECK_THROWS(make_algebra({{"x", 1, GenKind::Polynomial}, {"x", 2, GenKind::Polynomial}},
                              CoefficientField::prime_field(2)));
    CHECK_THROWS(make_algebra({{"x", 2, GenKind::DividedPower}}, CoefficientField::rationals()));
}

TEST_CASE("multiply: divided powers and the binomial rule")
{
    // gamma_1 gamma_2 = C(3,1) gamma_3 = 0 at p=3
    {
        FreeCommAlgebra alg({{"x", 2, GenKind::DividedPower}}, CoefficientField::prime_field(3));
        Element r = alg.mul(alg.divided_power(0, 1), alg.divided_power(0, 2));
        CHECK(r.is_zero());
        CHECK(binom_mod_p(3, 1, 3) == 0);
    }
    // exterior square
    {
        FreeCommAlgebra alg({{"x", 3, GenKind::Exterior}}, CoefficientField::prime_field(3));
        CHECK(alg.mul(alg.gen("x"), alg.gen("x")).is_zero());
    }
    // gamma_2 gamma_2 = C(4,2) gamma_4; the oracle is Lucas
    for (int p : {2, 3, 5}) {
        FreeCommAlgebra alg({{"x", 2, GenKind::DividedPower}}, CoefficientField::prime_field(p));
        Element r = alg.mul(alg.divided_power(0, 2), alg.divided_power(0, 2));
        int expect = binom_mod_p(4, 2, p);
        CHECK(expect == (p == 5 ? 1 : 0));
        Element want = alg.scale(alg.divided_power(0, 4), expect);
        CHECK(r == want);
    }
}

TEST_CASE("divided_power_normal_form")
{
    for (int p : {2, 3, 5}) {
        auto f1 = divided_power_normal_form(1, p);
        CHECK(f1.unit == 1);
        CHECK(f1.digits == std::vector<int>{1});
        auto fp = divided_power_normal_form(p, p);
        CHECK(fp.unit == 1);
        REQUIRE(fp.digits.size() == 2);
        CHECK(fp.digits[0] == 0);
        CHECK(fp.digits[1] == 1);
        // r = p+1: the unit comes from expanding gamma_1 gamma_p
        auto fp1 = divided_power_normal_form(p + 1, p);
        FreeCommAlgebra alg({{"x", 2, GenKind::DividedPower}}, CoefficientField::prime_field(p));
        Element prod = alg.mul(alg.divided_power(0, 1), alg.divided_power(0, p));
        Element gp1 = alg.divided_power(0, p + 1);
        CHECK(prod == alg.scale(gp1, fp1.unit == 0 ? 0 : fp_inv(fp1.unit, p)));
        CHECK(fp1.unit == 1);
    }
}

TEST_CASE("divided power normal form round-trips through multiply")
{
    for (int p : {2, 3, 5}) {
        FreeCommAlgebra alg({{"x", 2, GenKind::DividedPower}}, CoefficientField::prime_field(p));
        for (long long r = 1; r <= 20; ++r) {
            auto f = divided_power_normal_form(r, p);
            Element prod = alg.unit();
            long long pw = 1;
            for (size_t lvl = 0; lvl < f.digits.size(); ++lvl) {
                for (int k = 0; k < f.digits[lvl]; ++k)
                    prod = alg.mul(prod, alg.divided_power(0, pw));
                pw *= p;
            }
            // c_r^{-1} gamma_r equals the product of the tower factors
            Element lhs = alg.scale(alg.divided_power(0, r), fp_inv(f.unit, p));
            CHECK(lhs == prod);
        }
    }
}

TEST_CASE("gamma_r(x)^p = 0")
{
    for (int p : {2, 3, 5}) {
        FreeCommAlgebra alg({{"x", 2, GenKind::DividedPower}}, CoefficientField::prime_field(p));
        for (long long r = 1; r <= 20; ++r) {
            Element g = alg.divided_power(0, r);
            CHECK(alg.pow(g, p).is_zero());
        }
    }
}

TEST_CASE("poincare series closed forms and enumeration oracle")
{
    // Q[x_{2n}]
    {
        FreeCommAlgebra alg({{"x", 4, GenKind::Polynomial}}, CoefficientField::rationals());
        auto s = poincare_series(alg, 12);
        for (int d = 0; d <= 12; ++d)
            CHECK(s.at(d) == (d % 4 == 0 ? 1 : 0));
    }
    // Lambda(x_d)
    {
        FreeCommAlgebra alg({{"x", 5, GenKind::Exterior}}, CoefficientField::rationals());
        auto s = poincare_series(alg, 9);
        CHECK(s.at(0) == 1);
        CHECK(s.at(5) == 1);
        CHECK(s.at(3) == 0);
        CHECK(s.at(9) == 0);
    }
    // Gamma_{F_2}(x_2) up to 8; the oracle is exhaustive monomial enumeration
    {
        FreeCommAlgebra alg({{"x", 2, GenKind::DividedPower}}, CoefficientField::prime_field(2));
        auto s = poincare_series(alg, 8);
        std::vector<long long> expect{1, 0, 1, 0, 1, 0, 1, 0, 1};
        CHECK(s.c == expect);
        auto basis = alg.basis_by_degree(8);
        for (int d = 0; d <= 8; ++d)
            CHECK(s.at(d) == (long long)basis[size_t(d)].size());
    }
    // degree-0 generator is an error
    {
        FreeCommAlgebra alg({{"x", 0, GenKind::Polynomial}}, CoefficientField::rationals());
        CHECK_THROWS(poincare_series(alg, 4));
    }
}

TEST_CASE("poincare series of a tensor product is the product of the series")
{
    FreeCommAlgebra a({{"x", 2, GenKind::Polynomial}, {"y", 3, GenKind::Exterior}},
                      CoefficientField::prime_field(3));
    FreeCommAlgebra b({{"u", 4, GenKind::Truncated}, {"v", 5, GenKind::Exterior}},
                      CoefficientField::prime_field(3));
    FreeCommAlgebra ab({{"x", 2, GenKind::Polynomial},
                        {"y", 3, GenKind::Exterior},
                        {"u", 4, GenKind::Truncated},
                        {"v", 5, GenKind::Exterior}},
                       CoefficientField::prime_field(3));
    auto sa = poincare_series(a, 20), sb = poincare_series(b, 20), sab = poincare_series(ab, 20);
    CHECK(sab == sa.mul(sb));
}

TEST_CASE("associativity and graded commutativity on random homogeneous elements")
{
    std::mt19937 rng(0);
    for (int p : {2, 3, 5, 7}) {
        FreeCommAlgebra alg({{"a", 2, GenKind::Polynomial},
                             {"b", 3, GenKind::Exterior},
                             {"c", 5, GenKind::Exterior},
                             {"d", 4, GenKind::Truncated}},
                            CoefficientField::prime_field(p));
        for (int trial = 0; trial < 25; ++trial) {
            Element x = random_homogeneous(alg, rng, 13);
            Element y = random_homogeneous(alg, rng, 13);
            Element z = random_homogeneous(alg, rng, 13);
            CHECK(alg.mul(alg.mul(x, y), z) == alg.mul(x, alg.mul(y, z)));
            auto dx = x.degree(), dy = y.degree();
            if (dx && dy) {
                int sign = (*dx % 2) && (*dy % 2) ? -1 : 1;
                CHECK(alg.mul(x, y) == alg.scale(alg.mul(y, x), sign));
            }
        }
    }
}
