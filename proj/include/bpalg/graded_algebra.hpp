#ifndef BPALG_GRADED_ALGEBRA_HPP
#define BPALG_GRADED_ALGEBRA_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bpalg/fpmath.hpp"
#include "bpalg/poincare.hpp"

namespace bpalg {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct CoefficientField {
    enum class Kind { PrimeField, Rationals };
    Kind kind = Kind::PrimeField;
    int p = 2;

    static CoefficientField prime_field(int p) { return {Kind::PrimeField, p}; }
    static CoefficientField rationals() { return {Kind::Rationals, 0}; }
    bool is_fp() const { return kind == Kind::PrimeField; }
    bool operator==(const CoefficientField& o) const = default;
};

enum class GenKind { Polynomial, Exterior, Truncated, DividedPower };

struct GeneratorSpec {
    std::string name;
    int degree = 0;
    GenKind kind = GenKind::Polynomial;
};

// Monomials are kept in graded-lexicographic normal form: compare by degree,
// then by the sorted (generator, exponent) list.
struct Monomial {
    int degree = 0;
    std::vector<std::pair<int, int>> e;  // (internal generator index, exponent > 0)

    bool is_unit() const { return e.empty(); }
    int exponent(int gen) const
    {
        for (auto& [g, x] : e)
            if (g == gen)
                return x;
        return 0;
    }
    auto operator<=>(const Monomial& o) const = default;
};

struct Element {
    std::map<Monomial, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    // Homogeneous degree if all terms agree, otherwise nullopt.
    std::optional<int> degree() const
    {
        std::optional<int> d;
        for (auto& [m, c] : terms) {
            if (d && *d != m.degree)
                return std::nullopt;
            d = m.degree;
        }
        return d;
    }
    bool operator==(const Element& o) const { return terms == o.terms; }
};

class FreeCommAlgebra {
  public:
    // Internal presentation: a divided-power generator expands to its tower of
    // p-truncated generators gamma_{p^r}; every other kind is one internal
    // generator. Tower levels are materialized on demand.
    struct InternalGen {
        std::string name;
        int degree = 0;
        GenKind kind = GenKind::Polynomial;  // never DividedPower
        int base = -1;                       // index into specs
        int level = -1;                      // tower level for divided-power bases
    };

    FreeCommAlgebra(std::vector<GeneratorSpec> gens, CoefficientField field);

    const CoefficientField& field() const { return field_; }
    const std::vector<GeneratorSpec>& generators() const { return specs_; }
    const std::vector<InternalGen>& internal_gens() const { return internal_; }
    int internal_degree(int idx) const { return internal_[size_t(idx)].degree; }

    // Index of the level-r tower generator gamma_{p^r} of a divided-power
    // generator (materializing levels as needed); for other kinds level 0
    // returns the generator itself.
    int internal_index(int base, int level = 0);
    // Internal generator holding a non-divided-power user generator.
    int gen_index(const std::string& name) const;

    // Highest exponent allowed on an internal generator (0 = unbounded).
    int exponent_bound(const InternalGen& g) const;

    Element zero() const { return {}; }
    Element unit() const;
    Element monomial(Monomial m, Rational c = 1) const;
    // x_{base} as an element; for divided-power generators gamma_1.
    Element gen(int base);
    Element gen(const std::string& name);

    // gamma_r of a divided-power generator, resolved through the tower normal
    // form; r = 1 is the generator itself.
    Element divided_power(int base, long long r);

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element scale(const Element& a, const Rational& c) const;
    Element mul(const Element& a, const Element& b) const;
    Element pow(const Element& a, int n) const;

    // All basis monomials of each degree 0..max_degree (exhaustive).
    std::vector<std::vector<Monomial>> basis_by_degree(int max_degree);

    Rational normalize_coeff(Rational c) const;

  private:
    std::pair<int, Monomial> mul_monomials(const Monomial& a, const Monomial& b) const;
    void ensure_tower(int base, int level);

    CoefficientField field_;
    std::vector<GeneratorSpec> specs_;
    std::vector<InternalGen> internal_;
    std::vector<std::vector<int>> tower_;  // per user generator: internal indices by level
};

FreeCommAlgebra make_algebra(std::vector<GeneratorSpec> gens, CoefficientField field);

// Unit c_r and the monomial gamma_1^{r_0} gamma_p^{r_1} ... determined by the
// p-adic digits of r, with gamma_r = c_r * monomial. The unit is
// (prod_i r_i!)^{-1} mod p.
struct DividedPowerForm {
    int unit = 1;
    std::vector<int> digits;  // base-p digits of r, least significant first
};
DividedPowerForm divided_power_normal_form(long long r, int p);

// Exact degreewise dimension counts of the algebra's monomial basis.
PoincareSeries poincare_series(FreeCommAlgebra& algebra, int cutoff);

}  // namespace bpalg

#endif
