#ifndef BPALG_STEENROD_HPP
#define BPALG_STEENROD_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bpalg/fpmath.hpp"

namespace bpalg {

// Monomial in the generators of the dual Steenrod algebra. For p odd the
// algebra is polynomial on zeta_k tensor exterior on taubar_s; at p=2 the tau
// mask is unused. The same shape also serves for the classical xi/tau
// presentation inside the consistency check.
struct MilnorMono {
    uint32_t tau = 0;                // bitmask: bit s = taubar_s present
    std::vector<uint16_t> zeta;      // zeta[k-1] = exponent of zeta_k

    void trim()
    {
        while (!zeta.empty() && zeta.back() == 0)
            zeta.pop_back();
    }
    bool is_unit() const { return tau == 0 && zeta.empty(); }
    bool odd_parity() const { return __builtin_popcount(tau) % 2 != 0; }
    auto operator<=>(const MilnorMono& o) const = default;

    static MilnorMono zeta_gen(int n, int exp = 1)
    {
        MilnorMono m;
        if (exp > 0) {
            m.zeta.assign(size_t(n), 0);
            m.zeta[size_t(n) - 1] = uint16_t(exp);
        }
        return m;
    }
    static MilnorMono taubar_gen(int s)
    {
        MilnorMono m;
        m.tau = 1u << s;
        return m;
    }
};

using SteenrodEl = std::map<MilnorMono, int>;
using Tensor2 = std::map<std::pair<MilnorMono, MilnorMono>, int>;
using Tensor3 = std::map<std::array<MilnorMono, 3>, int>;

// Context for one prime and one choice of generator presentation.
class DualSteenrod {
  public:
    enum class Basis { Conjugate, Classical };

    explicit DualSteenrod(int p, Basis basis = Basis::Conjugate);

    int p() const { return p_; }
    Basis basis() const { return basis_; }

    int zeta_degree(int n) const;     // 2(p^n-1), resp. 2^n-1 at p=2
    int taubar_degree(int s) const;   // 2p^s-1 (p odd)
    int degree(const MilnorMono& m) const;

    // Product with Koszul sign; zero (repeated exterior factor) -> sign 0.
    std::pair<int, MilnorMono> mul_mono(const MilnorMono& a, const MilnorMono& b) const;
    SteenrodEl mul(const SteenrodEl& a, const SteenrodEl& b) const;
    SteenrodEl add(const SteenrodEl& a, const SteenrodEl& b) const;
    SteenrodEl scale(const SteenrodEl& a, int c) const;
    SteenrodEl frobenius(const SteenrodEl& a, int times) const;  // x -> x^{p^times}
    static SteenrodEl one()
    {
        SteenrodEl e;
        e[MilnorMono{}] = 1;
        return e;
    }

    // Full coproduct, multiplicatively extended from the generator formulas;
    // cached per monomial.
    const Tensor2& psi(const MilnorMono& m) const;
    Tensor2 psi(const SteenrodEl& x) const;
    // psi minus the two unit terms 1(x)m and m(x)1-part: both tensor factors
    // of every term have positive degree. Cached.
    const Tensor2& psi_reduced(const MilnorMono& m) const;

    Tensor2 tensor_mul(const Tensor2& a, const Tensor2& b) const;
    static Tensor2 tensor(const SteenrodEl& a, const SteenrodEl& b);

    // Interned ids for monomials, with flat id-indexed views of the reduced
    // coproduct; the hot path of the d^2 sweep.
    uint32_t letter_id(const MilnorMono& m) const { return intern(m); }
    struct IRed {
        std::vector<std::array<uint32_t, 2>> keys;
        std::vector<int> coefs;
    };
    const IRed& psi_reduced_ids(uint32_t id) const;

    // All basis monomials of the given degree / of degree <= cutoff.
    std::vector<MilnorMono> basis(int degree) const;
    std::vector<MilnorMono> basis_up_to(int cutoff) const;

    bool coassociative_on(const MilnorMono& m) const;
    bool counital_on(const MilnorMono& m) const;

    std::string format(const MilnorMono& m) const;
    std::string format(const SteenrodEl& x) const;

  private:
    Tensor2 psi_gen(int kind, int index) const;  // kind 0 = zeta, 1 = taubar
    uint32_t intern(const MilnorMono& m) const;
    // flat interned view of psi, for the hot coassociativity loop
    struct IPsi {
        std::vector<std::array<uint32_t, 2>> keys;
        std::vector<int> coefs;
    };
    const IPsi& ipsi(uint32_t id) const;

    int p_;
    Basis basis_;
    mutable std::map<MilnorMono, Tensor2> psi_cache_;
    mutable std::map<MilnorMono, Tensor2> psi_reduced_cache_;
    mutable std::map<MilnorMono, uint32_t> intern_ids_;
    mutable std::vector<const MilnorMono*> by_id_;
    mutable std::vector<IPsi> ipsi_cache_;
    mutable std::vector<bool> ipsi_ready_;
    mutable std::vector<IRed> ired_cache_;
    mutable std::vector<bool> ired_ready_;
};

// Cross-validation of the conjugate-generator coproducts against the
// classical presentation plus the antipode recursion.
struct ConsistencyReport {
    bool ok = true;
    int zeta_checked = 0;
    int taubar_checked = 0;
    std::string first_disagreement;
};
ConsistencyReport conjugate_consistency_check(int p, int cutoff);

// Antipode images in the classical presentation (used by the check and
// exposed for tests): chi(xi_n) resp. chi(tau_n) as classical-basis elements.
SteenrodEl classical_chi_xi(const DualSteenrod& classical, int n);
SteenrodEl classical_chi_tau(const DualSteenrod& classical, int n);

// The unique solutions s_1..s_n_max of
//   psi(s_n) = sum_{0<=j<=n} zeta_j (x) s_{n-j}^{p^j},   s_0 = 1,
// solved degreewise by linear algebra; uniqueness holds because there are no
// positive-degree comodule primitives. With squared_letters (p=2 only) the
// letters are zeta_j^2 and the exponents 2^j, matching the coaction of the
// polynomial generators of the BP comodule. Throws when a solve fails or is
// non-unique.
std::vector<SteenrodEl> solve_generator_sequence(const DualSteenrod& A, int n_max,
                                                 bool squared_letters = false);

}  // namespace bpalg

#endif
