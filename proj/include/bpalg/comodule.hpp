#ifndef BPALG_COMODULE_HPP
#define BPALG_COMODULE_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bpalg/steenrod.hpp"

namespace bpalg {

// Monomial in the generators of a comodule algebra.
struct ModMono {
    std::vector<uint16_t> e;

    void trim()
    {
        while (!e.empty() && e.back() == 0)
            e.pop_back();
    }
    bool is_unit() const { return e.empty(); }
    auto operator<=>(const ModMono& o) const = default;

    static ModMono gen(int idx, int exp = 1)
    {
        ModMono m;
        if (exp > 0) {
            m.e.assign(size_t(idx) + 1, 0);
            m.e[size_t(idx)] = uint16_t(exp);
        }
        return m;
    }
};

using ModEl = std::map<ModMono, int>;

// Term of A(p)_* (x) M.
struct MixedMono {
    MilnorMono a;
    ModMono m;
    auto operator<=>(const MixedMono& o) const = default;
};
using MixedEl = std::map<MixedMono, int>;

// A graded-commutative algebra in comodules over the dual Steenrod algebra:
// generators carry a coaction, extended multiplicatively.
class Comodule {
  public:
    struct Gen {
        std::string name;
        int degree = 0;
        bool exterior = false;
        MixedEl coaction;
    };

    Comodule(const DualSteenrod& steenrod, std::string name);

    const DualSteenrod& steenrod() const { return *steenrod_; }
    int p() const { return steenrod_->p(); }
    const std::string& name() const { return name_; }
    const std::vector<Gen>& gens() const { return gens_; }

    int add_generator(const std::string& gname, int degree, bool exterior, MixedEl coaction);

    int degree(const ModMono& m) const;
    bool odd_parity(const ModMono& m) const;
    std::pair<int, ModMono> mul_mono(const ModMono& a, const ModMono& b) const;

    ModEl mul(const ModEl& a, const ModEl& b) const;
    ModEl add(const ModEl& a, const ModEl& b) const;
    ModEl scale(const ModEl& a, int c) const;
    static ModEl one()
    {
        ModEl e;
        e[ModMono{}] = 1;
        return e;
    }

    MixedEl mixed_mul(const MixedEl& a, const MixedEl& b) const;
    MixedEl mixed_add(const MixedEl& a, const MixedEl& b) const;
    MixedEl mixed_scale(const MixedEl& a, int c) const;
    int mixed_degree(const MixedMono& x) const;

    // Coaction M -> A (x) M, multiplicative extension of the generator table;
    // cached per monomial.
    const MixedEl& coaction(const ModMono& m) const;
    // Terms of the coaction whose Steenrod factor has positive degree. Cached.
    const MixedEl& coaction_reduced(const ModMono& m) const;

    std::vector<ModMono> basis(int degree) const;
    std::vector<ModMono> basis_up_to(int cutoff) const;

    // Interned ids with flat id-indexed views of the reduced coaction; the
    // hot path of the d^2 sweep. Letter ids refer to the Steenrod interner.
    uint32_t mono_id(const ModMono& m) const;
    struct ICo {
        std::vector<std::array<uint32_t, 2>> keys;  // (letter id, monomial id)
        std::vector<int> coefs;
    };
    const ICo& coaction_reduced_ids(uint32_t id) const;

    bool coaction_degree_consistent() const;
    bool counital_on(const ModMono& m) const;
    bool coassociative_on(const ModMono& m) const;

    std::string format(const ModMono& m) const;
    std::string format(const ModEl& x) const;
    std::string format_mixed(const MixedEl& x) const;

  private:
    const DualSteenrod* steenrod_;
    std::string name_;
    std::vector<Gen> gens_;
    mutable std::map<ModMono, MixedEl> coaction_cache_;
    mutable std::map<ModMono, MixedEl> coaction_reduced_cache_;
    mutable std::map<ModMono, uint32_t> mono_ids_;
    mutable std::vector<const ModMono*> mono_by_id_;
    mutable std::vector<ICo> ico_cache_;
    mutable std::vector<bool> ico_ready_;
};

// Kernel of the reduced coaction in one degree: a basis of the comodule
// primitives there.
std::vector<ModEl> primitives_in_degree(const Comodule& M, int d);

// The trivial comodule F_p (no generators).
std::shared_ptr<Comodule> trivial_comodule(const DualSteenrod& A);
// F_p{x_d} with trivial coaction.
std::shared_ptr<Comodule> trivial_comodule_on(const DualSteenrod& A, int degree);

// Stage-n comodule of the cell tower: z_1..z_n with |z_r| = 2(p^r-1) and
// psi(z_r) = sum_j zeta_j (x) z_{r-j}^{p^j} for p odd. At p=2 the letters are
// squared, psi(z_r) = sum_j zeta_j^2 (x) z_{r-j}^{2^j}, which is the only
// degree-consistent choice; `plain_letters` selects the (degree-inconsistent)
// unsquared variant for diagnostic comparison.
std::shared_ptr<Comodule> tower_comodule(const DualSteenrod& A, int stage,
                                         bool plain_letters = false);

// F_p[t_1..t_max] with psi(t_n) = sum zeta_j (x) t_{n-j}^{p^j} (p odd) resp.
// sum zeta_j^2 (x) t_{n-j}^{2^j} (p=2).
std::shared_ptr<Comodule> bp_comodule(const DualSteenrod& A, int t_max);

// The dual Steenrod algebra as a comodule over itself, generators truncated
// to the given degree cutoff.
std::shared_ptr<Comodule> steenrod_self_comodule(const DualSteenrod& A, int cutoff);

}  // namespace bpalg

#endif
