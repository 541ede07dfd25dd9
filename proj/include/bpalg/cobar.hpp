#ifndef BPALG_COBAR_HPP
#define BPALG_COBAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "bpalg/comodule.hpp"
#include "bpalg/linalg.hpp"
#include "bpalg/massey.hpp"

namespace bpalg {

// Word a_1|...|a_s (x) m with positive-degree letters.
struct CobarTerm {
    std::vector<MilnorMono> letters;
    ModMono m;
    auto operator<=>(const CobarTerm& o) const = default;
};
using CobarEl = std::map<CobarTerm, int>;

class CobarComplex {
  public:
    using El = CobarEl;

    explicit CobarComplex(const Comodule& M) : M_(&M) {}

    const Comodule& comodule() const { return *M_; }
    const DualSteenrod& steenrod() const { return M_->steenrod(); }
    int p() const { return M_->p(); }

    int filtration(const El& x) const;       // homological degree s
    int internal_degree(const El& x) const;  // total internal degree t
    int term_degree(const CobarTerm& w) const;

    El add(const El& a, const El& b) const;
    El scale(const El& a, int c) const;
    bool is_zero(const El& a) const { return a.empty(); }
    static El unit_class()
    {
        El e;
        e[CobarTerm{}] = 1;
        return e;
    }
    static El from_mixed(const MixedEl& x);
    static MixedEl to_mixed(const El& x);  // filtration <= 1 only
    static El module_class(const ModEl& x);

    // Cobar differential. Convention, fixed so that the tower displays hold
    // verbatim:
    //   d(a_1|...|a_s (x) m) = sum_{i=1..s} (-1)^i a_1|..|psi~(a_i)|..|a_s (x) m
    //                          + (-1)^{s+1} a_1|...|a_s (x) rho~(m)
    // with psi~, rho~ the reduced coproduct/coaction.
    El d(const CobarTerm& w) const;
    El d(const El& x) const;
    bool is_cocycle(const El& x) const { return d(x).empty(); }

    // Fast exact check that d(d(w)) = 0, working on interned ids throughout.
    bool d_squared_zero(const CobarTerm& w) const;

    // Product of the comodule-algebra cobar dga: the left comodule factor is
    // spread over the right word by the iterated coaction.
    El mul(const El& a, const El& b) const;

    // Sign rule for Massey products; the dga grading is the filtration.
    El bar(const El& x) const { return scale(x, (filtration(x) % 2 == 0) ? -1 : 1); }

    std::vector<CobarTerm> basis(int s, int t) const;

    // Solve d(u) = w; nullopt if w is not a coboundary.
    std::optional<El> solve_boundary(const El& w) const;

    FpVec coords(const El& x, const std::vector<CobarTerm>& basis) const;

  private:
    const Comodule* M_;
};

struct Ext1Report {
    int from = 0, to = -1;
    // per internal degree: basis of representatives
    std::map<int, std::vector<ModEl>> ext0;
    std::map<int, std::vector<CobarEl>> ext1;
    int ext0_dim(int t) const
    {
        auto it = ext0.find(t);
        return it == ext0.end() ? 0 : int(it->second.size());
    }
    int ext1_dim(int t) const
    {
        auto it = ext1.find(t);
        return it == ext1.end() ? 0 : int(it->second.size());
    }
};
Ext1Report ext_low_lines(const Comodule& M, int from, int to);

// Is the class of x nonzero in Ext^{1,t}? (x must be a filtration-1 cocycle.)
bool nonzero_in_ext1(const CobarComplex& cx, const CobarEl& x);

// Cobar classes attached to the cell tower. alpha class at stage r (a cocycle
// over the stage r-1, hence any later, comodule):
//   p odd: sum_{1<=s<=r} zeta_s (x) z_{r-s}^{p^s}
//   p = 2: sum_{1<=s<=r} zeta_s^2 (x) z_{r-s}^{2^s}
// u class at stage n:
//   p odd: sum_{0<=s<=n} taubar_s (x) z_{n-s}^{p^s}
//   p = 2: sum_{1<=j<=n+1} zeta_j (x) z_{n+1-j}^{2^{j-1}}
// with z_0 = 1 throughout.
CobarEl tower_alpha_class(const DualSteenrod& A, int r);
CobarEl tower_u_class(const DualSteenrod& A, int n);
// h_0 is represented by [taubar_0] at odd p and [zeta_1] at p=2.
CobarEl h0_class(const DualSteenrod& A);

std::vector<CobarEl> cocycle_space(const CobarComplex& cx, int s, int t);
std::vector<CobarEl> boundary_space(const CobarComplex& cx, int s, int t);
// Membership of target in representative + [X] H + H [Z] + coboundaries.
bool massey_contains(const CobarComplex& cx, const MasseyOutcome<CobarComplex>& mt,
                     const CobarEl& X, const CobarEl& Z, const CobarEl& target);

struct TodaShadowReport {
    bool ok = true;
    std::vector<std::string> steps;
    std::string failure;
};
// Replay of the Toda-bracket identification of the u class: h0 * alpha is a
// coboundary via the stated correcting element, alpha becomes d(-z_n) after
// the cell is attached, and the u class lies in the Massey product
// <h0, [alpha], 1> up to the stated indeterminacy. Checks filtration 1 only.
TodaShadowReport toda_shadow_check(const DualSteenrod& A, int n);

}  // namespace bpalg

#endif
