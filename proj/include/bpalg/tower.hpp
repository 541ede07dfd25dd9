#ifndef BPALG_TOWER_HPP
#define BPALG_TOWER_HPP

#include <memory>
#include <string>
#include <vector>

#include "bpalg/cobar.hpp"
#include "bpalg/dyer_lashof.hpp"
#include "bpalg/poincare.hpp"

namespace bpalg {

struct StageChecks {
    int stage = 0;
    bool alpha_cocycle = false;
    bool u_cocycle = false;
    bool toda_ok = false;
    bool recursion_ok = false;
    std::string detail;
    bool all() const { return alpha_cocycle && u_cocycle && toda_ok && recursion_ok; }
};

// Stage-n record of the cell tower: generators z_r with their coactions, the
// attaching classes alpha_{[r]} (r <= n+1) and the classes u_r (r <= n) as
// filtration-1 cobar elements, and the rational homotopy series.
struct TowerState {
    int p = 2;
    int stage = 0;
    int cutoff = 0;
    std::vector<int> z_degrees;
    std::vector<CobarEl> alpha;  // alpha[r-1] represents alpha_{[r]}
    std::vector<CobarEl> u;      // u[n-1] represents u_n
    PoincareSeries rational;
    std::shared_ptr<Comodule> comodule;
    std::vector<StageChecks> checks;
};

TowerState tower_init(const DualSteenrod& A, int cutoff);

// One stage of the recursion: adjoin z_n, form the u_n class, replay the Toda
// bracket shadow, apply bQ^{p^n} (Q^{2^{n+1}-1} at p=2) and require the result
// to be the alpha_{[n+1]} pattern on the nose. Throws on a recursion mismatch,
// with a term-level diff in the message.
TowerState tower_step(const DualSteenrod& A, TowerState state);

// Series of Q[u_n : n >= 1], |u_n| = 2(p^n - 1).
PoincareSeries torsion_free_target_series(int p, int cutoff);

struct PowerOpCondition {
    std::string name;
    std::string detail;
    bool pass = false;
};
struct PowerOpReport {
    int p = 0;
    int r = 0;
    std::vector<PowerOpCondition> conditions;
    bool all_pass() const
    {
        for (auto& c : conditions)
            if (!c.pass)
                return false;
        return true;
    }
};
// The definedness/order/degree arithmetic behind the power operations used to
// attach each cell.
PowerOpReport power_op_arithmetic(int p, int r);

struct BpComparisonReport {
    bool ok = true;
    std::vector<std::string> lines;
    std::string failure;
};
// Comparison with the polynomial comodule of BP homology: the z_n solve into
// the dual Steenrod algebra returns zeta_n (zeta_n^2 solves the squared p=2
// variant), the operation chain generates the higher generators from the
// first, and the image of each u_n is a nonzero class on the Ext 1-line.
BpComparisonReport bp_comparison(const DualSteenrod& A, const TowerState& state, int cutoff);

}  // namespace bpalg

#endif
