#ifndef BPALG_DYER_LASHOF_HPP
#define BPALG_DYER_LASHOF_HPP

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "bpalg/cobar.hpp"
#include "bpalg/comodule.hpp"

namespace bpalg {

// One operation: Q^i for eps = 0, the composite bQ^i for eps = 1 (p odd).
struct DLOp {
    int eps = 0;
    int i = 0;
    auto operator<=>(const DLOp& o) const = default;
};

// Composite of operations, leftmost outermost: ops[0] is applied last.
struct DLSequence {
    std::vector<DLOp> ops;
    bool empty() const { return ops.empty(); }
    auto operator<=>(const DLSequence& o) const = default;
};

constexpr long long kExcessInfinity = std::numeric_limits<long long>::max();

// exc(empty) = infinity. p=2: i_1 - (i_2+...+i_l); p odd:
// 2 i_1 - eps_1 - sum_{j>=2} (2 i_j (p-1) - eps_j).
long long excess(const DLSequence& I, int p);
// p=2: i_j <= 2 i_{j+1}; p odd: i_j <= p i_{j+1} - eps_{j+1}.
bool is_admissible(const DLSequence& I, int p);
// Total degree added when applied to a class: sum 2 i_j (p-1) - eps_j, resp.
// sum i_j at p=2.
int degree_shift(const DLSequence& I, int p);

// All admissible sequences with degree shift <= max_shift satisfying the
// excess condition exc(I) + eps_1 > threshold (p odd) resp. exc(I) > threshold
// (p=2); the empty sequence always qualifies.
std::vector<DLSequence> enumerate_admissible(int p, int threshold, int max_shift);
// General-predicate variant; the predicate receives the sequence and its excess.
std::vector<DLSequence> enumerate_admissible(
    int p, int max_shift, const std::function<bool(const DLSequence&, long long)>& keep);

std::string format_sequence(const DLSequence& I, const std::string& base);
// Parses "bQ^9 Q^3" style strings (leftmost outermost).
DLSequence parse_sequence(const std::string& text, int p);

// Evaluation needs a rule outside the supported set.
struct NotSupportedError : std::runtime_error {
    explicit NotSupportedError(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation of operations on elements of A(p)_* (x) M by the rule set:
//   R1 instability:   Q^k x = 0 for 2k < |x| (k < |x| at p=2), bQ^k x = 0 for 2k < |x|
//   R2 top power:     Q^k x = x^p for 2k = |x| (k = |x| at p=2), bQ^k x = 0 there
//   R3 generators:    Q^{p^s} tb_s = tb_{s+1}, bQ^{p^s} tb_s = z_{s+1},
//                     Q^{p^s} z_s = z_{s+1} (s >= 1); at p=2 Q^{2^s} z_s = z_{s+1}
//   R4 p-th powers:   Q^{pk}(y^p) = (Q^k y)^p, Q^j(y^p) = 0 for p !| j,
//                     bQ^j(y^p) = 0
//   R5 Cartan:        Q^k(xy) = sum Q^i x Q^{k-i} y across products and the
//                     tensor, with the Bockstein expansion
//                     bQ^k(xy) = sum bQ^i x Q^j y + (-1)^{|x|} Q^i x bQ^j y.
// Anything else raises NotSupportedError.
class DLContext {
  public:
    DLContext(const DualSteenrod& A, const Comodule* M) : A_(&A), M_(M) {}

    int p() const { return A_->p(); }

    MixedEl evaluate(DLOp op, const MixedMono& x) const;
    MixedEl evaluate(DLOp op, const MixedEl& x) const;
    MixedEl evaluate(const DLSequence& I, const MixedEl& x) const;

    // Termwise Cartan evaluation on a filtration-1 cobar element.
    CobarEl apply_to_ext1_class(DLOp op, const CobarEl& w) const;

  private:
    int mixed_degree(const MixedMono& x) const;
    MixedEl mixed_mul(const MixedEl& a, const MixedEl& b) const;
    // x^p, or zero when an exterior factor dies.
    MixedEl frobenius_el(const MixedEl& x) const;
    MixedEl cartan(DLOp op, const MixedMono& f, const MixedMono& g) const;

    const DualSteenrod* A_;
    const Comodule* M_;  // may be null for pure Steenrod evaluation
};

}  // namespace bpalg

#endif
