#ifndef BPALG_VERIFY_HPP
#define BPALG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace bpalg {

struct VerifyResult {
    std::string suite;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// The per-prime invariant suites behind `verify-all`: coalgebra axioms,
// conjugate consistency, the tower recursion with its Toda replay, the
// distinguished differential displays, d^2 = 0 sweeps, the Kunneth closure,
// generator enumeration against the exhaustive oracle, power-operation
// arithmetic, rational bookkeeping, the generator solve, Massey products and
// the seeded random property checks.
std::vector<VerifyResult> run_verification(int p, int max_degree, uint64_t seed);

}  // namespace bpalg

#endif
