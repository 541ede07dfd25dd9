#ifndef BPALG_DGA_HPP
#define BPALG_DGA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bpalg/graded_algebra.hpp"
#include "bpalg/massey.hpp"

namespace bpalg {

// A finite-type dga over F_p presented on a free graded-commutative algebra
// with a differential given on generators and extended as a derivation,
// d(xy) = d(x) y + (-1)^{|x|} x d(y). Used as the synthetic test bed for
// Massey products.
class Dga {
  public:
    using El = Element;

    Dga(FreeCommAlgebra alg, const std::map<std::string, Element>& d_of_gen, int max_degree);

    int p() const { return alg_.field().p; }
    FreeCommAlgebra& algebra() { return alg_; }

    El add(const El& a, const El& b) const { return alg_.add(a, b); }
    El scale(const El& a, int c) const { return alg_.scale(a, c); }
    El mul(const El& a, const El& b) const { return alg_.mul(a, b); }
    bool is_zero(const El& a) const { return a.is_zero(); }

    El d(const El& x) const;
    bool is_cocycle(const El& x) const { return d(x).is_zero(); }
    El bar(const El& x) const;

    std::optional<El> solve_boundary(const El& w);
    std::vector<El> cocycle_space(int degree);
    std::vector<El> boundary_space(int degree);
    bool in_span(const El& target, const std::vector<El>& gens) const;

  private:
    FpVec coords(const El& x, const std::vector<Monomial>& basis) const;

    FreeCommAlgebra alg_;
    std::vector<Element> d_internal_;  // per internal generator
    int max_degree_;
};

bool massey_contains(Dga& dga, const MasseyOutcome<Dga>& mt, const Dga::El& x, const Dga::El& z,
                     const Dga::El& target);

// The standard nonzero triple product: Lambda(x, y, z, s, t) with d(s) = xy,
// d(t) = yz; <[x],[y],[z]> is represented by a nonzero class for every p.
Dga borromean_dga(int p);

}  // namespace bpalg

#endif
