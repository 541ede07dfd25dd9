#ifndef BPALG_KUNNETH_HPP
#define BPALG_KUNNETH_HPP

#include <string>
#include <vector>

#include "bpalg/free_einfty.hpp"
#include "bpalg/poincare.hpp"

namespace bpalg {

// A bracket class [Q^I x] sitting in homological degree 1: total degree is
// |Q^I x| + 1.
struct SSGen {
    DLSequence I;
    int class_degree = 0;  // |Q^I x|
    int total = 0;         // class_degree + 1
    std::string name;
};

struct SSPairing {
    int tower = -1;    // index into towers
    int partner = -1;  // index into exterior, or -1 when out of range
};

struct SSPage {
    int p = 2;
    int attach_degree = 0;
    int cutoff = 0;
    int page = 2;  // p-1 differential moves the odd-primary page from 2 to p
    PoincareSeries base;
    // one divided-power tower per odd-degree generator (p odd), one exterior
    // class per even-degree generator; at p=2 everything is exterior
    std::vector<SSGen> towers;
    std::vector<SSGen> exterior;
    std::vector<SSPairing> pairing;  // set by the differential
    bool terminal() const { return p == 2 || page >= p; }
};

SSPage build_e2(int p, int attach_degree, int cutoff);
SSPage build_e2(int p, int attach_degree, int cutoff, PoincareSeries base);

// The d^{p-1} differential d gamma_{p^r}([Q^I x]) = [bQ^{(|Q^I x|+1)/2} Q^I x]
// gamma_{p^r - p}([Q^I x]) (unit fixed to 1), as a derivation. At p=2 the page
// is already terminal and is returned unchanged.
SSPage apply_d_pminus1(const SSPage& page);

// Total-degree dimension series of the terminal page.
PoincareSeries einfty_series(const SSPage& page);

// One (tower, partner) pair: the divided-power tower generators b_r of the
// bracket class together with the exterior partner e, carrying the
// d^{p-1} differential d(b_r) = e b_1^{p-1} ... b_{r-1}^{p-1} as a
// derivation (unit fixed to 1). partner_total < 0 means the partner lies
// beyond the window.
class TowerPairComplex {
  public:
    struct Mono {
        std::vector<int> b;
        int e = 0;
        auto operator<=>(const Mono& o) const = default;
    };
    using El = std::map<Mono, int>;

    TowerPairComplex(int p, int tower_total, int partner_total, int cutoff);

    int degree(const Mono& m) const;
    const std::vector<std::vector<Mono>>& by_degree() const { return by_degree_; }
    El d(const Mono& m) const;
    El d(const El& x) const;
    std::pair<int, Mono> mul_mono(const Mono& a, const Mono& b) const;  // sign 0 when zero
    El mul(const El& a, const El& b) const;

  private:
    int p_;
    std::vector<long long> bdeg_;
    int partner_total_;
    bool has_e_;
    std::vector<std::vector<Mono>> by_degree_;
};

// Degreewise homology series of one pair complex.
PoincareSeries pair_homology_series(int p, int tower_total, int partner_total, int cutoff);

struct KunnethCompareReport {
    bool equal = false;
    int first_mismatch = -1;
    PoincareSeries ss_series;
    PoincareSeries cone_series;
    std::vector<std::string> pairing_info;
};
// The module's closure property: E^infinity equals the closed-form cone
// answer degreewise.
KunnethCompareReport compare_with_cone_answer(int p, int attach_degree, int cutoff);

// Rational pages collapse; the series agrees with rational_cone_series.
PoincareSeries rational_kunneth_series(Parity attach_parity, int n, const PoincareSeries& base,
                                       int cutoff);

}  // namespace bpalg

#endif
