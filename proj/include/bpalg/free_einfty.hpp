#ifndef BPALG_FREE_EINFTY_HPP
#define BPALG_FREE_EINFTY_HPP

#include <string>
#include <utility>
#include <vector>

#include "bpalg/dyer_lashof.hpp"
#include "bpalg/graded_algebra.hpp"
#include "bpalg/poincare.hpp"

namespace bpalg {

enum class Parity { Even, Odd };

struct GenEntry {
    DLSequence I;
    std::string base;
    int degree = 0;
    bool exterior = false;
    std::string name;
};

struct GeneratorReport {
    CoefficientField field;
    std::vector<std::pair<std::string, int>> base;
    int cutoff = 0;
    std::vector<GenEntry> entries;
    std::vector<GeneratorSpec> algebra_gens;
    PoincareSeries series;  // of the generated free algebra; relative to the
                            // (symbolic) coefficient base
};

// Generators Q^I x_j of the homology of the free algebra on classes x_j:
// admissible I with exc(I) + eps_1 > |x_j| (p odd), exc(I) > |x_j| (p=2),
// total degree <= cutoff. Odd-degree generators are exterior at odd p.
GeneratorReport px_generators(int p, const std::vector<std::pair<std::string, int>>& base,
                              int cutoff);

// Rational homology of the free algebra on one class: exterior on an
// odd-degree generator, polynomial on an even one.
GeneratorReport rational_px(Parity parity, int degree, int cutoff);

// Generators Q^I u adjoined by coning off a map from S^{attach_degree}:
// u in degree attach_degree+1; p odd needs attach_degree = 2n-1 and takes
// exc(I) + eps_1 > 2n; p=2 takes exc(I) > attach_degree+1. Relative: the
// series is of the adjoined algebra only.
GeneratorReport cone_generators(int p, int attach_degree, int cutoff);

// Rational cone: multiplies the base series by 1/(1-t^{2n}) for an odd
// attaching sphere S^{2n-1}, by (1+t^{2n+1}) for an even one S^{2n}.
PoincareSeries rational_cone_series(Parity attach_parity, int n, const PoincareSeries& base,
                                    int cutoff);

// A trivial map on the base classes induces the trivial algebra map on every
// Q^I x_j: the image of each listed generator is zero.
std::vector<std::pair<std::string, bool>> induced_map_images_trivial(const GeneratorReport& rep);

}  // namespace bpalg

#endif
