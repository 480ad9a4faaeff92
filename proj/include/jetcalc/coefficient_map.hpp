#pragma once

#include "jetcalc/config.hpp"
#include "jetcalc/ideal.hpp"
#include "jetcalc/jet.hpp"
#include "jetcalc/polymap.hpp"

#include <vector>

namespace jetcalc {

// Coefficient coordinates for order-k jets at a base point in C^n: variable
// (i, d) is the degree-d coefficient of coordinate i, laid out coordinate-major
// at index i*k + (d-1). Constant terms are pinned to the base point and are
// not coordinates.
VarNames coefficient_names(const VarNames& source_names, int n, int k);

// The universal jet at `base` over the coefficient ring.
std::vector<Series<Polynomial>> symbolic_jet(int n, int k, const std::vector<Rational>& base,
                                             const VarNames& coeff_names);

// phi^(k) written out on coefficient coordinates: a polynomial map from the
// n*k source coefficients to the m*k target coefficients, fibered over
// base -> phi(base).
struct CoefficientMap {
    int n = 0, m = 0, k = 0;
    std::vector<Rational> base;
    std::vector<Rational> image_base;
    PolyMap map; // m*k coordinates in n*k variables
};

CoefficientMap coefficient_map(const PolyMap& phi, int k, const std::vector<Rational>& base);

// Dimension of the closure of the image, measured as the rank of the
// differential at randomly sampled rational points (maximum over trials).
// Exact fraction-free rank; randomness only picks the sample points.
int image_dimension(const CoefficientMap& cm, const SampleParams& params);

// Same, with the source restricted to the vanishing locus of `constraint`
// (an ideal in the n*k coefficient variables): sample a point on the locus,
// then rank the differential restricted to the tangent space of the locus.
int image_dimension(const CoefficientMap& cm, const Ideal& constraint,
                    const SampleParams& params);

} // namespace jetcalc
