#pragma once

#include <cstdint>
#include <random>

#include "nckit/poly.hpp"
#include "nckit/star.hpp"

namespace nckit {

using Rng = std::mt19937_64;

struct RandomPolyOptions {
    int max_spatial_degree = 3;
    int max_t_degree = 1;
    int max_total_degree = -1;  // no cap when negative
    int max_terms = 4;
    int coef_range = 3;      // integer parts drawn from [-coef_range, coef_range]
    bool complex_coefs = true;
};

Poly random_poly(Rng& rng, const RandomPolyOptions& opts);

// Random i * (real polynomial); satisfies conj(p) == -p.
Poly random_imaginary_poly(Rng& rng, const RandomPolyOptions& opts);

// Random antisymmetric profile with entries of t-degree <= max_t_degree and
// at least one non-constant entry when max_t_degree > 0.
ThetaProfile random_theta(Rng& rng, int max_t_degree, int coef_range = 2);

Rational random_rational(Rng& rng, int range);

}  // namespace nckit
