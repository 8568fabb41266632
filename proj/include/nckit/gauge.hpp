#pragma once

#include <array>

#include "nckit/poly.hpp"
#include "nckit/star.hpp"

namespace nckit {

// Components A_0..A_3 of a U(1) connection on the deformed algebra.
struct GaugePotential {
    std::array<Poly, 4> A{};

    const Poly& operator[](int mu) const { return A[mu]; }
    Poly& operator[](int mu) { return A[mu]; }
};

// Residual A_0 + conj(A_0) - (i/2) thetadot^{ij} d_i A_j; zero for admissible potentials.
Poly time_component_residual(const GaugePotential& a, const ThetaProfile& theta);

// Spatial components must be purely imaginary and A_0 must satisfy the
// anti-selfadjointness constraint.
bool is_admissible(const GaugePotential& a, const ThetaProfile& theta);

// A_i = a_i, A_0 = a0_im + (i/4) thetadot^{ij} d_i a_j: the unique completion
// with imaginary part a0_im. Throws std::invalid_argument for non-imaginary input.
GaugePotential complete_time_component(const std::array<Poly, 3>& a, const Poly& a0_im, const ThetaProfile& theta);

struct FieldStrength {
    std::array<Poly, 3> spatial{};  // F_12, F_13, F_23
    std::array<Poly, 3> mixed{};    // F_01, F_02, F_03
    std::array<Poly, 3> covariant{};  // covariantised F~_01, F~_02, F~_03

    // F_ij extended antisymmetrically, spatial indices 1..3.
    Poly Fij(int i, int j) const;
    Poly F0i(int i) const { return mixed[i - 1]; }
    Poly Ft0i(int i) const { return covariant[i - 1]; }

    friend bool operator==(const FieldStrength&, const FieldStrength&) = default;
};

int spatial_pair_index(int i, int j);  // (1,2)->0, (1,3)->1, (2,3)->2 for i<j

// F_ij = d_i A_j - d_j A_i + [A_i, A_j]
// F_0i = d_0 A_i - d_i A_0 + [A_0, A_i] - (i/2) thetadot^{mn} A_n * (d_m A_i)
// F~_0i = F_0i - (i/2) thetadot^{kj} F_ij * A_k
FieldStrength field_strength(const GaugePotential& a, const StarContext& ctx);

// F~_0i from given F_0i, F_ij and spatial potential.
std::array<Poly, 3> covariantise(const std::array<Poly, 3>& mixed, const FieldStrength& spatial_source,
                                 const std::array<Poly, 3>& spatial_potential, const StarContext& ctx);

struct GaugeTransform {
    Poly U;
    Poly U_dag;
    std::array<Poly, 3> A_spatial{};  // A'_1..A'_3, eps-graded
    int order = 0;
};

// U = star_exp(lambda, order); A'_k = U^dag * A_k * U + U^dag * d_k U mod eps^{order+1}.
// The time component is not transformed.
GaugeTransform gauge_transform_potential(const GaugePotential& a, const Poly& lambda, int order,
                                         const StarContext& ctx);

struct CovarianceDefect {
    std::array<Poly, 3> spatial{};    // F'_ij - U^dag F_ij U
    std::array<Poly, 3> covariant{};  // F~'_0i - U^dag F~_0i U

    bool is_zero() const;
};

// Transformed F~'_0i is assembled from F'_0i = U^dag F_0i U + (i/2) thetadot^{kj} U^dag F_ij (d_k U),
// F'_ij computed from A', and A'_k. No transformation law for A_0 is assumed.
CovarianceDefect covariance_defect(const GaugePotential& a, const Poly& lambda, int order, const StarContext& ctx);

// Integrand sum_{i<j} F_ij * conj(F_ij) - sum_i F~_0i * conj(F~_0i).
Poly action_density(const FieldStrength& f, const StarContext& ctx);
Poly action_density(const GaugePotential& a, const StarContext& ctx);

struct InvarianceWitness {
    Poly left;       // conj(U)
    Poly right;      // density(A) * U
    Poly remainder;  // density(A') - density(A) - [left, right]
};

// density(A') - density(A) = [conj(U), density(A) * U] + remainder, remainder = 0 mod eps^{order+1}.
// The commutator part integrates to zero by the trace property.
InvarianceWitness invariance_witness(const GaugePotential& a, const Poly& lambda, int order, const StarContext& ctx);

// U^dag * (F_ij * conj(F_ij)) * U - F'_ij * conj(F'_ij) for each i<j.
std::array<Poly, 3> spatial_density_covariance_defect(const GaugePotential& a, const Poly& lambda, int order,
                                                      const StarContext& ctx);

}  // namespace nckit
