#pragma once

#include <array>

#include "nckit/forms.hpp"
#include "nckit/poly.hpp"
#include "nckit/star.hpp"

namespace nckit {

// Flat metric (+,-,-,-): g(dt,dt) = 1, g(dx^i,dx^j) = -delta^{ij}, mixed entries 0.
struct MetricSignature {
    static constexpr std::array<int, 4> eta{1, -1, -1, -1};
    static int component(int mu, int nu) { return mu == nu ? eta[mu] : 0; }
};

// g(sum f_mu dx^mu, sum g_nu dx^nu) = sum eta^{mu nu} f_mu * g_nu on normal-ordered
// one-forms. Throws std::invalid_argument if either argument has components
// of degree other than one.
Poly metric(const DifferentialForm& a, const DifferentialForm& b, const StarContext& ctx);

// g(d Phi, d Phi^*) = eta^{mu nu} (d_mu Phi) * conj(d_nu Phi).
Poly kg_density(const Poly& phi, const StarContext& ctx);

// eta^{mu nu} d_mu d_nu Phi.
Poly kg_operator(const Poly& phi);

// d_0(Phi*Psi) - (d_0 Phi)*Psi - Phi*(d_0 Psi).
Poly subalgebra_derivation_check(const Poly& phi, const Poly& psi, const StarContext& ctx);

// u = omega t + k.x as a polynomial.
Poly linear_phase(const Rational& omega, const std::array<Rational, 3>& k);

// Composition profile(u) for a univariate polynomial given by its coefficients.
Poly compose_univariate(const std::vector<Rational>& coefficients, const Poly& u);

}  // namespace nckit
