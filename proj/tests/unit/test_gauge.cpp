#include <doctest.h>

#include <nckit/gauge.hpp>
#include <nckit/random.hpp>

#include "helpers.hpp"

using namespace nckit;
using namespace testing_helpers;

namespace {

GaugePotential random_potential(Rng& rng, const ThetaProfile& th, const RandomPolyOptions& opts) {
    std::array<Poly, 3> a{random_imaginary_poly(rng, opts), random_imaginary_poly(rng, opts),
                          random_imaginary_poly(rng, opts)};
    return complete_time_component(a, random_imaginary_poly(rng, opts), th);
}

RandomPolyOptions gauge_opts() {
    RandomPolyOptions o;
    o.max_spatial_degree = 3;
    o.max_t_degree = 1;
    o.max_terms = 3;
    return o;
}

}  // namespace

TEST_CASE("time component completion") {
    ThetaProfile th(pow(t(), 2), t(), Poly());
    auto zero = complete_time_component({Poly(), Poly(), Poly()}, Poly(), th);
    for (int mu = 0; mu < 4; ++mu) CHECK(zero[mu].is_zero());

    // plane-wave potential: A_0 = i p0 f - 1/4 thetadot^{ij} k_i p_j f'
    std::array<long, 3> k{1, 2, 2}, p{2, -1, 3};
    const long p0 = 5;
    Poly u = Poly(3) * t() + Poly(k[0]) * x1() + Poly(k[1]) * x2() + Poly(k[2]) * x3();
    Poly f = pow(u, 3), fp = Poly(3) * pow(u, 2);
    std::array<Poly, 3> a;
    for (int j = 0; j < 3; ++j) a[j] = I() * Poly(p[j]) * f;
    auto A = complete_time_component(a, I() * Poly(p0) * f, th);
    auto td = theta_dot(th);
    Poly contraction;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) contraction += td(i, j) * Poly(k[i - 1] * p[j - 1]);
    CHECK(A[0] == I() * Poly(p0) * f - q(1, 4) * contraction * fp);
    CHECK(is_admissible(A, th));

    ThetaProfile stat(Poly(2), Poly(1), Poly());
    auto B = complete_time_component(a, I() * x1(), stat);
    CHECK(B[0] == I() * x1());

    CHECK_THROWS_AS(complete_time_component({x1(), Poly(), Poly()}, Poly(), th), std::invalid_argument);
    CHECK_THROWS_AS(complete_time_component({Poly(), Poly(), Poly()}, x1(), th), std::invalid_argument);

    Rng rng(4);
    for (int n = 0; n < 10; ++n) {
        ThetaProfile th2 = random_theta(rng, 2);
        CHECK(is_admissible(random_potential(rng, th2, gauge_opts()), th2));
    }
}

TEST_CASE("field strength basics") {
    StarContext c(ThetaProfile(t(), Poly(), Poly()));
    auto fs = field_strength(GaugePotential{}, c);
    for (int k = 0; k < 3; ++k) {
        CHECK(fs.spatial[k].is_zero());
        CHECK(fs.mixed[k].is_zero());
        CHECK(fs.covariant[k].is_zero());
    }
    CHECK(fs.Fij(2, 2).is_zero());
}

TEST_CASE("pure gauge potentials are flat in space") {
    Rng rng(12);
    for (int n = 0; n < 5; ++n) {
        ThetaProfile th = random_theta(rng, n % 2 == 0 ? 0 : 2);
        StarContext c(th, 2);
        Poly lam = random_imaginary_poly(rng, gauge_opts());
        Poly U = star_exp(lam, 2, c);
        GaugePotential A;
        for (int k = 1; k <= 3; ++k) A[k] = star(conj(U), partial(U, k), c);
        auto fs = field_strength(A, c);
        for (int k = 0; k < 3; ++k) CHECK(fs.spatial[k].is_zero());
    }
}

TEST_CASE("plane-wave spatial field strength") {
    ThetaProfile th(t(), pow(t(), 2), Poly(-2) * t());
    StarContext c(th);
    std::array<long, 3> k{1, -2, 2}, p{3, 1, -1};
    Poly u = Poly(3) * t() + Poly(k[0]) * x1() + Poly(k[1]) * x2() + Poly(k[2]) * x3();
    Poly f = pow(u, 2) + u, fp = Poly(2) * u + Poly(1);
    std::array<Poly, 3> a;
    for (int j = 0; j < 3; ++j) a[j] = I() * Poly(p[j]) * f;
    auto A = complete_time_component(a, I() * Poly(2) * f, th);
    auto fs = field_strength(A, c);
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            CHECK(fs.Fij(i, j) == I() * Poly(k[i - 1] * p[j - 1] - p[i - 1] * k[j - 1]) * fp);
}

TEST_CASE("gauge transformation of the spatial potential") {
    Rng rng(13);
    ThetaProfile th(t(), Poly(), pow(t(), 2));
    StarContext c(th);
    GaugePotential A = random_potential(rng, th, gauge_opts());
    auto gt0 = gauge_transform_potential(A, Poly(), 2, c);
    for (int k = 1; k <= 3; ++k) CHECK(gt0.A_spatial[k - 1] == A[k]);

    Poly lam = I() * x1() * x2() + I() * t() * x3();
    auto gt1 = gauge_transform_potential(GaugePotential{}, lam, 1, c);
    for (int k = 1; k <= 3; ++k) CHECK(gt1.A_spatial[k - 1] == eps() * partial(lam, k));

    // undeformed orbit: A'_k = A_k + eps d_k lambda
    StarContext flat;
    Poly lam2 = random_imaginary_poly(rng, gauge_opts());
    auto gt2 = gauge_transform_potential(A, lam2, 3, flat);
    for (int k = 1; k <= 3; ++k) CHECK(gt2.A_spatial[k - 1] == A[k] + eps() * partial(lam2, k));

    CHECK_THROWS_AS(gauge_transform_potential(A, x1(), 2, c), std::invalid_argument);
}

TEST_CASE("covariance of the field strengths") {
    ThetaProfile th(t(), Poly(), Poly());
    StarContext c(th);
    Rng rng(14);
    GaugePotential A = random_potential(rng, th, gauge_opts());
    CHECK(covariance_defect(A, Poly(), 2, c).is_zero());
    CHECK(covariance_defect(A, I() * x1() * x2(), 2, c).is_zero());

    StarContext stat(ThetaProfile(Poly(1), Poly(-2), Poly(1)));
    CHECK(covariance_defect(A, I() * x1() * x2() + I() * x3(), 2, stat).is_zero());

    for (int n = 0; n < 4; ++n) {
        ThetaProfile th2 = random_theta(rng, 2);
        StarContext c2(th2);
        GaugePotential B = random_potential(rng, th2, gauge_opts());
        Poly lam = random_imaginary_poly(rng, gauge_opts());
        CHECK(covariance_defect(B, lam, 2, c2).is_zero());
        for (const auto& d : spatial_density_covariance_defect(B, lam, 2, c2)) CHECK(d.is_zero());
    }
}

TEST_CASE("action density") {
    StarContext c(ThetaProfile(t(), Poly(), Poly()));
    CHECK(action_density(GaugePotential{}, c).is_zero());

    // undeformed Maxwell: B_ij^2 - E_i^2 with A = i a
    StarContext flat;
    std::array<Poly, 4> a{Poly(2) * x1() + t(), Poly(3) * x2() - t(), x3() + Poly(2) * x1(), Poly(-1) * x2() + t()};
    GaugePotential A;
    for (int mu = 0; mu < 4; ++mu) A[mu] = I() * a[mu];
    Poly expected;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            Poly b = partial(a[j], i) - partial(a[i], j);
            expected += b * b;
        }
    for (int i = 1; i <= 3; ++i) {
        Poly e = partial(a[i], 0) - partial(a[0], i);
        expected -= e * e;
    }
    CHECK(action_density(A, flat) == expected);
}

TEST_CASE("gauge invariance witness") {
    Rng rng(15);
    for (int n = 0; n < 3; ++n) {
        ThetaProfile th = random_theta(rng, n == 0 ? 0 : 2);
        StarContext c(th);
        GaugePotential A = random_potential(rng, th, gauge_opts());
        Poly lam = random_imaginary_poly(rng, gauge_opts());
        auto w = invariance_witness(A, lam, 2, c);
        CHECK(w.remainder.is_zero());
        CHECK(w.left == conj(star_exp(lam, 2, c)));
    }
    StarContext c(ThetaProfile(t(), Poly(), Poly()));
    auto w0 = invariance_witness(GaugePotential{}, Poly(), 2, c);
    CHECK(w0.right.is_zero());
    CHECK(w0.remainder.is_zero());
}
