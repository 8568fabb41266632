#include <doctest.h>

#include <nckit/random.hpp>
#include <nckit/star.hpp>

#include "helpers.hpp"

using namespace nckit;
using namespace testing_helpers;

namespace {

StarContext ctx12(const Poly& th12) { return StarContext(ThetaProfile(th12, Poly(), Poly())); }

}  // namespace

TEST_CASE("theta profile") {
    ThetaProfile th(t(), Poly(), Poly());
    CHECK(th(2, 1) == -t());
    CHECK(th(1, 1).is_zero());
    CHECK(theta_dot(th)(1, 2) == Poly(1));
    CHECK(theta_dot(ThetaProfile(Poly(3), Poly(), Poly())).is_zero());
    ThetaProfile th2(pow(t(), 2), t(), Poly());
    CHECK(theta_dot(th2)(1, 2) == Poly(2) * t());
    CHECK(theta_dot(th2)(1, 3) == Poly(1));
    CHECK(theta_dot(th2)(3, 1) == Poly(-1));
    CHECK_THROWS_AS(ThetaProfile(x1(), Poly(), Poly()), std::invalid_argument);
    CHECK_THROWS_AS(ThetaProfile(eps(), Poly(), Poly()), std::invalid_argument);

    std::array<std::array<Poly, 3>, 3> bad{};
    bad[0][1] = t();
    CHECK_THROWS_AS(ThetaProfile::from_matrix(bad), std::invalid_argument);
}

TEST_CASE("star product on generators") {
    Poly theta0 = Poly(7);
    CHECK(star(x1(), x2(), ctx12(theta0)) == x1() * x2() + q(1, 2) * I() * theta0);
    CHECK(star(x1(), x2(), ctx12(t())) == x1() * x2() + q(1, 2) * I() * t());
    Poly g = x1() * x2() + t();
    CHECK(star(Poly(1), g, ctx12(t())) == g);
    CHECK(star(g, Poly(1), ctx12(t())) == g);
}

TEST_CASE("commutators reproduce the time-dependent relations") {
    auto ctx = ctx12(t());
    CHECK(star_commutator(x1(), x2(), ctx) == I() * t());
    CHECK(star_commutator(x1(), t(), ctx).is_zero());
    Poly f = x1() * x1() + x2();
    CHECK(star_commutator(f, f, ctx).is_zero());

    Rng rng(99);
    for (int k = 0; k < 20; ++k) {
        ThetaProfile th = random_theta(rng, 2);
        StarContext c(th);
        for (int i = 1; i <= 3; ++i) {
            CHECK(star_commutator(Poly::var(static_cast<Var>(i)), t(), c).is_zero());
            for (int j = 1; j <= 3; ++j)
                CHECK(star_commutator(Poly::var(static_cast<Var>(i)), Poly::var(static_cast<Var>(j)), c) ==
                      I() * th(i, j));
        }
    }
}

TEST_CASE("star agrees with the literal exponential expansion") {
    Rng rng(7);
    RandomPolyOptions opts;
    opts.max_spatial_degree = 3;
    opts.max_t_degree = 1;
    opts.max_terms = 3;
    for (int k = 0; k < 15; ++k) {
        ThetaProfile th = random_theta(rng, 2);
        Poly f = random_poly(rng, opts), g = random_poly(rng, opts);
        CHECK(star(f, g, StarContext(th)) == brute_force_star(f, g, th));
    }
}

TEST_CASE("star associativity") {
    Rng rng(11);
    RandomPolyOptions opts;
    opts.max_spatial_degree = 4;
    opts.max_t_degree = 1;
    opts.max_terms = 3;
    for (int k = 0; k < 20; ++k) {
        StarContext c(random_theta(rng, 2));
        Poly f = random_poly(rng, opts), g = random_poly(rng, opts), h = random_poly(rng, opts);
        CHECK(star(star(f, g, c), h, c) == star(f, star(g, h, c), c));
    }
}

TEST_CASE("non-Leibniz rule for the time derivative") {
    CHECK(dt_leibniz_defect(x1(), x2(), ctx12(t())) == q(1, 2) * I());
    CHECK(dt_leibniz_defect(x1() * x1() * t(), x2() * x3(), ctx12(Poly(5))).is_zero());

    // k.x with itself: (i/2) thetadot^{ij} k_i k_j = 0
    Poly kx = Poly(2) * x1() - x2() + Poly(3) * x3();
    StarContext c(ThetaProfile(pow(t(), 2), t(), Poly(-1) * t()));
    CHECK(dt_leibniz_defect(kx, kx, c).is_zero());

    Rng rng(5);
    RandomPolyOptions opts;
    opts.max_spatial_degree = 3;
    opts.max_t_degree = 2;
    for (int k = 0; k < 20; ++k) {
        StarContext cc(random_theta(rng, 2));
        Poly f = random_poly(rng, opts), g = random_poly(rng, opts);
        CHECK(dt_leibniz_defect(f, g, cc) == non_leibniz_term(f, g, cc));
    }
}

TEST_CASE("conjugation is an anti-homomorphism") {
    CHECK(star_conj_defect(x1(), x2(), ctx12(t())).is_zero());
    CHECK(star_conj_defect(I() * x1(), x1(), ctx12(t())).is_zero());
    Rng rng(3);
    RandomPolyOptions opts;
    opts.max_spatial_degree = 4;
    for (int k = 0; k < 20; ++k) {
        StarContext c(random_theta(rng, 2));
        CHECK(star_conj_defect(random_poly(rng, opts), random_poly(rng, opts), c).is_zero());
    }
}

TEST_CASE("spatial derivatives are derivations") {
    Rng rng(8);
    RandomPolyOptions opts;
    opts.max_spatial_degree = 3;
    opts.max_t_degree = 2;
    CHECK(spatial_derivation_defect(x1() * x1(), x2() * x2(), 2, ctx12(t())).is_zero());
    for (int k = 0; k < 10; ++k) {
        StarContext c(random_theta(rng, 2));
        Poly f = random_poly(rng, opts), g = random_poly(rng, opts);
        for (int i = 1; i <= 3; ++i) CHECK(spatial_derivation_defect(f, g, i, c).is_zero());
    }
    CHECK_THROWS_AS(spatial_derivation_defect(x1(), x2(), 0, ctx12(t())), std::out_of_range);
}

TEST_CASE("star exponential") {
    auto c = ctx12(t());
    CHECK(star_exp(Poly(), 3, c) == Poly(1));
    CHECK(star_exp(I() * x1(), 1, c) == Poly(1) + eps() * I() * x1());
    CHECK_THROWS_AS(star_exp(x1(), 2, c), std::invalid_argument);
    CHECK_THROWS_AS(star_exp(I() * eps(), 2, c), std::invalid_argument);

    Poly lam = I() * x1() * x2();
    Poly u = star_exp(lam, 3, c);
    StarContext cut = c.with_cutoff(3);
    CHECK(star(conj(u), u, cut) == Poly(1));
    CHECK(star(u, conj(u), cut) == Poly(1));
    // the eps^2 coefficient is lambda*lambda / 2
    CHECK(eps_coefficient(u, 2) == star(lam, lam, c) * CRat(Rational(1, 2)));
}

TEST_CASE("eps cutoff reduces products") {
    StarContext c(ThetaProfile(t(), Poly(), Poly()), 1);
    Poly a = Poly(1) + eps() * x1();
    Poly b = Poly(1) + eps() * x2();
    CHECK(star(a, b, c) == Poly(1) + eps() * (x1() + x2()));
}

TEST_CASE("plane-wave subalgebra is commutative") {
    Rng rng(21);
    StarContext c(random_theta(rng, 2));
    Poly u = Poly(3) * t() + x1() + Poly(2) * x2() + Poly(2) * x3();
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) {
            Poly f = pow(u, m) * t(), g = pow(u, n) + pow(t(), 2);
            CHECK(star(f, g, c) == mul(f, g));
        }
}
