// One line per acceptance criterion. With arguments, runs only the listed criteria.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <nckit/expr.hpp>
#include <nckit/forms.hpp>
#include <nckit/gauge.hpp>
#include <nckit/grid.hpp>
#include <nckit/planewave.hpp>
#include <nckit/random.hpp>
#include <nckit/scalar.hpp>
#include <nckit/star.hpp>
#include <nckit/suites.hpp>

using namespace nckit;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
    std::vector<std::string> diagnostics;
};

struct Criterion {
    int id;
    const char* title;
    double time_limit;  // seconds, 0 for none
    std::function<Outcome()> run;
};

Poly var(int i) { return Poly::var(static_cast<Var>(i)); }

std::string count(const char* what, int ok, int total) {
    return std::string(what) + " " + std::to_string(ok) + "/" + std::to_string(total);
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

RandomPolyOptions star_options() {
    RandomPolyOptions o;
    o.max_spatial_degree = 4;
    o.max_t_degree = 2;
    o.max_terms = 3;
    return o;
}

Outcome star_suite() {
    Rng rng(101);
    const auto po = star_options();
    int assoc = 0, comm = 0;
    for (int n = 0; n < 200; ++n) {
        const ThetaProfile th = random_theta(rng, 2);
        const StarContext ctx(th);
        const Poly f = random_poly(rng, po), g = random_poly(rng, po), h = random_poly(rng, po);
        if (star(star(f, g, ctx), h, ctx) == star(f, star(g, h, ctx), ctx)) ++assoc;
        bool ok = true;
        for (int i = 1; i <= 3; ++i) {
            ok = ok && star_commutator(var(i), var(0), ctx).is_zero();
            for (int j = 1; j <= 3; ++j) ok = ok && star_commutator(var(i), var(j), ctx) == th(i, j) * CRat::i();
        }
        if (ok) ++comm;
    }
    return {assoc == 200 && comm == 200, count("associativity", assoc, 200) + ", " + count("commutators", comm, 200), {}};
}

Outcome non_leibniz() {
    Rng rng(102);
    const auto po = star_options();
    int ok = 0;
    for (int n = 0; n < 200; ++n) {
        const StarContext ctx(random_theta(rng, 2));
        const Poly f = random_poly(rng, po), g = random_poly(rng, po);
        const ThetaProfile td = theta_dot(ctx.theta());
        Poly expected;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                if (!td(i, j).is_zero())
                    expected += td(i, j) * star(partial(f, i), partial(g, j), ctx);
        expected = expected * CRat(Rational(1, 2)) * CRat::i();
        if ((dt_leibniz_defect(f, g, ctx) - expected).is_zero()) ++ok;
    }
    return {ok == 200, count("pairs with zero residual", ok, 200), {}};
}

Outcome conjugation() {
    Rng rng(103);
    const auto po = star_options();
    int ok = 0;
    for (int n = 0; n < 200; ++n) {
        const StarContext ctx(random_theta(rng, 2));
        if (star_conj_defect(random_poly(rng, po), random_poly(rng, po), ctx).is_zero()) ++ok;
    }
    return {ok == 200, count("pairs with zero defect", ok, 200), {}};
}

Outcome calculus() {
    Rng rng(104);
    RandomPolyOptions po;
    po.max_spatial_degree = 3;
    po.max_t_degree = 2;
    po.max_terms = 3;
    int dd = 0, leib = 0;
    for (int n = 0; n < 100; ++n) {
        const StarContext ctx(random_theta(rng, 2));
        const Poly f = random_poly(rng, po), g = random_poly(rng, po);
        if (exterior_d(exterior_d(DifferentialForm(f))).is_zero() &&
            exterior_d(exterior_d(DifferentialForm(star(f, g, ctx)))).is_zero())
            ++dd;
        if (d_leibniz_defect(f, g, ctx).is_zero()) ++leib;
    }
    return {dd == 100 && leib == 100, count("d^2 = 0", dd, 100) + ", " + count("Leibniz defect zero", leib, 100), {}};
}

Outcome gauge() {
    Rng rng(105);
    RandomPolyOptions po;
    po.max_spatial_degree = 3;
    po.max_t_degree = 1;
    po.max_total_degree = 3;
    po.max_terms = 3;
    int cov = 0, inv = 0;
    for (int n = 0; n < 50; ++n) {
        const ThetaProfile th = random_theta(rng, 2);
        const StarContext ctx(th);
        const std::array<Poly, 3> a{random_imaginary_poly(rng, po), random_imaginary_poly(rng, po),
                                    random_imaginary_poly(rng, po)};
        const GaugePotential A = complete_time_component(a, random_imaginary_poly(rng, po), th);
        const Poly lambda = random_imaginary_poly(rng, po);
        if (covariance_defect(A, lambda, 2, ctx).is_zero()) ++cov;
        if (invariance_witness(A, lambda, 2, ctx).remainder.is_zero()) ++inv;
    }
    return {cov == 50 && inv == 50,
            count("covariance defect (0,0) mod eps^3", cov, 50) + ", " + count("witness remainder zero", inv, 50), {}};
}

std::string diagnostic_line(const Diagnostic& d) {
    return "{\"equation\": \"" + d.equation + "\", \"quantity\": \"" + d.quantity + "\", \"printed\": \"" + d.expected +
           "\", \"computed\": \"" + d.computed + "\", \"note\": \"" + d.note + "\"}";
}

Outcome planewave_action() {
    // Exact evaluation at 20 random rational points is a polynomial identity test in (omega, k, p).
    Rng rng(106);
    const std::vector<Rational> profile{Rational(0), Rational(1), Rational(1), Rational(1)};
    int quad = 0, flipped = 0, cubic = 0, cubic_total = 0, flagged = 0;
    Outcome out;
    for (int n = 0; n < 20; ++n) {
        const ThetaProfile th = random_theta(rng, 2);
        const PlaneWaveSpec spec = random_spec(rng, profile, 50);
        const ActionReport r = effective_action(spec, th);
        if (r.quad_matches) ++quad;
        if (r.quad_coeff && *r.quad_coeff == -r.quad_expected) ++flipped;
        if (!r.contraction.is_zero()) {
            ++cubic_total;
            if (r.cubic_matches) ++cubic;
        }
        const bool mismatch = !r.quad_matches || (!r.contraction.is_zero() && !r.cubic_matches);
        if (mismatch && !r.diagnostics.empty()) ++flagged;
        if (mismatch && out.diagnostics.empty())
            for (const auto& d : r.diagnostics) out.diagnostics.push_back(diagnostic_line(d));
    }
    out.pass = quad == 20 && cubic == cubic_total && cubic_total > 0;
    out.detail = count("quadratic", quad, 20) + " (computed = -printed on " + std::to_string(flipped) + "), " +
                 count("cubic", cubic, cubic_total) + ", mismatches with diagnostics " + std::to_string(flagged);
    return out;
}

ThetaProfile single_direction(Rng& rng) {
    std::uniform_int_distribution<int> c(-3, 3);
    Poly h;
    while (h.is_constant()) h = Poly(c(rng)) * var(0) + Poly(c(rng)) * pow(var(0), 2);
    for (;;) {
        const long a = c(rng), b = c(rng), d = c(rng);
        if (a != 0 || b != 0 || d != 0) return ThetaProfile(h * CRat(a), h * CRat(b), h * CRat(d));
    }
}

Outcome polarisation() {
    Rng rng(107);
    const std::vector<Rational> profile{Rational(0), Rational(1), Rational(-2), Rational(1)};
    int zero = 0, nonzero = 0;
    for (int n = 0; n < 20; ++n) {
        const ThetaProfile th = single_direction(rng);
        const PlaneWaveSpec spec = random_polarised_spec(rng, th, profile, 20);
        const ActionReport r = effective_action(spec, th);
        if (r.contraction.is_zero() && r.cubic_vanishes && r.cubic_density.is_zero()) ++zero;
    }
    for (int n = 0; n < 20; ++n) {
        const ThetaProfile th = random_theta(rng, 2);
        const ActionReport r = effective_action(random_spec(rng, profile, 20), th);
        if (!r.cubic_vanishes && !r.cubic_density.is_zero()) ++nonzero;
    }
    return {zero == 20 && nonzero == 20,
            count("polarised with zero cubic term", zero, 20) + ", " + count("generic with nonzero cubic term", nonzero, 20),
            {}};
}

Outcome kg_sector() {
    Rng rng(108);
    int wave = 0, powers = 0;
    const auto& nulls = integer_null_vectors();
    for (const auto& v : nulls) {
        const StarContext ctx(random_theta(rng, 2));
        const Poly u = linear_phase(Rational(v[0]), {Rational(v[1]), Rational(v[2]), Rational(v[3])});
        bool w = true, p = true;
        Poly sp(1), pp(1);
        for (int n = 1; n <= 6; ++n) {
            sp = star(sp, u, ctx);
            pp = mul(pp, u);
            p = p && sp == pp;
            w = w && kg_operator(pp).is_zero();
        }
        wave += w;
        powers += p;
    }
    const int total = static_cast<int>(nulls.size());
    return {wave == total && powers == total,
            count("box u^n = 0", wave, total) + ", " + count("star powers pointwise", powers, total), {}};
}

GridField band_limited(Rng& rng, double theta) {
    std::uniform_int_distribution<int> m(-20, 20);
    std::normal_distribution<double> c(0, 1);
    std::vector<std::array<int, 2>> ms(6);
    std::vector<Complex> cs(6);
    for (int k = 0; k < 6; ++k) {
        ms[k] = {m(rng), m(rng)};
        cs[k] = Complex(c(rng), c(rng));
    }
    const double kk = 2 * std::numbers::pi / kDefaultBoxLength;
    return GridField::sample(kDefaultGridSize, kDefaultBoxLength, theta, [&](double x, double y) {
        Complex v;
        for (int k = 0; k < 6; ++k) v += cs[k] * std::polar(1.0, kk * (ms[k][0] * x + ms[k][1] * y));
        return v;
    });
}

Outcome grid_oracle() {
    Rng rng(109);
    std::uniform_int_distribution<int> mode(-40, 40);
    double phase = 0, trace = 0, cyc = 0;
    for (int n = 0; n < 4; ++n) {
        const double theta = 0.5 + n * 0.75;
        phase = std::max(phase, phase_law_error(kDefaultGridSize, kDefaultBoxLength, theta, {mode(rng), mode(rng)},
                                                {mode(rng), mode(rng)}));
    }
    for (int n = 0; n < 2; ++n) {
        const double theta = 1.0 + n;
        const GridField f = band_limited(rng, theta), g = band_limited(rng, theta);
        trace = std::max(trace, grid_trace_defect(f, g).relative);
        cyc = std::max(cyc, grid_cyclicity_defect(f, g).relative);
    }
    const WindowedPoly wf{var(1) * var(1) + var(2)}, wg{var(1) * var(2) - var(2)};
    const double cv = cross_validate_symbolic(wf, wg, 1.0);
    return {phase <= 1e-8 && trace <= 1e-10 && cyc <= 1e-10 && cv <= 1e-6,
            "phase law " + sci(phase) + " (<= 1e-8), trace " + sci(trace) + ", cyclicity " + sci(cyc) +
                " (<= 1e-10), cross-validation " + sci(cv) + " (<= 1e-6)",
            {}};
}

Outcome harmonics() {
    PlaneWaveSpec spec;
    spec.omega = 3;
    spec.k = {Rational(1), Rational(2), Rational(2)};
    spec.p = {Rational(1), Rational(2), Rational(-1), Rational(0)};
    spec.waveform = Waveform::cosine;
    spec.amplitude = 1;
    const TrigSeries s = cubic_density_series(spec);
    const auto h = s.harmonics();
    const double e1 = std::abs(s.cos_coefficient(1).get_d() - 0.25), e3 = std::abs(s.cos_coefficient(3).get_d() + 0.25);
    bool only = true;
    for (const auto& [n, amp] : h) only = only && (n == 1 || n == 3);
    for (int n = 0; n <= 6; ++n) only = only && s.sin_coefficient(n) == 0;
    return {only && h.size() == 2 && e1 <= 1e-12 && e3 <= 1e-12, "spectrum " + s.to_string() + ", errors " + sci(e1) +
                                                                     " " + sci(e3) + " (<= 1e-12)",
            {}};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {1, "star associativity and coordinate commutators", 60, star_suite},
        {2, "time-derivative non-Leibniz identity", 0, non_leibniz},
        {3, "conjugation anti-homomorphism", 0, conjugation},
        {4, "calculus consistency", 0, calculus},
        {5, "gauge covariance and invariance witness", 300, gauge},
        {6, "plane-wave action coefficients", 0, planewave_action},
        {7, "polarisation kills the cubic term", 0, polarisation},
        {8, "Klein-Gordon sector", 0, kg_sector},
        {9, "grid-star oracle", 30, grid_oracle},
        {10, "harmonic spectrum of the cubic density", 0, harmonics},
    };
    std::vector<int> wanted;
    for (int a = 1; a < argc; ++a) wanted.push_back(std::atoi(argv[a]));

    int failures = 0;
    for (const auto& c : all) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what(), {}};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char tbuf[48];
        std::snprintf(tbuf, sizeof tbuf, "%.2f s", secs);
        std::string timing = tbuf;
        if (c.time_limit > 0) {
            std::snprintf(tbuf, sizeof tbuf, " (limit %.0f s)", c.time_limit);
            timing += tbuf;
            if (secs > c.time_limit) o.pass = false;
        }
        std::printf("criterion %2d %s  %s: %s [%s]\n", c.id, o.pass ? "PASS" : "FAIL", c.title, o.detail.c_str(),
                    timing.c_str());
        for (const auto& d : o.diagnostics) std::printf("    diagnostic %s\n", d.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
