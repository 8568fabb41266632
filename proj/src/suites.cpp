#include "nckit/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>

#include "nckit/expr.hpp"
#include "nckit/forms.hpp"
#include "nckit/gauge.hpp"
#include "nckit/grid.hpp"
#include "nckit/random.hpp"
#include "nckit/scalar.hpp"

namespace nckit {
namespace {

constexpr std::size_t kMaxCounterexamples = 3;

class Recorder {
public:
    explicit Recorder(SuiteReport& r) : report_(r) {}

    void check(const std::string& property, bool ok, const std::function<std::string()>& describe) {
        PropertyResult& p = find(property);
        if (ok) {
            ++p.passed;
            return;
        }
        ++p.failed;
        if (p.counterexamples.size() < kMaxCounterexamples) p.counterexamples.push_back(describe());
    }

private:
    PropertyResult& find(const std::string& name) {
        for (auto& p : report_.properties)
            if (p.name == name) return p;
        report_.properties.push_back({name, 0, 0, {}});
        return report_.properties.back();
    }

    SuiteReport& report_;
};

std::string theta_text(const ThetaProfile& th) {
    return "theta12 = " + render(th(1, 2)) + "; theta13 = " + render(th(1, 3)) + "; theta23 = " + render(th(2, 3));
}

std::string with_theta(const ThetaProfile& th, const std::vector<std::pair<std::string, std::string>>& parts) {
    std::string out;
    for (const auto& [name, value] : parts) out += name + " = " + value + "; ";
    return out + theta_text(th);
}

ThetaProfile pick_theta(Rng& rng, const SuiteOptions& opts, int max_t_degree) {
    return opts.theta ? *opts.theta : random_theta(rng, max_t_degree);
}

DifferentialForm random_form(Rng& rng, int degree, const RandomPolyOptions& opts) {
    DifferentialForm out;
    for (std::uint8_t bits = 0; bits < 16; ++bits) {
        const Wedge w(bits);
        if (w.degree() != degree) continue;
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) continue;
        out.add(w, random_poly(rng, opts));
    }
    return out;
}

void star_suite(SuiteReport& rep, Rng& rng, const SuiteOptions& opts) {
    Recorder rec(rep);
    RandomPolyOptions po;
    po.max_spatial_degree = 4;
    po.max_t_degree = 1;
    po.max_terms = 3;
    for (int n = 0; n < rep.cases; ++n) {
        const ThetaProfile th = pick_theta(rng, opts, 2);
        const StarContext ctx(th);
        const Poly f = random_poly(rng, po), g = random_poly(rng, po), h = random_poly(rng, po);
        auto fg = [&] { return with_theta(th, {{"f", render(f)}, {"g", render(g)}}); };
        rec.check("associativity", star(star(f, g, ctx), h, ctx) == star(f, star(g, h, ctx), ctx),
                  [&] { return with_theta(th, {{"f", render(f)}, {"g", render(g)}, {"h", render(h)}}); });
        bool comm = true;
        for (int i = 1; i <= 3; ++i) {
            const Poly xi = Poly::var(static_cast<Var>(i));
            comm = comm && star_commutator(xi, Poly::var(Var::t), ctx).is_zero();
            for (int j = 1; j <= 3; ++j)
                comm = comm && star_commutator(xi, Poly::var(static_cast<Var>(j)), ctx) == th(i, j) * CRat::i();
        }
        rec.check("coordinate commutators", comm, [&] { return theta_text(th); });
        rec.check("time-derivative defect", (dt_leibniz_defect(f, g, ctx) - non_leibniz_term(f, g, ctx)).is_zero(), fg);
        rec.check("conjugation anti-homomorphism", star_conj_defect(f, g, ctx).is_zero(), fg);
        bool spatial = true;
        for (int i = 1; i <= 3; ++i) spatial = spatial && spatial_derivation_defect(f, g, i, ctx).is_zero();
        rec.check("spatial derivations", spatial, fg);
    }
}

void calculus_suite(SuiteReport& rep, Rng& rng, const SuiteOptions& opts) {
    Recorder rec(rep);
    RandomPolyOptions po;
    po.max_spatial_degree = 3;
    po.max_t_degree = 2;
    po.max_terms = 3;
    RandomPolyOptions fo = po;
    fo.max_spatial_degree = 2;
    fo.max_t_degree = 1;
    fo.max_terms = 2;
    std::uniform_int_distribution<int> deg(0, 2);
    for (int n = 0; n < rep.cases; ++n) {
        const ThetaProfile th = pick_theta(rng, opts, 2);
        const StarContext ctx(th);
        const Poly f = random_poly(rng, po), g = random_poly(rng, po);
        auto fg = [&] { return with_theta(th, {{"f", render(f)}, {"g", render(g)}}); };
        rec.check("d squared", exterior_d(exterior_d(DifferentialForm(f))).is_zero() &&
                                   exterior_d(exterior_d(DifferentialForm(g))).is_zero(), fg);
        rec.check("Leibniz rule for d", d_leibniz_defect(f, g, ctx).is_zero(), fg);

        const int p = deg(rng), q = deg(rng);
        const DifferentialForm a = random_form(rng, p, fo), b = random_form(rng, q, fo),
                               c = random_form(rng, std::min(1, 4 - p - q), fo);
        auto abc = [&] { return with_theta(th, {{"a", render(a)}, {"b", render(b)}, {"c", render(c)}}); };
        rec.check("d squared on forms", exterior_d(exterior_d(a)).is_zero(), abc);
        rec.check("form associativity", form_mul(form_mul(a, b, ctx), c, ctx) == form_mul(a, form_mul(b, c, ctx), ctx),
                  abc);
        DifferentialForm rhs = form_mul(exterior_d(a), b, ctx);
        const DifferentialForm second = form_mul(a, exterior_d(b), ctx);
        rhs += p % 2 == 0 ? second : -second;
        rec.check("graded Leibniz rule", exterior_d(form_mul(a, b, ctx)) == rhs, abc);
        rec.check("form conjugation anti-automorphism",
                  conj(form_mul(a, b, ctx), ctx) == form_mul(conj(b, ctx), conj(a, ctx), ctx) &&
                      conj(conj(a, ctx), ctx) == a,
                  abc);
    }
}

GaugePotential random_potential(Rng& rng, const ThetaProfile& th, const RandomPolyOptions& po) {
    const std::array<Poly, 3> a{random_imaginary_poly(rng, po), random_imaginary_poly(rng, po),
                                random_imaginary_poly(rng, po)};
    return complete_time_component(a, random_imaginary_poly(rng, po), th);
}

std::string potential_text(const GaugePotential& a) {
    return "A0 = " + render(a[0]) + "; A1 = " + render(a[1]) + "; A2 = " + render(a[2]) + "; A3 = " + render(a[3]);
}

void gauge_suite(SuiteReport& rep, Rng& rng, const SuiteOptions& opts) {
    Recorder rec(rep);
    RandomPolyOptions po;
    po.max_spatial_degree = 3;
    po.max_t_degree = 1;
    po.max_total_degree = 3;
    po.max_terms = 3;
    for (int n = 0; n < rep.cases; ++n) {
        const ThetaProfile th = pick_theta(rng, opts, 2);
        const StarContext ctx(th);
        const GaugePotential a = random_potential(rng, th, po);
        const Poly lambda = random_imaginary_poly(rng, po);
        auto show = [&] { return with_theta(th, {{"lambda", render(lambda)}, {"potential", potential_text(a)}}); };
        rec.check("admissible potential", is_admissible(a, th), show);
        rec.check("field strength covariance", covariance_defect(a, lambda, rep.order, ctx).is_zero(), show);
        rec.check("invariance witness remainder", invariance_witness(a, lambda, rep.order, ctx).remainder.is_zero(), show);
    }
}

void scalar_suite(SuiteReport& rep, Rng& rng, const SuiteOptions& opts) {
    Recorder rec(rep);
    const auto& nulls = integer_null_vectors();
    for (int n = 0; n < rep.cases; ++n) {
        const auto& v = nulls[n % nulls.size()];
        const ThetaProfile th = pick_theta(rng, opts, 2);
        const StarContext ctx(th);
        const Poly u = linear_phase(Rational(v[0]), {Rational(v[1]), Rational(v[2]), Rational(v[3])});
        auto show = [&] { return with_theta(th, {{"u", render(u)}}); };
        bool wave = true, powers = true;
        Poly star_power(1), point_power(1);
        for (int k = 1; k <= 6; ++k) {
            star_power = star(star_power, u, ctx);
            point_power = mul(point_power, u);
            powers = powers && star_power == point_power;
            wave = wave && kg_operator(point_power).is_zero();
        }
        rec.check("null plane waves solve the wave equation", wave, show);
        rec.check("star powers are pointwise on the subalgebra", powers, show);
        rec.check("wave density vanishes", kg_density(u, ctx).is_zero(), show);
        const Poly phi = mul(Poly::var(Var::t), pow(u, 2)) + pow(u, 3);
        rec.check("time derivative is a derivation on the subalgebra",
                  subalgebra_derivation_check(phi, pow(u, 2) + Poly::var(Var::t), ctx).is_zero(), show);
        RandomPolyOptions po;
        po.max_spatial_degree = 3;
        po.max_t_degree = 1;
        const Poly r = random_poly(rng, po);
        const Poly dens = kg_density(r, ctx);
        rec.check("density is real", dens == conj(dens), [&] { return with_theta(th, {{"phi", render(r)}}); });
    }
}

std::vector<Rational> small_profile() { return {Rational(0), Rational(1), Rational(1)}; }

ThetaProfile single_direction_theta(Rng& rng) {
    std::uniform_int_distribution<int> c(-3, 3);
    Poly h;
    while (h.is_constant()) h = Poly(c(rng)) * Poly::var(Var::t) + Poly(c(rng)) * Poly::var(Var::t, 2);
    for (;;) {
        const long a = c(rng), b = c(rng), d = c(rng);
        if (a == 0 && b == 0 && d == 0) continue;
        return ThetaProfile(h * CRat(a), h * CRat(b), h * CRat(d));
    }
}

void planewave_suite(SuiteReport& rep, Rng& rng, const SuiteOptions& opts) {
    Recorder rec(rep);
    for (int n = 0; n < rep.cases; ++n) {
        const ThetaProfile th = pick_theta(rng, opts, 2);
        const PlaneWaveSpec spec = random_spec(rng, small_profile(), 50);
        const ActionReport r = effective_action(spec, th);
        auto show = [&] { return describe(spec) + "; " + theta_text(th); };
        rec.check("quadratic action coefficient", r.quad_matches, show);
        if (!r.contraction.is_zero()) rec.check("cubic action coefficient", r.cubic_matches, show);
        rec.check("generic wave has a cubic term", r.contraction.is_zero() || !r.cubic_vanishes, show);
        for (const auto& d : r.diagnostics)
            if (rep.diagnostics.size() < 2 * kMaxCounterexamples) rep.diagnostics.push_back(d);

        const ThetaProfile single = opts.theta ? *opts.theta : single_direction_theta(rng);
        const PlaneWaveSpec pol = random_polarised_spec(rng, single, small_profile(), 50);
        const ActionReport rp = effective_action(pol, single);
        rec.check("polarised wave has no cubic term", rp.cubic_vanishes,
                  [&] { return describe(pol) + "; " + theta_text(single); });
        const auto fs = planewave_field_strength(spec, th);
        rec.check("spatial field strength closed form", fs.spatial_matches && fs.subalgebra_pointwise, show);
        rec.check("mixed field strength closed form", fs.mixed_matches, show);
    }
    PlaneWaveSpec cosine = random_spec(rng, {}, 5);
    cosine.waveform = Waveform::cosine;
    const TrigSeries s = cubic_density_series(cosine);
    rec.check("cosine harmonic spectrum",
              s.harmonics().size() == 2 && s.cos_coefficient(1) == Rational(1, 4) && s.cos_coefficient(3) == Rational(-1, 4),
              [&] { return s.to_string(); });
}

GridField band_limited(Rng& rng, int n, double box, double theta, int band) {
    std::uniform_int_distribution<int> m(-band, band);
    std::normal_distribution<double> c(0, 1);
    std::vector<std::array<int, 2>> ms(6);
    std::vector<Complex> cs(6);
    for (int k = 0; k < 6; ++k) {
        ms[k] = {m(rng), m(rng)};
        cs[k] = Complex(c(rng), c(rng));
    }
    const double kk = 2 * std::numbers::pi / box;
    return GridField::sample(n, box, theta, [&](double x, double y) {
        Complex v;
        for (int k = 0; k < 6; ++k) v += cs[k] * std::polar(1.0, kk * (ms[k][0] * x + ms[k][1] * y));
        return v;
    });
}

void grid_suite(SuiteReport& rep, Rng& rng, const SuiteOptions&) {
    Recorder rec(rep);
    const int n = kDefaultGridSize;
    const double box = kDefaultBoxLength;
    std::uniform_int_distribution<int> mode(-20, 20);
    std::uniform_real_distribution<double> th(0.2, 3.0);
    for (int c = 0; c < rep.cases; ++c) {
        const double theta = th(rng);
        const std::array<int, 2> a{mode(rng), mode(rng)}, b{mode(rng), mode(rng)};
        const double err = phase_law_error(n, box, theta, a, b);
        rec.check("plane-wave phase law", err <= 1e-8, [&] {
            return "a = (" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "); b = (" + std::to_string(b[0]) + "," +
                   std::to_string(b[1]) + "); theta = " + std::to_string(theta) + "; error = " + std::to_string(err);
        });
        const GridField f = band_limited(rng, n, box, theta, 20), g = band_limited(rng, n, box, theta, 20),
                        h = band_limited(rng, n, box, theta, 20);
        const auto tr = grid_trace_defect(f, g);
        rec.check("trace property", tr.relative <= 1e-10, [&] { return "relative defect " + std::to_string(tr.relative); });
        const auto cy = grid_cyclicity_defect(f, g);
        rec.check("cyclicity", cy.relative <= 1e-10, [&] { return "relative defect " + std::to_string(cy.relative); });
        const double as = grid_associativity_defect(f, g, h);
        rec.check("associativity", as <= 1e-8, [&] { return "relative defect " + std::to_string(as); });
    }
    const WindowedPoly wf{Poly::var(Var::x1)}, wg{Poly::var(Var::x2)};
    const double cv = cross_validate_symbolic(wf, wg, 1.0, n, box);
    rec.check("symbolic cross-validation", cv <= 1e-6, [&] { return "max deviation " + std::to_string(cv); });
}

using SuiteFn = void (*)(SuiteReport&, Rng&, const SuiteOptions&);

const std::map<std::string, std::pair<SuiteFn, int>>& registry() {
    static const std::map<std::string, std::pair<SuiteFn, int>> r{
        {"star", {star_suite, 200}},       {"calculus", {calculus_suite, 100}}, {"gauge", {gauge_suite, 50}},
        {"scalar", {scalar_suite, 10}},    {"planewave", {planewave_suite, 20}}, {"grid", {grid_suite, 3}},
    };
    return r;
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.failed == 0; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"star", "calculus", "gauge", "scalar", "planewave", "grid"};
    return names;
}

int default_cases(const std::string& suite) {
    auto it = registry().find(suite);
    if (it == registry().end()) throw std::invalid_argument("unknown suite '" + suite + "'");
    return it->second.second;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
    if (opts.order < 0) throw std::invalid_argument("order must be non-negative");
    SuiteReport rep;
    rep.suite = name;
    rep.seed = opts.seed;
    rep.cases = opts.cases >= 0 ? opts.cases : it->second.second;
    rep.order = opts.order;
    Rng rng(opts.seed);
    const auto start = std::chrono::steady_clock::now();
    it->second.first(rep, rng, opts);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

const std::vector<std::array<long, 4>>& integer_null_vectors() {
    static const std::vector<std::array<long, 4>> v{{3, 1, 2, 2},  {7, 2, 3, 6},   {9, 1, 4, 8},   {9, 4, 4, 7},
                                                    {11, 2, 6, 9}, {11, 6, 6, 7},  {13, 3, 4, 12}, {15, 2, 10, 11},
                                                    {17, 1, 12, 12}, {17, 8, 9, 12}};
    return v;
}

}  // namespace nckit
