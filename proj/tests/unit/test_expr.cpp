#include <doctest.h>

#include <nckit/config.hpp>
#include <nckit/expr.hpp>
#include <nckit/random.hpp>
#include <nckit/suites.hpp>

#include "helpers.hpp"

using namespace nckit;
using namespace testing_helpers;

namespace {

StarContext theta12(const Poly& p) { return StarContext(ThetaProfile(p, Poly(), Poly())); }

int error_column(const std::string& src) {
    try {
        parse(src);
    } catch (const ParseError& e) {
        return e.column();
    }
    return -1;
}

}  // namespace

TEST_CASE("parse and reduce") {
    const auto c = theta12(t());
    CHECK(reduce("x1*x2 - x2*x1", c) == "i*t");
    CHECK(reduce("~ (x1*x2)", c) == "x1.x2 - 1/2*i*t");
    CHECK(reduce("d(x1)", c) == "dx1");
    CHECK(reduce("x1.x2 - x2.x1", c) == "0");
    CHECK(reduce("D0(x1*x2)", c) == "1/2*i");
    CHECK(reduce("D1(x1^3)", c) == "3*x1^2");
    CHECK(reduce("dx1*x2", c) == "1/2*i*dt + x2*dx1");
    CHECK(reduce("dx2*dx1", c) == "-dx1*dx2");
    CHECK(reduce("d(d(x1*x2))", c) == "0");
    CHECK(reduce("3/4 + 0.25", c) == "1");
    CHECK(reduce("(1 + 2*i).x1 - x1", c) == "2*i*x1");
    CHECK(reduce("-(x1 - x2)", c) == "x2 - x1");
    CHECK(reduce("(x1 + t)*dx2*dt", c) == "(-x1 - t)*dt*dx2");
    CHECK(reduce("x1 *\n x2", c) == "x1.x2 + 1/2*i*t");
}

TEST_CASE("parse errors") {
    CHECK(error_column("x1*") == 4);
    CHECK(error_column("x1 + y") == 6);
    CHECK(error_column("(x1") == 4);
    CHECK(error_column("x1 $ x2") == 4);
    CHECK(error_column("D4(x1)") == 1);
    CHECK(error_column("x1^x2") == 4);
    CHECK(error_column("1/") == 2);
    try {
        parse("x1 +\n  * x2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
    const auto c = theta12(t());
    CHECK_THROWS_AS(reduce("dx1 . x1", c), GradingError);
    CHECK_THROWS_AS(reduce("D0(dx1)", c), GradingError);
    CHECK_THROWS_AS(reduce("dt^2", c), GradingError);
}

TEST_CASE("render round trip") {
    Rng rng(17);
    RandomPolyOptions opts;
    opts.max_spatial_degree = 3;
    opts.max_t_degree = 2;
    opts.max_terms = 5;
    const auto c = theta12(pow(t(), 2) + Poly(1));
    for (int n = 0; n < 50; ++n) {
        Poly p = random_poly(rng, opts) * CRat(Rational(1, 1 + n % 4));
        const std::string text = render(p);
        CHECK(evaluate(*parse(text), c) == DifferentialForm(p));
        CHECK(render(evaluate(*parse(text), c)) == text);

        DifferentialForm f(p, Wedge(static_cast<std::uint8_t>(n % 16)));
        f.add(Wedge(static_cast<std::uint8_t>((n * 7) % 16)), random_poly(rng, opts));
        const std::string ft = render(f);
        CHECK(evaluate(*parse(ft), c) == f);
        CHECK(render(evaluate(*parse(ft), c)) == ft);
    }
    CHECK(render(Poly()) == "0");
    CHECK(render(CRat(Rational(-3, 2), Rational(1))) == "(-3/2 + i)");
}

TEST_CASE("reduce is deterministic") {
    const auto c = StarContext(ThetaProfile(t(), pow(t(), 2), Poly(3)));
    const std::string src = "~(x1*x2*x3) + d(x1*x2) * dx3 - D0(x2*x3*x1)";
    const std::string first = reduce(src, c);
    for (int n = 0; n < 5; ++n) CHECK(reduce(src, StarContext(ThetaProfile(t(), pow(t(), 2), Poly(3)))) == first);
}

TEST_CASE("config files") {
    const auto cfg = ConfigFile::parse_string(
        "# sample\n[theta]\nt12 = t\nt23 = 1/2*t^2  # comment\n\n[planewave]\nomega = 3\nk = 1 2 2\n"
        "p = 0 2 -1 0\nprofile = 0 1 1\n[grid]\nn = 64\ntheta = 0.5\n");
    const ThetaProfile th = ThetaConfig::from(cfg).profile();
    CHECK(th(1, 2) == t());
    CHECK(th(2, 3) == pow(t(), 2) * CRat(Rational(1, 2)));
    CHECK(th(1, 3).is_zero());
    const PlaneWaveSpec s = planewave_spec_from(cfg);
    CHECK(s.omega == 3);
    CHECK(s.k[2] == 2);
    CHECK(s.p[2] == -1);
    CHECK(s.profile.size() == 3);
    const GridParams g = GridParams::from(cfg);
    CHECK(g.n == 64);
    CHECK(g.theta == 0.5);

    CHECK_THROWS_AS(ThetaConfig::from(ConfigFile::parse_string("[theta]\nt12 = x1\n")), ConfigError);
    CHECK_THROWS_AS(ThetaConfig::from(ConfigFile::parse_string("[theta]\nt21 = t\n")), ConfigError);
    CHECK_THROWS_AS(ConfigFile::parse_string("t12 = t\n"), ConfigError);
    CHECK_THROWS_AS(ConfigFile::parse_string("[theta\n"), ConfigError);
    CHECK_THROWS_AS(planewave_spec_from(ConfigFile::parse_string("[planewave]\nomega = 1\nk = 0 0 0\np = 1 1 1 1\n")),
                    ConfigError);
    CHECK_THROWS_AS(planewave_spec_from(ConfigFile::parse_string("[planewave]\nomega = 1\nk = 1 0\np = 1 1 1 1\n")),
                    ConfigError);
    CHECK_THROWS_AS(GridParams::from(ConfigFile::parse_string("[grid]\nn = 100\n")), ConfigError);
    const auto cosine = planewave_spec_from(
        ConfigFile::parse_string("[planewave]\nomega = 1\nk = 1 0 0\np = 0 0 1 0\nprofile = cos\namplitude = 2\n"));
    CHECK(cosine.waveform == Waveform::cosine);
    CHECK(cosine.amplitude == 2);
}

TEST_CASE("suite runner") {
    CHECK_THROWS_AS(run_suite("unknown", {}), std::invalid_argument);
    CHECK(suite_names().size() == 6);
    SuiteOptions o;
    o.seed = 42;
    o.cases = 5;
    for (const char* name : {"star", "calculus", "scalar"}) {
        const SuiteReport r = run_suite(name, o);
        CHECK(r.passed());
        CHECK(r.cases == 5);
        CHECK_FALSE(r.properties.empty());
        for (const auto& p : r.properties) CHECK(p.passed + p.failed > 0);
    }
    o.cases = 2;
    CHECK(run_suite("gauge", o).passed());
    CHECK(integer_null_vectors().size() == 10);
    for (const auto& v : integer_null_vectors()) CHECK(v[0] * v[0] == v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
}
