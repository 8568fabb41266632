#include "nckit/random.hpp"

#include <algorithm>

namespace nckit {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

int nonzero(Rng& rng, int range) {
    int v = 0;
    while (v == 0) v = uniform(rng, -range, range);
    return v;
}

Monomial random_monomial(Rng& rng, int max_spatial, int max_t, int max_total) {
    std::array<int, kNumVars> e{};
    e[0] = uniform(rng, 0, max_total >= 0 ? std::min(max_t, max_total) : max_t);
    const int room = max_total >= 0 ? std::min(max_spatial, max_total - e[0]) : max_spatial;
    const int deg = uniform(rng, 0, room);
    for (int k = 0; k < deg; ++k) ++e[uniform(rng, 1, 3)];
    return Monomial(e);
}

}  // namespace

Rational random_rational(Rng& rng, int range) {
    Rational r(uniform(rng, -range, range), uniform(rng, 1, 3));
    r.canonicalize();
    return r;
}

Poly random_poly(Rng& rng, const RandomPolyOptions& opts) {
    std::vector<Term> terms;
    const int n = uniform(rng, 1, opts.max_terms);
    for (int k = 0; k < n; ++k) {
        CRat c(Rational(nonzero(rng, opts.coef_range)));
        if (opts.complex_coefs && uniform(rng, 0, 1) == 1) c.im = uniform(rng, -opts.coef_range, opts.coef_range);
        terms.push_back({random_monomial(rng, opts.max_spatial_degree, opts.max_t_degree, opts.max_total_degree), c});
    }
    return Poly::from_terms(std::move(terms));
}

Poly random_imaginary_poly(Rng& rng, const RandomPolyOptions& opts) {
    RandomPolyOptions real = opts;
    real.complex_coefs = false;
    return random_poly(rng, real) * CRat::i();
}

ThetaProfile random_theta(Rng& rng, int max_t_degree, int coef_range) {
    auto entry = [&]() {
        std::vector<Term> terms;
        for (int d = 0; d <= max_t_degree; ++d) {
            int c = uniform(rng, -coef_range, coef_range);
            if (c != 0) terms.push_back({Monomial::var(Var::t, d), CRat(c)});
        }
        return Poly::from_terms(std::move(terms));
    };
    for (;;) {
        ThetaProfile th(entry(), entry(), entry());
        if (max_t_degree == 0 ? !th.is_zero() : !th.is_constant()) return th;
    }
}

}  // namespace nckit
