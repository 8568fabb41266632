#include "nckit/scalar.hpp"

#include <stdexcept>

namespace nckit {

Poly metric(const DifferentialForm& a, const DifferentialForm& b, const StarContext& ctx) {
    for (const auto* f : {&a, &b})
        for (const auto& [w, c] : f->components())
            if (w.degree() != 1) throw std::invalid_argument("metric: arguments must be one-forms");
    Poly out;
    for (int mu = 0; mu < 4; ++mu) {
        Poly fa = a.component(Wedge::d(mu));
        Poly gb = b.component(Wedge::d(mu));
        if (fa.is_zero() || gb.is_zero()) continue;
        Poly s = star(fa, gb, ctx);
        out += MetricSignature::eta[mu] > 0 ? s : -s;
    }
    return out;
}

Poly kg_density(const Poly& phi, const StarContext& ctx) {
    return metric(exterior_d(DifferentialForm(phi)), exterior_d(DifferentialForm(conj(phi))), ctx);
}

Poly kg_operator(const Poly& phi) {
    Poly out;
    for (int mu = 0; mu < 4; ++mu) {
        Poly dd = partial(partial(phi, mu), mu);
        out += MetricSignature::eta[mu] > 0 ? dd : -dd;
    }
    return out;
}

Poly subalgebra_derivation_check(const Poly& phi, const Poly& psi, const StarContext& ctx) {
    return dt_leibniz_defect(phi, psi, ctx);
}

Poly linear_phase(const Rational& omega, const std::array<Rational, 3>& k) {
    Poly u = Poly::var(Var::t) * CRat(omega);
    for (int i = 0; i < 3; ++i) u += Poly::var(static_cast<Var>(i + 1)) * CRat(k[i]);
    return u;
}

Poly compose_univariate(const std::vector<Rational>& coefficients, const Poly& u) {
    Poly out;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) out = mul(out, u) + Poly(CRat(*it));
    return out;
}

}  // namespace nckit
