#include "nckit/planewave.hpp"

#include <sstream>
#include <stdexcept>

#include "nckit/scalar.hpp"

namespace nckit {
namespace {

const CRat kI = CRat::i();

Rational dot(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::array<Rational, 3> spatial_p(const PlaneWaveSpec& s) { return {s.p[1], s.p[2], s.p[3]}; }

std::array<Rational, 3> cross(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero_vec(const std::array<Rational, 3>& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

std::vector<Rational> differentiate(std::vector<Rational> c, int n) {
    for (int r = 0; r < n; ++r) {
        if (c.empty()) break;
        for (std::size_t j = 1; j < c.size(); ++j) c[j - 1] = c[j] * static_cast<long>(j);
        c.pop_back();
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

// Stand-in profile used for the coefficient extraction of cosine specs.
const std::vector<Rational> kSurrogateProfile{Rational(0), Rational(1), Rational(1), Rational(1)};

PlaneWaveSpec symbolic_view(const PlaneWaveSpec& spec, bool& surrogate) {
    surrogate = spec.waveform == Waveform::cosine;
    if (!surrogate) return spec;
    PlaneWaveSpec s = spec;
    s.waveform = Waveform::polynomial;
    s.profile = kSurrogateProfile;
    return s;
}

std::string str(const Rational& r) { return r.get_str(); }

std::string str(const std::optional<Rational>& r) { return r ? r->get_str() : "undetermined"; }

std::string sign_note(const std::optional<Rational>& computed, const Rational& expected) {
    if (computed && *computed == -expected) return "computed value is the negative of the printed value";
    return "computed value differs from the printed value";
}

}  // namespace

void PlaneWaveSpec::validate() const {
    if (is_zero_vec(k)) throw std::invalid_argument("plane wave: wave vector k must be nonzero");
    if (waveform == Waveform::cosine) {
        if (amplitude == 0) throw std::invalid_argument("plane wave: zero amplitude");
        return;
    }
    bool nonzero = false;
    for (const auto& c : profile) nonzero = nonzero || c != 0;
    if (!nonzero) throw std::invalid_argument("plane wave: zero profile");
}

Poly plane_wave_phase(const PlaneWaveSpec& spec) { return linear_phase(spec.omega, spec.k); }

Poly profile_poly(const PlaneWaveSpec& spec, int derivative) {
    if (spec.waveform != Waveform::polynomial)
        throw std::invalid_argument("profile_poly: symbolic mode needs a polynomial profile");
    if (static_cast<int>(spec.profile.size()) - 1 > kMaxSymbolicProfileDegree)
        throw std::invalid_argument("profile_poly: profile degree exceeds 8");
    return compose_univariate(differentiate(spec.profile, derivative), plane_wave_phase(spec));
}

Poly polarisation_contraction(const PlaneWaveSpec& spec, const ThetaProfile& theta) {
    const ThetaProfile td = theta_dot(theta);
    Poly out;
    for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k)
            if (j != k) out += td(j, k) * CRat(spec.k[j - 1] * spec.p[k]);
    return out;
}

bool is_polarised(const PlaneWaveSpec& spec, const ThetaProfile& theta) {
    return polarisation_contraction(spec, theta).is_zero();
}

GaugePotential build_ansatz(const PlaneWaveSpec& spec, const ThetaProfile& theta) {
    spec.validate();
    const Poly f = profile_poly(spec);
    std::array<Poly, 3> a;
    for (int i = 0; i < 3; ++i) a[i] = f * (kI * CRat(spec.p[i + 1]));
    return complete_time_component(a, f * (kI * CRat(spec.p[0])), theta);
}

PlaneWaveFieldStrength planewave_field_strength(const PlaneWaveSpec& spec, const ThetaProfile& theta) {
    const StarContext ctx(theta);
    PlaneWaveFieldStrength out;
    out.computed = field_strength(build_ansatz(spec, theta), ctx);

    const Poly f = profile_poly(spec), f1 = profile_poly(spec, 1), f2 = profile_poly(spec, 2);
    const Poly tau = polarisation_contraction(spec, theta);
    const CRat half_i = kI * CRat(Rational(1, 2));
    const CRat quarter(Rational(1, 4));

    for (int i = 1; i <= 3; ++i) {
        for (int j = i + 1; j <= 3; ++j)
            out.printed_spatial[spatial_pair_index(i, j)] =
                f1 * (kI * CRat(spec.k[i - 1] * spec.p[j] - spec.p[i] * spec.k[j - 1]));
        const Poly linear = f1 * (kI * CRat(spec.omega * spec.p[i] - spec.k[i - 1] * spec.p[0]));
        const Poly curvature = f2 * tau * (quarter * CRat(spec.k[i - 1]));
        const Poly ffp = mul(f, f1) * tau * CRat(spec.p[i]);
        out.printed_mixed[i - 1] = linear + ffp * half_i + curvature;
        // printed: -(i/2) thetadot^{jk} k_j p_i p_k (f' f + f f')
        out.printed_covariant[i - 1] = linear - ffp * (half_i * CRat(2)) + curvature;
    }
    out.spatial_matches = out.printed_spatial == out.computed.spatial;
    out.mixed_matches = out.printed_mixed == out.computed.mixed;
    out.covariant_matches = out.printed_covariant == out.computed.covariant;

    const std::array<Poly, 3> fam{f, f1, f2};
    out.subalgebra_pointwise = true;
    for (const auto& a : fam)
        for (const auto& b : fam) out.subalgebra_pointwise = out.subalgebra_pointwise && star(a, b, ctx) == mul(a, b);

    auto report = [&](bool ok, const std::string& eq, const std::array<Poly, 3>& printed,
                      const std::array<Poly, 3>& computed) {
        if (ok) return;
        for (int i = 0; i < 3; ++i) {
            if (printed[i] == computed[i]) continue;
            const Poly diff = computed[i] - printed[i];
            out.diagnostics.push_back({eq, "component " + std::to_string(i + 1), printed[i].to_string(),
                                       computed[i].to_string(), "computed - printed = " + diff.to_string()});
        }
    };
    report(out.spatial_matches, "plane-wave spatial field strength F_ij", out.printed_spatial, out.computed.spatial);
    report(out.mixed_matches, "plane-wave mixed field strength F_0i", out.printed_mixed, out.computed.mixed);
    report(out.covariant_matches, "plane-wave covariant field strength F~_0i", out.printed_covariant,
           out.computed.covariant);
    return out;
}

Rational printed_quad_coefficient(const PlaneWaveSpec& spec) {
    const auto p = spatial_p(spec);
    const Rational k2 = dot(spec.k, spec.k), p2 = dot(p, p), kp = dot(spec.k, p);
    const Rational& w = spec.omega;
    const Rational& p0 = spec.p[0];
    return -(k2 * p2 + 2 * w * p0 * kp - kp * kp - w * w * p2 - p0 * p0 * k2);
}

Rational printed_cubic_coefficient(const PlaneWaveSpec& spec) {
    const auto p = spatial_p(spec);
    return -2 * (spec.omega * dot(p, p) - spec.p[0] * dot(spec.k, p));
}

ActionReport effective_action(const PlaneWaveSpec& spec, const ThetaProfile& theta) {
    spec.validate();
    ActionReport r;
    const PlaneWaveSpec sym = symbolic_view(spec, r.profile_surrogate);
    r.quad_expected = printed_quad_coefficient(spec);
    r.cubic_expected = printed_cubic_coefficient(spec);
    r.contraction = polarisation_contraction(spec, theta);

    // density(s) for theta -> s theta; at most quadratic in s on the plane wave,
    // confirmed below at two further sample points.
    auto density = [&](long s) {
        const ThetaProfile th = theta.scaled(CRat(s));
        return action_density(build_ansatz(sym, th), StarContext(th));
    };
    const Poly d0 = density(0), d1 = density(1), d2 = density(2);
    const Poly c2 = (d2 - d1 * CRat(2) + d0) * CRat(Rational(1, 2));
    const Poly c1 = d1 - d0 - c2;
    const bool quadratic_in_scale = density(3) == d0 + c1 * CRat(3) + c2 * CRat(9) &&
                                    density(-1) == d0 - c1 + c2;
    if (!quadratic_in_scale) {
        r.residual_order = 3;
        r.diagnostics.push_back({"plane-wave effective action", "theta-scale structure", "polynomial of degree <= 2",
                                 "higher degree", "density is not quadratic in the scale of theta"});
    } else {
        r.residual_order = c2.is_zero() ? 0 : 2;
    }

    const Poly f = profile_poly(sym), f1 = profile_poly(sym, 1);
    const Poly f1sq = mul(f1, f1);
    if (!f1sq.is_zero()) {
        if (auto q = divide_exact(d0, f1sq); q && q->is_constant() && q->constant_term().im == 0)
            r.quad_coeff = q->constant_term().re;
    }
    r.quad_matches = r.quad_coeff && *r.quad_coeff == r.quad_expected;
    if (f1sq.is_zero()) r.quad_matches = d0.is_zero();

    const Poly cubic_shape = mul(f1sq, f);
    if (!cubic_shape.is_zero()) {
        if (auto g = divide_exact(c1, cubic_shape); g && !g->depends_on_space()) {
            r.cubic_density = *g;
            if (!r.contraction.is_zero()) {
                if (auto c = divide_exact(*g, r.contraction); c && c->is_constant() && c->constant_term().im == 0)
                    r.cubic_coeff = c->constant_term().re;
            }
        } else {
            r.diagnostics.push_back({"plane-wave effective action", "first-order density",
                                     "multiple of f' f' f", c1.to_string(), "first-order density has another shape"});
        }
    }
    r.cubic_vanishes = c1.is_zero();
    if (r.contraction.is_zero())
        r.cubic_matches = r.cubic_vanishes;
    else
        r.cubic_matches = r.cubic_coeff && *r.cubic_coeff == r.cubic_expected;

    if (!f1sq.is_zero() && !r.quad_matches)
        r.diagnostics.push_back({"plane-wave effective action", "quadratic coefficient of (f')^2",
                                 str(r.quad_expected), str(r.quad_coeff), sign_note(r.quad_coeff, r.quad_expected)});
    if (!r.cubic_matches)
        r.diagnostics.push_back({"plane-wave effective action", "cubic coefficient of thetadot^{jk} k_j p_k f' f' f",
                                 str(r.cubic_expected), str(r.cubic_coeff),
                                 r.contraction.is_zero() ? "polarised wave with nonvanishing cubic density"
                                                         : sign_note(r.cubic_coeff, r.cubic_expected)});
    return r;
}

TrigSeries cubic_density_series(const PlaneWaveSpec& spec) {
    if (spec.waveform != Waveform::cosine) throw std::invalid_argument("harmonic spectrum needs a cosine profile");
    const TrigSeries f = TrigSeries::cos(1, spec.amplitude);
    const TrigSeries f1 = f.derivative();
    return f1 * f1 * f;
}

std::vector<std::pair<int, Rational>> harmonic_spectrum(const PlaneWaveSpec& spec, const ThetaProfile& theta) {
    spec.validate();
    const TrigSeries s = cubic_density_series(spec);
    std::vector<std::pair<int, Rational>> out;
    if (is_polarised(spec, theta)) return out;
    for (const auto& [n, h] : s.harmonics())
        if (h.cos != 0) out.emplace_back(n, h.cos);
    return out;
}

PlaneWaveSpec random_spec(Rng& rng, std::vector<Rational> profile, int range) {
    PlaneWaveSpec s;
    s.profile = std::move(profile);
    s.omega = random_rational(rng, range);
    do {
        for (auto& c : s.k) c = random_rational(rng, range);
    } while (is_zero_vec(s.k));
    for (auto& c : s.p) c = random_rational(rng, range);
    return s;
}

PlaneWaveSpec random_polarised_spec(Rng& rng, const ThetaProfile& theta, std::vector<Rational> profile, int range) {
    PlaneWaveSpec s = random_spec(rng, std::move(profile), range);
    // thetadot(t) = sum_n M_n t^n; the contraction vanishes iff p is orthogonal
    // to every w_n = M_n k. Each w_n is orthogonal to k.
    const ThetaProfile td = theta_dot(theta);
    std::vector<std::array<Rational, 3>> ws;
    for (int n = 0; n <= td.t_degree(); ++n) {
        std::array<Rational, 3> w{};
        const Monomial m = Monomial::var(Var::t, n);
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) w[j - 1] += td(j, k).coefficient(m).re * s.k[k - 1];
        if (!is_zero_vec(w)) ws.push_back(w);
    }
    std::optional<std::array<Rational, 3>> normal;
    bool one_dimensional = true;
    for (const auto& w : ws) {
        if (!normal)
            normal = w;
        else if (!is_zero_vec(cross(*normal, w)))
            one_dimensional = false;
    }
    const Rational alpha = random_rational(rng, range);
    std::array<Rational, 3> p{};
    if (!normal) {
        for (auto& c : p) c = random_rational(rng, range);
    } else {
        const auto side = cross(s.k, *normal);
        const Rational beta = one_dimensional ? random_rational(rng, range) : Rational(0);
        for (int i = 0; i < 3; ++i) p[i] = alpha * s.k[i] + beta * side[i];
    }
    for (int i = 0; i < 3; ++i) s.p[i + 1] = p[i];
    return s;
}

ActionIdentityCheck check_action_identity(Rng& rng, int trials, const ThetaProfile& theta,
                                          const std::vector<Rational>& profile) {
    ActionIdentityCheck out;
    for (int n = 0; n < trials; ++n) {
        const PlaneWaveSpec spec = random_spec(rng, profile, 50);
        const ActionReport r = effective_action(spec, theta);
        ++out.trials;
        if (r.quad_matches)
            ++out.quad_matches;
        else {
            if (r.quad_coeff && *r.quad_coeff == -r.quad_expected) ++out.quad_sign_flipped;
            if (!out.first_quad_mismatch) out.first_quad_mismatch = spec;
        }
        if (!r.contraction.is_zero()) {
            ++out.cubic_comparable;
            if (r.cubic_matches)
                ++out.cubic_matches;
            else if (!out.first_cubic_mismatch)
                out.first_cubic_mismatch = spec;
        }
    }
    return out;
}

std::string describe(const PlaneWaveSpec& spec) {
    std::ostringstream os;
    os << "omega=" << spec.omega << " k=(" << spec.k[0] << "," << spec.k[1] << "," << spec.k[2] << ") p=(" << spec.p[0]
       << "," << spec.p[1] << "," << spec.p[2] << "," << spec.p[3] << ")";
    if (spec.waveform == Waveform::cosine)
        os << " f=" << spec.amplitude << "*cos(u)";
    else {
        os << " f=[";
        for (std::size_t i = 0; i < spec.profile.size(); ++i) os << (i ? "," : "") << spec.profile[i];
        os << "]";
    }
    return os.str();
}

}  // namespace nckit
