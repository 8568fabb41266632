#include "nckit/gauge.hpp"

#include <stdexcept>

namespace nckit {

namespace {

const CRat kHalfI = CRat::i() * CRat(Rational(1, 2));

// sum_{k,j} thetadot^{kj} X(k, j), skipping vanishing entries.
template <typename Fn>
Poly contract_theta_dot(const StarContext& ctx, Fn&& term) {
    const auto& td = ctx.theta_dot();
    Poly sum;
    for (int k = 1; k <= 3; ++k)
        for (int j = 1; j <= 3; ++j)
            if (!td(k, j).is_zero()) sum += mul(td(k, j), term(k, j), ctx.eps_max());
    return sum;
}

std::array<Poly, 3> spatial_strength(const std::array<Poly, 4>& a, const StarContext& ctx) {
    std::array<Poly, 3> out;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            out[spatial_pair_index(i, j)] =
                ctx.reduce(partial(a[j], i) - partial(a[i], j)) + star_commutator(a[i], a[j], ctx);
    return out;
}

struct Transformed {
    GaugeTransform gt;
    StarContext ctx;
    FieldStrength original;
    FieldStrength transformed;
};

Transformed transform_all(const GaugePotential& a, const Poly& lambda, int order, const StarContext& base) {
    const StarContext ctx = base.with_cutoff(order);
    GaugeTransform gt = gauge_transform_potential(a, lambda, order, ctx);
    FieldStrength orig = field_strength(a, ctx);

    FieldStrength out;
    out.spatial = spatial_strength({Poly(), gt.A_spatial[0], gt.A_spatial[1], gt.A_spatial[2]}, ctx);
    const Poly& U = gt.U;
    const Poly& Ud = gt.U_dag;
    for (int i = 1; i <= 3; ++i) {
        Poly f0i = star(star(Ud, orig.F0i(i), ctx), U, ctx);
        f0i += contract_theta_dot(ctx, [&](int k, int j) {
                   return star(star(Ud, orig.Fij(i, j), ctx), partial(U, k), ctx);
               }) *
               kHalfI;
        out.mixed[i - 1] = f0i;
    }
    out.covariant = covariantise(out.mixed, out, gt.A_spatial, ctx);
    return {std::move(gt), ctx, std::move(orig), std::move(out)};
}

}  // namespace

int spatial_pair_index(int i, int j) {
    if (i == 1 && j == 2) return 0;
    if (i == 1 && j == 3) return 1;
    if (i == 2 && j == 3) return 2;
    throw std::out_of_range("spatial_pair_index: need 1 <= i < j <= 3");
}

Poly FieldStrength::Fij(int i, int j) const {
    if (i == j) return Poly();
    if (i < j) return spatial[spatial_pair_index(i, j)];
    return -spatial[spatial_pair_index(j, i)];
}

Poly time_component_residual(const GaugePotential& a, const ThetaProfile& theta) {
    const ThetaProfile td = theta.derivative();
    Poly rhs;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) rhs += td(i, j) * partial(a[j], i);
    return a[0] + conj(a[0]) - rhs * kHalfI;
}

bool is_admissible(const GaugePotential& a, const ThetaProfile& theta) {
    for (int i = 1; i <= 3; ++i)
        if (!is_anti_selfadjoint(a[i])) return false;
    return time_component_residual(a, theta).is_zero();
}

GaugePotential complete_time_component(const std::array<Poly, 3>& a, const Poly& a0_im, const ThetaProfile& theta) {
    for (const auto& p : a)
        if (!is_anti_selfadjoint(p)) throw std::invalid_argument("spatial gauge components must be imaginary");
    if (!is_anti_selfadjoint(a0_im)) throw std::invalid_argument("imaginary part of A_0 must be imaginary");
    const ThetaProfile td = theta.derivative();
    GaugePotential out;
    Poly real_part;
    for (int i = 1; i <= 3; ++i) {
        out[i] = a[i - 1];
        for (int j = 1; j <= 3; ++j) real_part += td(i, j) * partial(a[j - 1], i);
    }
    out[0] = a0_im + real_part * (CRat::i() * CRat(Rational(1, 4)));
    return out;
}

std::array<Poly, 3> covariantise(const std::array<Poly, 3>& mixed, const FieldStrength& spatial_source,
                                 const std::array<Poly, 3>& spatial_potential, const StarContext& ctx) {
    std::array<Poly, 3> out;
    for (int i = 1; i <= 3; ++i) {
        Poly corr = contract_theta_dot(ctx, [&](int k, int j) {
            return star(spatial_source.Fij(i, j), spatial_potential[k - 1], ctx);
        });
        out[i - 1] = mixed[i - 1] - corr * kHalfI;
    }
    return out;
}

FieldStrength field_strength(const GaugePotential& a, const StarContext& ctx) {
    FieldStrength out;
    out.spatial = spatial_strength(a.A, ctx);
    for (int i = 1; i <= 3; ++i) {
        Poly f = ctx.reduce(partial(a[i], 0) - partial(a[0], i)) + star_commutator(a[0], a[i], ctx);
        Poly corr = contract_theta_dot(ctx, [&](int m, int n) { return star(a[n], partial(a[i], m), ctx); });
        out.mixed[i - 1] = f - corr * kHalfI;
    }
    std::array<Poly, 3> spatial_potential{a[1], a[2], a[3]};
    out.covariant = covariantise(out.mixed, out, spatial_potential, ctx);
    return out;
}

GaugeTransform gauge_transform_potential(const GaugePotential& a, const Poly& lambda, int order,
                                         const StarContext& base) {
    if (!is_anti_selfadjoint(lambda)) throw std::invalid_argument("gauge parameter must be anti-selfadjoint");
    const StarContext ctx = base.with_cutoff(order);
    GaugeTransform out;
    out.order = order;
    out.U = star_exp(lambda, order, ctx);
    out.U_dag = conj(out.U);
    for (int k = 1; k <= 3; ++k)
        out.A_spatial[k - 1] =
            star(star(out.U_dag, a[k], ctx), out.U, ctx) + star(out.U_dag, partial(out.U, k), ctx);
    return out;
}

bool CovarianceDefect::is_zero() const {
    for (const auto& p : spatial)
        if (!p.is_zero()) return false;
    for (const auto& p : covariant)
        if (!p.is_zero()) return false;
    return true;
}

CovarianceDefect covariance_defect(const GaugePotential& a, const Poly& lambda, int order, const StarContext& base) {
    Transformed tr = transform_all(a, lambda, order, base);
    const auto& ctx = tr.ctx;
    const Poly& U = tr.gt.U;
    const Poly& Ud = tr.gt.U_dag;
    CovarianceDefect out;
    for (int k = 0; k < 3; ++k) {
        out.spatial[k] = tr.transformed.spatial[k] - star(star(Ud, tr.original.spatial[k], ctx), U, ctx);
        out.covariant[k] = tr.transformed.covariant[k] - star(star(Ud, tr.original.covariant[k], ctx), U, ctx);
    }
    return out;
}

Poly action_density(const FieldStrength& f, const StarContext& ctx) {
    Poly d;
    for (const auto& fij : f.spatial) d += star(fij, conj(fij), ctx);
    for (const auto& ft : f.covariant) d -= star(ft, conj(ft), ctx);
    return d;
}

Poly action_density(const GaugePotential& a, const StarContext& ctx) { return action_density(field_strength(a, ctx), ctx); }

InvarianceWitness invariance_witness(const GaugePotential& a, const Poly& lambda, int order, const StarContext& base) {
    Transformed tr = transform_all(a, lambda, order, base);
    const auto& ctx = tr.ctx;
    const Poly d = action_density(tr.original, ctx);
    const Poly d_prime = action_density(tr.transformed, ctx);
    InvarianceWitness w;
    w.left = tr.gt.U_dag;
    w.right = star(d, tr.gt.U, ctx);
    w.remainder = d_prime - d - star_commutator(w.left, w.right, ctx);
    return w;
}

std::array<Poly, 3> spatial_density_covariance_defect(const GaugePotential& a, const Poly& lambda, int order,
                                                      const StarContext& base) {
    Transformed tr = transform_all(a, lambda, order, base);
    const auto& ctx = tr.ctx;
    std::array<Poly, 3> out;
    for (int k = 0; k < 3; ++k) {
        const Poly& f = tr.original.spatial[k];
        const Poly& fp = tr.transformed.spatial[k];
        out[k] = star(star(tr.gt.U_dag, star(f, conj(f), ctx), ctx), tr.gt.U, ctx) - star(fp, conj(fp), ctx);
    }
    return out;
}

}  // namespace nckit
