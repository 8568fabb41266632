#include "nckit/star.hpp"

#include <algorithm>
#include <stdexcept>

namespace nckit {

namespace {

bool t_only(const Poly& p) {
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [](const Term& t) { return t.mono.exponent(Var::t) == t.mono.degree(); });
}

MultiIndex unit(int i) {
    MultiIndex m{0, 0, 0};
    m[i] = 1;
    return m;
}

MultiIndex plus(MultiIndex a, const MultiIndex& b) {
    for (int k = 0; k < 3; ++k) a[k] += b[k];
    return a;
}

}  // namespace

ThetaProfile::ThetaProfile(Poly t12, Poly t13, Poly t23) {
    for (const Poly* p : {&t12, &t13, &t23})
        if (!t_only(*p)) throw std::invalid_argument("theta entries must be polynomials in t only");
    m_[0][1] = t12;
    m_[1][0] = -t12;
    m_[0][2] = t13;
    m_[2][0] = -t13;
    m_[1][2] = t23;
    m_[2][1] = -t23;
}

ThetaProfile ThetaProfile::from_matrix(const std::array<std::array<Poly, 3>, 3>& m) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (m[i][j] != -m[j][i]) throw std::invalid_argument("theta must be antisymmetric");
    return ThetaProfile(m[0][1], m[0][2], m[1][2]);
}

bool ThetaProfile::is_zero() const { return m_[0][1].is_zero() && m_[0][2].is_zero() && m_[1][2].is_zero(); }

bool ThetaProfile::is_constant() const {
    return m_[0][1].is_constant() && m_[0][2].is_constant() && m_[1][2].is_constant();
}

int ThetaProfile::t_degree() const {
    return std::max({m_[0][1].degree(), m_[0][2].degree(), m_[1][2].degree()});
}

ThetaProfile ThetaProfile::derivative() const {
    return ThetaProfile(partial(m_[0][1], 0), partial(m_[0][2], 0), partial(m_[1][2], 0));
}

ThetaProfile ThetaProfile::scaled(const CRat& s) const {
    return ThetaProfile(m_[0][1] * s, m_[0][2] * s, m_[1][2] * s);
}

ThetaProfile theta_dot(const ThetaProfile& theta) { return theta.derivative(); }

StarContext::StarContext(ThetaProfile theta, std::optional<int> eps_cutoff)
    : theta_(std::move(theta)),
      theta_dot_(theta_.derivative()),
      eps_cutoff_(eps_cutoff),
      cache_(std::make_shared<Cache>()) {
    if (eps_cutoff_ && *eps_cutoff_ < 0) throw std::invalid_argument("eps cutoff must be non-negative");
}

StarContext StarContext::with_cutoff(std::optional<int> cutoff) const {
    StarContext out(*this);
    if (cutoff && *cutoff < 0) throw std::invalid_argument("eps cutoff must be non-negative");
    out.eps_cutoff_ = cutoff;
    return out;
}

const BidiffOrder& StarContext::bidifferential(int n) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto& orders = cache_->orders;
    if (orders.empty()) {
        auto zero = std::make_unique<BidiffOrder>();
        (*zero)[MultiIndex{0, 0, 0}].push_back({MultiIndex{0, 0, 0}, Poly(1)});
        orders.push_back(std::move(zero));
    }
    while (static_cast<int>(orders.size()) <= n) {
        const int order = static_cast<int>(orders.size());
        // Multiply the previous order by (i/(2 order)) theta^{ij} xi_i eta_j.
        const CRat scale = CRat::i() * CRat(Rational(1, 2 * order));
        std::map<std::pair<MultiIndex, MultiIndex>, Poly> acc;
        for (const auto& [alpha, row] : *orders.back()) {
            for (const auto& term : row) {
                for (int i = 0; i < 3; ++i) {
                    for (int j = 0; j < 3; ++j) {
                        const Poly& th = theta_(i + 1, j + 1);
                        if (th.is_zero()) continue;
                        acc[{plus(alpha, unit(i)), plus(term.beta, unit(j))}] += mul(term.coef, th) * scale;
                    }
                }
            }
        }
        auto next = std::make_unique<BidiffOrder>();
        for (auto& [key, coef] : acc)
            if (!coef.is_zero()) (*next)[key.first].push_back({key.second, std::move(coef)});
        orders.push_back(std::move(next));
    }
    return *orders[n];
}

Poly star(const Poly& f, const Poly& g, const StarContext& ctx) {
    const int eps_max = ctx.eps_max();
    if (f.is_zero() || g.is_zero()) return Poly();
    if (ctx.theta().is_zero()) return mul(f, g, eps_max);
    PolyAccumulator result;
    result.add_product(f, g, eps_max);

    const int nmax = std::min(f.spatial_degree(), g.spatial_degree());
    std::map<MultiIndex, Poly> dg;
    auto deriv_g = [&](const MultiIndex& beta) -> const Poly& {
        auto it = dg.find(beta);
        if (it == dg.end()) it = dg.emplace(beta, spatial_derivative(g, beta)).first;
        return it->second;
    };
    for (int n = 1; n <= nmax; ++n) {
        const BidiffOrder& op = ctx.bidifferential(n);
        if (op.empty()) break;
        for (const auto& [alpha, row] : op) {
            Poly df = spatial_derivative(f, alpha);
            if (df.is_zero()) continue;
            PolyAccumulator right;
            for (const auto& term : row) {
                const Poly& d = deriv_g(term.beta);
                if (!d.is_zero()) right.add_product(term.coef, d, eps_max);
            }
            result.add_product(df, right.build(), eps_max);
        }
    }
    return result.build();
}

Poly star_commutator(const Poly& f, const Poly& g, const StarContext& ctx) {
    return star(f, g, ctx) - star(g, f, ctx);
}

Poly non_leibniz_term(const Poly& f, const Poly& g, const StarContext& ctx) {
    const auto& td = ctx.theta_dot();
    Poly sum;
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            if (td(i, j).is_zero()) continue;
            sum += mul(td(i, j), star(partial(f, i), partial(g, j), ctx), ctx.eps_max());
        }
    }
    return sum * (CRat::i() * CRat(Rational(1, 2)));
}

Poly dt_leibniz_defect(const Poly& f, const Poly& g, const StarContext& ctx) {
    return partial(star(f, g, ctx), 0) - star(partial(f, 0), g, ctx) - star(f, partial(g, 0), ctx);
}

Poly star_conj_defect(const Poly& f, const Poly& g, const StarContext& ctx) {
    return conj(star(f, g, ctx)) - star(conj(g), conj(f), ctx);
}

Poly spatial_derivation_defect(const Poly& f, const Poly& g, int i, const StarContext& ctx) {
    if (i < 1 || i > 3) throw std::out_of_range("spatial index must be 1..3");
    return partial(star(f, g, ctx), i) - star(partial(f, i), g, ctx) - star(f, partial(g, i), ctx);
}

bool is_anti_selfadjoint(const Poly& p) { return conj(p) == -p; }

Poly star_exp(const Poly& lambda, int order, const StarContext& ctx) {
    if (order < 0) throw std::invalid_argument("star_exp: order must be non-negative");
    if (!is_anti_selfadjoint(lambda)) throw std::invalid_argument("star_exp: parameter is not anti-selfadjoint");
    if (lambda.depends_on(Var::eps)) throw std::invalid_argument("star_exp: parameter must not depend on eps");

    const StarContext exact = ctx.with_cutoff(std::nullopt);
    Poly u(1);
    Poly power(1);
    Rational factorial(1);
    for (int n = 1; n <= order; ++n) {
        power = star(power, lambda, exact);
        factorial *= n;
        u += power * CRat(Rational(1) / factorial) * Poly::var(Var::eps, n);
    }
    return u;
}

}  // namespace nckit
