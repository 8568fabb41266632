#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "nckit/poly.hpp"

namespace nckit {

// Antisymmetric 3x3 matrix theta^{ij}(t) of polynomials in t alone.
// Indices are spatial, 1..3.
class ThetaProfile {
public:
    ThetaProfile() = default;
    // Upper-triangle entries theta^{12}, theta^{13}, theta^{23}.
    ThetaProfile(Poly t12, Poly t13, Poly t23);
    // Full matrix; throws std::invalid_argument unless antisymmetric and t-only.
    static ThetaProfile from_matrix(const std::array<std::array<Poly, 3>, 3>& m);

    static ThetaProfile zero() { return {}; }

    const Poly& operator()(int i, int j) const { return m_[i - 1][j - 1]; }

    bool is_zero() const;
    bool is_constant() const;
    int t_degree() const;

    // Entry-wise d/dt.
    ThetaProfile derivative() const;

    ThetaProfile scaled(const CRat& s) const;

    friend bool operator==(const ThetaProfile& a, const ThetaProfile& b) { return a.m_ == b.m_; }

private:
    std::array<std::array<Poly, 3>, 3> m_{};
};

ThetaProfile theta_dot(const ThetaProfile& theta);

using MultiIndex = std::array<int, 3>;

// One term c(t) d^alpha (x) d^beta of the bidifferential operator
// (1/n!) (i/2)^n (theta^{ij} d_i (x) d_j)^n.
struct BidiffTerm {
    MultiIndex beta;
    Poly coef;
};

using BidiffOrder = std::map<MultiIndex, std::vector<BidiffTerm>>;

// Deformation data shared by the symbolic products. The bidifferential
// operators are built lazily; the cache is internally synchronised.
class StarContext {
public:
    StarContext() : StarContext(ThetaProfile::zero()) {}
    explicit StarContext(ThetaProfile theta, std::optional<int> eps_cutoff = std::nullopt);

    const ThetaProfile& theta() const { return theta_; }
    const ThetaProfile& theta_dot() const { return theta_dot_; }
    std::optional<int> eps_cutoff() const { return eps_cutoff_; }
    int eps_max() const { return eps_cutoff_ ? *eps_cutoff_ : -1; }

    StarContext with_cutoff(std::optional<int> cutoff) const;

    Poly reduce(const Poly& p) const { return eps_cutoff_ ? truncate_eps(p, *eps_cutoff_) : p; }

    // Terms of order n grouped by the multi-index acting on the left factor.
    const BidiffOrder& bidifferential(int n) const;

private:
    struct Cache {
        std::mutex mutex;
        std::vector<std::unique_ptr<BidiffOrder>> orders;
    };

    ThetaProfile theta_;
    ThetaProfile theta_dot_;
    std::optional<int> eps_cutoff_;
    std::shared_ptr<Cache> cache_;
};

// f * g = exp((i/2) theta^{ij}(t) d_i^x d_j^y) f(x) g(y)|_{y=x}; the series
// terminates at the smaller spatial degree of the two factors.
Poly star(const Poly& f, const Poly& g, const StarContext& ctx);

Poly star_commutator(const Poly& f, const Poly& g, const StarContext& ctx);

// (i/2) thetadot^{ij} (d_i f) * (d_j g).
Poly non_leibniz_term(const Poly& f, const Poly& g, const StarContext& ctx);

// d_t(f*g) - (d_t f)*g - f*(d_t g).
Poly dt_leibniz_defect(const Poly& f, const Poly& g, const StarContext& ctx);

// conj(f*g) - conj(g)*conj(f).
Poly star_conj_defect(const Poly& f, const Poly& g, const StarContext& ctx);

// d_i(f*g) - (d_i f)*g - f*(d_i g) for spatial i in 1..3.
Poly spatial_derivation_defect(const Poly& f, const Poly& g, int i, const StarContext& ctx);

// U = sum_{n<=order} (eps lambda)^{*n} / n!, reduced mod eps^{order+1}.
// Requires conj(lambda) == -lambda and no eps dependence.
Poly star_exp(const Poly& lambda, int order, const StarContext& ctx);

bool is_anti_selfadjoint(const Poly& p);

}  // namespace nckit
