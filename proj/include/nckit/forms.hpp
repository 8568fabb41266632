#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "nckit/poly.hpp"
#include "nckit/star.hpp"

namespace nckit {

// Basis wedge of {dt, dx1, dx2, dx3} as a bit set: bit mu <-> dx^mu (dx^0 = dt).
// Factors are taken in increasing mu.
class Wedge {
public:
    constexpr Wedge() = default;
    constexpr explicit Wedge(std::uint8_t bits) : bits_(bits & 0xF) {}
    static constexpr Wedge d(int mu) { return Wedge(static_cast<std::uint8_t>(1u << mu)); }

    constexpr std::uint8_t bits() const { return bits_; }
    int degree() const { return __builtin_popcount(bits_); }
    bool contains(int mu) const { return (bits_ >> mu) & 1u; }
    // Largest index in the wedge; -1 for the empty wedge.
    int last() const { return bits_ == 0 ? -1 : 31 - __builtin_clz(bits_); }
    Wedge without(int mu) const { return Wedge(static_cast<std::uint8_t>(bits_ & ~(1u << mu))); }

    std::string to_string() const;

    friend constexpr bool operator==(Wedge a, Wedge b) { return a.bits_ == b.bits_; }
    // Degree first, then the bit pattern.
    friend bool operator<(Wedge a, Wedge b) {
        return a.degree() != b.degree() ? a.degree() < b.degree() : a.bits_ < b.bits_;
    }

private:
    std::uint8_t bits_ = 0;
};

// Sign of dx^A dx^B relative to the sorted wedge A|B; 0 when A and B overlap.
int wedge_sign(Wedge a, Wedge b);

// Element of the deformed exterior algebra in normal order: coefficients are
// written to the LEFT of the basis wedges.
class DifferentialForm {
public:
    DifferentialForm() = default;
    DifferentialForm(const Poly& f) { add(Wedge(), f); }
    DifferentialForm(const Poly& f, Wedge w) { add(w, f); }

    static DifferentialForm basis(int mu) { return DifferentialForm(Poly(1), Wedge::d(mu)); }

    const std::map<Wedge, Poly>& components() const { return comps_; }
    Poly component(Wedge w) const;

    bool is_zero() const { return comps_.empty(); }
    // Highest degree present; -1 for the zero form.
    int degree() const;
    bool is_homogeneous() const;
    bool is_function() const { return comps_.empty() || (comps_.size() == 1 && comps_.begin()->first == Wedge()); }

    void add(Wedge w, const Poly& coef);

    DifferentialForm& operator+=(const DifferentialForm& o);
    DifferentialForm& operator-=(const DifferentialForm& o);
    friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
    friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) { return a -= b; }
    friend DifferentialForm operator-(const DifferentialForm& a);
    friend DifferentialForm operator*(const CRat& c, const DifferentialForm& a);

    DifferentialForm map_coefficients(const std::function<Poly(const Poly&)>& fn) const;

    friend bool operator==(const DifferentialForm& a, const DifferentialForm& b) { return a.comps_ == b.comps_; }
    friend bool operator!=(const DifferentialForm& a, const DifferentialForm& b) { return !(a == b); }

private:
    std::map<Wedge, Poly> comps_;
};

// Normal-orders (basis wedge) * g using dx^j g = g dx^j - (i/2) thetadot^{ij} (d_i g) dt
// and dt g = g dt.
DifferentialForm move_left(const Poly& g, Wedge w, const StarContext& ctx);

// Product in the deformed differential graded algebra. Components above
// degree 4 vanish.
DifferentialForm form_mul(const DifferentialForm& a, const DifferentialForm& b, const StarContext& ctx);

// Exterior derivative: d(f dx^I) = sum_mu (d_mu f) dx^mu dx^I.
DifferentialForm exterior_d(const DifferentialForm& a);

// d(f*g) - (df) g - f (dg) for functions f, g.
DifferentialForm d_leibniz_defect(const Poly& f, const Poly& g, const StarContext& ctx);

// Conjugation with selfadjoint dx^mu: the involutive anti-automorphism
// (f dx^I)* = (dx^I)* conj(f), re-expressed in normal order.
DifferentialForm conj(const DifferentialForm& a, const StarContext& ctx);

// Sorted basis wedge a|b with its sign.
DifferentialForm wedge(const DifferentialForm& a, Wedge w);

}  // namespace nckit
