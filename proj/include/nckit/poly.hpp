#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nckit/crat.hpp"

namespace nckit {

// Variables in monomial order: t < x1 < x2 < x3 < eps.
enum class Var : int { t = 0, x1 = 1, x2 = 2, x3 = 3, eps = 4 };

inline constexpr int kNumVars = 5;
inline constexpr int kSpatialDim = 3;

// Packed exponent vector. Ten bits per variable plus the total degree in the
// high bits, so integer comparison of keys is graded lexicographic order and
// monomial multiplication is key addition.
class Monomial {
public:
    static constexpr int kBits = 10;
    static constexpr std::uint64_t kMask = (1u << kBits) - 1;
    static constexpr int kDegShift = kNumVars * kBits;
    static constexpr int kMaxExponent = static_cast<int>(kMask);

    constexpr Monomial() = default;
    explicit Monomial(const std::array<int, kNumVars>& exps);

    static Monomial var(Var v, int power = 1);
    static constexpr Monomial from_key(std::uint64_t key) {
        Monomial m;
        m.key_ = key;
        return m;
    }

    int exponent(Var v) const {
        return static_cast<int>((key_ >> (kBits * static_cast<int>(v))) & kMask);
    }
    int degree() const { return static_cast<int>(key_ >> kDegShift); }
    int spatial_degree() const { return exponent(Var::x1) + exponent(Var::x2) + exponent(Var::x3); }
    std::array<int, kNumVars> exponents() const;

    std::uint64_t key() const { return key_; }

    friend Monomial operator*(Monomial a, Monomial b);
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::uint64_t key_ = 0;
};

struct Term {
    Monomial mono;
    CRat coef;

    friend bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coef == b.coef; }
};

// Multivariate polynomial in (t, x1, x2, x3, eps) over the Gaussian rationals.
// Terms are kept sorted ascending in graded-lex order with no zero coefficients,
// so equality is structural.
class Poly {
public:
    Poly() = default;
    Poly(long c) : Poly(CRat(c)) {}
    Poly(const CRat& c);
    Poly(const CRat& c, Monomial m);

    static Poly var(Var v, int power = 1) { return Poly(CRat(1), Monomial::var(v, power)); }
    static Poly i() { return Poly(CRat::i()); }

    // Builds a canonical polynomial from arbitrary (possibly repeated, zero) terms.
    static Poly from_terms(std::vector<Term> terms);
    // Terms already strictly ascending with nonzero coefficients.
    static Poly from_sorted_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    CRat constant_term() const;
    CRat coefficient(Monomial m) const;

    int degree() const;
    int spatial_degree() const;
    int degree_in(Var v) const;
    bool depends_on(Var v) const { return degree_in(v) > 0; }
    bool depends_on_space() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const CRat& c);

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }
    friend Poly operator*(Poly a, const CRat& c) { return a *= c; }
    friend Poly operator*(const CRat& c, Poly a) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Commutative product. With eps_max >= 0, products of eps-degree above it are skipped.
    friend Poly mul(const Poly& a, const Poly& b, int eps_max);
    friend Poly mul(const Poly& a, const Poly& b) { return mul(a, b, -1); }

    // Applies fn to every coefficient and drops resulting zeros.
    Poly map_coefficients(const std::function<CRat(const CRat&)>& fn) const;
    Poly filter(const std::function<bool(const Term&)>& keep) const;

    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

Poly add(const Poly& a, const Poly& b);

// Sums many products and polynomials, canonicalising once at the end.
class PolyAccumulator {
public:
    void add(const Poly& p, const CRat& scale = CRat(1));
    // += a * b, skipping monomials of eps-degree above eps_max when eps_max >= 0.
    void add_product(const Poly& a, const Poly& b, int eps_max = -1);
    Poly build();

private:
    CRat& slot(Monomial m);

    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::vector<Term> terms_;
};

// Formal derivative along x^mu, mu in 0..3 with x^0 = t. eps is a constant.
Poly partial(const Poly& p, int mu);

// Mixed spatial derivative d^a1/dx1 d^a2/dx2 d^a3/dx3.
Poly spatial_derivative(const Poly& p, const std::array<int, 3>& orders);

Poly conj(const Poly& p);

// Drops every term with eps-degree above n.
Poly truncate_eps(const Poly& p, int n);

// Component of eps-degree exactly n, with eps removed.
Poly eps_coefficient(const Poly& p, int n);

Poly pow(const Poly& p, int n);

// Exact quotient a / b, or nullopt when b does not divide a (or b is zero).
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

// Substitutes x^mu -> values[mu] for mu = 0..3 (t, x1, x2, x3); eps is kept.
Poly substitute(const Poly& p, const std::array<Poly, 4>& values);

// Numerical evaluation at real (t, x1, x2, x3, eps).
std::complex<double> evaluate(const Poly& p, const std::array<double, kNumVars>& point);

}  // namespace nckit
