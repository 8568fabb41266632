#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace nckit {

using Rational = mpq_class;

// Exact Gaussian rational re + i*im.
struct CRat {
    Rational re;
    Rational im;

    CRat() = default;
    CRat(long v) : re(v), im(0) {}
    CRat(Rational r) : re(std::move(r)), im(0) {}
    CRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static CRat i() { return CRat(Rational(0), Rational(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }

    CRat conj() const { return CRat(re, -im); }

    CRat& operator+=(const CRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    CRat& operator-=(const CRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    CRat& operator*=(const CRat& o) {
        if (sgn(o.im) == 0) {
            re *= o.re;
            im *= o.re;
            return *this;
        }
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    CRat& operator/=(const CRat& o);

    friend CRat operator+(CRat a, const CRat& b) { return a += b; }
    friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
    friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
    friend CRat operator/(CRat a, const CRat& b) { return a /= b; }
    friend CRat operator-(const CRat& a) { return CRat(-a.re, -a.im); }

    friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }
};

inline CRat& CRat::operator/=(const CRat& o) {
    Rational den = o.re * o.re + o.im * o.im;
    if (sgn(den) == 0) throw std::domain_error("CRat: division by zero");
    Rational r = (re * o.re + im * o.im) / den;
    im = (im * o.re - re * o.im) / den;
    re = std::move(r);
    return *this;
}

// acc += a * b without temporaries on the real fast path.
void add_product(CRat& acc, const CRat& a, const CRat& b);

// Parse "p", "-p", "p/q" into a canonical rational; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

// Decimal literals such as "0.25" or "-1.5e-3" are accepted and converted exactly.
Rational parse_decimal_or_rational(const std::string& text);

}  // namespace nckit
