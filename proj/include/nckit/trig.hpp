#pragma once

#include <map>
#include <string>
#include <utility>

#include "nckit/crat.hpp"

namespace nckit {

// Finite real Fourier series sum_n a_n cos(n u) + b_n sin(n u), n >= 0, with
// exact rational coefficients.
class TrigSeries {
public:
    struct Harmonic {
        Rational cos;
        Rational sin;
    };

    TrigSeries() = default;
    static TrigSeries constant(const Rational& c);
    static TrigSeries cos(int n, const Rational& amplitude = Rational(1));
    static TrigSeries sin(int n, const Rational& amplitude = Rational(1));

    const std::map<int, Harmonic>& harmonics() const { return h_; }
    Rational cos_coefficient(int n) const;
    Rational sin_coefficient(int n) const;
    bool is_zero() const { return h_.empty(); }

    TrigSeries derivative() const;

    TrigSeries& operator+=(const TrigSeries& o);
    TrigSeries& operator*=(const Rational& c);
    friend TrigSeries operator+(TrigSeries a, const TrigSeries& b) { return a += b; }
    friend TrigSeries operator-(TrigSeries a, const TrigSeries& b);
    friend TrigSeries operator*(const TrigSeries& a, const TrigSeries& b);
    friend TrigSeries operator*(TrigSeries a, const Rational& c) { return a *= c; }
    friend bool operator==(const TrigSeries& a, const TrigSeries& b);

    double evaluate(double u) const;
    std::string to_string() const;

private:
    void add_cos(int n, const Rational& c);
    void add_sin(int n, const Rational& c);
    void prune(int n);

    std::map<int, Harmonic> h_;
};

}  // namespace nckit
