#include "nckit/trig.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace nckit {

TrigSeries TrigSeries::constant(const Rational& c) {
    TrigSeries s;
    s.add_cos(0, c);
    return s;
}

TrigSeries TrigSeries::cos(int n, const Rational& amplitude) {
    TrigSeries s;
    s.add_cos(n, amplitude);
    return s;
}

TrigSeries TrigSeries::sin(int n, const Rational& amplitude) {
    TrigSeries s;
    s.add_sin(n, amplitude);
    return s;
}

Rational TrigSeries::cos_coefficient(int n) const {
    auto it = h_.find(n);
    return it == h_.end() ? Rational(0) : it->second.cos;
}

Rational TrigSeries::sin_coefficient(int n) const {
    auto it = h_.find(n);
    return it == h_.end() ? Rational(0) : it->second.sin;
}

void TrigSeries::prune(int n) {
    auto it = h_.find(n);
    if (it != h_.end() && it->second.cos == 0 && it->second.sin == 0) h_.erase(it);
}

// cos(-n u) = cos(n u)
void TrigSeries::add_cos(int n, const Rational& c) {
    if (c == 0) return;
    n = std::abs(n);
    Rational v = c;
    v.canonicalize();
    h_[n].cos += v;
    prune(n);
}

// sin(-n u) = -sin(n u), sin(0) = 0
void TrigSeries::add_sin(int n, const Rational& c) {
    if (c == 0 || n == 0) return;
    const int m = std::abs(n);
    Rational v = n > 0 ? c : Rational(-c);
    v.canonicalize();
    h_[m].sin += v;
    prune(m);
}

TrigSeries TrigSeries::derivative() const {
    TrigSeries out;
    for (const auto& [n, h] : h_) {
        out.add_sin(n, -h.cos * n);
        out.add_cos(n, h.sin * n);
    }
    return out;
}

TrigSeries& TrigSeries::operator+=(const TrigSeries& o) {
    for (const auto& [n, h] : o.h_) {
        add_cos(n, h.cos);
        add_sin(n, h.sin);
    }
    return *this;
}

TrigSeries& TrigSeries::operator*=(const Rational& c) {
    if (c == 0) {
        h_.clear();
        return *this;
    }
    for (auto& [n, h] : h_) {
        h.cos *= c;
        h.sin *= c;
    }
    return *this;
}

TrigSeries operator-(TrigSeries a, const TrigSeries& b) {
    TrigSeries nb = b;
    nb *= Rational(-1);
    return a += nb;
}

TrigSeries operator*(const TrigSeries& a, const TrigSeries& b) {
    TrigSeries out;
    const Rational half(1, 2);
    for (const auto& [m, p] : a.h_) {
        for (const auto& [n, q] : b.h_) {
            // cos m cos n = (cos(m-n) + cos(m+n)) / 2
            // sin m sin n = (cos(m-n) - cos(m+n)) / 2
            // sin m cos n = (sin(m+n) + sin(m-n)) / 2
            const Rational cc = p.cos * q.cos * half;
            const Rational ss = p.sin * q.sin * half;
            out.add_cos(m - n, cc + ss);
            out.add_cos(m + n, cc - ss);
            const Rational sc = p.sin * q.cos * half;
            out.add_sin(m + n, sc);
            out.add_sin(m - n, sc);
            const Rational cs = p.cos * q.sin * half;
            out.add_sin(n + m, cs);
            out.add_sin(n - m, cs);
        }
    }
    return out;
}

bool operator==(const TrigSeries& a, const TrigSeries& b) {
    if (a.h_.size() != b.h_.size()) return false;
    for (auto ia = a.h_.begin(), ib = b.h_.begin(); ia != a.h_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second.cos != ib->second.cos || ia->second.sin != ib->second.sin)
            return false;
    return true;
}

double TrigSeries::evaluate(double u) const {
    double v = 0;
    for (const auto& [n, h] : h_) v += h.cos.get_d() * std::cos(n * u) + h.sin.get_d() * std::sin(n * u);
    return v;
}

std::string TrigSeries::to_string() const {
    if (h_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& c, const std::string& fn, int n) {
        if (c == 0) return;
        os << (first ? "" : " + ") << "(" << c.get_str() << ")";
        if (n != 0) os << "*" << fn << "(" << n << "u)";
        first = false;
    };
    for (const auto& [n, h] : h_) {
        emit(h.cos, "cos", n);
        emit(h.sin, "sin", n);
    }
    return os.str();
}

}  // namespace nckit
