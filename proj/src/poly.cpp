#include "nckit/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace nckit {

Monomial::Monomial(const std::array<int, kNumVars>& exps) {
    std::uint64_t deg = 0;
    for (int v = 0; v < kNumVars; ++v) {
        if (exps[v] < 0 || exps[v] > kMaxExponent) throw std::out_of_range("Monomial: exponent out of range");
        key_ |= static_cast<std::uint64_t>(exps[v]) << (kBits * v);
        deg += static_cast<std::uint64_t>(exps[v]);
    }
    key_ |= deg << kDegShift;
}

Monomial Monomial::var(Var v, int power) {
    std::array<int, kNumVars> e{};
    e[static_cast<int>(v)] = power;
    return Monomial(e);
}

std::array<int, kNumVars> Monomial::exponents() const {
    std::array<int, kNumVars> e{};
    for (int v = 0; v < kNumVars; ++v) e[v] = exponent(static_cast<Var>(v));
    return e;
}

Monomial operator*(Monomial a, Monomial b) {
    for (int v = 0; v < kNumVars; ++v)
        if (a.exponent(static_cast<Var>(v)) + b.exponent(static_cast<Var>(v)) > Monomial::kMaxExponent)
            throw std::overflow_error("Monomial: exponent overflow");
    return Monomial::from_key(a.key_ + b.key_);
}

Poly::Poly(const CRat& c) {
    if (!c.is_zero()) terms_.push_back({Monomial(), c});
}

Poly::Poly(const CRat& c, Monomial m) {
    if (!c.is_zero()) terms_.push_back({m, c});
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
    Poly out;
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().mono == t.mono)
            out.terms_.back().coef += t.coef;
        else {
            if (!out.terms_.empty() && out.terms_.back().coef.is_zero()) out.terms_.pop_back();
            out.terms_.push_back(std::move(t));
        }
    }
    if (!out.terms_.empty() && out.terms_.back().coef.is_zero()) out.terms_.pop_back();
    return out;
}

Poly Poly::from_sorted_terms(std::vector<Term> terms) {
    Poly out;
    out.terms_ = std::move(terms);
    return out;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0); }

CRat Poly::constant_term() const { return coefficient(Monomial()); }

CRat Poly::coefficient(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& mm) { return t.mono < mm; });
    if (it != terms_.end() && it->mono == m) return it->coef;
    return CRat();
}

int Poly::degree() const { return terms_.empty() ? -1 : terms_.back().mono.degree(); }

int Poly::spatial_degree() const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.spatial_degree());
    return d;
}

int Poly::degree_in(Var v) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
    return d;
}

bool Poly::depends_on_space() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.spatial_degree() > 0; });
}

namespace {

Poly merge(const Poly& a, const Poly& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->mono < ib->mono)) {
            out.push_back(*ia++);
        } else if (ia == ea || ib->mono < ia->mono) {
            out.push_back({ib->mono, subtract ? -ib->coef : ib->coef});
            ++ib;
        } else {
            CRat c = subtract ? ia->coef - ib->coef : ia->coef + ib->coef;
            if (!c.is_zero()) out.push_back({ia->mono, std::move(c)});
            ++ia;
            ++ib;
        }
    }
    return Poly::from_sorted_terms(std::move(out));
}

}  // namespace

Poly add(const Poly& a, const Poly& b) { return merge(a, b, false); }

Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
Poly operator-(const Poly& a) {
    return a.map_coefficients([](const CRat& c) { return -c; });
}

Poly& Poly::operator+=(const Poly& o) { return *this = merge(*this, o, false); }
Poly& Poly::operator-=(const Poly& o) { return *this = merge(*this, o, true); }
Poly& Poly::operator*=(const Poly& o) { return *this = mul(*this, o); }
Poly& Poly::operator*=(const CRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coef *= c;
    return *this;
}

Poly mul(const Poly& a, const Poly& b, int eps_max) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if (a.size() == 1 && a.terms_[0].mono == Monomial() && eps_max < 0) return b * a.terms_[0].coef;
    if (b.size() == 1 && b.terms_[0].mono == Monomial() && eps_max < 0) return a * b.terms_[0].coef;
    PolyAccumulator acc;
    acc.add_product(a, b, eps_max);
    return acc.build();
}

CRat& PolyAccumulator::slot(Monomial m) {
    auto [it, inserted] = index_.try_emplace(m.key(), terms_.size());
    if (inserted) terms_.push_back({m, CRat()});
    return terms_[it->second].coef;
}

void PolyAccumulator::add(const Poly& p, const CRat& scale) {
    const bool unit = scale.is_one();
    for (const auto& t : p.terms()) {
        if (unit)
            slot(t.mono) += t.coef;
        else
            nckit::add_product(slot(t.mono), t.coef, scale);
    }
}

void PolyAccumulator::add_product(const Poly& a, const Poly& b, int eps_max) {
    if (index_.empty()) {
        index_.reserve(a.size() * b.size());
        terms_.reserve(a.size() * b.size());
    }
    for (const auto& ta : a.terms()) {
        const int ea = ta.mono.exponent(Var::eps);
        if (eps_max >= 0 && ea > eps_max) continue;
        for (const auto& tb : b.terms()) {
            if (eps_max >= 0 && ea + tb.mono.exponent(Var::eps) > eps_max) continue;
            nckit::add_product(slot(ta.mono * tb.mono), ta.coef, tb.coef);
        }
    }
}

Poly PolyAccumulator::build() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.mono < y.mono; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_)
        if (!t.coef.is_zero()) out.push_back(std::move(t));
    terms_.clear();
    index_.clear();
    return Poly::from_sorted_terms(std::move(out));
}

Poly Poly::map_coefficients(const std::function<CRat(const CRat&)>& fn) const {
    Poly out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        CRat c = fn(t.coef);
        if (!c.is_zero()) out.terms_.push_back({t.mono, std::move(c)});
    }
    return out;
}

Poly Poly::filter(const std::function<bool(const Term&)>& keep) const {
    Poly out;
    for (const auto& t : terms_)
        if (keep(t)) out.terms_.push_back(t);
    return out;
}

Poly partial(const Poly& p, int mu) {
    if (mu < 0 || mu > 3) throw std::out_of_range("partial: coordinate index must be 0..3");
    const Var v = static_cast<Var>(mu);
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        auto e = t.mono.exponents();
        const int k = e[mu];
        if (k == 0) continue;
        e[mu] = k - 1;
        out.push_back({Monomial(e), t.coef * CRat(k)});
    }
    (void)v;
    return Poly::from_terms(std::move(out));
}

Poly spatial_derivative(const Poly& p, const std::array<int, 3>& orders) {
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        auto e = t.mono.exponents();
        long factor = 1;
        bool vanishes = false;
        for (int i = 0; i < 3 && !vanishes; ++i) {
            const int n = orders[i];
            int& k = e[i + 1];
            if (k < n) {
                vanishes = true;
                break;
            }
            for (int r = 0; r < n; ++r) factor *= (k - r);
            k -= n;
        }
        if (vanishes) continue;
        out.push_back({Monomial(e), t.coef * CRat(factor)});
    }
    return Poly::from_terms(std::move(out));
}

Poly conj(const Poly& p) {
    return p.map_coefficients([](const CRat& c) { return c.conj(); });
}

Poly truncate_eps(const Poly& p, int n) {
    return p.filter([n](const Term& t) { return t.mono.exponent(Var::eps) <= n; });
}

Poly eps_coefficient(const Poly& p, int n) {
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        if (t.mono.exponent(Var::eps) != n) continue;
        auto e = t.mono.exponents();
        e[static_cast<int>(Var::eps)] = 0;
        out.push_back({Monomial(e), t.coef});
    }
    return Poly::from_terms(std::move(out));
}

Poly pow(const Poly& p, int n) {
    if (n < 0) throw std::invalid_argument("pow: negative exponent");
    Poly result(1);
    Poly base = p;
    while (n > 0) {
        if (n & 1) result = mul(result, base);
        n >>= 1;
        if (n > 0) base = mul(base, base);
    }
    return result;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) return std::nullopt;
    const Term& lead = b.terms().back();
    const auto lead_exps = lead.mono.exponents();
    Poly quotient;
    Poly rest = a;
    while (!rest.is_zero()) {
        const Term& top = rest.terms().back();
        const auto exps = top.mono.exponents();
        for (int v = 0; v < kNumVars; ++v)
            if (exps[v] < lead_exps[v]) return std::nullopt;
        Poly step(top.coef / lead.coef, Monomial::from_key(top.mono.key() - lead.mono.key()));
        quotient += step;
        rest -= mul(step, b);
    }
    return quotient;
}

Poly substitute(const Poly& p, const std::array<Poly, 4>& values) {
    std::array<std::vector<Poly>, 4> powers;
    Poly out;
    for (const auto& t : p.terms()) {
        Poly term(t.coef, Monomial::var(Var::eps, t.mono.exponent(Var::eps)));
        for (int mu = 0; mu < 4; ++mu) {
            const int k = t.mono.exponent(static_cast<Var>(mu));
            auto& cache = powers[mu];
            while (static_cast<int>(cache.size()) <= k)
                cache.push_back(cache.empty() ? Poly(1) : mul(cache.back(), values[mu]));
            if (k > 0) term = mul(term, cache[k]);
        }
        out += term;
    }
    return out;
}

std::complex<double> evaluate(const Poly& p, const std::array<double, kNumVars>& point) {
    std::complex<double> acc = 0.0;
    for (const auto& t : p.terms()) {
        double m = 1.0;
        for (int v = 0; v < kNumVars; ++v) {
            const int k = t.mono.exponent(static_cast<Var>(v));
            if (k > 0) m *= std::pow(point[v], k);
        }
        acc += std::complex<double>(t.coef.re.get_d(), t.coef.im.get_d()) * m;
    }
    return acc;
}

std::string Poly::to_string() const {
    static const char* names[kNumVars] = {"t", "x1", "x2", "x3", "eps"};
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->coef.re.get_str() << (sgn(it->coef.im) < 0 ? "" : "+") << it->coef.im.get_str() << "i)";
        for (int v = 0; v < kNumVars; ++v) {
            const int k = it->mono.exponent(static_cast<Var>(v));
            if (k == 0) continue;
            os << "*" << names[v];
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace nckit
