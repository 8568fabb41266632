#pragma once

#include <nckit/poly.hpp>
#include <nckit/star.hpp>

#include <functional>

namespace testing_helpers {

using namespace nckit;

inline Poly t() { return Poly::var(Var::t); }
inline Poly x1() { return Poly::var(Var::x1); }
inline Poly x2() { return Poly::var(Var::x2); }
inline Poly x3() { return Poly::var(Var::x3); }
inline Poly eps() { return Poly::var(Var::eps); }
inline Poly I() { return Poly::i(); }
inline Poly q(long p, long d) { return Poly(CRat(Rational(p, d))); }

// Literal expansion of exp((i/2) theta^{ij} d_i (x) d_j) over ordered index
// sequences, 9^n terms at order n. Independent of the grouped operator used
// by the library.
inline Poly brute_force_star(const Poly& f, const Poly& g, const ThetaProfile& theta) {
    Poly result;
    const int nmax = std::min(f.spatial_degree(), g.spatial_degree());
    Rational factorial(1);
    CRat half_i = CRat::i() * CRat(Rational(1, 2));
    CRat prefactor(1);
    for (int n = 0; n <= nmax; ++n) {
        if (n > 0) {
            factorial *= n;
            prefactor *= half_i;
        }
        Poly order_sum;
        std::function<void(int, Poly, Poly, Poly)> rec = [&](int depth, Poly df, Poly dg, Poly coef) {
            if (coef.is_zero() || df.is_zero() || dg.is_zero()) return;
            if (depth == n) {
                order_sum += coef * df * dg;
                return;
            }
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j)
                    rec(depth + 1, partial(df, i), partial(dg, j), coef * theta(i, j));
        };
        rec(0, f, g, Poly(1));
        result += order_sum * (prefactor * CRat(Rational(1) / factorial));
    }
    return result;
}

}  // namespace testing_helpers

#include <nckit/forms.hpp>

#include <variant>
#include <vector>

namespace testing_helpers {

// A product word of functions and basis differentials, normal-ordered by
// repeatedly rewriting the leftmost "dx^mu g" pair with the one-factor rule.
using Letter = std::variant<Poly, int>;
using Word = std::vector<Letter>;

inline DifferentialForm normal_order_word(const Word& word, const StarContext& ctx) {
    std::vector<std::pair<Word, CRat>> pending{{word, CRat(1)}};
    DifferentialForm out;
    while (!pending.empty()) {
        auto [w, scale] = pending.back();
        pending.pop_back();
        std::size_t k = 0;
        for (; k + 1 < w.size(); ++k)
            if (std::holds_alternative<int>(w[k]) && std::holds_alternative<Poly>(w[k + 1])) break;
        if (k + 1 >= w.size()) {
            Poly coef(1);
            std::vector<int> diffs;
            for (const auto& l : w) {
                if (std::holds_alternative<Poly>(l))
                    coef = star(coef, std::get<Poly>(l), ctx);
                else
                    diffs.push_back(std::get<int>(l));
            }
            int sign = 1;
            for (std::size_t a = 0; a < diffs.size(); ++a)
                for (std::size_t b = a + 1; b < diffs.size(); ++b) {
                    if (diffs[a] == diffs[b]) sign = 0;
                    if (diffs[a] > diffs[b]) sign = -sign;
                }
            if (sign == 0 || coef.is_zero()) continue;
            std::uint8_t bits = 0;
            for (int mu : diffs) bits |= static_cast<std::uint8_t>(1u << mu);
            out.add(Wedge(bits), coef * (scale * CRat(sign)));
            continue;
        }
        const int mu = std::get<int>(w[k]);
        const Poly g = std::get<Poly>(w[k + 1]);
        Word swapped = w;
        swapped[k] = g;
        swapped[k + 1] = mu;
        pending.push_back({swapped, scale});
        if (mu > 0) {
            Poly h;
            for (int i = 1; i <= 3; ++i) h += ctx.theta_dot()(i, mu) * partial(g, i);
            if (!h.is_zero()) {
                Word corrected = w;
                corrected[k] = h * (CRat::i() * CRat(Rational(-1, 2)));
                corrected[k + 1] = 0;
                pending.push_back({corrected, scale});
            }
        }
    }
    return out;
}

inline Word word_of(const DifferentialForm& a) {
    // Only for single-component forms.
    const auto& [w, c] = *a.components().begin();
    Word out{c};
    for (int mu = 0; mu < 4; ++mu)
        if (w.contains(mu)) out.push_back(mu);
    return out;
}

}  // namespace testing_helpers
