#include "nckit/forms.hpp"

#include <stdexcept>

namespace nckit {

std::string Wedge::to_string() const {
    static const char* names[4] = {"dt", "dx1", "dx2", "dx3"};
    if (bits_ == 0) return "1";
    std::string out;
    for (int mu = 0; mu < 4; ++mu) {
        if (!contains(mu)) continue;
        if (!out.empty()) out += "*";
        out += names[mu];
    }
    return out;
}

int wedge_sign(Wedge a, Wedge b) {
    if (a.bits() & b.bits()) return 0;
    int inversions = 0;
    for (int mu = 0; mu < 4; ++mu)
        if (b.contains(mu))
            for (int nu = mu + 1; nu < 4; ++nu)
                if (a.contains(nu)) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

Poly DifferentialForm::component(Wedge w) const {
    auto it = comps_.find(w);
    return it == comps_.end() ? Poly() : it->second;
}

int DifferentialForm::degree() const { return comps_.empty() ? -1 : comps_.rbegin()->first.degree(); }

bool DifferentialForm::is_homogeneous() const {
    return comps_.empty() || comps_.begin()->first.degree() == comps_.rbegin()->first.degree();
}

void DifferentialForm::add(Wedge w, const Poly& coef) {
    if (coef.is_zero()) return;
    auto [it, inserted] = comps_.try_emplace(w, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& o) {
    for (const auto& [w, c] : o.comps_) add(w, c);
    return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& o) {
    for (const auto& [w, c] : o.comps_) add(w, -c);
    return *this;
}

DifferentialForm operator-(const DifferentialForm& a) {
    return a.map_coefficients([](const Poly& p) { return -p; });
}

DifferentialForm operator*(const CRat& c, const DifferentialForm& a) {
    return a.map_coefficients([&](const Poly& p) { return p * c; });
}

DifferentialForm DifferentialForm::map_coefficients(const std::function<Poly(const Poly&)>& fn) const {
    DifferentialForm out;
    for (const auto& [w, c] : comps_) out.add(w, fn(c));
    return out;
}

DifferentialForm wedge(const DifferentialForm& a, Wedge w) {
    DifferentialForm out;
    for (const auto& [v, c] : a.components()) {
        const int s = wedge_sign(v, w);
        if (s == 0) continue;
        out.add(Wedge(static_cast<std::uint8_t>(v.bits() | w.bits())), s > 0 ? c : -c);
    }
    return out;
}

DifferentialForm move_left(const Poly& g, Wedge w, const StarContext& ctx) {
    if (g.is_zero()) return {};
    if (w == Wedge()) return DifferentialForm(g);
    const int mu = w.last();
    const Wedge rest = w.without(mu);
    // rest * dx^mu * g = rest * (g dx^mu + h dt)
    DifferentialForm out = wedge(move_left(g, rest, ctx), Wedge::d(mu));
    if (mu > 0) {
        const auto& td = ctx.theta_dot();
        Poly h;
        for (int i = 1; i <= 3; ++i)
            if (!td(i, mu).is_zero()) h += mul(td(i, mu), partial(g, i), ctx.eps_max());
        if (!h.is_zero()) {
            h *= CRat::i() * CRat(Rational(-1, 2));
            out += wedge(move_left(h, rest, ctx), Wedge::d(0));
        }
    }
    return out;
}

DifferentialForm form_mul(const DifferentialForm& a, const DifferentialForm& b, const StarContext& ctx) {
    DifferentialForm out;
    for (const auto& [wa, ca] : a.components()) {
        for (const auto& [wb, cb] : b.components()) {
            if (wa.degree() + wb.degree() > 4) continue;
            DifferentialForm moved = move_left(cb, wa, ctx);
            for (const auto& [wk, ck] : moved.components()) {
                const int s = wedge_sign(wk, wb);
                if (s == 0) continue;
                Poly coef = star(ca, ck, ctx);
                out.add(Wedge(static_cast<std::uint8_t>(wk.bits() | wb.bits())), s > 0 ? coef : -coef);
            }
        }
    }
    return out;
}

DifferentialForm exterior_d(const DifferentialForm& a) {
    DifferentialForm out;
    for (const auto& [w, c] : a.components()) {
        for (int mu = 0; mu < 4; ++mu) {
            if (w.contains(mu)) continue;
            const int s = wedge_sign(Wedge::d(mu), w);
            Poly dc = partial(c, mu);
            out.add(Wedge(static_cast<std::uint8_t>(w.bits() | (1u << mu))), s > 0 ? dc : -dc);
        }
    }
    return out;
}

DifferentialForm d_leibniz_defect(const Poly& f, const Poly& g, const StarContext& ctx) {
    DifferentialForm lhs = exterior_d(DifferentialForm(star(f, g, ctx)));
    return lhs - form_mul(exterior_d(DifferentialForm(f)), DifferentialForm(g), ctx) -
           form_mul(DifferentialForm(f), exterior_d(DifferentialForm(g)), ctx);
}

DifferentialForm conj(const DifferentialForm& a, const StarContext& ctx) {
    DifferentialForm out;
    for (const auto& [w, c] : a.components()) {
        const int p = w.degree();
        DifferentialForm moved = move_left(conj(c), w, ctx);
        // reversing p selfadjoint factors gives (-1)^{p(p-1)/2}
        out += ((p * (p - 1) / 2) % 2 == 0) ? moved : -moved;
    }
    return out;
}

}  // namespace nckit
