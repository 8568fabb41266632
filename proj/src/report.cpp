#include "nckit/report.hpp"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nckit/expr.hpp"

namespace nckit {
namespace {

using json = nlohmann::json;

json exact(const Rational& r) { return {{"exact", r.get_str()}, {"value", r.get_d()}}; }

json exact(const std::optional<Rational>& r) { return r ? exact(*r) : json(nullptr); }

json theta_json(const ThetaProfile& th) {
    return {{"t12", render(th(1, 2))}, {"t13", render(th(1, 3))}, {"t23", render(th(2, 3))}};
}

json diagnostics_json(const std::vector<Diagnostic>& ds) {
    json out = json::array();
    for (const auto& d : ds)
        out.push_back({{"equation", d.equation},
                       {"quantity", d.quantity},
                       {"expected", d.expected},
                       {"computed", d.computed},
                       {"note", d.note}});
    return out;
}

json spec_json(const PlaneWaveSpec& s) {
    json out{{"omega", s.omega.get_str()},
             {"k", {s.k[0].get_str(), s.k[1].get_str(), s.k[2].get_str()}},
             {"p", {s.p[0].get_str(), s.p[1].get_str(), s.p[2].get_str(), s.p[3].get_str()}}};
    if (s.waveform == Waveform::cosine) {
        out["profile"] = "cos";
        out["amplitude"] = s.amplitude.get_str();
    } else {
        json c = json::array();
        for (const auto& r : s.profile) c.push_back(r.get_str());
        out["profile"] = c;
    }
    return out;
}

json defect_json(const GridDefect& d) { return {{"absolute", d.absolute}, {"relative", d.relative}}; }

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

}  // namespace

PlaneWaveReport planewave_report(const PlaneWaveSpec& spec, const ThetaProfile& theta) {
    PlaneWaveReport r;
    r.spec = spec;
    r.theta = theta;
    r.action = effective_action(spec, theta);
    r.polarised = is_polarised(spec, theta);
    if (spec.waveform == Waveform::cosine) {
        r.harmonics = harmonic_spectrum(spec, theta);
    } else {
        r.field_diagnostics = planewave_field_strength(spec, theta).diagnostics;
    }
    return r;
}

bool GridCheckReport::passed() const {
    return trace.relative <= 1e-10 && cyclicity.relative <= 1e-10 && associativity <= 1e-8 && phase_law <= 1e-8;
}

GridCheckReport grid_check(const GridField& f) {
    f.validate();
    GridCheckReport r;
    r.n = f.n;
    r.box_length = f.box_length;
    r.theta = f.theta;
    const GridField g = conj(f);
    r.trace = grid_trace_defect(f, g);
    r.cyclicity = grid_cyclicity_defect(f, g);
    r.associativity = grid_associativity_defect(f, g, f);
    r.phase_law = phase_law_error(f.n, f.box_length, f.theta, {1, 0}, {0, 1});
    return r;
}

std::string report_json(const SuiteReport& r) {
    json props = json::array();
    for (const auto& p : r.properties)
        props.push_back({{"name", p.name}, {"passed", p.passed}, {"failed", p.failed}, {"counterexamples", p.counterexamples}});
    json out{{"schema", kReportSchema},
             {"command", "verify"},
             {"suite", r.suite},
             {"seed", r.seed},
             {"cases", r.cases},
             {"order", r.order},
             {"seconds", r.seconds},
             {"status", r.passed() ? "pass" : "fail"},
             {"properties", props},
             {"diagnostics", diagnostics_json(r.diagnostics)}};
    return out.dump(2);
}

std::string report_json(const PlaneWaveReport& r) {
    const ActionReport& a = r.action;
    json harmonics = json::array();
    for (const auto& [n, amp] : r.harmonics) harmonics.push_back({{"n", n}, {"amplitude", exact(amp)}});
    json out{{"schema", kReportSchema},
             {"command", "planewave"},
             {"status", r.passed() ? "pass" : "fail"},
             {"spec", spec_json(r.spec)},
             {"theta", theta_json(r.theta)},
             {"polarised", r.polarised},
             {"contraction", render(a.contraction)},
             {"quadratic", {{"computed", exact(a.quad_coeff)}, {"printed", exact(a.quad_expected)}, {"matches", a.quad_matches}}},
             {"cubic",
              {{"computed", exact(a.cubic_coeff)},
               {"printed", exact(a.cubic_expected)},
               {"density", render(a.cubic_density)},
               {"vanishes", a.cubic_vanishes},
               {"matches", a.cubic_matches}}},
             {"residual_order", a.residual_order},
             {"profile_surrogate", a.profile_surrogate},
             {"harmonics", harmonics},
             {"diagnostics", diagnostics_json(a.diagnostics)},
             {"field_diagnostics", diagnostics_json(r.field_diagnostics)}};
    return out.dump(2);
}

std::string report_json(const GridCheckReport& r) {
    json out{{"schema", kReportSchema},
             {"command", "grid-check"},
             {"status", r.passed() ? "pass" : "fail"},
             {"n", r.n},
             {"box_length", r.box_length},
             {"theta", r.theta},
             {"trace", defect_json(r.trace)},
             {"cyclicity", defect_json(r.cyclicity)},
             {"associativity", r.associativity},
             {"phase_law", r.phase_law}};
    return out.dump(2);
}

std::string reduce_json(const std::string& input, const std::string& output, const ThetaProfile& theta) {
    json out{{"schema", kReportSchema},
             {"command", "reduce"},
             {"status", "pass"},
             {"input", input},
             {"theta", theta_json(theta)},
             {"result", output}};
    return out.dump(2);
}

std::string report_text(const SuiteReport& r) {
    std::ostringstream os;
    os << "suite " << r.suite << "  seed " << r.seed << "  cases " << r.cases << "  order " << r.order << "  ("
       << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
    std::size_t w = 8;
    for (const auto& p : r.properties) w = std::max(w, p.name.size());
    for (const auto& p : r.properties) {
        os << "  " << (p.failed == 0 ? "PASS" : "FAIL") << "  " << pad(p.name, w) << "  " << p.passed << "/"
           << p.passed + p.failed << "\n";
        for (const auto& c : p.counterexamples) os << "        counterexample: " << c << "\n";
    }
    for (const auto& d : r.diagnostics)
        os << "  diagnostic [" << d.equation << "] " << d.quantity << ": printed " << d.expected << ", computed "
           << d.computed << " (" << d.note << ")\n";
    os << (r.passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string report_text(const PlaneWaveReport& r) {
    const ActionReport& a = r.action;
    auto q = [](const std::optional<Rational>& v) { return v ? v->get_str() : std::string("undetermined"); };
    std::ostringstream os;
    os << "plane wave " << describe(r.spec) << "\n";
    os << "  theta: t12 = " << render(r.theta(1, 2)) << ", t13 = " << render(r.theta(1, 3))
       << ", t23 = " << render(r.theta(2, 3)) << "\n";
    os << "  polarised: " << (r.polarised ? "yes" : "no") << "   contraction: " << render(a.contraction) << "\n";
    os << "  quadratic coefficient  computed " << q(a.quad_coeff) << "   printed " << a.quad_expected.get_str()
       << (a.quad_matches ? "   match" : "   MISMATCH") << "\n";
    os << "  cubic coefficient      computed " << (a.cubic_vanishes ? std::string("0 (term absent)") : q(a.cubic_coeff))
       << "   printed " << a.cubic_expected.get_str() << (a.cubic_matches ? "   match" : "   MISMATCH") << "\n";
    if (a.profile_surrogate) os << "  (coefficients extracted with a polynomial stand-in profile)\n";
    if (!r.harmonics.empty() || r.spec.waveform == Waveform::cosine) {
        os << "  harmonics of f' f' f:";
        if (r.harmonics.empty()) os << " none";
        for (const auto& [n, amp] : r.harmonics) os << "  " << n << ": " << amp.get_str();
        os << "\n";
    }
    for (const auto* list : {&a.diagnostics, &r.field_diagnostics})
        for (const auto& d : *list)
            os << "  diagnostic [" << d.equation << "] " << d.quantity << ": printed " << d.expected << ", computed "
               << d.computed << " (" << d.note << ")\n";
    os << (r.passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string report_text(const GridCheckReport& r) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3);
    os << "grid " << r.n << "x" << r.n << "  box " << r.box_length << "  theta " << r.theta << "\n";
    os << "  trace defect (f, conj f)       " << r.trace.relative << (r.trace.relative <= 1e-10 ? "  ok" : "  FAIL") << "\n";
    os << "  cyclicity defect (f, conj f)   " << r.cyclicity.relative << (r.cyclicity.relative <= 1e-10 ? "  ok" : "  FAIL")
       << "\n";
    os << "  associativity (f, conj f, f)   " << r.associativity << (r.associativity <= 1e-8 ? "  ok" : "  FAIL") << "\n";
    os << "  phase law                      " << r.phase_law << (r.phase_law <= 1e-8 ? "  ok" : "  FAIL") << "\n";
    os << (r.passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace nckit
