#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nckit/gauge.hpp"
#include "nckit/random.hpp"
#include "nckit/star.hpp"
#include "nckit/trig.hpp"

namespace nckit {

enum class Waveform { polynomial, cosine };

// A_i = i p_i f(u), u = omega t + k.x. The profile is either a polynomial in u
// (coefficients in ascending powers) or amplitude * cos(u).
struct PlaneWaveSpec {
    Rational omega;
    std::array<Rational, 3> k{};
    std::array<Rational, 4> p{};  // p_0, p_1, p_2, p_3
    Waveform waveform = Waveform::polynomial;
    std::vector<Rational> profile{Rational(0), Rational(1)};
    Rational amplitude{1};

    // Throws std::invalid_argument for k = 0 or a zero profile.
    void validate() const;
};

inline constexpr int kMaxSymbolicProfileDegree = 8;

Poly plane_wave_phase(const PlaneWaveSpec& spec);
// n-th derivative f^(n)(u) as a polynomial in (t, x); polynomial profiles only.
Poly profile_poly(const PlaneWaveSpec& spec, int derivative = 0);
// thetadot^{jk} k_j p_k as a polynomial in t.
Poly polarisation_contraction(const PlaneWaveSpec& spec, const ThetaProfile& theta);
bool is_polarised(const PlaneWaveSpec& spec, const ThetaProfile& theta);

GaugePotential build_ansatz(const PlaneWaveSpec& spec, const ThetaProfile& theta);

struct Diagnostic {
    std::string equation;  // which printed formula disagrees
    std::string quantity;
    std::string expected;  // printed value
    std::string computed;
    std::string note;
};

struct PlaneWaveFieldStrength {
    FieldStrength computed;
    std::array<Poly, 3> printed_spatial{};    // F_12, F_13, F_23 closed form
    std::array<Poly, 3> printed_mixed{};      // F_0i closed form
    std::array<Poly, 3> printed_covariant{};  // F~_0i closed form
    bool spatial_matches = false;
    bool mixed_matches = false;
    bool covariant_matches = false;
    bool subalgebra_pointwise = false;  // star products of f, f', f'' are pointwise
    std::vector<Diagnostic> diagnostics;
};

PlaneWaveFieldStrength planewave_field_strength(const PlaneWaveSpec& spec, const ThetaProfile& theta);

// The action density restricted to the plane wave, expanded to first order in
// the scale of theta:  quad (f')^2 + C thetadot^{jk} k_j p_k f' f' f + O(theta^2).
struct ActionReport {
    std::optional<Rational> quad_coeff;  // empty when f' = 0
    Rational quad_expected;
    bool quad_matches = false;

    Poly contraction;                     // thetadot^{jk} k_j p_k
    Poly cubic_density;                   // g(t) with first-order density g(t) f' f' f
    std::optional<Rational> cubic_coeff;  // C = g / contraction, when extractable
    Rational cubic_expected;
    bool cubic_matches = false;
    bool cubic_vanishes = false;

    int residual_order = 0;  // lowest omitted power of the theta scale, 0 if nothing omitted
    bool profile_surrogate = false;  // cosine spec evaluated with a polynomial stand-in
    std::vector<Diagnostic> diagnostics;
};

// -(k^2 p^2 + 2 omega p_0 (k.p) - (k.p)^2 - omega^2 p^2 - p_0^2 k^2)
Rational printed_quad_coefficient(const PlaneWaveSpec& spec);
// -2 (omega p^2 - p_0 (k.p))
Rational printed_cubic_coefficient(const PlaneWaveSpec& spec);

ActionReport effective_action(const PlaneWaveSpec& spec, const ThetaProfile& theta);

// Cosine coefficients of f' f' f over one period of u; empty when the wave is polarised.
std::vector<std::pair<int, Rational>> harmonic_spectrum(const PlaneWaveSpec& spec, const ThetaProfile& theta);
TrigSeries cubic_density_series(const PlaneWaveSpec& spec);

// Random spec with integer-ish rational data and the given profile.
PlaneWaveSpec random_spec(Rng& rng, std::vector<Rational> profile, int range = 5);
// Random spec with thetadot^{jk} k_j p_k = 0 identically in t.
PlaneWaveSpec random_polarised_spec(Rng& rng, const ThetaProfile& theta, std::vector<Rational> profile, int range = 5);

// Checks the printed coefficients against the computed ones on random specs
// (a polynomial identity test in omega, k, p).
struct ActionIdentityCheck {
    int trials = 0;
    int quad_matches = 0;
    int quad_sign_flipped = 0;
    int cubic_matches = 0;
    int cubic_comparable = 0;
    std::optional<PlaneWaveSpec> first_quad_mismatch;
    std::optional<PlaneWaveSpec> first_cubic_mismatch;
};

ActionIdentityCheck check_action_identity(Rng& rng, int trials, const ThetaProfile& theta,
                                          const std::vector<Rational>& profile);

std::string describe(const PlaneWaveSpec& spec);

}  // namespace nckit
