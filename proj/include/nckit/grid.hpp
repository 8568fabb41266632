#pragma once

#include <array>
#include <complex>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "nckit/poly.hpp"

namespace nckit {

using Complex = std::complex<double>;

// Complex field sampled on a periodic N x N grid over one spatial 2-plane at a
// fixed time. values[i * n + j] is the sample at (x_a, x_b) = (i h, j h),
// h = box_length / n, where (a, b) = plane.
struct GridField {
    int n = 0;
    double box_length = 0;
    std::array<int, 2> plane{1, 2};
    double t_slice = 0;
    double theta = 0;  // theta^{ab}(t_slice)
    std::vector<Complex> values;

    static GridField zeros(int n, double box_length, double theta);
    static GridField sample(int n, double box_length, double theta, const std::function<Complex(double, double)>& fn);

    double spacing() const { return box_length / n; }
    double cell_area() const { return spacing() * spacing(); }
    double coordinate(int i) const { return i * spacing(); }
    // Angular wavenumber of FFT index m, using signed indices in [-n/2, n/2).
    double wavenumber(int m) const;

    Complex& at(int i, int j) { return values[static_cast<std::size_t>(i) * n + j]; }
    const Complex& at(int i, int j) const { return values[static_cast<std::size_t>(i) * n + j]; }

    // Throws std::invalid_argument unless n is a power of two, the box is
    // positive and the value count matches.
    void validate() const;
};

inline constexpr int kDefaultGridSize = 256;
inline constexpr double kDefaultBoxLength = 2 * 3.14159265358979323846 * 16;

bool same_grid(const GridField& f, const GridField& g);

// Star product of the trigonometric interpolants, sampled on the grid. Mode
// pairs (a, b) pick up exp(-(i/2) theta (a_1 b_2 - a_2 b_1)).
GridField grid_star(const GridField& f, const GridField& g);

GridField pointwise(const GridField& f, const GridField& g);
GridField conj(const GridField& f);

Complex grid_integral(const GridField& f);
double l2_norm(const GridField& f);
double max_abs_difference(const GridField& f, const GridField& g);

struct GridDefect {
    double absolute = 0;
    double relative = 0;  // absolute / (|f| |g|), L2 norms
};

// |sum(f*g) - sum(f g)| cell_area
GridDefect grid_trace_defect(const GridField& f, const GridField& g);
// |sum(f*g) - sum(g*f)| cell_area
GridDefect grid_cyclicity_defect(const GridField& f, const GridField& g);
// |(f*g)*h - f*(g*h)|_inf relative to |f|_inf |g|_inf |h|_inf
double grid_associativity_defect(const GridField& f, const GridField& g, const GridField& h);

// exp(i (a_1 x_a + a_2 x_b)) with a = 2 pi m / box_length.
GridField plane_wave(int n, double box_length, double theta, int m1, int m2);
// Max deviation of grid_star on two plane waves from the closed-form phase law.
double phase_law_error(int n, double box_length, double theta, std::array<int, 2> a, std::array<int, 2> b);

// Polynomials in the local coordinates y = x - center (x1, x2 stand for the
// plane axes) multiplied by exp(-|y|^2 / (2 sigma^2)).
struct WindowedPoly {
    Poly poly;
    Rational sigma_sq{16};
    std::array<Rational, 2> center{Rational(50), Rational(50)};
};

GridField sample_windowed(const WindowedPoly& w, int n, double box_length, double theta);

// Moyal series of two windowed polynomials with a shared window, truncated at
// the given order; returns the polynomial R with f*g = R(y) exp(-|y|^2/sigma^2).
Poly windowed_star_series(const WindowedPoly& f, const WindowedPoly& g, const Rational& theta, int order);

// Max pointwise deviation between grid_star and the symbolic series on the grid.
double cross_validate_symbolic(const WindowedPoly& f, const WindowedPoly& g, double theta, int n = kDefaultGridSize,
                               double box_length = kDefaultBoxLength, int order = 16);

// Binary: "NCGRID01", int64 n, double box_length, double theta, then n*n
// little-endian complex doubles, row-major.
void write_grid_binary(const GridField& f, std::ostream& os);
GridField read_grid_binary(std::istream& is);
void write_grid_binary(const GridField& f, const std::string& path);
GridField read_grid_binary(const std::string& path);

// CSV: header "n,box_length,theta", one line, then n*n lines "re,im".
void write_grid_csv(const GridField& f, std::ostream& os);
GridField read_grid_csv(std::istream& is);

// Reads either format, deciding by the magic bytes.
GridField read_grid(const std::string& path);

}  // namespace nckit
