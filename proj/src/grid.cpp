#include "nckit/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "nckit/star.hpp"

namespace nckit {
namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

// Owning FFTW buffer.
struct Buffer {
    explicit Buffer(std::size_t size) : data(fftw_alloc_complex(size)), size(size) {
        if (!data) throw std::bad_alloc();
        std::fill_n(reinterpret_cast<Complex*>(data), size, Complex());
    }
    ~Buffer() { fftw_free(data); }
    Buffer(const Buffer&) = delete;
    Buffer& operator=(const Buffer&) = delete;

    Complex* get() { return reinterpret_cast<Complex*>(data); }
    Complex& operator[](std::size_t i) { return get()[i]; }

    fftw_complex* data;
    std::size_t size;
};

struct Plan {
    fftw_plan plan = nullptr;
    ~Plan() {
        if (plan) {
            std::lock_guard<std::mutex> lock(planner_mutex());
            fftw_destroy_plan(plan);
        }
    }
    void run() const { fftw_execute(plan); }
};

// n transforms of length n over contiguous rows, in place.
void make_rows(Plan& p, Buffer& buf, int n, int sign) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    p.plan = fftw_plan_many_dft(1, &n, n, buf.data, nullptr, 1, n, buf.data, nullptr, 1, n, sign, FFTW_ESTIMATE);
}

void check_pair(const GridField& f, const GridField& g) {
    f.validate();
    g.validate();
    if (!same_grid(f, g)) throw std::invalid_argument("grid mismatch");
}

int signed_index(int m, int n) { return m < n / 2 ? m : m - n; }

// Spectral coefficients c with f(x) = sum_m c_m exp(i k_m . x).
void forward(const GridField& f, Buffer& out) {
    const int n = f.n;
    std::copy(f.values.begin(), f.values.end(), out.get());
    Plan p;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        p.plan = fftw_plan_dft_2d(n, n, out.data, out.data, FFTW_FORWARD, FFTW_ESTIMATE);
    }
    p.run();
    const double scale = 1.0 / (static_cast<double>(n) * n);
    for (std::size_t i = 0; i < out.size; ++i) out[i] *= scale;
}

double sup_norm(const GridField& f) {
    double m = 0;
    for (const auto& v : f.values) m = std::max(m, std::abs(v));
    return m;
}

Complex sum_values(const GridField& f) {
    Complex s;
    for (const auto& v : f.values) s += v;
    return s;
}

}  // namespace

GridField GridField::zeros(int n, double box_length, double theta) {
    GridField f;
    f.n = n;
    f.box_length = box_length;
    f.theta = theta;
    f.values.assign(static_cast<std::size_t>(n) * n, Complex());
    f.validate();
    return f;
}

GridField GridField::sample(int n, double box_length, double theta,
                            const std::function<Complex(double, double)>& fn) {
    GridField f = zeros(n, box_length, theta);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) f.at(i, j) = fn(f.coordinate(i), f.coordinate(j));
    return f;
}

double GridField::wavenumber(int m) const { return 2 * std::numbers::pi / box_length * signed_index(m, n); }

void GridField::validate() const {
    if (n < 2 || !std::has_single_bit(static_cast<unsigned>(n)))
        throw std::invalid_argument("grid size must be a power of two");
    if (!(box_length > 0)) throw std::invalid_argument("box length must be positive");
    if (values.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("grid value count mismatch");
    if (plane[0] == plane[1] || plane[0] < 1 || plane[0] > 3 || plane[1] < 1 || plane[1] > 3)
        throw std::invalid_argument("grid plane must be two distinct spatial axes");
}

bool same_grid(const GridField& f, const GridField& g) {
    return f.n == g.n && f.box_length == g.box_length && f.plane == g.plane && f.t_slice == g.t_slice &&
           f.theta == g.theta;
}

GridField grid_star(const GridField& f, const GridField& g) {
    check_pair(f, g);
    const int n = f.n;
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    if (f.theta == 0) return pointwise(f, g);
    GridField out = f;

    Buffer F(nn), G(nn);
    forward(f, F);
    forward(g, G);
    // Transposed copies: Ft[a2][a1], Gt[b2][b1].
    Buffer Ft(nn), Gt(nn);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Ft[static_cast<std::size_t>(j) * n + i] = F[static_cast<std::size_t>(i) * n + j];
            Gt[static_cast<std::size_t>(j) * n + i] = G[static_cast<std::size_t>(i) * n + j];
        }

    // phase[x][y] = exp(i theta k_x k_y / 2)
    std::vector<Complex> phase(nn);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            phase[static_cast<std::size_t>(x) * n + y] = std::polar(1.0, 0.5 * f.theta * f.wavenumber(x) * f.wavenumber(y));

    // (f*g)(x1, x2) = sum_{a2,b2} e^{i(a2+b2)x2} f(x1 - theta b2/2, a2) g(x1 + theta a2/2, b2)
    // in the mixed representation (position in x1, momentum in x2).
    Buffer fs(nn), gs(nn), P(nn);
    Plan pf, pg;
    make_rows(pf, fs, n, FFTW_BACKWARD);
    make_rows(pg, gs, n, FFTW_BACKWARD);

    for (int b2 = 0; b2 < n; ++b2) {
        const Complex* ph_b = &phase[static_cast<std::size_t>(b2) * n];
        const Complex* gcol = Gt.get() + static_cast<std::size_t>(b2) * n;
        for (int a2 = 0; a2 < n; ++a2) {
            const Complex* frow = Ft.get() + static_cast<std::size_t>(a2) * n;
            const Complex* ph_a = &phase[static_cast<std::size_t>(a2) * n];
            Complex* fdst = fs.get() + static_cast<std::size_t>(a2) * n;
            Complex* gdst = gs.get() + static_cast<std::size_t>(a2) * n;
            for (int m = 0; m < n; ++m) {
                fdst[m] = frow[m] * std::conj(ph_b[m]);
                gdst[m] = gcol[m] * ph_a[m];
            }
        }
        pf.run();
        pg.run();
        for (int a2 = 0; a2 < n; ++a2) {
            const Complex* fr = fs.get() + static_cast<std::size_t>(a2) * n;
            const Complex* gr = gs.get() + static_cast<std::size_t>(a2) * n;
            Complex* dst = P.get() + static_cast<std::size_t>((a2 + b2) % n) * n;
            for (int x1 = 0; x1 < n; ++x1) dst[x1] += fr[x1] * gr[x1];
        }
    }
    // P[c2][x1] -> rows over c2 for each x1
    Buffer Pt(nn);
    for (int c2 = 0; c2 < n; ++c2)
        for (int x1 = 0; x1 < n; ++x1) Pt[static_cast<std::size_t>(x1) * n + c2] = P[static_cast<std::size_t>(c2) * n + x1];
    Plan pt;
    make_rows(pt, Pt, n, FFTW_BACKWARD);
    pt.run();
    std::copy(Pt.get(), Pt.get() + nn, out.values.begin());
    return out;
}

GridField pointwise(const GridField& f, const GridField& g) {
    check_pair(f, g);
    GridField out = f;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = f.values[i] * g.values[i];
    return out;
}

GridField conj(const GridField& f) {
    GridField out = f;
    for (auto& v : out.values) v = std::conj(v);
    return out;
}

Complex grid_integral(const GridField& f) { return sum_values(f) * f.cell_area(); }

double l2_norm(const GridField& f) {
    double s = 0;
    for (const auto& v : f.values) s += std::norm(v);
    return std::sqrt(s * f.cell_area());
}

double max_abs_difference(const GridField& f, const GridField& g) {
    check_pair(f, g);
    double m = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i) m = std::max(m, std::abs(f.values[i] - g.values[i]));
    return m;
}

namespace {

GridDefect make_defect(double absolute, const GridField& f, const GridField& g) {
    const double scale = l2_norm(f) * l2_norm(g);
    return {absolute, scale > 0 ? absolute / scale : absolute};
}

}  // namespace

GridDefect grid_trace_defect(const GridField& f, const GridField& g) {
    const Complex a = sum_values(grid_star(f, g)), b = sum_values(pointwise(f, g));
    return make_defect(std::abs(a - b) * f.cell_area(), f, g);
}

GridDefect grid_cyclicity_defect(const GridField& f, const GridField& g) {
    const Complex a = sum_values(grid_star(f, g)), b = sum_values(grid_star(g, f));
    return make_defect(std::abs(a - b) * f.cell_area(), f, g);
}

double grid_associativity_defect(const GridField& f, const GridField& g, const GridField& h) {
    const double scale = sup_norm(f) * sup_norm(g) * sup_norm(h);
    const double d = max_abs_difference(grid_star(grid_star(f, g), h), grid_star(f, grid_star(g, h)));
    return scale > 0 ? d / scale : d;
}

GridField plane_wave(int n, double box_length, double theta, int m1, int m2) {
    const double k = 2 * std::numbers::pi / box_length;
    return GridField::sample(n, box_length, theta,
                             [&](double x, double y) { return std::polar(1.0, k * (m1 * x + m2 * y)); });
}

double phase_law_error(int n, double box_length, double theta, std::array<int, 2> a, std::array<int, 2> b) {
    const GridField fa = plane_wave(n, box_length, theta, a[0], a[1]);
    const GridField fb = plane_wave(n, box_length, theta, b[0], b[1]);
    const double k = 2 * std::numbers::pi / box_length;
    const double wedge = k * k * (static_cast<double>(a[0]) * b[1] - static_cast<double>(a[1]) * b[0]);
    GridField expected = plane_wave(n, box_length, theta, a[0] + b[0], a[1] + b[1]);
    const Complex factor = std::polar(1.0, -0.5 * theta * wedge);
    for (auto& v : expected.values) v *= factor;
    return max_abs_difference(grid_star(fa, fb), expected);
}

namespace {

double window_value(const WindowedPoly& w, double y1, double y2, int power) {
    return std::exp(-power * (y1 * y1 + y2 * y2) / (2 * w.sigma_sq.get_d()));
}

// d/dy_i (P w) = (d_i P - y_i P / sigma^2) w
Poly windowed_derivative(const Poly& p, int axis, const Rational& sigma_sq) {
    return partial(p, axis) - p * Poly::var(static_cast<Var>(axis)) * CRat(Rational(1) / sigma_sq);
}

std::vector<std::vector<Poly>> derivative_table(const WindowedPoly& w, int order) {
    // table[k1][k2] = d1^k1 d2^k2 (P w) / w
    std::vector<std::vector<Poly>> table(order + 1, std::vector<Poly>(order + 1));
    table[0][0] = w.poly;
    for (int k1 = 0; k1 <= order; ++k1) {
        if (k1 > 0) table[k1][0] = windowed_derivative(table[k1 - 1][0], 1, w.sigma_sq);
        for (int k2 = 1; k1 + k2 <= order; ++k2) table[k1][k2] = windowed_derivative(table[k1][k2 - 1], 2, w.sigma_sq);
    }
    return table;
}

}  // namespace

GridField sample_windowed(const WindowedPoly& w, int n, double box_length, double theta) {
    const double c1 = w.center[0].get_d(), c2 = w.center[1].get_d();
    return GridField::sample(n, box_length, theta, [&](double x, double y) {
        const double y1 = x - c1, y2 = y - c2;
        return evaluate(w.poly, {0, y1, y2, 0, 0}) * window_value(w, y1, y2, 1);
    });
}

Poly windowed_star_series(const WindowedPoly& f, const WindowedPoly& g, const Rational& theta, int order) {
    if (f.sigma_sq != g.sigma_sq || f.center != g.center)
        throw std::invalid_argument("windowed star: windows must coincide");
    for (const auto* w : {&f, &g})
        if (w->poly.depends_on(Var::t) || w->poly.depends_on(Var::x3) || w->poly.depends_on(Var::eps))
            throw std::invalid_argument("windowed star: polynomials must be in x1, x2 only");
    const auto tf = derivative_table(f, order), tg = derivative_table(g, order);
    // theta^{ij} d_i (x) d_j = theta (d1 (x) d2 - d2 (x) d1); its n-th power expands binomially.
    PolyAccumulator acc;
    CRat prefactor(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) prefactor *= CRat::i() * CRat(theta / (2 * n));
        Rational binom(1);
        for (int k = 0; k <= n; ++k) {
            if (k > 0) binom = binom * (n - k + 1) / k;
            const int sign = (n - k) % 2 == 0 ? 1 : -1;
            const Poly prod = mul(tf[k][n - k], tg[n - k][k]);
            acc.add(prod, prefactor * CRat(binom * sign));
        }
    }
    return acc.build();
}

double cross_validate_symbolic(const WindowedPoly& f, const WindowedPoly& g, double theta, int n, double box_length,
                               int order) {
    const GridField gf = sample_windowed(f, n, box_length, theta), gg = sample_windowed(g, n, box_length, theta);
    const GridField numeric = grid_star(gf, gg);
    const Poly series = windowed_star_series(f, g, Rational(theta), order);
    struct DoubleTerm {
        Complex c;
        int e1, e2;
    };
    std::vector<DoubleTerm> terms;
    int d1 = 0, d2 = 0;
    for (const auto& t : series.terms()) {
        terms.push_back({Complex(t.coef.re.get_d(), t.coef.im.get_d()), t.mono.exponent(Var::x1), t.mono.exponent(Var::x2)});
        d1 = std::max(d1, terms.back().e1);
        d2 = std::max(d2, terms.back().e2);
    }
    const double c1 = f.center[0].get_d(), c2 = f.center[1].get_d();
    std::vector<double> p1(d1 + 1), p2(d2 + 1);
    double m = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double y1 = numeric.coordinate(i) - c1, y2 = numeric.coordinate(j) - c2;
            const double w2 = window_value(f, y1, y2, 2);
            Complex symbolic;
            if (w2 >= 1e-300) {
                p1[0] = p2[0] = 1;
                for (int k = 1; k <= d1; ++k) p1[k] = p1[k - 1] * y1;
                for (int k = 1; k <= d2; ++k) p2[k] = p2[k - 1] * y2;
                for (const auto& t : terms) symbolic += t.c * (p1[t.e1] * p2[t.e2]);
                symbolic *= w2;
            }
            m = std::max(m, std::abs(numeric.at(i, j) - symbolic));
        }
    return m;
}

namespace {

constexpr char kMagic[8] = {'N', 'C', 'G', 'R', 'I', 'D', '0', '1'};

template <typename T>
void put_le(std::ostream& os, T v) {
    static_assert(std::endian::native == std::endian::little, "little-endian host expected");
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
T get_le(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    if (!is) throw std::runtime_error("grid file truncated");
    return v;
}

}  // namespace

void write_grid_binary(const GridField& f, std::ostream& os) {
    f.validate();
    os.write(kMagic, sizeof kMagic);
    put_le<std::int64_t>(os, f.n);
    put_le<double>(os, f.box_length);
    put_le<double>(os, f.theta);
    for (const auto& v : f.values) {
        put_le<double>(os, v.real());
        put_le<double>(os, v.imag());
    }
}

GridField read_grid_binary(std::istream& is) {
    char magic[8];
    is.read(magic, sizeof magic);
    if (!is || std::memcmp(magic, kMagic, sizeof magic) != 0) throw std::runtime_error("not an NCGRID01 file");
    GridField f;
    const auto n = get_le<std::int64_t>(is);
    if (n < 2 || n > (1 << 14)) throw std::runtime_error("grid file: implausible size");
    f.n = static_cast<int>(n);
    f.box_length = get_le<double>(is);
    f.theta = get_le<double>(is);
    f.values.resize(static_cast<std::size_t>(n) * n);
    for (auto& v : f.values) {
        const double re = get_le<double>(is);
        v = Complex(re, get_le<double>(is));
    }
    f.validate();
    return f;
}

void write_grid_binary(const GridField& f, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path);
    write_grid_binary(f, os);
}

GridField read_grid_binary(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_grid_binary(is);
}

void write_grid_csv(const GridField& f, std::ostream& os) {
    f.validate();
    os.precision(17);
    os << "n,box_length,theta\n" << f.n << "," << f.box_length << "," << f.theta << "\nre,im\n";
    for (const auto& v : f.values) os << v.real() << "," << v.imag() << "\n";
}

GridField read_grid_csv(std::istream& is) {
    std::string line;
    auto next = [&]() {
        if (!std::getline(is, line)) throw std::runtime_error("grid csv truncated");
        return line;
    };
    if (next().rfind("n,box_length,theta", 0) != 0) throw std::runtime_error("grid csv: bad header");
    GridField f;
    {
        std::istringstream ss(next());
        char c1 = 0, c2 = 0;
        if (!(ss >> f.n >> c1 >> f.box_length >> c2 >> f.theta) || c1 != ',' || c2 != ',')
            throw std::runtime_error("grid csv: bad parameter line");
    }
    if (f.n < 2 || f.n > (1 << 12)) throw std::runtime_error("grid csv: implausible size");
    next();
    f.values.resize(static_cast<std::size_t>(f.n) * f.n);
    for (auto& v : f.values) {
        std::istringstream ss(next());
        double re = 0, im = 0;
        char c = 0;
        if (!(ss >> re >> c >> im) || c != ',') throw std::runtime_error("grid csv: bad value line");
        v = Complex(re, im);
    }
    f.validate();
    return f;
}

GridField read_grid(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    char head[8] = {};
    is.read(head, sizeof head);
    is.clear();
    is.seekg(0);
    if (std::memcmp(head, kMagic, sizeof head) == 0) return read_grid_binary(is);
    return read_grid_csv(is);
}

}  // namespace nckit
