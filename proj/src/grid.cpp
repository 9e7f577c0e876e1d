#include "rqnn/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rqnn/errors.hpp"

namespace rqnn {

Grid Grid::uniform(std::vector<double> lo, std::vector<double> hi, std::vector<int> shape) {
    if (lo.size() != hi.size() || lo.size() != shape.size())
        throw DimensionMismatch("Grid::uniform: lo/hi/shape sizes differ");
    Grid g;
    g.lo = std::move(lo);
    g.shape = std::move(shape);
    g.spacing.resize(g.lo.size());
    for (std::size_t i = 0; i < g.lo.size(); ++i) {
        if (g.shape[i] <= 0) throw std::invalid_argument("Grid::uniform: nonpositive shape");
        g.spacing[i] = (hi[i] - g.lo[i]) / g.shape[i];
    }
    return g;
}

std::size_t Grid::size() const {
    std::size_t total = 1;
    for (int s : shape) total *= static_cast<std::size_t>(s);
    return total;
}

double Grid::cell_volume() const {
    double v = 1.0;
    for (double h : spacing) v *= h;
    return v;
}

void Grid::node(std::size_t flat, std::span<double> out) const {
    for (int axis = dim() - 1; axis >= 0; --axis) {
        const auto s = static_cast<std::size_t>(shape[axis]);
        const std::size_t i = flat % s;
        flat /= s;
        out[axis] = lo[axis] + (static_cast<double>(i) + 0.5) * spacing[axis];
    }
}

std::vector<double> Grid::node(std::size_t flat) const {
    std::vector<double> out(static_cast<std::size_t>(dim()));
    node(flat, out);
    return out;
}

double Grid::max_spacing() const {
    double m = 0.0;
    for (double h : spacing) m = std::max(m, h);
    return m;
}

SampledField::SampledField(Grid g) : grid(std::move(g)), values(grid.size(), 0.0) {}

double SampledField::integral() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s * grid.cell_volume();
}

double SampledField::l2_norm() const {
    double s = 0.0;
    for (double v : values) s += v * v;
    return std::sqrt(s * grid.cell_volume());
}

SampledField& SampledField::operator+=(const SampledField& other) {
    if (grid != other.grid) throw GridMismatch("SampledField: grids differ");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += other.values[i];
    return *this;
}

SampledField& SampledField::operator-=(const SampledField& other) {
    if (grid != other.grid) throw GridMismatch("SampledField: grids differ");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] -= other.values[i];
    return *this;
}

SampledField& SampledField::operator*=(double c) {
    for (double& v : values) v *= c;
    return *this;
}

SampledField operator+(SampledField a, const SampledField& b) { return a += b; }
SampledField operator-(SampledField a, const SampledField& b) { return a -= b; }
SampledField operator*(double c, SampledField a) { return a *= c; }

double inner_product(const SampledField& a, const SampledField& b) {
    if (a.grid != b.grid) throw GridMismatch("inner_product: grids differ");
    double s = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) s += a.values[i] * b.values[i];
    return s * a.grid.cell_volume();
}

SampledField sample(const Grid& grid, const std::function<double(std::span<const double>)>& f) {
    SampledField out(grid);
    std::vector<double> x(static_cast<std::size_t>(grid.dim()));
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        grid.node(i, x);
        out.values[i] = f(x);
    }
    return out;
}

double integrate_midpoint(const std::function<double(std::span<const double>)>& f,
                          std::span<const double> lo, std::span<const double> hi,
                          double tol, int initial_cells, int max_cells) {
    const int n = static_cast<int>(lo.size());
    auto eval = [&](int cells) {
        Grid g = Grid::uniform(std::vector<double>(lo.begin(), lo.end()),
                               std::vector<double>(hi.begin(), hi.end()),
                               std::vector<int>(static_cast<std::size_t>(n), cells));
        std::vector<double> x(static_cast<std::size_t>(n));
        double s = 0.0;
        const std::size_t total = g.size();
        for (std::size_t i = 0; i < total; ++i) {
            g.node(i, x);
            s += f(x);
        }
        return s * g.cell_volume();
    };
    double prev = eval(initial_cells);
    for (int cells = 2 * initial_cells; cells <= max_cells; cells *= 2) {
        const double cur = eval(cells);
        if (std::abs(cur - prev) < tol / 10.0) return cur;
        prev = cur;
    }
    throw NonIntegrable("integrate_midpoint: no convergence within resolution budget");
}

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                            double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (depth <= 0) return left + right + delta / 15.0;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol) {
    // Fixed initial split so symmetric integrands do not fool the error
    // estimate on the first level.
    const int pieces = 16;
    double total = 0.0;
    const double h = (b - a) / pieces;
    for (int i = 0; i < pieces; ++i) {
        const double x0 = a + i * h;
        const double x1 = x0 + h;
        const double f0 = f(x0);
        const double f1 = f(x1);
        const double fmid = f(0.5 * (x0 + x1));
        total += adaptive_simpson_rec(f, x0, x1, f0, fmid, f1, simpson(f0, fmid, f1, h),
                                      tol / pieces, 60);
    }
    return total;
}

double unit_ball_volume(int n) {
    return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

} // namespace rqnn
