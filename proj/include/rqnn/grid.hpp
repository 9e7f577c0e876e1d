#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace rqnn {

/// Uniform tensor grid over an axis-aligned box. Nodes sit at cell centers,
/// so summing values times cell_volume() is the tensor midpoint rule.
/// Flat indexing is row-major (last axis fastest).
struct Grid {
    std::vector<double> lo;      ///< box lower corner
    std::vector<double> spacing; ///< per axis
    std::vector<int> shape;      ///< cells per axis

    static Grid uniform(std::vector<double> lo, std::vector<double> hi, std::vector<int> shape);

    int dim() const { return static_cast<int>(shape.size()); }
    std::size_t size() const;
    double cell_volume() const;

    void node(std::size_t flat, std::span<double> out) const;
    std::vector<double> node(std::size_t flat) const;
    double hi(int axis) const { return lo[axis] + spacing[axis] * shape[axis]; }
    double max_spacing() const;

    bool operator==(const Grid& other) const = default;
};

/// A function sampled on a grid; carries its own quadrature weights via the
/// midpoint rule.
struct SampledField {
    Grid grid;
    std::vector<double> values;

    SampledField() = default;
    explicit SampledField(Grid g);

    double integral() const;
    double l2_norm() const;

    SampledField& operator+=(const SampledField& other);
    SampledField& operator-=(const SampledField& other);
    SampledField& operator*=(double c);
};

SampledField operator+(SampledField a, const SampledField& b);
SampledField operator-(SampledField a, const SampledField& b);
SampledField operator*(double c, SampledField a);

/// Midpoint-rule inner product of two fields on the same grid.
double inner_product(const SampledField& a, const SampledField& b);

/// Sample a pointwise function on all grid nodes.
SampledField sample(const Grid& grid, const std::function<double(std::span<const double>)>& f);

/// Tensor midpoint rule over a box, doubling the per-axis resolution until
/// one halving changes the result by less than tol/10.
double integrate_midpoint(const std::function<double(std::span<const double>)>& f,
                          std::span<const double> lo, std::span<const double> hi,
                          double tol, int initial_cells = 16, int max_cells = 1 << 14);

/// Adaptive Simpson on [a, b] to absolute tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol);

/// Volume of the unit ball in dimension n.
double unit_ball_volume(int n);

} // namespace rqnn
