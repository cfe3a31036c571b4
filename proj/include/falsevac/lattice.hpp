#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace falsevac {

/// Uniform 1-D grid of n nodes spanning [x_min, x_max].
class Grid {
public:
    Grid(double x_min, double x_max, std::size_t n);

    double x_min() const noexcept { return x_min_; }
    double x_max() const noexcept { return x_max_; }
    std::size_t size() const noexcept { return n_; }
    double spacing() const noexcept { return dx_; }
    double length() const noexcept { return x_max_ - x_min_; }

    /// Node j. The last node is x_max exactly.
    double x(std::size_t j) const noexcept;

    std::vector<double> nodes() const;

    /// Composite trapezoid weights: dx/2 at both ends, dx inside.
    std::vector<double> trapezoid_weights() const;

    bool operator==(const Grid&) const = default;

private:
    double x_min_;
    double x_max_;
    std::size_t n_;
    double dx_;
};

/// A real scalar field sampled on a Grid.
class FieldConfig {
public:
    FieldConfig(Grid grid, std::vector<double> values);

    static FieldConfig constant(const Grid& grid, double value);

    const Grid& grid() const noexcept { return grid_; }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t j) const noexcept { return values_[j]; }
    std::size_t size() const noexcept { return values_.size(); }
    double front() const noexcept { return values_.front(); }
    double back() const noexcept { return values_.back(); }

private:
    Grid grid_;
    std::vector<double> values_;
};

enum class Stencil {
    second_order,  // 3-point central, 3-point one-sided at the ends
    fourth_order,  // 5-point central, 5-point one-sided near the ends (needs n ≥ 5)
};

FieldConfig sample(const Grid& grid, const std::function<double(double)>& f);

/// dφ/dx on the grid nodes. Both stencils are exact for linear fields.
FieldConfig gradient(const FieldConfig& config, Stencil stencil = Stencil::second_order);

/// Same as gradient() on a raw strided array; used by the (τ, x) lattice.
void gradient_into(std::span<const double> values, double dx, Stencil stencil, std::span<double> out);

/// Composite trapezoid rule.
double integrate(const FieldConfig& config);
double integrate(std::span<const double> values, double dx);

/// Gaussian test function δ_N(x̃) = (N/(2√π))·exp(−x̃²N²/4), unit area for every N.
double gaussian_delta(double sharpness, double x);

/// Pair of delta-sequence walls at ±L/2 with common sharpness N.
struct DeltaPair {
    double n_param;
    double l_sep;
    Grid grid;

    /// Grid adequacy: Δx ≤ 0.2/N and both centres at least 6/N from the
    /// boundary. Throws PreconditionError otherwise.
    void validate() const;
};

FieldConfig delta_n(const DeltaPair& pair, double center);

/// ∇φ = δ_N(x − L/2) − δ_N(x + L/2)
FieldConfig wall_gradient_config(const DeltaPair& pair);

/// (1/2)∫(∇φ)² dx of the wall pair, by quadrature.
double wall_gradient_energy(const DeltaPair& pair);

/// Closed form of the same integral: (N/(2√(2π)))·(1 − exp(−N²L²/8)).
double wall_gradient_energy_exact(double n_param, double l_sep);

/// Field whose gradient is the wall pair: the difference of two Gaussian
/// step functions, φ(x) = ½[erf(N(x − L/2)/2) − erf(N(x + L/2)/2)].
FieldConfig wall_pair_profile(const DeltaPair& pair);

}  // namespace falsevac
