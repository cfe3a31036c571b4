#include "falsevac/lattice.hpp"

#include <cmath>
#include <numbers>

#include "falsevac/errors.hpp"

namespace falsevac {

Grid::Grid(double x_min, double x_max, std::size_t n) : x_min_(x_min), x_max_(x_max), n_(n), dx_(0.0) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max)) throw PreconditionError("grid", "bounds must be finite");
    if (!(x_max > x_min)) throw PreconditionError("grid.x_max", "must exceed grid.x_min");
    if (n < 3) throw PreconditionError("grid.n", "need at least 3 points");
    dx_ = (x_max - x_min) / static_cast<double>(n - 1);
}

double Grid::x(std::size_t j) const noexcept {
    return j + 1 == n_ ? x_max_ : x_min_ + static_cast<double>(j) * dx_;
}

std::vector<double> Grid::nodes() const {
    std::vector<double> xs(n_);
    for (std::size_t j = 0; j < n_; ++j) xs[j] = x(j);
    return xs;
}

std::vector<double> Grid::trapezoid_weights() const {
    std::vector<double> w(n_, dx_);
    w.front() = w.back() = 0.5 * dx_;
    return w;
}

FieldConfig::FieldConfig(Grid grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size())
        throw PreconditionError("values", "length " + std::to_string(values_.size()) + " does not match grid size " +
                                              std::to_string(grid_.size()));
    for (double v : values_)
        if (!std::isfinite(v)) throw PreconditionError("values", "field values must be finite");
}

FieldConfig FieldConfig::constant(const Grid& grid, double value) {
    return FieldConfig(grid, std::vector<double>(grid.size(), value));
}

FieldConfig sample(const Grid& grid, const std::function<double(double)>& f) {
    std::vector<double> values(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        values[j] = f(grid.x(j));
        if (!std::isfinite(values[j]))
            throw PreconditionError("f", "non-finite sample at x = " + std::to_string(grid.x(j)));
    }
    return FieldConfig(grid, std::move(values));
}

void gradient_into(std::span<const double> f, double dx, Stencil stencil, std::span<double> g) {
    const std::size_t n = f.size();
    if (stencil == Stencil::second_order) {
        if (n < 3) throw PreconditionError("n", "second-order gradient needs n >= 3");
        const double inv = 1.0 / (2.0 * dx);
        g[0] = (4.0 * (f[1] - f[0]) - (f[2] - f[0])) * inv;
        for (std::size_t j = 1; j + 1 < n; ++j) g[j] = (f[j + 1] - f[j - 1]) * inv;
        g[n - 1] = (-4.0 * (f[n - 2] - f[n - 1]) + (f[n - 3] - f[n - 1])) * inv;
        return;
    }
    if (n < 5) throw PreconditionError("n", "fourth-order gradient needs n >= 5");
    const double inv = 1.0 / (12.0 * dx);
    // One-sided stencils written on differences so constant fields give exact zeros.
    g[0] = (48.0 * (f[1] - f[0]) - 36.0 * (f[2] - f[0]) + 16.0 * (f[3] - f[0]) - 3.0 * (f[4] - f[0])) * inv;
    g[1] = (-3.0 * (f[0] - f[1]) + 18.0 * (f[2] - f[1]) - 6.0 * (f[3] - f[1]) + (f[4] - f[1])) * inv;
    for (std::size_t j = 2; j + 2 < n; ++j) g[j] = (8.0 * (f[j + 1] - f[j - 1]) - (f[j + 2] - f[j - 2])) * inv;
    g[n - 2] = (3.0 * (f[n - 1] - f[n - 2]) - 18.0 * (f[n - 3] - f[n - 2]) + 6.0 * (f[n - 4] - f[n - 2]) -
                (f[n - 5] - f[n - 2])) * inv;
    g[n - 1] = (-48.0 * (f[n - 2] - f[n - 1]) + 36.0 * (f[n - 3] - f[n - 1]) - 16.0 * (f[n - 4] - f[n - 1]) +
                3.0 * (f[n - 5] - f[n - 1])) * inv;
}

FieldConfig gradient(const FieldConfig& config, Stencil stencil) {
    std::vector<double> g(config.size());
    gradient_into(config.values(), config.grid().spacing(), stencil, g);
    return FieldConfig(config.grid(), std::move(g));
}

double integrate(std::span<const double> values, double dx) {
    if (values.empty()) return 0.0;
    double interior = 0.0;
    for (std::size_t j = 1; j + 1 < values.size(); ++j) interior += values[j];
    return dx * (interior + 0.5 * (values.front() + values.back()));
}

double integrate(const FieldConfig& config) { return integrate(config.values(), config.grid().spacing()); }

double gaussian_delta(double sharpness, double x) {
    return sharpness / (2.0 * std::sqrt(std::numbers::pi)) * std::exp(-x * x * sharpness * sharpness / 4.0);
}

void DeltaPair::validate() const {
    if (!(n_param > 0) || !std::isfinite(n_param)) throw PreconditionError("N", "must be > 0");
    if (!(l_sep > 0) || !std::isfinite(l_sep)) throw PreconditionError("L", "must be > 0");
    if (grid.spacing() > 0.2 / n_param)
        throw PreconditionError("grid.n", "spacing " + std::to_string(grid.spacing()) + " exceeds 0.2/N");
    const double clearance = 6.0 / n_param;
    if (-0.5 * l_sep - grid.x_min() < clearance || grid.x_max() - 0.5 * l_sep < clearance)
        throw PreconditionError("grid", "walls at +-L/2 must be at least 6/N from the boundary");
}

FieldConfig delta_n(const DeltaPair& pair, double center) {
    pair.validate();
    const double clearance = 6.0 / pair.n_param;
    if (center - pair.grid.x_min() < clearance || pair.grid.x_max() - center < clearance)
        throw PreconditionError("center", "must be at least 6/N from the boundary");
    const double n = pair.n_param;
    return sample(pair.grid, [=](double x) { return gaussian_delta(n, x - center); });
}

FieldConfig wall_gradient_config(const DeltaPair& pair) {
    pair.validate();
    const double n = pair.n_param;
    const double half = 0.5 * pair.l_sep;
    return sample(pair.grid, [=](double x) { return gaussian_delta(n, x - half) - gaussian_delta(n, x + half); });
}

double wall_gradient_energy(const DeltaPair& pair) {
    const FieldConfig g = wall_gradient_config(pair);
    std::vector<double> density(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) density[j] = 0.5 * g[j] * g[j];
    return integrate(density, pair.grid.spacing());
}

double wall_gradient_energy_exact(double n_param, double l_sep) {
    const double self = n_param / (2.0 * std::sqrt(2.0 * std::numbers::pi));
    return self * -std::expm1(-n_param * n_param * l_sep * l_sep / 8.0);
}

FieldConfig wall_pair_profile(const DeltaPair& pair) {
    pair.validate();
    const double n = pair.n_param;
    const double half = 0.5 * pair.l_sep;
    return sample(pair.grid,
                  [=](double x) { return 0.5 * (std::erf(0.5 * n * (x - half)) - std::erf(0.5 * n * (x + half))); });
}

}  // namespace falsevac
