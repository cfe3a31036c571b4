#pragma once

#include <optional>
#include <vector>

#include "falsevac/lattice.hpp"
#include "falsevac/potentials.hpp"

namespace falsevac {

// All functionals here are Euclidean (imaginary time τ_E); the Wick rotation
// is a convention, never applied at runtime.

/// φ(τ, x) on a tensor-product lattice, stored row-major (one row per τ node).
class SpacetimeConfig {
public:
    SpacetimeConfig(Grid tau_grid, Grid x_grid, std::vector<double> values);

    /// τ-independent extension of a spatial profile.
    static SpacetimeConfig static_extension(const Grid& tau_grid, const FieldConfig& profile);

    const Grid& tau_grid() const noexcept { return tau_grid_; }
    const Grid& x_grid() const noexcept { return x_grid_; }
    double operator()(std::size_t i_tau, std::size_t j_x) const noexcept {
        return values_[i_tau * x_grid_.size() + j_x];
    }
    std::span<const double> row(std::size_t i_tau) const noexcept {
        return std::span<const double>(values_).subspan(i_tau * x_grid_.size(), x_grid_.size());
    }

private:
    Grid tau_grid_;
    Grid x_grid_;
    std::vector<double> values_;
};

struct ActionReport {
    double gradient_term = 0.0;
    double potential_term = 0.0;
    double total = 0.0;
    double t_p = 0.0;
    bool reduced = false;
};

struct BoundReport {
    double lagrangian_value = 0.0;
    double q_term = 0.0;
    double quadratic_term = 0.0;
    bool satisfied = false;
    double phi_c = 0.0;  // false vacuum the bound is anchored to
    double gap = 0.0;
};

/// ε̄(φ) = ∫dx [½(∇φ)² + V(φ)]
ActionReport energy_functional(const PotentialSpec& spec, const FieldConfig& profile);

/// Instantaneous nucleation: ∫dτ dx ζ → t_p·ε̄(φ).
ActionReport reduced_action(const PotentialSpec& spec, const FieldConfig& profile, double t_p);

/// S_E = ∫dτ dx [½(∂_τφ)² + ½(∂ₓφ)² + V(φ)], trapezoid in both directions.
ActionReport euclidean_action_2d(const PotentialSpec& spec, const SpacetimeConfig& config);

/// ∫½(∇φ)² dx of a reference configuration (the leading term of the
/// Lagrangian's expansion about it).
double expansion_base_term(const FieldConfig& profile);

/// Compares ε̄(φ) − ∫V(φ_C) against |Q| + ∫½(φ − φ_C)²·2ΔE_gap, with φ_C the
/// false vacuum found in `bracket`. Violations are reported, not thrown.
BoundReport lagrangian_bound(const PotentialSpec& spec, const FieldConfig& profile, Interval bracket,
                             double q_abs = 0.0, double tolerance = 1e-9);

}  // namespace falsevac
