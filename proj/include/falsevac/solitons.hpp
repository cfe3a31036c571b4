#pragma once

#include "falsevac/lattice.hpp"
#include "falsevac/potentials.hpp"

namespace falsevac {

struct KinkSolution {
    FieldConfig profile;
    double mass;
    double charge;
    double bound;
    double bps_residual;
};

/// Ẽ(x) = ½(dφ/dx)² + V(φ), gradient by the fourth-order stencil.
FieldConfig energy_density(const PotentialSpec& spec, const FieldConfig& profile);

/// M = ∫Ẽ dx. The profile must sit at stationary points of V at both grid
/// ends (|V′| ≤ asymptotic_tol) or the mass would depend on the box size.
double kink_mass(const PotentialSpec& spec, const FieldConfig& profile, double asymptotic_tol = 1e-3);

/// Q = (φ(x_max) − φ(x_min)) / (2·phi_vac)
double topological_charge(const FieldConfig& profile, double phi_vac);

/// J⁰ = ∂ₓφ / (2·phi_vac), with ε⁰¹ = +1 so that a kink has Q = +1.
FieldConfig topological_current(const FieldConfig& profile, double phi_vac);

/// (4/(3√2))·μ³/λ·|Q| with μ = √λ·a. Symmetric (untilted) quartic well only.
double bogomolnyi_bound(const PotentialSpec& spec, double charge);

/// Mass unit of the quartic Bogomol'nyi bound, (4/(3√2))·μ³/λ.
double bogomolnyi_mass_unit(const QuarticDoubleWell& well);

/// ∫ √(2V) dφ between two degenerate vacua: the BPS energy of any family.
double bps_energy(const PotentialSpec& spec, double phi_lo, double phi_hi);

/// Degenerate vacuum pair and barrier top used by solve_kink.
struct KinkVacua {
    double lower;
    double upper;
    double barrier_top;
};

/// Throws PreconditionError unless the spec has two degenerate vacua
/// (untilted quartic, or sine-Gordon with c_b = 0 and no tilt).
KinkVacua kink_vacua(const PotentialSpec& spec);

/// Integrates the first-order BPS equation dφ/dx = √(2V) by RK4 outward from
/// the grid midpoint, where φ is pinned to the barrier top.
KinkSolution solve_kink(const PotentialSpec& spec, const Grid& grid);

}  // namespace falsevac
