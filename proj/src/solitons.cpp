#include "falsevac/solitons.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "falsevac/errors.hpp"

namespace falsevac {

FieldConfig energy_density(const PotentialSpec& spec, const FieldConfig& profile) {
    const FieldConfig g = gradient(profile, Stencil::fourth_order);
    std::vector<double> density(profile.size());
    for (std::size_t j = 0; j < profile.size(); ++j) density[j] = 0.5 * g[j] * g[j] + eval(spec, profile[j]);
    return FieldConfig(profile.grid(), std::move(density));
}

double kink_mass(const PotentialSpec& spec, const FieldConfig& profile, double asymptotic_tol) {
    for (double end : {profile.front(), profile.back()}) {
        if (std::abs(deriv(spec, end, 1)) > asymptotic_tol)
            throw PreconditionError("profile", "not vacuum-asymptotic: |V'(phi)| = " +
                                                   std::to_string(std::abs(deriv(spec, end, 1))) +
                                                   " at a grid end; enlarge the grid");
    }
    return integrate(energy_density(spec, profile));
}

double topological_charge(const FieldConfig& profile, double phi_vac) {
    if (!(phi_vac > 0)) throw PreconditionError("phi_vac", "must be > 0");
    return (profile.back() - profile.front()) / (2.0 * phi_vac);
}

FieldConfig topological_current(const FieldConfig& profile, double phi_vac) {
    if (!(phi_vac > 0)) throw PreconditionError("phi_vac", "must be > 0");
    const FieldConfig g = gradient(profile);
    std::vector<double> j0(g.values().begin(), g.values().end());
    for (double& v : j0) v /= 2.0 * phi_vac;
    return FieldConfig(profile.grid(), std::move(j0));
}

double bogomolnyi_mass_unit(const QuarticDoubleWell& well) {
    const double mu = std::sqrt(well.lambda) * well.a;
    return 4.0 / (3.0 * std::numbers::sqrt2) * mu * mu * mu / well.lambda;
}

double bogomolnyi_bound(const PotentialSpec& spec, double charge) {
    const auto* well = std::get_if<QuarticDoubleWell>(&spec);
    if (well == nullptr) throw PreconditionError("potential", "Bogomol'nyi bound is defined for the quartic double well");
    if (well->tilt != 0.0) throw PreconditionError("tilt", "Bogomol'nyi bound needs the untilted double well");
    validate(spec);
    return bogomolnyi_mass_unit(*well) * std::abs(charge);
}

double bps_energy(const PotentialSpec& spec, double phi_lo, double phi_hi) {
    const double v_ref = eval(spec, phi_lo);
    auto integrand = [&](double phi) { return std::sqrt(2.0 * std::max(eval(spec, phi) - v_ref, 0.0)); };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, phi_lo, phi_hi, 15, 1e-14);
}

KinkVacua kink_vacua(const PotentialSpec& spec) {
    validate(spec);
    if (const auto* well = std::get_if<QuarticDoubleWell>(&spec)) {
        if (well->tilt != 0.0)
            throw PreconditionError("tilt", "tilted wells have non-degenerate vacua; no static kink exists");
        return {-well->a, well->a, 0.0};
    }
    if (const auto* sg = std::get_if<DrivenSineGordon>(&spec)) {
        if (sg->tilt != 0.0 || sg->c_b != 0.0)
            throw PreconditionError(sg->tilt != 0.0 ? "tilt" : "c_b",
                                    "sine-Gordon kink needs c_b = 0 and tilt = 0 (degenerate vacua)");
        return {0.0, 2.0 * std::numbers::pi, std::numbers::pi};
    }
    throw PreconditionError("potential", "the Taylor quartic family has no pair of degenerate vacua");
}

KinkSolution solve_kink(const PotentialSpec& spec, const Grid& grid) {
    const KinkVacua vac = kink_vacua(spec);
    const double v_vac = eval(spec, vac.lower);

    // BPS flow dφ/dx = √(2(V − V_vac)); clamped at 0 where roundoff makes the radicand negative.
    auto flow = [&](double phi) { return std::sqrt(2.0 * std::max(eval(spec, phi) - v_vac, 0.0)); };
    auto rk4 = [&](double phi, double h) {
        const double k1 = flow(phi);
        const double k2 = flow(phi + 0.5 * h * k1);
        const double k3 = flow(phi + 0.5 * h * k2);
        const double k4 = flow(phi + h * k3);
        return std::clamp(phi + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4), vac.lower, vac.upper);
    };

    const std::size_t n = grid.size();
    const double x_mid = 0.5 * (grid.x_min() + grid.x_max());
    std::size_t first_right = 0;
    while (first_right < n && grid.x(first_right) < x_mid) ++first_right;

    std::vector<double> phi(n);
    double x = x_mid;
    double value = vac.barrier_top;
    for (std::size_t j = first_right; j < n; ++j) {
        value = rk4(value, grid.x(j) - x);
        x = grid.x(j);
        phi[j] = value;
    }
    x = x_mid;
    value = vac.barrier_top;
    for (std::size_t j = first_right; j-- > 0;) {
        value = rk4(value, grid.x(j) - x);
        x = grid.x(j);
        phi[j] = value;
    }
    for (double v : phi)
        if (!std::isfinite(v)) throw SolverError("solve_kink: RK4 integration produced a non-finite value");

    FieldConfig profile(grid, std::move(phi));

    const FieldConfig g = gradient(profile, Stencil::fourth_order);
    double residual = 0.0;
    for (std::size_t j = 0; j < n; ++j) residual = std::max(residual, std::abs(g[j] - flow(profile[j])));

    const double phi_vac = 0.5 * (vac.upper - vac.lower);
    const double charge = topological_charge(profile, phi_vac);
    const double bound = std::holds_alternative<QuarticDoubleWell>(spec)
                             ? bogomolnyi_bound(spec, charge)
                             : bps_energy(spec, vac.lower, vac.upper) * std::abs(charge);
    const double mass = kink_mass(spec, profile);
    return KinkSolution{std::move(profile), mass, charge, bound, residual};
}

}  // namespace falsevac
