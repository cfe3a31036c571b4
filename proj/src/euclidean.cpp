#include "falsevac/euclidean.hpp"

#include <cmath>

#include "falsevac/errors.hpp"

namespace falsevac {

SpacetimeConfig::SpacetimeConfig(Grid tau_grid, Grid x_grid, std::vector<double> values)
    : tau_grid_(tau_grid), x_grid_(x_grid), values_(std::move(values)) {
    if (values_.size() != tau_grid_.size() * x_grid_.size())
        throw PreconditionError("values", "expected n_tau * n_x = " +
                                              std::to_string(tau_grid_.size() * x_grid_.size()) + " entries");
    for (double v : values_)
        if (!std::isfinite(v)) throw PreconditionError("values", "field values must be finite");
}

SpacetimeConfig SpacetimeConfig::static_extension(const Grid& tau_grid, const FieldConfig& profile) {
    std::vector<double> values;
    values.reserve(tau_grid.size() * profile.size());
    for (std::size_t i = 0; i < tau_grid.size(); ++i) values.insert(values.end(), profile.values().begin(), profile.values().end());
    return SpacetimeConfig(tau_grid, profile.grid(), std::move(values));
}

namespace {

struct SliceTerms {
    double gradient;
    double potential;
};

// Spatial gradient and potential integrals of one time slice. energy_functional
// and euclidean_action_2d share this path so a static configuration gives
// identical per-slice values.
SliceTerms slice_terms(const PotentialSpec& spec, std::span<const double> phi, double dx) {
    std::vector<double> g(phi.size());
    gradient_into(phi, dx, Stencil::fourth_order, g);
    std::vector<double> kinetic(phi.size());
    std::vector<double> potential(phi.size());
    for (std::size_t j = 0; j < phi.size(); ++j) {
        kinetic[j] = 0.5 * g[j] * g[j];
        potential[j] = eval(spec, phi[j]);
    }
    return {integrate(kinetic, dx), integrate(potential, dx)};
}

}  // namespace

ActionReport energy_functional(const PotentialSpec& spec, const FieldConfig& profile) {
    const SliceTerms t = slice_terms(spec, profile.values(), profile.grid().spacing());
    return ActionReport{t.gradient, t.potential, t.gradient + t.potential, 0.0, false};
}

ActionReport reduced_action(const PotentialSpec& spec, const FieldConfig& profile, double t_p) {
    if (!(t_p > 0) || !std::isfinite(t_p)) throw PreconditionError("t_p", "must be > 0");
    const ActionReport e = energy_functional(spec, profile);
    return ActionReport{t_p * e.gradient_term, t_p * e.potential_term, t_p * e.total, t_p, true};
}

ActionReport euclidean_action_2d(const PotentialSpec& spec, const SpacetimeConfig& config) {
    const Grid& tg = config.tau_grid();
    const Grid& xg = config.x_grid();
    const std::size_t nt = tg.size();
    const std::size_t nx = xg.size();

    std::vector<double> x_gradient(nt);
    std::vector<double> potential(nt);
    for (std::size_t i = 0; i < nt; ++i) {
        const SliceTerms t = slice_terms(spec, config.row(i), xg.spacing());
        x_gradient[i] = t.gradient;
        potential[i] = t.potential;
    }

    // ½(∂_τφ)² integrated over x for every τ slice, column by column.
    std::vector<double> tau_kinetic(nt * nx);
    std::vector<double> column(nt);
    std::vector<double> dcol(nt);
    for (std::size_t j = 0; j < nx; ++j) {
        for (std::size_t i = 0; i < nt; ++i) column[i] = config(i, j);
        gradient_into(column, tg.spacing(), Stencil::fourth_order, dcol);
        for (std::size_t i = 0; i < nt; ++i) tau_kinetic[i * nx + j] = 0.5 * dcol[i] * dcol[i];
    }
    std::vector<double> tau_gradient(nt);
    for (std::size_t i = 0; i < nt; ++i)
        tau_gradient[i] = integrate(std::span<const double>(tau_kinetic).subspan(i * nx, nx), xg.spacing());

    const double grad = integrate(x_gradient, tg.spacing()) + integrate(tau_gradient, tg.spacing());
    const double pot = integrate(potential, tg.spacing());
    return ActionReport{grad, pot, grad + pot, tg.length(), false};
}

double expansion_base_term(const FieldConfig& profile) {
    const FieldConfig g = gradient(profile, Stencil::fourth_order);
    std::vector<double> kinetic(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) kinetic[j] = 0.5 * g[j] * g[j];
    return integrate(kinetic, profile.grid().spacing());
}

BoundReport lagrangian_bound(const PotentialSpec& spec, const FieldConfig& profile, Interval bracket, double q_abs,
                             double tolerance) {
    if (!(q_abs >= 0)) throw PreconditionError("q_abs", "must be >= 0");
    const VacuumPair vac = find_minima(spec, bracket);
    const double phi_c = vac.phi_false;

    // Potential measured from the false vacuum: V(φ) − V(φ_C).
    std::vector<double> shifted(profile.size());
    for (std::size_t j = 0; j < profile.size(); ++j) shifted[j] = eval(spec, profile[j]) - vac.v_false;
    const double lagrangian = expansion_base_term(profile) + integrate(shifted, profile.grid().spacing());

    std::vector<double> quad(profile.size());
    for (std::size_t j = 0; j < profile.size(); ++j) {
        const double d = profile[j] - phi_c;
        quad[j] = 0.5 * d * d * (2.0 * vac.gap);
    }
    BoundReport r;
    r.lagrangian_value = lagrangian;
    r.q_term = q_abs;
    r.quadratic_term = integrate(quad, profile.grid().spacing());
    r.satisfied = r.lagrangian_value >= r.q_term + r.quadratic_term - tolerance;
    r.phi_c = phi_c;
    r.gap = vac.gap;
    return r;
}

}  // namespace falsevac
