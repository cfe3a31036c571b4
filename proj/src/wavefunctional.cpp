#include "falsevac/wavefunctional.hpp"

#include <cmath>
#include <numbers>

#include "falsevac/errors.hpp"

namespace falsevac {

namespace {

// log ∫dφ exp(−2·α·w·(φ − m)²) = ½·log(π/(2αw)), summed over sites.
double gaussian_log_integrals(const std::vector<double>& stiffness, const std::vector<double>& weights) {
    double sum = 0.0;
    for (std::size_t j = 0; j < stiffness.size(); ++j)
        sum += 0.5 * std::log(std::numbers::pi / (2.0 * stiffness[j] * weights[j]));
    return sum;
}

void require_same_grid(const Grid& a, const Grid& b) {
    if (!(a == b)) throw PreconditionError("grid", "wavefunctional and configuration live on different grids");
}

}  // namespace

GaussianWavefunctional make_functional(const FieldConfig& center, std::vector<double> stiffness) {
    if (stiffness.size() != center.size())
        throw PreconditionError("stiffness", "needs one value per grid site");
    for (double a : stiffness)
        if (!(a > 0) || !std::isfinite(a)) throw PreconditionError("stiffness", "must be > 0 at every site");

    const double log_integrals = gaussian_log_integrals(stiffness, center.grid().trapezoid_weights());
    const double log_norm = -0.5 * log_integrals;
    if (std::abs(2.0 * log_norm + log_integrals) > 1e-10 * std::max(1.0, std::abs(log_integrals)))
        throw SolverError("make_functional: normalization identity violated");
    return GaussianWavefunctional(center, std::move(stiffness), log_norm);
}

GaussianWavefunctional make_functional(const FieldConfig& center, double stiffness) {
    return make_functional(center, std::vector<double>(center.size(), stiffness));
}

GaussianWavefunctional GaussianWavefunctional::with_log_norm_offset(double delta) const {
    return GaussianWavefunctional(center_, stiffness_, log_norm_ + delta);
}

double evaluate_log(const GaussianWavefunctional& psi, const FieldConfig& phi) {
    require_same_grid(psi.center().grid(), phi.grid());
    const auto w = phi.grid().trapezoid_weights();
    double exponent = 0.0;
    for (std::size_t j = 0; j < phi.size(); ++j) {
        const double d = phi[j] - psi.center()[j];
        exponent += w[j] * psi.stiffness()[j] * d * d;
    }
    return psi.log_norm() - exponent;
}

double log_overlap(const GaussianWavefunctional& psi_i, const GaussianWavefunctional& psi_f) {
    require_same_grid(psi_i.center().grid(), psi_f.center().grid());
    const auto w = psi_i.center().grid().trapezoid_weights();
    double prefactor = 0.0;
    double exponent = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        const double p = psi_i.stiffness()[j] * w[j];
        const double q = psi_f.stiffness()[j] * w[j];
        const double d = psi_i.center()[j] - psi_f.center()[j];
        prefactor += 0.25 * std::log(4.0 * p * q) - 0.5 * std::log(p + q);
        exponent += p * q * d * d / (p + q);
    }
    return prefactor - exponent;
}

double overlap(const GaussianWavefunctional& psi_i, const GaussianWavefunctional& psi_f) {
    return std::exp(log_overlap(psi_i, psi_f));
}

double norm_check(const GaussianWavefunctional& psi) {
    const double log_integrals = gaussian_log_integrals(psi.stiffness(), psi.center().grid().trapezoid_weights());
    return std::exp(2.0 * psi.log_norm() + log_integrals);
}

VacuumStates vacuum_states(const PotentialSpec& spec, const Grid& grid, Interval bracket) {
    if (!std::holds_alternative<DrivenSineGordon>(spec))
        throw PreconditionError("potential", "vacuum states are built for the driven sine-Gordon family");
    const VacuumPair vac = find_minima(spec, bracket);
    const double alpha = gap_to_stiffness(vac.gap);
    return VacuumStates{make_functional(FieldConfig::constant(grid, vac.phi_false), alpha),
                        make_functional(FieldConfig::constant(grid, vac.phi_true), alpha), vac, alpha};
}

}  // namespace falsevac
