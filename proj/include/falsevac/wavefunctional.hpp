#pragma once

#include <utility>
#include <vector>

#include "falsevac/lattice.hpp"
#include "falsevac/potentials.hpp"

namespace falsevac {

/// Ψ[φ] = exp(log_norm − Σ_j w_j α_j (φ_j − m_j)²) on the lattice measure ∏ dφ_j,
/// w_j the trapezoid weights of the centre's grid. log_norm fixes ‖Ψ‖ = 1.
class GaussianWavefunctional {
public:
    const FieldConfig& center() const noexcept { return center_; }
    const std::vector<double>& stiffness() const noexcept { return stiffness_; }
    double log_norm() const noexcept { return log_norm_; }

    /// Copy with log_norm shifted; only useful for exercising norm_check.
    GaussianWavefunctional with_log_norm_offset(double delta) const;

private:
    friend GaussianWavefunctional make_functional(const FieldConfig&, std::vector<double>);
    GaussianWavefunctional(FieldConfig center, std::vector<double> stiffness, double log_norm)
        : center_(std::move(center)), stiffness_(std::move(stiffness)), log_norm_(log_norm) {}

    FieldConfig center_;
    std::vector<double> stiffness_;
    double log_norm_;
};

GaussianWavefunctional make_functional(const FieldConfig& center, std::vector<double> stiffness);
GaussianWavefunctional make_functional(const FieldConfig& center, double stiffness);

double evaluate_log(const GaussianWavefunctional& psi, const FieldConfig& phi);

/// ⟨Ψ_i|Ψ_f⟩ in closed form, accumulated in log space.
double log_overlap(const GaussianWavefunctional& psi_i, const GaussianWavefunctional& psi_f);
double overlap(const GaussianWavefunctional& psi_i, const GaussianWavefunctional& psi_f);

/// Squared lattice-measure norm; 1 for anything built by make_functional.
double norm_check(const GaussianWavefunctional& psi);

struct VacuumStates {
    GaussianWavefunctional initial;  // centred on φ ≡ φ_F
    GaussianWavefunctional final;    // centred on φ ≡ φ_T
    VacuumPair vacua;
    double alpha;
};

/// False/true vacuum functionals of a tilted sine-Gordon spec with uniform
/// stiffness α = 1/ΔE_gap.
VacuumStates vacuum_states(const PotentialSpec& spec, const Grid& grid, Interval bracket = {-1.0, 7.0});

}  // namespace falsevac
