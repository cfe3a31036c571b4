#pragma once

#include <array>
#include <string>
#include <variant>

namespace falsevac {

/// V(φ) = (λ/4)(φ² − a²)² − ε·φ
struct QuarticDoubleWell {
    double lambda = 1.0;
    double a = 1.0;
    double tilt = 0.0;
};

/// V(φ) = c_a(1 − cos φ) + c_b(φ − φ_c)² − ε·φ
struct DrivenSineGordon {
    double c_a = 1.0;
    double c_b = 0.0;
    double phi_c = 0.0;
    double tilt = 0.0;
};

/// V(φ) = c0(φ − φ₀)² + c1(φ − φ₀)⁴
struct TaylorQuartic {
    double phi0 = 0.0;
    double c0 = 0.0;
    double c1 = 0.0;
};

using PotentialSpec = std::variant<QuarticDoubleWell, DrivenSineGordon, TaylorQuartic>;

/// Throws PreconditionError naming the first parameter that violates the
/// family's invariants (positivity of couplings, tilt ≥ 0, finiteness).
void validate(const PotentialSpec& spec);

/// Short family tag: "quartic", "sine_gordon" or "taylor".
std::string family_name(const PotentialSpec& spec);

/// Tilt coefficient ε (0 for the Taylor family, which has none).
double tilt_of(const PotentialSpec& spec);

double eval(const PotentialSpec& spec, double phi);

/// Analytic derivative d^order V / dφ^order, order in 1..4.
double deriv(const PotentialSpec& spec, double phi, int order);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct VacuumPair {
    double phi_false = 0.0;
    double phi_true = 0.0;
    double v_false = 0.0;
    double v_true = 0.0;
    double gap = 0.0;  // v_false − v_true, clamped to exactly 0 for degenerate wells
};

struct MinimaOptions {
    int scan_points = 4096;
    double tolerance = 1e-12;  // on |V′|
    int max_iterations = 100;
};

/// Locates all interior local minima of V in `bracket` and returns the two
/// lowest, labelled false (higher V) and true (lower V). For degenerate
/// wells the minimum with the smaller field value is labelled false.
VacuumPair find_minima(const PotentialSpec& spec, Interval bracket, const MinimaOptions& options = {});

/// Refines a root of V′ inside [lo, hi] where V′(lo) and V′(hi) have
/// opposite signs. Newton steps, bisection whenever Newton leaves the bracket.
double refine_stationary_point(const PotentialSpec& spec, double lo, double hi, const MinimaOptions& options = {});

/// {V, V′, V″/2!, V‴/3!, V⁗/4!} at phi0.
std::array<double, 5> taylor_coefficients(const PotentialSpec& spec, double phi0);

/// α = 1/ΔE_gap. Rejects gap ≤ 0.
double gap_to_stiffness(double gap);

}  // namespace falsevac
