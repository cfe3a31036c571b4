#include "falsevac/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "falsevac/errors.hpp"

namespace falsevac {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void require_finite(double value, const char* field) {
    if (!std::isfinite(value)) throw PreconditionError(field, "must be finite");
}

}  // namespace

void validate(const PotentialSpec& spec) {
    std::visit(overloaded{
                   [](const QuarticDoubleWell& p) {
                       require_finite(p.lambda, "lambda");
                       require_finite(p.a, "a");
                       require_finite(p.tilt, "tilt");
                       if (p.lambda <= 0) throw PreconditionError("lambda", "must be > 0");
                       if (p.a <= 0) throw PreconditionError("a", "must be > 0");
                       if (p.tilt < 0) throw PreconditionError("tilt", "must be >= 0");
                   },
                   [](const DrivenSineGordon& p) {
                       require_finite(p.c_a, "c_a");
                       require_finite(p.c_b, "c_b");
                       require_finite(p.phi_c, "phi_c");
                       require_finite(p.tilt, "tilt");
                       if (p.c_a <= 0) throw PreconditionError("c_a", "must be > 0");
                       if (p.tilt < 0) throw PreconditionError("tilt", "must be >= 0");
                   },
                   [](const TaylorQuartic& p) {
                       require_finite(p.phi0, "phi0");
                       require_finite(p.c0, "c0");
                       require_finite(p.c1, "c1");
                       if (p.c0 < 0) throw PreconditionError("c0", "must be >= 0");
                   },
               },
               spec);
}

std::string family_name(const PotentialSpec& spec) {
    return std::visit(overloaded{
                          [](const QuarticDoubleWell&) { return std::string("quartic"); },
                          [](const DrivenSineGordon&) { return std::string("sine_gordon"); },
                          [](const TaylorQuartic&) { return std::string("taylor"); },
                      },
                      spec);
}

double tilt_of(const PotentialSpec& spec) {
    return std::visit(overloaded{
                          [](const QuarticDoubleWell& p) { return p.tilt; },
                          [](const DrivenSineGordon& p) { return p.tilt; },
                          [](const TaylorQuartic&) { return 0.0; },
                      },
                      spec);
}

double eval(const PotentialSpec& spec, double phi) {
    return std::visit(overloaded{
                          [phi](const QuarticDoubleWell& p) {
                              const double s = phi * phi - p.a * p.a;
                              return 0.25 * p.lambda * s * s - p.tilt * phi;
                          },
                          [phi](const DrivenSineGordon& p) {
                              const double d = phi - p.phi_c;
                              return p.c_a * (1.0 - std::cos(phi)) + p.c_b * d * d - p.tilt * phi;
                          },
                          [phi](const TaylorQuartic& p) {
                              const double d2 = (phi - p.phi0) * (phi - p.phi0);
                              return p.c0 * d2 + p.c1 * d2 * d2;
                          },
                      },
                      spec);
}

double deriv(const PotentialSpec& spec, double phi, int order) {
    if (order < 1 || order > 4) throw PreconditionError("order", "derivative order must be in 1..4");
    return std::visit(overloaded{
                          [=](const QuarticDoubleWell& p) {
                              const double l = p.lambda;
                              switch (order) {
                                  case 1: return l * phi * (phi * phi - p.a * p.a) - p.tilt;
                                  case 2: return l * (3.0 * phi * phi - p.a * p.a);
                                  case 3: return 6.0 * l * phi;
                                  default: return 6.0 * l;
                              }
                          },
                          [=](const DrivenSineGordon& p) {
                              switch (order) {
                                  case 1: return p.c_a * std::sin(phi) + 2.0 * p.c_b * (phi - p.phi_c) - p.tilt;
                                  case 2: return p.c_a * std::cos(phi) + 2.0 * p.c_b;
                                  case 3: return -p.c_a * std::sin(phi);
                                  default: return -p.c_a * std::cos(phi);
                              }
                          },
                          [=](const TaylorQuartic& p) {
                              const double d = phi - p.phi0;
                              switch (order) {
                                  case 1: return 2.0 * p.c0 * d + 4.0 * p.c1 * d * d * d;
                                  case 2: return 2.0 * p.c0 + 12.0 * p.c1 * d * d;
                                  case 3: return 24.0 * p.c1 * d;
                                  default: return 24.0 * p.c1;
                              }
                          },
                      },
                      spec);
}

double refine_stationary_point(const PotentialSpec& spec, double lo, double hi, const MinimaOptions& options) {
    double f_lo = deriv(spec, lo, 1);
    double f_hi = deriv(spec, hi, 1);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo > 0) == (f_hi > 0)) throw SolverError("refine_stationary_point: V' does not change sign on the bracket");

    // Orient so that V′(lo) < 0 < V′(hi).
    const bool flipped = f_lo > 0;
    auto residual = [&](double phi) { return flipped ? -deriv(spec, phi, 1) : deriv(spec, phi, 1); };
    auto slope = [&](double phi) { return flipped ? -deriv(spec, phi, 2) : deriv(spec, phi, 2); };

    double phi = 0.5 * (lo + hi);
    for (int it = 0; it < options.max_iterations; ++it) {
        const double f = residual(phi);
        if (std::abs(f) <= options.tolerance) return phi;
        if (f < 0)
            lo = phi;
        else
            hi = phi;

        const double df = slope(phi);
        double next = (df != 0.0) ? phi - f / df : lo - 1.0;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);

        // Bracket collapsed to adjacent doubles: nothing more is representable.
        if (next == phi || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(phi))) {
            const double best = std::abs(residual(lo)) < std::abs(residual(hi)) ? lo : hi;
            return std::abs(residual(best)) < std::abs(f) ? best : phi;
        }
        phi = next;
    }
    if (std::abs(residual(phi)) <= options.tolerance) return phi;
    throw SolverError("refine_stationary_point: no convergence after " + std::to_string(options.max_iterations) +
                      " iterations");
}

VacuumPair find_minima(const PotentialSpec& spec, Interval bracket, const MinimaOptions& options) {
    validate(spec);
    if (!(bracket.hi > bracket.lo)) throw PreconditionError("bracket", "upper end must exceed lower end");
    if (options.scan_points < 3) throw PreconditionError("scan_points", "need at least 3 scan points");

    const int n = options.scan_points;
    const double step = (bracket.hi - bracket.lo) / (n - 1);
    auto node = [&](int k) { return k == n - 1 ? bracket.hi : bracket.lo + k * step; };

    struct Minimum {
        double phi;
        double v;
    };
    std::vector<Minimum> minima;
    double x_prev = node(0);
    double d_prev = deriv(spec, x_prev, 1);
    for (int k = 1; k < n; ++k) {
        const double x = node(k);
        const double d = deriv(spec, x, 1);
        // V′ going from negative to non-negative brackets a minimum in (x_prev, x].
        if (d_prev < 0 && d >= 0) {
            const double phi = refine_stationary_point(spec, x_prev, x, options);
            if (deriv(spec, phi, 2) > 0) minima.push_back({phi, eval(spec, phi)});
        }
        x_prev = x;
        d_prev = d;
    }
    if (minima.size() < 2)
        throw PreconditionError("bracket", "found " + std::to_string(minima.size()) +
                                               " local minima, need at least 2");

    std::sort(minima.begin(), minima.end(), [](const Minimum& l, const Minimum& r) { return l.v < r.v; });
    Minimum lowest = minima[0];
    Minimum second = minima[1];

    const double scale = std::max({1.0, std::abs(lowest.v), std::abs(second.v)});
    const bool tie = std::abs(second.v - lowest.v) <= 64.0 * std::numeric_limits<double>::epsilon() * scale;

    VacuumPair out;
    if (tie) {
        const auto& [lo_min, hi_min] = lowest.phi < second.phi ? std::pair{lowest, second} : std::pair{second, lowest};
        out.phi_false = lo_min.phi;
        out.v_false = lo_min.v;
        out.phi_true = hi_min.phi;
        out.v_true = hi_min.v;
        out.gap = 0.0;
    } else {
        out.phi_false = second.phi;
        out.v_false = second.v;
        out.phi_true = lowest.phi;
        out.v_true = lowest.v;
        out.gap = second.v - lowest.v;
    }
    return out;
}

std::array<double, 5> taylor_coefficients(const PotentialSpec& spec, double phi0) {
    return {eval(spec, phi0), deriv(spec, phi0, 1), deriv(spec, phi0, 2) / 2.0, deriv(spec, phi0, 3) / 6.0,
            deriv(spec, phi0, 4) / 24.0};
}

double gap_to_stiffness(double gap) {
    if (!(gap > 0) || !std::isfinite(gap))
        throw PreconditionError("gap", "must be > 0; degenerate or inverted vacua have no finite stiffness");
    return 1.0 / gap;
}

}  // namespace falsevac
