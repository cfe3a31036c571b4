#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library's own quadrature, differencing or root finding.

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

inline double central_difference(const std::function<double(double)>& f, double x, double h = 1e-5) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Golden-section search for a minimum of f on [a, b].
inline double golden_minimum(const std::function<double(double)>& f, double a, double b, int iterations = 200) {
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - r * (b - a);
    double d = a + r * (b - a);
    for (int i = 0; i < iterations && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++i) {
        if (f(c) < f(d))
            b = d;
        else
            a = c;
        c = b - r * (b - a);
        d = a + r * (b - a);
    }
    return 0.5 * (a + b);
}

/// Local minima of f by dense sampling (a value below both neighbours),
/// each refined by golden-section search on the neighbouring cells.
inline std::vector<double> dense_scan_minima(const std::function<double(double)>& f, double lo, double hi,
                                             int points = 10000) {
    const double h = (hi - lo) / (points - 1);
    std::vector<double> out;
    for (int k = 1; k + 1 < points; ++k) {
        const double x = lo + k * h;
        if (f(x) < f(x - h) && f(x) <= f(x + h)) out.push_back(golden_minimum(f, x - h, x + h));
    }
    return out;
}

/// Composite Simpson rule on [a, b] with an even number of intervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
    if (intervals % 2) ++intervals;
    const double h = (b - a) / intervals;
    double s = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0;
}

/// Tensor-product composite Simpson over a rectangle.
inline double simpson_2d(const std::function<double(double, double)>& f, double ax, double bx, int nx, double ay,
                         double by, int ny) {
    return simpson([&](double x) { return simpson([&](double y) { return f(x, y); }, ay, by, ny); }, ax, bx, nx);
}

/// Dense tensor-product Gauss-Legendre (41 nodes per axis) over a box.
inline double tensor_gauss_legendre(const std::function<double(const std::vector<double>&)>& f,
                                    const std::vector<double>& lo, const std::vector<double>& hi) {
    using rule = boost::math::quadrature::gauss<double, 41>;
    std::vector<double> point(lo.size());
    std::function<double(std::size_t)> level = [&](std::size_t axis) -> double {
        if (axis == lo.size()) return f(point);
        return rule::integrate(
            [&](double t) {
                point[axis] = t;
                return level(axis + 1);
            },
            lo[axis], hi[axis]);
    };
    return level(0);
}

/// Smooth monotone-ish interpolation between −a and +a: a·tanh(u(x)) with a
/// localized random wiggle on top of the linear argument.
struct RandomKinkProfile {
    double a, k, x0, amp, omega, phase, width;

    double operator()(double x) const {
        const double u = k * (x - x0) + amp * std::sin(omega * x + phase) * std::exp(-(x - x0) * (x - x0) / (width * width));
        return a * std::tanh(u);
    }

    static RandomKinkProfile draw(std::mt19937_64& rng, double a) {
        std::uniform_real_distribution<double> k(0.7, 2.0), x0(-1.0, 1.0), amp(0.0, 0.8), om(0.5, 3.0),
            ph(0.0, 6.283185307179586), w(1.0, 3.0);
        return {a, k(rng), x0(rng), amp(rng), om(rng), ph(rng), w(rng)};
    }
};

}  // namespace oracle
