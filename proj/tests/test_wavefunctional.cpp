#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "falsevac/errors.hpp"
#include "falsevac/wavefunctional.hpp"
#include "oracles.hpp"

using namespace falsevac;
using std::numbers::pi;

namespace {

// ∫∏dφ_j Ψ_a Ψ_b by dense tensor quadrature over ±8σ of the product Gaussian.
double quadrature_inner_product(const GaussianWavefunctional& a, const GaussianWavefunctional& b) {
    const Grid& g = a.center().grid();
    const auto w = g.trapezoid_weights();
    std::vector<double> lo(g.size()), hi(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double p = a.stiffness()[j] * w[j], q = b.stiffness()[j] * w[j];
        const double mid = (p * a.center()[j] + q * b.center()[j]) / (p + q);
        const double sigma = 1.0 / std::sqrt(2.0 * (p + q));
        lo[j] = mid - 8 * sigma;
        hi[j] = mid + 8 * sigma;
    }
    return oracle::tensor_gauss_legendre(
        [&](const std::vector<double>& phi) {
            const FieldConfig c(g, phi);
            return std::exp(evaluate_log(a, c) + evaluate_log(b, c));
        },
        lo, hi);
}

}  // namespace

TEST_CASE("make_functional: normalization") {
    const Grid g(0, 4, 9);
    const FieldConfig center = sample(g, [](double x) { return std::sin(x); });
    const auto psi = make_functional(center, 0.7);
    CHECK(norm_check(psi) == doctest::Approx(1.0).epsilon(1e-12));

    double expected = 0;
    for (double w : g.trapezoid_weights()) expected += -0.25 * std::log(pi / (2 * 0.7 * w));
    CHECK(psi.log_norm() == doctest::Approx(expected).epsilon(1e-14));

    const auto doubled = make_functional(center, 1.4);
    CHECK(doubled.log_norm() - psi.log_norm() == doctest::Approx(9 / 4.0 * std::log(2.0)).epsilon(1e-12));

    CHECK_THROWS_AS(make_functional(center, 0.0), PreconditionError);
    CHECK_THROWS_AS(make_functional(center, std::vector<double>(9, -1.0)), PreconditionError);
    CHECK_THROWS_AS(make_functional(center, std::vector<double>(3, 1.0)), PreconditionError);
}

TEST_CASE("evaluate_log") {
    const Grid g(0, 5, 51);
    const FieldConfig center = sample(g, [](double x) { return 0.1 * x * x; });
    const auto psi = make_functional(center, 2.0);
    CHECK(evaluate_log(psi, center) == psi.log_norm());

    const double c0 = 0.3;
    const FieldConfig shifted = sample(g, [=](double x) { return 0.1 * x * x + c0; });
    CHECK(evaluate_log(psi, shifted) == doctest::Approx(psi.log_norm() - 2.0 * c0 * c0 * 5.0).epsilon(1e-12));

    const FieldConfig phi = sample(g, [](double x) { return std::cos(x); });
    const auto moved = make_functional(sample(g, [](double x) { return 0.1 * x * x + 3; }), 2.0);
    const FieldConfig phi_moved = sample(g, [](double x) { return std::cos(x) + 3; });
    CHECK(evaluate_log(moved, phi_moved) == doctest::Approx(evaluate_log(psi, phi)).epsilon(1e-12));

    CHECK_THROWS_AS(evaluate_log(psi, FieldConfig::constant(Grid(0, 5, 50), 0.0)), PreconditionError);
}

TEST_CASE("overlap: closed-form cases") {
    const Grid g(0, 3, 31);
    const auto a = make_functional(sample(g, [](double x) { return std::sin(x); }), 1.3);
    CHECK(overlap(a, a) == doctest::Approx(1.0).epsilon(1e-12));

    const double alpha = 0.8, delta = 0.4;
    const auto b = make_functional(FieldConfig::constant(g, 1.0), alpha);
    const auto c = make_functional(FieldConfig::constant(g, 1.0 + delta), alpha);
    CHECK(std::abs(overlap(b, c) - std::exp(-alpha / 2 * delta * delta * 3.0)) <= 1e-10);

    CHECK_THROWS_AS(overlap(a, make_functional(FieldConfig::constant(Grid(0, 3, 30), 0.0), 1.0)), PreconditionError);
}

TEST_CASE("overlap and norm: tensor quadrature oracle on tiny lattices") {
    const Grid g3(0, 1, 3);
    const auto i3 = make_functional(FieldConfig(g3, {0.2, -0.4, 0.9}), 1.0);
    const auto f3 = make_functional(FieldConfig(g3, {0.5, 0.1, 0.3}), 2.0);
    CHECK(std::abs(overlap(i3, f3) - quadrature_inner_product(i3, f3)) <= 1e-8);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> c(-1, 1), s(0.3, 3);
    for (std::size_t n : {3, 4}) {
        const Grid g(-1, 2, n);
        std::vector<double> ca(n), cb(n), sa(n), sb(n);
        for (std::size_t j = 0; j < n; ++j) ca[j] = c(rng), cb[j] = c(rng), sa[j] = s(rng), sb[j] = s(rng);
        const auto a = make_functional(FieldConfig(g, ca), sa);
        const auto b = make_functional(FieldConfig(g, cb), sb);
        CHECK(std::abs(norm_check(a) - quadrature_inner_product(a, a)) <= 1e-8);
        CHECK(std::abs(overlap(a, b) - quadrature_inner_product(a, b)) <= 1e-8);
    }
}

TEST_CASE("norm_check") {
    const auto psi = make_functional(FieldConfig::constant(Grid(0, 1, 11), 0.0), 3.0);
    CHECK(std::abs(norm_check(psi) - 1) <= 1e-10);
    CHECK(norm_check(psi.with_log_norm_offset(0.5)) == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
}

TEST_CASE("vacuum_states: tilted sine-Gordon") {
    const PotentialSpec sg = DrivenSineGordon{1, 0, 0, 0.01};
    const Grid g(0, 2 * pi + 1, 501);
    const VacuumStates s = vacuum_states(sg, g);
    for (double v : s.final.center().values()) CHECK(std::abs(v - 2 * pi) < 0.05);
    const VacuumPair v = find_minima(sg, {-1, 7});
    for (double c : s.initial.center().values()) CHECK(c == v.phi_false);
    CHECK(s.alpha == 1.0 / v.gap);
    CHECK(s.initial.stiffness().front() == s.alpha);

    double previous = 0.0;
    for (double length : {1.0, 2.0, 4.0, 8.0}) {
        const VacuumStates t = vacuum_states(sg, Grid(0, length, 101));
        const double lo = log_overlap(t.initial, t.final);
        if (length > 1.0) CHECK(lo < previous);
        previous = lo;
    }

    CHECK_THROWS_AS(vacuum_states(DrivenSineGordon{1, 0, 0, 0}, g), PreconditionError);
    CHECK_THROWS_AS(vacuum_states(QuarticDoubleWell{2, 1, 0.1}, g), PreconditionError);
}

TEST_CASE("property: overlap symmetry, range and monotonicity") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> c(-2, 2), s(0.1, 5);
    const Grid g(0, 2, 21);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> ca(21), cb(21), sa(21), sb(21);
        for (int j = 0; j < 21; ++j) ca[j] = c(rng), cb[j] = c(rng), sa[j] = s(rng), sb[j] = s(rng);
        const auto a = make_functional(FieldConfig(g, ca), sa);
        const auto b = make_functional(FieldConfig(g, cb), sb);
        CHECK(overlap(a, a) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(overlap(a, b) - overlap(b, a)) <= 1e-12);
        CHECK(overlap(a, b) >= 0.0);
        CHECK(overlap(a, b) <= 1.0);
    }
    const auto base = make_functional(FieldConfig::constant(g, 0.0), 1.0);
    double previous = 1.0 + 1e-12;
    for (double sep = 0.0; sep <= 3.0; sep += 0.25) {
        const double o = overlap(base, make_functional(FieldConfig::constant(g, sep), 1.0));
        CHECK(o < previous);
        previous = o;
    }
}

TEST_CASE("property: doubling a linear-response tilt halves the stiffness") {
    const Grid g(0, 5, 51);
    for (double eps : {0.005, 0.01, 0.02}) {
        const VacuumStates one = vacuum_states(DrivenSineGordon{1, 0, 0, eps}, g);
        const VacuumStates two = vacuum_states(DrivenSineGordon{1, 0, 0, 2 * eps}, g);
        REQUIRE(two.vacua.gap / one.vacua.gap == doctest::Approx(2.0).epsilon(0.01));
        CHECK(two.alpha == doctest::Approx(one.alpha / 2).epsilon(0.01));
        CHECK(one.alpha == 1.0 / one.vacua.gap);
    }
}
