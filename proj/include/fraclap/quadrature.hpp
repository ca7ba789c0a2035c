#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace fraclap {

/// Gauss-Legendre rule on [-1, 1]; nodes/weights are cached per order.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule& gauss_legendre(int order);

/// Integrate f over [a, b] with a single Gauss-Legendre panel.
double integrate_panel(const std::function<double(double)>& f, double a, double b,
                       int order = 32);

/// Integrate f over [a, b] with doubling panels [a, a+base], [a+base, a+2 base], ...
/// Robust for integrands with scale structure spread over decades.
double integrate_dyadic(const std::function<double(double)>& f, double a, double b,
                        double base, int order = 32);

/// Unit directions w with weights summing to the sphere area |S^{dim-1}|.
/// dim == 2: midpoint rule in angle (trapezoid on the circle).
/// dim == 3: Gauss-Legendre in cos(theta) x midpoint in phi.
struct AngularRule {
    std::vector<std::array<double, 3>> dirs;
    std::vector<double> weights;
};

AngularRule angular_rule(int dim, int level);

/// |S^{k}|, surface area of the unit sphere in R^{k+1}. |S^0| = 2.
double sphere_area(int k);

/// Parallel map over [0, count): deterministic regardless of thread count.
/// Worker count: FRACLAP_THREADS env var if set, else hardware concurrency.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

int worker_count();

/// Deterministic 64-bit generator (splitmix64); used instead of std
/// distributions so that seeded probes are reproducible across platforms.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next();
    /// Uniform in [0, 1).
    double uniform();
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);
};

}  // namespace fraclap
