#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fraclap/errors.hpp"

namespace fraclap {

using Point = std::vector<double>;

enum class WeightVariant : int { Quadratic = 0, GeneralF = 1 };

const char* to_string(WeightVariant v);

/// Problem triple (n, alpha, p) plus the weight variant.
struct Params {
    int n = 3;                ///< spatial dimension, >= 2
    double alpha = 1.0;       ///< operator order, in (0, 2)
    double p = 1.5;           ///< nonlinearity exponent, > 1
    WeightVariant variant = WeightVariant::Quadratic;

    /// Throws ConfigInvalid unless 2 <= n, 0 < alpha < 2, p > 1.
    void validate() const;
};

struct CriticalExponent {
    double tau;  ///< (n + alpha) / (n - alpha), always > 1
};

CriticalExponent critical_exponent(const Params& params);

/// True iff 1 < p < (n + alpha)/(n - alpha).
bool subcritical_check(const Params& params);

/// Sampled scalar field on a uniform Cartesian box [-L, L]^dim.
/// Samples live at cell centers: x_i = -L + (i + 1/2) h, h = 2L/N.
struct GridField {
    int dim = 2;
    double halfwidth = 1.0;    ///< L
    int points_per_axis = 4;   ///< N
    bool periodic = false;
    std::vector<double> values;  ///< size N^dim, row-major (last axis fastest)

    static GridField zeros(int dim, double halfwidth, int points_per_axis,
                           bool periodic = false);

    double spacing() const { return 2.0 * halfwidth / points_per_axis; }
    std::size_t size() const { return values.size(); }

    /// Coordinate of sample i along one axis.
    double center(int i) const {
        return -halfwidth + (i + 0.5) * spacing();
    }
    /// Flat index -> point coordinates.
    void coords(std::size_t flat, double* out) const;
    std::size_t index(std::span<const int> multi) const;

    double sup_norm() const;
    /// Grid L^q norm, (sum |v|^q h^dim)^{1/q}.
    double lq_norm(double q) const;

    /// Throws ConfigInvalid on non-finite values or size mismatch.
    void validate() const;
};

/// Black-box evaluable function with declared smoothness and decay metadata.
/// decay_exponent d asserts |u(x)| <= C (1 + |x|)^{-d}; the membership
/// condition for the weighted integrability class is d > -alpha.
struct ProfileSpec {
    std::function<double(std::span<const double>)> evaluate;
    int dim = 2;
    int smoothness_order = 2;
    double decay_exponent = 0.0;
    std::optional<double> support_radius;       ///< declared compact support
    std::optional<Point> singular_point;        ///< e.g. a Kelvin center

    double operator()(std::span<const double> x) const;

    /// Checked proxy for membership in the weighted integrability class:
    /// requires decay_exponent > -alpha (otherwise the defining integral
    /// cannot converge) and finiteness of the evaluator on a coarse probe.
    bool membership_probe(const Params& params) const;
};

/// Truncated integral over |x| <= R_max of |u(x)| / (1 + |x|^{n+alpha}),
/// by dyadic radial panels times a fixed angular rule. Monotone
/// nondecreasing in R_max for nonnegative profiles (panels are nested).
/// Throws NonFiniteEvaluation if the evaluator produces a non-finite value.
double l_alpha_membership_probe(const ProfileSpec& profile, const Params& params,
                                double R_max);

}  // namespace fraclap
