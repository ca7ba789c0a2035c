#include "fraclap/core.hpp"

#include <cmath>
#include <cstdio>

#include "fraclap/quadrature.hpp"

namespace fraclap {

const char* to_string(WeightVariant v) {
    return v == WeightVariant::Quadratic ? "quadratic" : "general-f";
}

void Params::validate() const {
    if (n < 2) throw ConfigInvalid("Params: n must be >= 2");
    if (!(alpha > 0.0) || !(alpha < 2.0))
        throw ConfigInvalid("Params: alpha must lie in (0, 2)");
    if (!(p > 1.0)) throw ConfigInvalid("Params: p must be > 1");
}

CriticalExponent critical_exponent(const Params& params) {
    params.validate();
    return {(params.n + params.alpha) / (params.n - params.alpha)};
}

bool subcritical_check(const Params& params) {
    return params.p > 1.0 && params.p < critical_exponent(params).tau;
}

GridField GridField::zeros(int dim, double halfwidth, int points_per_axis,
                           bool periodic) {
    if (dim < 1 || dim > 3) throw ConfigInvalid("GridField: dim must be 1, 2 or 3");
    if (halfwidth <= 0.0) throw ConfigInvalid("GridField: halfwidth must be positive");
    if (points_per_axis < 4) throw ConfigInvalid("GridField: need N >= 4");
    GridField f;
    f.dim = dim;
    f.halfwidth = halfwidth;
    f.points_per_axis = points_per_axis;
    f.periodic = periodic;
    std::size_t total = 1;
    for (int d = 0; d < dim; ++d) total *= static_cast<std::size_t>(points_per_axis);
    f.values.assign(total, 0.0);
    return f;
}

void GridField::coords(std::size_t flat, double* out) const {
    const std::size_t N = static_cast<std::size_t>(points_per_axis);
    for (int d = dim - 1; d >= 0; --d) {
        out[d] = center(static_cast<int>(flat % N));
        flat /= N;
    }
}

std::size_t GridField::index(std::span<const int> multi) const {
    std::size_t flat = 0;
    for (int d = 0; d < dim; ++d)
        flat = flat * points_per_axis + static_cast<std::size_t>(multi[d]);
    return flat;
}

double GridField::sup_norm() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

double GridField::lq_norm(double q) const {
    const double cell = std::pow(spacing(), dim);
    double sum = 0.0;
    for (double v : values) sum += std::pow(std::abs(v), q);
    return std::pow(sum * cell, 1.0 / q);
}

void GridField::validate() const {
    std::size_t total = 1;
    for (int d = 0; d < dim; ++d) total *= static_cast<std::size_t>(points_per_axis);
    if (values.size() != total)
        throw ConfigInvalid("GridField: values size does not match N^dim");
    for (double v : values)
        if (!std::isfinite(v)) throw ConfigInvalid("GridField: non-finite value");
}

double ProfileSpec::operator()(std::span<const double> x) const {
    return evaluate(x);
}

bool ProfileSpec::membership_probe(const Params& params) const {
    if (!(decay_exponent > -params.alpha)) return false;
    // finite evaluations on a coarse radial probe
    Rng rng(0x5eedULL);
    for (int k = 0; k < 64; ++k) {
        Point x(dim);
        double r = std::pow(2.0, rng.uniform(-3.0, 6.0));
        double nrm = 0.0;
        for (int d = 0; d < dim; ++d) {
            x[d] = rng.uniform(-1.0, 1.0);
            nrm += x[d] * x[d];
        }
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) continue;
        for (int d = 0; d < dim; ++d) x[d] *= r / nrm;
        if (singular_point) {
            double dist = 0.0;
            for (int d = 0; d < dim; ++d) {
                double t = x[d] - (*singular_point)[d];
                dist += t * t;
            }
            if (dist < 1e-6) continue;
        }
        if (!std::isfinite(evaluate(x))) return false;
    }
    return true;
}

double l_alpha_membership_probe(const ProfileSpec& profile, const Params& params,
                                double R_max) {
    if (!(R_max > 0.0)) throw ConfigInvalid("l_alpha_membership_probe: R_max must be > 0");
    const int dim = profile.dim;
    const AngularRule ang = angular_rule(dim, dim == 2 ? 64 : 24);
    const double npa = params.n + params.alpha;

    auto shell = [&](double r) {
        double sum = 0.0;
        Point y(dim);
        for (std::size_t a = 0; a < ang.dirs.size(); ++a) {
            for (int d = 0; d < dim; ++d) y[d] = r * ang.dirs[a][d];
            double v = profile.evaluate(y);
            if (!std::isfinite(v))
                throw NonFiniteEvaluation("membership probe: evaluator returned non-finite value");
            sum += ang.weights[a] * std::abs(v);
        }
        return sum * std::pow(r, dim - 1) / (1.0 + std::pow(r, npa));
    };
    // Dyadic panels anchored at radius 1 so that probes at increasing R_max
    // share panel boundaries (monotone saturation sequences come out exact).
    return integrate_dyadic(shell, 0.0, R_max, std::min(1.0, R_max), 24);
}

}  // namespace fraclap
