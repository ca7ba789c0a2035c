#include "fraclap/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numbers>
#include <thread>

namespace fraclap {

namespace {

GaussRule compute_gauss(int order) {
    // Newton iteration on Legendre polynomials, symmetric nodes.
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = order * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss(order)).first;
    return it->second;
}

double integrate_panel(const std::function<double(double)>& f, double a, double b,
                       int order) {
    const GaussRule& rule = gauss_legendre(order);
    const double mid = 0.5 * (a + b);
    const double rad = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < order; ++i) sum += rule.weights[i] * f(mid + rad * rule.nodes[i]);
    return rad * sum;
}

double integrate_dyadic(const std::function<double(double)>& f, double a, double b,
                        double base, int order) {
    if (b <= a) return 0.0;
    double sum = 0.0;
    double lo = a;
    double hi = std::min(a + base, b);
    while (lo < b) {
        sum += integrate_panel(f, lo, hi, order);
        double w = hi - a;
        lo = hi;
        hi = std::min(a + 2.0 * w, b);
        if (hi <= lo) break;
    }
    return sum;
}

double sphere_area(int k) {
    // |S^k| = 2 pi^{(k+1)/2} / Gamma((k+1)/2)
    return 2.0 * std::pow(std::numbers::pi, 0.5 * (k + 1)) / std::tgamma(0.5 * (k + 1));
}

AngularRule angular_rule(int dim, int level) {
    AngularRule rule;
    if (dim == 2) {
        const int m = std::max(4, level);
        const double w = 2.0 * std::numbers::pi / m;
        for (int i = 0; i < m; ++i) {
            double th = (i + 0.5) * w;
            rule.dirs.push_back({std::cos(th), std::sin(th), 0.0});
            rule.weights.push_back(w);
        }
    } else {
        const int nt = std::max(4, level / 2);
        const int np = std::max(8, level);
        const GaussRule& gl = gauss_legendre(nt);
        const double wphi = 2.0 * std::numbers::pi / np;
        for (int i = 0; i < nt; ++i) {
            const double ct = gl.nodes[i];
            const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
            for (int j = 0; j < np; ++j) {
                double ph = (j + 0.5) * wphi;
                rule.dirs.push_back({st * std::cos(ph), st * std::sin(ph), ct});
                rule.weights.push_back(gl.weights[i] * wphi);
            }
        }
    }
    return rule;
}

int worker_count() {
    if (const char* env = std::getenv("FRACLAP_THREADS")) {
        int k = std::atoi(env);
        if (k >= 1) return k;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    const int workers = std::min<std::size_t>(worker_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int t = 0; t + 1 < workers; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
}

std::uint64_t Rng::next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

}  // namespace fraclap
