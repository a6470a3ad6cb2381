#include "rootshift/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "rootshift/metrics.hpp"
#include "rootshift/rootfind.hpp"
#include "rootshift/sampling.hpp"

namespace rootshift {

namespace {

double coefficient_scale(const DiffOperator& T) {
    double m = 0.0;
    for (const auto& a : T.alphas()) m = std::max(m, std::abs(a));
    return m;
}

// ((x + 2)/(x + 1))^(n-1) - 1 without cancellation for large x.
double growth_term(double x, int n) { return std::expm1(static_cast<double>(n - 1) * std::log1p(1.0 / (x + 1.0))); }

double kf_sample(const DiffOperator& T, std::uint64_t seed, int index) {
    Rng rng = sample_rng(seed, static_cast<std::uint64_t>(index));
    const int degree = uniform_int(rng, 1, T.n());
    std::vector<Complex> roots(static_cast<std::size_t>(degree));
    for (auto& w : roots) w = uniform_in_disk(rng, 10.0);
    const Poly f = from_roots(roots);
    // both sides through the root finder, so T = I gives exactly zero
    const auto base = find_roots(f);
    const auto moved = find_roots(apply_operator(T, f));
    return frechet_distance(base.roots, moved.roots).bottleneck;
}

}  // namespace

bool first_order_vanishes(const DiffOperator& T) {
    const DiffOperator N = normalize_operator(T);
    return T.n() < 1 || std::abs(N[1]) <= 1e-14 * (1.0 + coefficient_scale(N));
}

bool is_first_order_form(const DiffOperator& T) {
    const DiffOperator N = normalize_operator(T);
    for (int k = 2; k <= N.n(); ++k)
        if (N[static_cast<std::size_t>(k)] != Complex{}) return false;
    return true;
}

double r_phi(const DiffOperator& T) {
    if (!T.admissible()) throw std::invalid_argument("r_phi: operator is not admissible (alpha_0 = 0)");
    if (T.n() < 1) throw std::invalid_argument("r_phi: need n >= 1");
    const auto result = find_roots(apply_operator(T, Poly::monomial(T.n())));
    double m = 0.0;
    for (const auto& e : result.roots.entries) m = std::max(m, std::abs(e.value + e.tail));
    return m;
}

double gamma_prime(const DiffOperator& T) {
    if (T.n() < 2) throw std::invalid_argument("gamma_prime: need n >= 2");
    if (!T.admissible()) throw std::invalid_argument("gamma_prime: operator is not admissible (alpha_0 = 0)");
    if (!first_order_vanishes(T)) throw std::invalid_argument("gamma_prime: requires alpha_1 = 0");
    const DiffOperator N = normalize_operator(T);
    const int n = N.n();
    double max_term = 0.0;
    double factorial = 1.0;  // (k-1)!
    for (int k = 2; k <= n; ++k) {
        factorial *= static_cast<double>(k - 1);
        max_term = std::max(max_term, std::abs(N[static_cast<std::size_t>(k)]) * factorial);
    }
    if (max_term == 0.0) return 0.0;
    const double R = r_phi(N);
    return static_cast<double>(n) * max_term * (R + 1.0) * growth_term(R, n);
}

double gamma(const DiffOperator& T) {
    const double gp = gamma_prime(T);
    const double R = r_phi(T);
    return std::max(R * (2.0 * R + 1.0), 2.0 * gp);
}

double gamma_alpha(Complex alpha, int n) {
    if (n < 2) throw std::invalid_argument("gamma_alpha: need n >= 2");
    const double a = std::abs(alpha);
    const double s = a * static_cast<double>(n - 1);
    double max_term = 0.0;
    double power = a;
    for (int k = 2; k <= n; ++k) {
        power *= a;
        max_term = std::max(max_term, power * (1.0 - 1.0 / static_cast<double>(k)));
    }
    return 2.0 * static_cast<double>(n) * (s + 1.0) * growth_term(s, n) * max_term;
}

TakagiRegion takagi_region(Complex alpha, int n) {
    if (n < 1) throw std::invalid_argument("takagi_region: need n >= 1");
    const double half = static_cast<double>(n) / 2.0;
    return {-alpha * half, std::abs(alpha) * half};
}

double c_epsilon(const DiffOperator& T, double epsilon, double kf) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("c_epsilon: epsilon must be positive");
    if (!(kf >= 0.0)) throw std::invalid_argument("c_epsilon: kf must be non-negative");
    const double gp = gamma_prime(T);
    const double R = r_phi(T);
    const double s = std::sin(std::numbers::pi / static_cast<double>(T.n()));
    return std::max({R + 1.0, gp, gp / epsilon, (1.0 + kf) / s});
}

double gamma_double_prime(const DiffOperator& T, double kf) {
    const double s = std::sin(std::numbers::pi / static_cast<double>(T.n()));
    return std::max(gamma(T), (1.0 + kf) / s);
}

double estimate_kf(const DiffOperator& T, int sample_count, std::uint64_t seed, Execution exec) {
    if (!T.admissible()) throw std::invalid_argument("estimate_kf: operator is not admissible (alpha_0 = 0)");
    if (T.n() < 1 || sample_count <= 0) return 0.0;
    double best = 0.0;
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic) reduction(max : best)
        for (int i = 0; i < sample_count; ++i) best = std::max(best, kf_sample(T, seed, i));
    } else {
        for (int i = 0; i < sample_count; ++i) best = std::max(best, kf_sample(T, seed, i));
    }
    return best;
}

BoundSet compute_bounds(const DiffOperator& T, std::optional<double> kf) {
    BoundSet b;
    b.n = T.n();
    b.r_phi = r_phi(T);
    if (T.n() >= 2 && first_order_vanishes(T)) {
        b.gamma_prime = gamma_prime(T);
        b.gamma = std::max(b.r_phi * (2.0 * b.r_phi + 1.0), 2.0 * b.gamma_prime);
        if (kf) b.gamma_double_prime = gamma_double_prime(T, *kf);
    }
    if (T.n() >= 2 && is_first_order_form(T)) {
        const DiffOperator N = normalize_operator(T);
        b.gamma_alpha = gamma_alpha(N[1], T.n());
    }
    b.kf_estimate = kf;
    return b;
}

}  // namespace rootshift
