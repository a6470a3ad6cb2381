#include "rootshift/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rootshift {

Complex uniform_in_disk(Rng& rng, double radius) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = radius * std::sqrt(u(rng));
    const double theta = 2.0 * std::numbers::pi * u(rng);
    return std::polar(r, theta);
}

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::vector<Complex> random_separated_points(Rng& rng, int count, double radius, double min_sep) {
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        bool placed = false;
        for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
            const Complex z = uniform_in_disk(rng, radius);
            placed = true;
            for (const auto& w : pts)
                if (std::abs(z - w) < min_sep) {
                    placed = false;
                    break;
                }
            if (placed) pts.push_back(z);
        }
        if (!placed)
            throw std::runtime_error("random_separated_points: rejection budget exhausted; min_sep too large for radius");
    }
    return pts;
}

DiffOperator random_admissible_operator(Rng& rng, int n) {
    std::vector<Complex> a(static_cast<std::size_t>(n) + 1);
    do {
        a[0] = uniform_in_disk(rng, 2.0);
    } while (std::abs(a[0]) < 0.1);
    for (std::size_t k = 1; k < a.size(); ++k) a[k] = uniform_in_disk(rng, 2.0);
    return DiffOperator(std::move(a), n);
}

DiffOperator random_no_first_order_operator(Rng& rng, int n, double radius) {
    std::vector<Complex> a(static_cast<std::size_t>(n) + 1);
    a[0] = 1.0;
    for (std::size_t k = 2; k < a.size(); ++k) a[k] = uniform_in_disk(rng, radius);
    return DiffOperator(std::move(a), n);
}

}  // namespace rootshift
