#include "rootshift/families.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rootshift/sampling.hpp"

namespace rootshift {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= static_cast<double>(k);
    return f;
}

Complex cpow(Complex a, int n) {
    Complex r = 1.0;
    for (int k = 0; k < n; ++k) r *= a;
    return r;
}

// True when T / alpha_0 equals I + D^order exactly.
bool is_identity_plus_power(const DiffOperator& T, int order) {
    if (!T.admissible() || order > T.n()) return false;
    const DiffOperator N = normalize_operator(T);
    for (int k = 1; k <= N.n(); ++k)
        if (N[static_cast<std::size_t>(k)] != (k == order ? Complex{1.0} : Complex{})) return false;
    return true;
}

}  // namespace

void validate(const FamilySpec& family) {
    std::visit(overloaded{
                   [](const PsiFamily& f) {
                       if (!(f.a > 0.0) || f.n < 1) throw std::invalid_argument("psi family needs a > 0, n >= 1");
                   },
                   [](const QuarticFamily& f) {
                       if (!(f.a > 0.0)) throw std::invalid_argument("quartic family needs a > 0");
                   },
                   [](const CoeffFamily& f) {
                       if (f.lower.empty()) throw std::invalid_argument("coefficient family needs n >= 2");
                   },
                   [](const TruncatedFamily& f) {
                       if (f.lower.empty()) throw std::invalid_argument("truncated family needs n >= 2");
                   },
                   [](const RandomSimpleFamily& f) {
                       if (f.degree < 2 || !(f.root_radius > 0.0) || !(f.min_sep >= 0.0) || f.scale == 0.0)
                           throw std::invalid_argument("random family needs degree >= 2, radius > 0, scale != 0");
                   },
               },
               family);
}

Poly psi(double a, int n) {
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    c[0] = -std::pow(a, n);
    c.back() += 1.0;
    return Poly(std::move(c));
}

Poly quartic_multi(double a) { return Poly{0.0, 0.0, a * a, -2.0 * a, 1.0}; }

Poly plus_power(Complex a, int n) {
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    c[0] = cpow(a, n);
    c.back() += 1.0;
    return Poly(std::move(c));
}

Poly coeff_family_poly(Complex a, const std::vector<Complex>& lower) {
    const int n = static_cast<int>(lower.size()) + 1;
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    c[0] = cpow(a, n);
    for (std::size_t k = 0; k < lower.size(); ++k) c[k + 1] += lower[k];
    c.back() = 1.0;
    return Poly(std::move(c));
}

Poly truncated_family_poly(Complex a, const std::vector<Complex>& lower) {
    const int n = static_cast<int>(lower.size()) + 1;
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    c[0] = cpow(a, n);
    c[static_cast<std::size_t>(n) - 1] += lower.back();
    c.back() = 1.0;
    return Poly(std::move(c));
}

DiffOperator coeff_family_operator(const std::vector<Complex>& lower) {
    const int n = static_cast<int>(lower.size()) + 1;
    std::vector<Complex> alphas(static_cast<std::size_t>(n) + 1);
    alphas[0] = 1.0;
    const double nf = factorial(n);
    for (int k = 1; k <= n - 1; ++k)
        alphas[static_cast<std::size_t>(k)] = factorial(n - k) / nf * lower[static_cast<std::size_t>(n - k - 1)];
    return DiffOperator(std::move(alphas), n);
}

std::vector<Complex> random_simple_roots(int degree, double root_radius, double min_sep, std::uint64_t seed) {
    if (degree < 1) throw std::invalid_argument("random_simple_roots: degree must be >= 1");
    Rng rng(seed);
    return random_separated_points(rng, degree, root_radius, min_sep);
}

Poly random_simple_poly(int degree, double root_radius, double min_sep, std::uint64_t seed) {
    return from_roots(random_simple_roots(degree, root_radius, min_sep, seed));
}

Poly build(const FamilySpec& family) {
    validate(family);
    return std::visit(overloaded{
                          [](const PsiFamily& f) { return psi(f.a, f.n); },
                          [](const QuarticFamily& f) { return quartic_multi(f.a); },
                          [](const CoeffFamily& f) { return coeff_family_poly(f.a, f.lower); },
                          [](const TruncatedFamily& f) { return truncated_family_poly(f.a, f.lower); },
                          [](const RandomSimpleFamily& f) {
                              const Poly p = random_simple_poly(f.degree, f.root_radius, f.min_sep, f.seed);
                              return f.scale == 1.0 ? p : dilate(p, f.scale);
                          },
                      },
                      family);
}

FamilySpec with_parameter(const FamilySpec& family, double value) {
    return std::visit(overloaded{
                          [&](PsiFamily f) -> FamilySpec { f.a = value; return f; },
                          [&](QuarticFamily f) -> FamilySpec { f.a = value; return f; },
                          [&](CoeffFamily f) -> FamilySpec { f.a = value; return f; },
                          [&](TruncatedFamily f) -> FamilySpec { f.a = value; return f; },
                          [&](RandomSimpleFamily f) -> FamilySpec { f.scale = value; return f; },
                      },
                      family);
}

std::optional<RootMultiset> closed_form_oracle(const FamilySpec& family, const DiffOperator& T) {
    if (const auto* p = std::get_if<PsiFamily>(&family)) {
        validate(family);
        const double a = p->a;
        const int n = p->n;
        if (T.n() < n) return std::nullopt;
        if (n == 2 && is_identity_plus_power(T, 1)) {
            const double r = std::sqrt(1.0 + a * a);
            return RootMultiset::from_points({-1.0 - r, -1.0 + r});
        }
        if (n >= 1 && is_identity_plus_power(T, n)) {
            // roots of z^n - (a^n - n!)
            const double ratio = factorial(n) / std::pow(a, n);
            std::vector<Complex> pts;
            if (ratio < 1.0) {
                const double modulus = a * std::exp(std::log1p(-ratio) / n);
                for (int k = 0; k < n; ++k) pts.push_back(std::polar(modulus, 2.0 * std::numbers::pi * k / n));
            } else if (ratio > 1.0) {
                const double modulus = std::pow(factorial(n) - std::pow(a, n), 1.0 / n);
                for (int k = 0; k < n; ++k)
                    pts.push_back(std::polar(modulus, (std::numbers::pi + 2.0 * std::numbers::pi * k) / n));
            } else {
                return RootMultiset({RootEntry{0.0, n, {}}});
            }
            return RootMultiset::from_points(pts);
        }
        return std::nullopt;
    }
    if (const auto* q = std::get_if<QuarticFamily>(&family)) {
        validate(family);
        const double a = q->a;
        if (T.n() < 4 || !is_identity_plus_power(T, 2) || !(a > 3.0 * std::sqrt(2.0))) return std::nullopt;
        const Complex inner = Complex{a * a - 24.0, -4.0 * std::sqrt(2.0 * a * a - 36.0)};
        // 0.5 (a - sqrt(inner)), rationalized to avoid cancellation for large a
        const Complex z1 = 0.5 * (a * a - inner) / (a + std::sqrt(inner));
        // T g_a is invariant under z -> a - z, so the other pair mirrors through a/2
        return RootMultiset::from_points({z1, std::conj(z1), a - std::conj(z1), a - z1});
    }
    return std::nullopt;
}

}  // namespace rootshift
