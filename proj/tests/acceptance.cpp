// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "rootshift/bounds.hpp"
#include "rootshift/families.hpp"
#include "rootshift/harness.hpp"
#include "rootshift/metrics.hpp"
#include "rootshift/rootfind.hpp"
#include "rootshift/sampling.hpp"
#include "rootshift/sweep.hpp"

using namespace rootshift;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double factorial(int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

int count_violations(Suite s, std::uint64_t seed, int samples, int& rows) {
    const auto sum = summarize(run_suite(s, seed, samples));
    rows += sum.rows;
    return sum.violations;
}

Outcome gamma_alpha_value() {
    const double g = gamma_alpha(1.0, 5);
    return {std::abs(g - 42.944) <= 1e-3, fmt("gamma_alpha(1,5) = %.6f", g)};
}

Outcome figure_distance() {
    const DiffOperator T = DiffOperator::from_coefficients({1.0, 1.0}, 5);
    const Poly f = psi(45.0, 5);
    const auto zf = find_roots(f).roots;
    const auto zt = find_roots(apply_operator(T, f)).roots;
    const double d = frechet_distance(translate(zf, -1.0), zt).bottleneck;
    const double bound = gamma_alpha(1.0, 5) / 45.0;
    const bool ok = std::abs(d - 0.046083) <= 5e-4 && std::abs(bound - 0.954312) <= 1e-6 && d <= bound;
    return {ok, fmt("d_F = %.6f, bound = %.7f", d, bound)};
}

Outcome closed_form_enclosure() {
    double worst_rel = 0.0, worst_excess = -INFINITY;
    for (int n = 2; n <= 7; ++n) {
        const double nf = factorial(n);
        const DiffOperator T = DiffOperator::from_coefficients({1.0}, n);
        std::vector<Complex> alphas(static_cast<std::size_t>(n) + 1);
        alphas[0] = 1.0;
        alphas[static_cast<std::size_t>(n)] = 1.0;
        const DiffOperator Tn(alphas, n);
        (void)T;
        for (double a : {std::pow(nf, 1.0 / n) + 1.0, 10.0, 45.0, 200.0}) {
            const Poly f = psi(a, n);
            const auto zf = find_roots(f).roots;
            const auto zc = find_roots(derivative(f, 1)).roots;
            const auto zt = find_roots(apply_operator(Tn, f)).roots;
            const double r = enclosure_radius(zf, zt);
            const double exact = -a * std::expm1(std::log1p(-nf / std::pow(a, n)) / n);
            worst_rel = std::max(worst_rel, std::abs(r - exact) / exact);
            worst_excess = std::max(worst_excess, tau(zf, zc) * r - std::pow(nf, 2.0 / n));
        }
    }
    return {worst_rel <= 1e-8 && worst_excess <= 1e-9,
            fmt("max relative error %.3g, max tau*R_T - (n!)^(2/n) = %.3g", worst_rel, worst_excess)};
}

Outcome omegatau_sandwich() {
    const auto rows = run_suite(Suite::omegatau, 20240601, 1000);
    const auto sum = summarize(rows);
    double worst = 0.0;
    for (int n = 2; n <= 8; ++n)
        for (double a : {1.0, 7.5, 45.0}) {
            const Poly f = psi(a, n);
            const auto zf = find_roots(f).roots;
            const double t = tau(zf, find_roots(derivative(f, 1)).roots);
            worst = std::max(worst, std::abs(t - sep1(zf) / (2.0 * std::sin(M_PI / n))));
        }
    return {sum.passed == 1000 && sum.violations == 0 && worst <= 1e-9,
            fmt("%.0f/1000 sandwich rows pass, upper-bound equality error %.3g", sum.passed, worst)};
}

// The global bound needs only admissibility, so every row counts, certified or not.
Outcome global_bound() {
    const auto rows = run_suite(Suite::tca, 20240602, 1000);
    int holding = 0, uncertified = 0;
    for (const auto& r : rows) {
        holding += r.holds ? 1 : 0;
        uncertified += r.hypothesis_met ? 0 : 1;
    }
    return {rows.size() == 1000 && holding == 1000,
            fmt("%.0f/1000 hold (%.0f with uncertified roots)", holding, uncertified)};
}

Outcome product_and_inclusion() {
    int rows = 0, violations = 0;
    violations += count_violations(Suite::lmt, 20240603, 400, rows);
    violations += count_violations(Suite::clmt, 20240604, 400, rows);
    violations += count_violations(Suite::pub, 20240605, 200, rows);
    int psi_rows = 0;
    for (int n = 3; n <= 6; ++n) {
        std::vector<Complex> alphas(static_cast<std::size_t>(n) + 1);
        alphas[0] = alphas[static_cast<std::size_t>(n)] = 1.0;
        const DiffOperator T(alphas, n);
        for (double a = 5.0; a <= 100.0; a += 5.0) {
            const auto rep = analyze(T, psi(a, n), 0.0);
            for (const char* name : {"lmt", "clmt"})
                if (const auto* c = rep.find_check(name); c && c->hypothesis_met) {
                    ++psi_rows;
                    violations += c->holds ? 0 : 1;
                }
        }
    }
    return {violations == 0, fmt("%.0f sweep rows + %.0f psi rows, %.0f violations", rows, psi_rows, violations)};
}

Outcome multiple_root_counterexample() {
    const DiffOperator T = DiffOperator::from_coefficients({1.0, 0.0, 1.0}, 4);
    std::vector<double> dev;
    double product = 0.0, bound = 0.0, r_1000 = 0.0;
    for (double a : {1e2, 1e3, 1e4}) {
        const Poly g = quartic_multi(a);
        const auto zf = find_roots(g).roots;
        const auto zt = find_roots(apply_operator(T, g)).roots;
        const double r = enclosure_radius(zf, zt);
        dev.push_back(std::abs(r - std::sqrt(2.0)));
        if (a == 1e3) r_1000 = r;
        if (a == 1e4) {
            product = tau(zf, find_roots(derivative(g, 1)).roots) * r;
            bound = gamma(T);
        }
    }
    const bool ok = dev[1] < 0.05 && dev[1] < dev[0] && dev[2] < dev[1] && product > bound;
    return {ok, fmt("R_T(a=1e3) = %.6f, tau*R_T(a=1e4) = %.4g vs Gamma_T = %.4g", r_1000, product, bound)};
}

Outcome bottleneck_oracle() {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 500; ++i) {
        Rng rng = sample_rng(20240608, i);
        const int m = uniform_int(rng, 2, 7);
        std::vector<Complex> a(static_cast<std::size_t>(m)), b(static_cast<std::size_t>(m));
        for (auto& z : a) z = uniform_in_disk(rng, 10.0);
        for (auto& z : b) z = uniform_in_disk(rng, 10.0);
        const auto A = RootMultiset::from_points(a), B = RootMultiset::from_points(b);
        worst = std::max(worst, std::abs(frechet_distance(A, B).bottleneck - brute_frechet(A, B)));
    }
    return {worst <= 1e-12, fmt("max |fast - brute| = %.3g over 500 instances", worst)};
}

Outcome root_certification() {
    double worst_res = 0.0, worst_rec = 0.0;
    for (std::uint64_t i = 0; i < 500; ++i) {
        Rng rng = sample_rng(20240609, i);
        const int degree = uniform_int(rng, 1, 10);
        const Poly p = from_roots(random_separated_points(rng, degree, 100.0, 1.0));
        const auto found = find_roots(p);
        worst_res = std::max(worst_res, max_residual(p, found.roots));
        const Poly q = from_roots(found.roots, p.leading());
        double num = 0.0;
        for (int k = 0; k <= p.degree(); ++k) num = std::max(num, std::abs(q[k] - p[k]));
        worst_rec = std::max(worst_rec, num / p.max_coeff_modulus());
    }
    return {worst_res <= 1e-10 && worst_rec <= 1e-6,
            fmt("max scaled residual %.3g, max reconstruction error %.3g", worst_res, worst_rec)};
}

Outcome convergence_trends() {
    const std::vector<double> grid{10.0, 30.0, 100.0, 300.0, 1000.0};
    int trends = 0, failed = 0;
    for (std::uint64_t i = 0; i < 20; ++i) {
        Rng rng = sample_rng(20240610, i);
        const int n = uniform_int(rng, 3, 6);
        std::vector<Complex> lower(static_cast<std::size_t>(n) - 1);
        for (auto& c : lower) c = uniform_in_disk(rng, 2.0);
        const DiffOperator I = DiffOperator::identity(n);
        for (const auto& t : {check_translation_convergence(I, CoeffFamily{1.0, lower}, grid),
                              check_translation_convergence(I, TruncatedFamily{1.0, lower}, grid)}) {
            ++trends;
            failed += t.holds() ? 0 : 1;
        }
        const Complex alpha = uniform_in_disk(rng, 2.0);
        const DiffOperator T = DiffOperator::from_coefficients({1.0, alpha}, n);
        const auto t = check_translation_convergence(T, RandomSimpleFamily{n, 10.0, 1.0, rng(), 1.0},
                                                     {1.0, 10.0, 100.0});
        ++trends;
        failed += t.decreasing ? 0 : 1;
    }
    return {failed == 0, fmt("%.0f/%.0f trends hold", trends - failed, trends)};
}

Outcome shift_identity() {
    double worst = 0.0, ratio_lo = INFINITY, ratio_hi = 0.0;
    for (Complex alpha : {Complex(0.5), Complex(1.0), Complex(2.0), Complex(1.0, 1.0)})
        for (int n = 2; n <= 7; ++n) {
            const DiffOperator V = compose_operators(shift_as_operator(-alpha, n),
                                                     DiffOperator::from_coefficients({1.0, alpha}, n));
            const double ga = gamma_alpha(alpha, n), gp = gamma_prime(V);
            worst = std::max(worst, std::abs(ga - gp));
            ratio_lo = std::min(ratio_lo, ga / gp);
            ratio_hi = std::max(ratio_hi, ga / gp);
        }
    // Left failing on purpose: the two closed forms differ by a factor of exactly 2.
    return {worst <= 1e-10,
            fmt("max |gamma_alpha - Gamma'| = %.3g, gamma_alpha/Gamma' in [%.15g, %.15g]", worst, ratio_lo, ratio_hi)};
}

}  // namespace

// --known-failure N (repeatable) names criteria expected to fail; the exit status is 0 only when
// the failing set is exactly that list, so a regression or an unexpected pass both show up.
int main(int argc, char** argv) {
    std::set<std::size_t> known;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--known-failure") known.insert(std::stoul(argv[++i]));

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"gamma_alpha(1, 5) reproduces 42.944", gamma_alpha_value},
        {"psi_{45,5} under I + D: d_F and its bound", figure_distance},
        {"closed-form R_T under I + D^n", closed_form_enclosure},
        {"tau sandwich between sep1/n and sep1/(2 sin(pi/n))", omegatau_sandwich},
        {"R_T(f) <= R_T(phi_n)", global_bound},
        {"product bound and inclusion for vanishing first-order term", product_and_inclusion},
        {"double-root quartic breaks the product bound", multiple_root_counterexample},
        {"bottleneck matcher agrees with brute force", bottleneck_oracle},
        {"root finder residual and reconstruction", root_certification},
        {"translation convergence trends", convergence_trends},
        {"gamma_alpha equals Gamma' of the shifted operator", shift_identity},
    };

    std::set<std::size_t> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %2zu. %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str(), secs);
        if (!o.pass) failed.insert(i + 1);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed.size(), criteria.size());
    if (!known.empty()) {
        std::printf("known failures:");
        for (auto k : known) std::printf(" %zu", k);
        std::printf(" (%s)\n", failed == known ? "matched" : "MISMATCH");
    }
    return failed == known ? 0 : 1;
}
