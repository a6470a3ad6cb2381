#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rootshift/families.hpp"
#include "rootshift/metrics.hpp"
#include "rootshift/poly.hpp"
#include "rootshift/rootfind.hpp"
#include "rootshift/sampling.hpp"

using namespace rootshift;

TEST_CASE("poly keeps canonical trimmed form") {
    const Poly p({1.0, 2.0, 0.0, 0.0});
    CHECK(p.degree() == 1);
    CHECK(Poly({0.0, 0.0}).is_zero());
    CHECK(Poly().degree() == -1);
    CHECK(Poly::monomial(3, 2.0).coeffs() == std::vector<Complex>{0.0, 0.0, 0.0, 2.0});
}

TEST_CASE("operator length must be n + 1") {
    CHECK_THROWS_AS(DiffOperator({1.0, 2.0}, 3), std::invalid_argument);
    CHECK(DiffOperator::from_coefficients({1.0, 2.0}, 3).alphas().size() == 4);
    CHECK(DiffOperator::identity(4).admissible());
    CHECK_FALSE(DiffOperator({0.0, 1.0}, 1).admissible());
}

TEST_CASE("evaluate") {
    CHECK(evaluate(Poly({-4.0, 0.0, 1.0}), 2.0) == Complex(0.0));
    CHECK(evaluate(psi(45.0, 5), 45.0) == Complex(0.0));
    const Complex v = evaluate(Poly({-2025.0, 2.0, 1.0}), Complex(1.0, 1.0));
    CHECK(v.real() == doctest::Approx(-2023.0));
    CHECK(v.imag() == doctest::Approx(4.0));
}

TEST_CASE("derivative") {
    CHECK(derivative(Poly::monomial(3), 1) == Poly::monomial(2, 3.0));
    for (int n = 1; n <= 8; ++n) CHECK(derivative(Poly::monomial(n), n) == Poly::constant(oracle::factorial(n)));
    CHECK(derivative(Poly::monomial(3), 4).is_zero());
    const double a = 6.0;
    const Poly expected = from_roots(std::vector<Complex>{0.0, a, a / 2.0}, 4.0);  // 2z(z-a)(2z-a)
    CHECK(oracle::coeff_error(derivative(quartic_multi(a), 1), expected) < 1e-15);
}

TEST_CASE("from_roots") {
    CHECK(from_roots(std::vector<Complex>{2.0, -2.0}) == Poly({-4.0, 0.0, 1.0}));
    CHECK(from_roots(std::vector<Complex>{3.0, 3.0, 0.0, 0.0}) == Poly({0.0, 0.0, 9.0, -6.0, 1.0}));
    const Poly p = from_roots(oracle::nth_roots(std::pow(45.0, 5), 5));
    CHECK(oracle::coeff_error(p, psi(45.0, 5)) < 1e-6);
}

TEST_CASE("taylor_shift examples") {
    CHECK(taylor_shift(Poly::monomial(2), 1.0) == Poly({1.0, 2.0, 1.0}));
    const Poly p({1.0, Complex(2.0, -1.0), 3.0, 0.5});
    CHECK(taylor_shift(p, 0.0) == p);

    const Poly f = psi(45.0, 5);
    const auto shifted = find_roots(taylor_shift(f, -1.0)).roots;
    const auto expected = translate(find_roots(f).roots, 1.0);
    CHECK(frechet_distance(shifted, expected).bottleneck < 1e-9);
}

TEST_CASE("taylor_shift agrees with binomial expansion") {
    for (std::uint64_t i = 0; i < 50; ++i) {
        Rng rng = sample_rng(100, i);
        const int d = uniform_int(rng, 0, 9);
        const Poly p = oracle::random_poly(rng, d);
        const Complex alpha = uniform_in_disk(rng, 3.0);
        const Poly expected(oracle::taylor_shift(p.coeffs(), alpha));
        CHECK(oracle::coeff_error(taylor_shift(p, alpha), expected) < 1e-12);
    }
}

TEST_CASE("taylor_shift composes additively and is linear") {
    for (std::uint64_t i = 0; i < 50; ++i) {
        Rng rng = sample_rng(101, i);
        const Poly p = oracle::random_poly(rng, uniform_int(rng, 1, 8));
        const Poly q = oracle::random_poly(rng, uniform_int(rng, 1, 8));
        const Complex a = uniform_in_disk(rng, 2.0), b = uniform_in_disk(rng, 2.0), c = uniform_in_disk(rng, 2.0);
        CHECK(oracle::coeff_error(taylor_shift(taylor_shift(p, a), b), taylor_shift(p, a + b)) < 1e-11);
        CHECK(oracle::coeff_error(taylor_shift(p + c * q, a), taylor_shift(p, a) + c * taylor_shift(q, a)) < 1e-11);
    }
}

TEST_CASE("dilate") {
    const Poly p = dilate(Poly({-1.0, 1.0}), 3.0);
    CHECK(p[0] == Complex(-1.0));
    CHECK(std::abs(p[1] - 1.0 / 3.0) < 1e-16);
    const auto r = find_roots(dilate(Poly({-1.0, 0.0, 1.0}), 2.0)).roots;
    CHECK(oracle::same_points(r.values(), {2.0, -2.0}, 1e-14));
    CHECK_THROWS_AS(dilate(p, 0.0), std::invalid_argument);

    const Poly f({-1.0, 0.0, 0.0, 1.0});
    const Poly g = dilate(f, 5.0);
    const double tf = tau(find_roots(f).roots, find_roots(derivative(f, 1)).roots);
    const double tg = tau(find_roots(g).roots, find_roots(derivative(g, 1)).roots);
    CHECK(tg == doctest::Approx(5.0 * tf).epsilon(1e-12));
}

TEST_CASE("apply_operator examples") {
    const double a = 7.0;
    const auto ID = DiffOperator::from_coefficients({1.0, 1.0}, 2);
    CHECK(apply_operator(ID, psi(a, 2)) == Poly({-a * a, 2.0, 1.0}));
    for (int n = 2; n <= 7; ++n) {
        std::vector<Complex> al(static_cast<std::size_t>(n) + 1);
        al[0] = al[static_cast<std::size_t>(n)] = 1.0;
        const Poly got = apply_operator(DiffOperator(al, n), psi(a, n));
        CHECK(oracle::coeff_error(got, Poly::monomial(n) - Poly::constant(std::pow(a, n) - oracle::factorial(n))) <
              1e-15);
    }
    const Complex alpha(0.3, -2.0);
    const Poly got = apply_operator(DiffOperator::from_coefficients({1.0, alpha}, 6), Poly::monomial(6));
    CHECK(got == Poly::monomial(6) + Poly::monomial(5, alpha * 6.0));
    CHECK_THROWS_AS(apply_operator(DiffOperator::identity(2), Poly::monomial(3)), std::invalid_argument);
}

TEST_CASE("apply_operator agrees with termwise derivatives") {
    for (std::uint64_t i = 0; i < 40; ++i) {
        Rng rng = sample_rng(102, i);
        const int n = uniform_int(rng, 1, 8);
        const DiffOperator T = random_admissible_operator(rng, n);
        const Poly p = oracle::random_poly(rng, uniform_int(rng, 0, n));
        const Poly expected(oracle::apply(T.alphas(), p.coeffs()));
        CHECK(oracle::coeff_error(apply_operator(T, p), expected) < 1e-12);
        CHECK(apply_operator(T, p).degree() == p.degree());
    }
}

TEST_CASE("shift_as_operator") {
    CHECK(shift_as_operator(0.0, 4) == DiffOperator::identity(4));
    const Complex alpha(1.5, 0.5);
    const auto S = shift_as_operator(-alpha, 2);
    CHECK(S[0] == Complex(1.0));
    CHECK(S[1] == -alpha);
    CHECK(std::abs(S[2] - alpha * alpha / 2.0) < 1e-15);
    for (std::uint64_t i = 0; i < 20; ++i) {
        Rng rng = sample_rng(103, i);
        const Poly p = oracle::random_poly(rng, 6);
        const Complex beta = uniform_in_disk(rng, 2.0);
        CHECK(oracle::coeff_error(apply_operator(shift_as_operator(beta, 6), p), taylor_shift(p, beta)) < 1e-12);
    }
}

TEST_CASE("compose_operators") {
    Rng rng(104);
    const DiffOperator B = random_admissible_operator(rng, 5);
    CHECK(compose_operators(DiffOperator::identity(5), B) == B);

    const Complex alpha(0.7, -1.1);
    const int n = 6;
    const auto V = compose_operators(DiffOperator::from_coefficients({1.0, alpha}, n), shift_as_operator(-alpha, n));
    CHECK(std::abs(V[1]) < 1e-15);
    for (int k = 2; k <= n; ++k)
        CHECK(std::abs(V[static_cast<std::size_t>(k)] - std::pow(-alpha, k) * (1.0 - k) / oracle::factorial(k)) <
              1e-14);

    const auto W = compose_operators(DiffOperator::from_coefficients({1.0, 1.0}, 5), shift_as_operator(-1.0, 5));
    const std::vector<double> expected{1.0, 0.0, -0.5, 1.0 / 3.0, -1.0 / 8.0, 1.0 / 30.0};
    for (std::size_t k = 0; k < expected.size(); ++k) CHECK(std::abs(W[k] - expected[k]) < 1e-15);

    CHECK_THROWS_AS(compose_operators(DiffOperator::identity(2), DiffOperator::identity(3)), std::invalid_argument);
}

TEST_CASE("composition equals sequential application") {
    for (std::uint64_t i = 0; i < 40; ++i) {
        Rng rng = sample_rng(105, i);
        const int n = uniform_int(rng, 1, 7);
        const DiffOperator A = random_admissible_operator(rng, n);
        const DiffOperator B = random_admissible_operator(rng, n);
        const Poly p = oracle::random_poly(rng, n);
        CHECK(oracle::coeff_error(apply_operator(compose_operators(A, B), p), apply_operator(A, apply_operator(B, p))) <
              1e-12);
    }
}

TEST_CASE("normalize_operator") {
    CHECK(normalize_operator(DiffOperator({2.0, 4.0, 0.0}, 2)) == DiffOperator({1.0, 2.0, 0.0}, 2));
    const auto N = normalize_operator(DiffOperator({Complex(0.0, 1.0), 1.0, 0.0, 0.0}, 3));
    CHECK(N[0] == Complex(1.0));
    CHECK(N[1] == Complex(0.0, -1.0));

    const DiffOperator T({2.0, 0.0, 2.0, 0.0}, 3);
    const Poly f({-8.0, 0.0, 0.0, 1.0});
    const auto before = find_roots(apply_operator(T, f)).roots;
    const auto after = find_roots(apply_operator(normalize_operator(T), f)).roots;
    CHECK(frechet_distance(before, after).bottleneck < 1e-12);
    CHECK_THROWS_AS(normalize_operator(DiffOperator({0.0, 1.0}, 1)), std::invalid_argument);
}
