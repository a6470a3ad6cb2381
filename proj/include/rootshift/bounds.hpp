#pragma once

// Closed-form perturbation constants for T = sum alpha_k D^k on polynomials of
// degree <= n, and an empirical lower bound for the Frechet constant K_F(T).

#include <cstdint>
#include <optional>

#include "rootshift/execution.hpp"
#include "rootshift/poly.hpp"

namespace rootshift {

struct BoundSet {
    int n = 0;
    double r_phi = 0.0;        // R_T(phi_n)
    double gamma_prime = 0.0;  // Gamma'_T
    double gamma = 0.0;        // Gamma_T
    std::optional<double> gamma_alpha;         // only for T = I + alpha D
    std::optional<double> kf_estimate;         // lower bound for K_F(T)
    std::optional<double> gamma_double_prime;  // max{Gamma_T, (1 + K_F)/sin(pi/n)}
};

/// True when T / alpha_0 has no D term (up to rounding in the coefficients).
bool first_order_vanishes(const DiffOperator& T);

/// True when T / alpha_0 = I + alpha D, i.e. no terms of order >= 2.
bool is_first_order_form(const DiffOperator& T);

/// max |v| over the roots of T z^n. Throws for inadmissible T or n < 1.
double r_phi(const DiffOperator& T);

/// n (max_{2<=k<=n} |alpha_k| (k-1)!) (R+1) (((R+2)/(R+1))^{n-1} - 1), R = R_T(phi_n),
/// for T normalized to alpha_0 = 1. Zero when alpha_k = 0 for all k >= 2.
/// Throws std::invalid_argument if alpha_1 != 0, n < 2 or T is inadmissible.
double gamma_prime(const DiffOperator& T);

/// max{R (2R + 1), 2 Gamma'_T}.
double gamma(const DiffOperator& T);

/// Constant of the inclusion Z((I + alpha D) f) in {-alpha} + Z(f) + D(gamma_alpha / tau(f)).
double gamma_alpha(Complex alpha, int n);

struct TakagiRegion {
    Complex shift;
    double radius = 0.0;
};

/// Classical region {-alpha n/2} + Z(f) + D(|alpha| n/2) for roots of (I + alpha D) f.
TakagiRegion takagi_region(Complex alpha, int n);

/// max{R + 1, Gamma', Gamma'/epsilon, (1 + kf)/sin(pi/n)}.
double c_epsilon(const DiffOperator& T, double epsilon, double kf);

/// max{Gamma_T, (1 + kf)/sin(pi/n)}.
double gamma_double_prime(const DiffOperator& T, double kf);

/// Max of d_F(Z(f), Z(Tf)) over random f with roots uniform in D(10) and
/// degrees 1..n. Deterministic in seed; a lower bound for K_F(T).
double estimate_kf(const DiffOperator& T, int sample_count, std::uint64_t seed,
                   Execution exec = Execution::parallel);

/// Everything that applies to T; gamma_prime / gamma are left at zero when
/// alpha_1 != 0 after normalization.
BoundSet compute_bounds(const DiffOperator& T, std::optional<double> kf = std::nullopt);

}  // namespace rootshift
