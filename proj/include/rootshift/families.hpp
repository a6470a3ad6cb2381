#pragma once

// Named polynomial families with known root behaviour, and their closed forms.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "rootshift/poly.hpp"
#include "rootshift/rootfind.hpp"

namespace rootshift {

/// z^n - a^n
struct PsiFamily {
    double a = 1.0;
    int n = 2;
};

/// z^2 (z - a)^2, a > 0
struct QuarticFamily {
    double a = 1.0;
};

/// f_a(z) = z^n + a_{n-1} z^{n-1} + ... + a_1 z + a^n with lower = (a_1, ..., a_{n-1}).
struct CoeffFamily {
    Complex a = 1.0;
    std::vector<Complex> lower;
    int n() const noexcept { return static_cast<int>(lower.size()) + 1; }
};

/// h_a(z) = z^n + a_{n-1} z^{n-1} + a^n, compared against the full f_a.
struct TruncatedFamily {
    Complex a = 1.0;
    std::vector<Complex> lower;
    int n() const noexcept { return static_cast<int>(lower.size()) + 1; }
};

/// Random roots in D(root_radius) separated by min_sep, dilated by `scale`.
struct RandomSimpleFamily {
    int degree = 2;
    double root_radius = 10.0;
    double min_sep = 1.0;
    std::uint64_t seed = 0;
    double scale = 1.0;
};

using FamilySpec = std::variant<PsiFamily, QuarticFamily, CoeffFamily, TruncatedFamily, RandomSimpleFamily>;

/// Throws std::invalid_argument when parameters are outside the family's domain.
void validate(const FamilySpec& family);

/// The family member. For CoeffFamily and TruncatedFamily this is f_a and h_a respectively.
Poly build(const FamilySpec& family);

/// Same family with its size parameter replaced: a for the named families,
/// the dilation factor for RandomSimpleFamily.
FamilySpec with_parameter(const FamilySpec& family, double value);

Poly psi(double a, int n);
Poly quartic_multi(double a);
/// z^n + a^n
Poly plus_power(Complex a, int n);
Poly coeff_family_poly(Complex a, const std::vector<Complex>& lower);
Poly truncated_family_poly(Complex a, const std::vector<Complex>& lower);

/// alpha_0 = 1, alpha_k = (n-k)!/n! a_{n-k} for k = 1..n-1, alpha_n = 0; maps z^n + a^n to f_a.
DiffOperator coeff_family_operator(const std::vector<Complex>& lower);

/// Roots uniform in D(root_radius), pairwise at least min_sep apart; deterministic in seed.
/// Throws std::runtime_error when rejection sampling gives up.
std::vector<Complex> random_simple_roots(int degree, double root_radius, double min_sep, std::uint64_t seed);
Poly random_simple_poly(int degree, double root_radius, double min_sep, std::uint64_t seed);

/// Exact roots for (psi_{a,2}, I + D), (quartic, I + D^2) with a > 3 sqrt 2, and
/// (psi_{a,n}, I + D^n). Any other pair gives nullopt.
std::optional<RootMultiset> closed_form_oracle(const FamilySpec& family, const DiffOperator& T);

}  // namespace rootshift
